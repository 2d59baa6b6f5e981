//! Atlas surgeries: strip symmetries, reduction, cutting and canonical forms.
//!
//! Two families of moves change an atlas without changing the glued surface:
//!
//! * [`StripedAtlas::flip_strip`] and [`StripedAtlas::swap_sides`] apply the
//!   two coordinate symmetries of a single strip, with the sign bookkeeping
//!   they force on incident gluings.
//! * [`StripedAtlas::merge_strips`] collapses a gluing between full
//!   singleton sides of two distinct strips into one longer strip;
//!   [`StripedAtlas::reduce`] applies this until no such gluing remains and
//!   reports single-strip components whose two sides are glued to each
//!   other (cylinders and Moebius bands).
//!
//! [`StripedAtlas::cut`] undoes chosen gluings, doubling each cut leaf into
//! two boundary leaves, and records enough to reverse itself exactly via
//! [`StripedAtlas::reglue`].
//!
//! [`StripedAtlas::canonical_form`] names the orbit of an atlas under
//! relabeling, reordering, flips and side swaps by the minimal serialization
//! over the orbit, found by backtracking with prefix pruning.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::atlas::{
    AtlasIndex, GluingPair, IntervalId, PairId, SideTag, Sign, Strip, StripId, StripedAtlas,
};
use crate::error::Error;
use crate::leaves::{BoundaryLeaf, LeafClass, LeafType};

/// What a single-strip self-glued component is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ExtractedKind {
    #[serde(rename = "CYLINDER")]
    Cylinder,
    #[serde(rename = "MOEBIUS")]
    Moebius,
}

impl fmt::Display for ExtractedKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtractedKind::Cylinder => f.write_str("CYLINDER"),
            ExtractedKind::Moebius => f.write_str("MOEBIUS"),
        }
    }
}

/// One extracted component: a strip forming a whole cylinder or Moebius band.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Extraction {
    pub strip: StripId,
    pub kind: ExtractedKind,
}

/// Components reported by [`StripedAtlas::reduce`].
pub type ExtractionReport = Vec<Extraction>;

pub fn extraction_report_to_json(report: &ExtractionReport) -> String {
    let mut out = serde_json::to_string(report).expect("report serialization cannot fail");
    out.push('\n');
    out
}

/// One removed gluing: the pair, the leaf it formed, and the two boundary
/// leaves the cut doubled it into. `position` is the pair's index in the
/// source atlas, kept so regluing restores the exact original.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutRecord {
    pub pair: GluingPair,
    pub leaf: BoundaryLeaf,
    pub doubled: (IntervalId, IntervalId),
    pub position: usize,
}

/// Record of a cutting surgery, sufficient to re-glue.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CutMap {
    pub removed: Vec<CutRecord>,
}

impl CutMap {
    /// Document form: a list of `{pair, x, y, sign}` records.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Rec<'a> {
            pair: &'a str,
            x: &'a str,
            y: &'a str,
            sign: Sign,
        }
        let recs: Vec<Rec> = self
            .removed
            .iter()
            .map(|r| Rec {
                pair: r.pair.id.as_str(),
                x: r.pair.x.as_str(),
                y: r.pair.y.as_str(),
                sign: r.pair.sign,
            })
            .collect();
        let mut out = serde_json::to_string(&recs).expect("cut map serialization cannot fail");
        out.push('\n');
        out
    }
}

impl StripedAtlas {
    /// Reverses the horizontal direction of one strip.
    ///
    /// Both interval lists reverse; every gluing joining the strip to a
    /// *different* strip changes sign, while gluings internal to the strip
    /// keep theirs (both charts reverse together). Involution.
    pub fn flip_strip(&self, strip: &StripId) -> Result<StripedAtlas, Error> {
        let index = AtlasIndex::build(self);
        let pos = index
            .strip_position(strip)
            .ok_or_else(|| Error::UnknownStrip(strip.clone()))?;
        let mut out = self.clone();
        out.strips[pos].lower.reverse();
        out.strips[pos].upper.reverse();
        for pair in &mut out.pairs {
            let on_x = index.host_strip(&pair.x) == Some(pos);
            let on_y = index.host_strip(&pair.y) == Some(pos);
            if on_x != on_y {
                pair.sign = pair.sign.flipped();
            }
        }
        Ok(out)
    }

    /// Exchanges the two sides of one strip. Signs persist (the vertical
    /// reflection preserves the horizontal direction). Involution.
    pub fn swap_sides(&self, strip: &StripId) -> Result<StripedAtlas, Error> {
        let index = AtlasIndex::build(self);
        let pos = index
            .strip_position(strip)
            .ok_or_else(|| Error::UnknownStrip(strip.clone()))?;
        let mut out = self.clone();
        let s = &mut out.strips[pos];
        std::mem::swap(&mut s.lower, &mut s.upper);
        Ok(out)
    }

    /// Collapses a gluing between full singleton sides of two distinct
    /// strips, replacing the two strips with one. The second strip is first
    /// normalized by a flip (negative sign) and a side swap (same-side
    /// gluing) so the seams line up; the merged strip keeps the first
    /// strip's id and position. Strip count drops by exactly one.
    pub fn merge_strips(&self, pair_id: &PairId) -> Result<StripedAtlas, Error> {
        let index = AtlasIndex::build(self);
        let ppos = index
            .pair_position(pair_id)
            .ok_or_else(|| Error::UnknownPair(pair_id.clone()))?;
        let pair = self.pairs[ppos].clone();
        let leaf = LeafClass::Boundary(BoundaryLeaf::glued(pair.x.as_str(), pair.y.as_str()));
        if self.classify(&leaf)? != LeafType::C2 {
            return Err(Error::NotMergeable(pair_id.clone()));
        }

        let (x_strip, x_side, _) = index.locate(&pair.x).expect("validated by classify");
        let (y_strip, _, _) = index.locate(&pair.y).expect("validated by classify");
        let keep_id = self.strips[x_strip].id.clone();
        let drop_id = self.strips[y_strip].id.clone();

        let mut work = self.clone();
        if pair.sign == Sign::Minus {
            work = work.flip_strip(&drop_id)?;
        }
        // line the seam up: x on UPPER wants y on LOWER and vice versa
        let y_side_now = {
            let idx = AtlasIndex::build(&work);
            let (_, side, _) = idx.locate(&pair.y).expect("interval still present");
            side
        };
        if y_side_now != x_side.opposite() {
            work = work.swap_sides(&drop_id)?;
        }

        let keep_pos = work
            .strips
            .iter()
            .position(|s| s.id == keep_id)
            .expect("strip present");
        let drop_pos = work
            .strips
            .iter()
            .position(|s| s.id == drop_id)
            .expect("strip present");
        let keep = work.strips[keep_pos].clone();
        let drop = work.strips[drop_pos].clone();
        let merged = match x_side {
            SideTag::Upper => Strip {
                id: keep.id.clone(),
                lower: keep.lower,
                upper: drop.upper,
            },
            SideTag::Lower => Strip {
                id: keep.id.clone(),
                lower: drop.lower,
                upper: keep.upper,
            },
        };
        work.strips[keep_pos] = merged;
        work.strips.remove(drop_pos);
        work.pairs.retain(|p| p.id != pair.id);
        Ok(work)
    }

    /// Merges away every two-strip singleton-side gluing, lowest pair id
    /// first, then reports single-strip components whose remaining gluing
    /// closes them into a cylinder (`+`) or Moebius band (`-`). Those
    /// components stay in the atlas unchanged.
    pub fn reduce(&self) -> (StripedAtlas, ExtractionReport) {
        let mut work = self.clone();
        loop {
            let next = work
                .pairs
                .iter()
                .filter(|p| {
                    let leaf = LeafClass::Boundary(BoundaryLeaf::glued(p.x.as_str(), p.y.as_str()));
                    work.classify(&leaf) == Ok(LeafType::C2)
                })
                .map(|p| p.id.clone())
                .min();
            match next {
                Some(id) => {
                    work = work
                        .merge_strips(&id)
                        .expect("pair verified mergeable just above");
                }
                None => break,
            }
        }

        let mut report = Vec::new();
        for component in work.components() {
            if component.strips.len() == 1 && component.pairs.len() == 1 {
                let pair = &component.pairs[0];
                let leaf =
                    LeafClass::Boundary(BoundaryLeaf::glued(pair.x.as_str(), pair.y.as_str()));
                if work.classify(&leaf) == Ok(LeafType::C1) {
                    report.push(Extraction {
                        strip: component.strips[0].id.clone(),
                        kind: match pair.sign {
                            Sign::Plus => ExtractedKind::Cylinder,
                            Sign::Minus => ExtractedKind::Moebius,
                        },
                    });
                }
            }
        }
        (work, report)
    }

    /// Removes exactly the given pairs. Strips and intervals stay; each
    /// removed gluing leaf doubles into the two now-unglued boundary
    /// leaves recorded in the returned [`CutMap`].
    pub fn cut(&self, pair_ids: &BTreeSet<PairId>) -> Result<(StripedAtlas, CutMap), Error> {
        let index = AtlasIndex::build(self);
        for id in pair_ids {
            if index.pair_position(id).is_none() {
                return Err(Error::UnknownPair(id.clone()));
            }
        }
        let mut out = self.clone();
        out.pairs.clear();
        let mut removed = Vec::new();
        for (position, pair) in self.pairs.iter().enumerate() {
            if pair_ids.contains(&pair.id) {
                removed.push(CutRecord {
                    leaf: BoundaryLeaf::glued(pair.x.as_str(), pair.y.as_str()),
                    doubled: (pair.x.clone(), pair.y.clone()),
                    pair: pair.clone(),
                    position,
                });
            } else {
                out.pairs.push(pair.clone());
            }
        }
        Ok((out, CutMap { removed }))
    }

    /// Reinstates the pairs removed by a cut, at their original ids, signs
    /// and positions, so that `reglue(cut(a, P)) == a` exactly.
    pub fn reglue(&self, cut_map: &CutMap) -> Result<StripedAtlas, Error> {
        let mut out = self.clone();
        let mut records: Vec<&CutRecord> = cut_map.removed.iter().collect();
        records.sort_by_key(|r| r.position);
        for record in records {
            let index = AtlasIndex::build(&out);
            for interval in [&record.pair.x, &record.pair.y] {
                if index.locate(interval).is_none() {
                    return Err(Error::UnknownInterval(interval.clone()));
                }
                if index.pair_of(interval).is_some() {
                    return Err(Error::AlreadyGlued(interval.clone()));
                }
            }
            if index.pair_position(&record.pair.id).is_some() {
                return Err(Error::DuplicatePairId(record.pair.id.clone()));
            }
            let at = record.position.min(out.pairs.len());
            out.pairs.insert(at, record.pair.clone());
        }
        Ok(out)
    }

    /// Minimal serialization over all relabelings of ids, reorderings of
    /// strips and pairs, flips and side swaps. Two atlases related by those
    /// moves — and only those — share their canonical form.
    pub fn canonical_form(&self) -> String {
        canon::canonical_form(self)
    }
}

mod canon {
    //! Orbit minimization by backtracking over strip placements.
    //!
    //! A placement is an order on the strips plus a flip and swap choice
    //! per strip; it determines a full relabeling (strips `s0…`, intervals
    //! `s<k>l<j>`/`s<k>u<j>`, pairs `g0…` in sorted order) and hence one
    //! serialized document. The search encodes placements as token streams
    //! — per strip its side lengths, then every gluing that just became
    //! expressible — and prunes any branch whose prefix already exceeds the
    //! best full encoding.

    use super::*;

    struct PairEnds {
        x: (usize, SideTag, usize),
        y: (usize, SideTag, usize),
        sign: Sign,
    }

    /// strip index with its flip and swap choice
    type Placement = (usize, bool, bool);

    struct Searcher<'a> {
        atlas: &'a StripedAtlas,
        pair_ends: Vec<PairEnds>,
        /// pair indices touching each strip, internal pairs listed once
        by_strip: Vec<Vec<usize>>,
        /// per original strip: (position, flip, swap) once placed
        placed: Vec<Option<Placement>>,
        order: Vec<usize>,
        best: Option<(Vec<u32>, Vec<Placement>)>,
    }

    const SIDE_BITS: u32 = 19;
    const STRIP_BITS: u32 = 20;

    fn label(position: usize, side: SideTag, index: usize) -> u32 {
        ((position as u32) << STRIP_BITS) | ((side.index() as u32) << SIDE_BITS) | index as u32
    }

    impl<'a> Searcher<'a> {
        fn endpoint_label(&self, at: (usize, SideTag, usize)) -> u32 {
            let (strip, side, index) = at;
            let (position, flip, swap) = self.placed[strip].expect("endpoint strip placed");
            let side = if swap { side.opposite() } else { side };
            let len = self.atlas.strips[strip].side(at.1).len();
            let index = if flip { len - 1 - index } else { index };
            label(position, side, index)
        }

        fn segment(&self, strip: usize, flip: bool, swap: bool, position: usize) -> Vec<u32> {
            let s = &self.atlas.strips[strip];
            let (lower, upper) = if swap {
                (&s.upper, &s.lower)
            } else {
                (&s.lower, &s.upper)
            };
            let mut seg = vec![lower.len() as u32, upper.len() as u32];
            let mut triples: Vec<[u32; 3]> = Vec::new();
            for &pi in &self.by_strip[strip] {
                let ends = &self.pair_ends[pi];
                let other = if ends.x.0 == strip {
                    ends.y.0
                } else {
                    ends.x.0
                };
                if other != strip && self.placed[other].is_none() {
                    continue;
                }
                // labels under the candidate placement of this strip
                let with_self = |at: (usize, SideTag, usize)| -> u32 {
                    if at.0 == strip {
                        let side = if swap { at.1.opposite() } else { at.1 };
                        let len = self.atlas.strips[strip].side(at.1).len();
                        let index = if flip { len - 1 - at.2 } else { at.2 };
                        label(position, side, index)
                    } else {
                        self.endpoint_label(at)
                    }
                };
                let la = with_self(ends.x);
                let lb = with_self(ends.y);
                let flips_crossed = {
                    let f = |st: usize| -> bool {
                        if st == strip {
                            flip
                        } else {
                            self.placed[st].map(|(_, f, _)| f).unwrap_or(false)
                        }
                    };
                    f(ends.x.0) != f(ends.y.0)
                };
                let sign = match (ends.sign, flips_crossed) {
                    (Sign::Plus, false) | (Sign::Minus, true) => 0,
                    _ => 1,
                };
                triples.push([la.min(lb), la.max(lb), sign]);
            }
            triples.sort_unstable();
            for t in triples {
                seg.extend_from_slice(&t);
            }
            seg
        }

        fn dfs(&mut self, prefix: &mut Vec<u32>) {
            let depth = self.order.len();
            if depth == self.atlas.strips.len() {
                let better = match &self.best {
                    None => true,
                    Some((enc, _)) => prefix.as_slice() < enc.as_slice(),
                };
                if better {
                    let placement = self
                        .order
                        .iter()
                        .map(|&s| {
                            let (_, f, w) = self.placed[s].expect("ordered strips are placed");
                            (s, f, w)
                        })
                        .collect();
                    self.best = Some((prefix.clone(), placement));
                }
                return;
            }
            for strip in 0..self.atlas.strips.len() {
                if self.placed[strip].is_some() {
                    continue;
                }
                for flip in [false, true] {
                    for swap in [false, true] {
                        let seg = self.segment(strip, flip, swap, depth);
                        let start = prefix.len();
                        prefix.extend_from_slice(&seg);
                        let worse = match &self.best {
                            Some((enc, _)) => prefix.as_slice() > &enc[..prefix.len()],
                            None => false,
                        };
                        if !worse {
                            self.placed[strip] = Some((depth, flip, swap));
                            self.order.push(strip);
                            self.dfs(prefix);
                            self.order.pop();
                            self.placed[strip] = None;
                        }
                        prefix.truncate(start);
                    }
                }
            }
        }
    }

    pub(super) fn canonical_form(atlas: &StripedAtlas) -> String {
        if atlas.strips.is_empty() {
            return StripedAtlas::empty().serialize();
        }
        let index = AtlasIndex::build(atlas);
        let pair_ends: Vec<PairEnds> = atlas
            .pairs
            .iter()
            .map(|p| PairEnds {
                x: index
                    .locate(&p.x)
                    .expect("canonical form needs a valid atlas"),
                y: index
                    .locate(&p.y)
                    .expect("canonical form needs a valid atlas"),
                sign: p.sign,
            })
            .collect();
        let mut by_strip = vec![Vec::new(); atlas.strips.len()];
        for (pi, ends) in pair_ends.iter().enumerate() {
            by_strip[ends.x.0].push(pi);
            if ends.y.0 != ends.x.0 {
                by_strip[ends.y.0].push(pi);
            }
        }
        let mut searcher = Searcher {
            atlas,
            pair_ends,
            by_strip,
            placed: vec![None; atlas.strips.len()],
            order: Vec::new(),
            best: None,
        };
        searcher.dfs(&mut Vec::new());
        let (_, placement) = searcher.best.expect("nonempty atlas has a placement");
        rebuild(atlas, &searcher.pair_ends, &placement)
    }

    fn rebuild(atlas: &StripedAtlas, pair_ends: &[PairEnds], placement: &[Placement]) -> String {
        let mut placed = vec![(0usize, false, false); atlas.strips.len()];
        for (position, &(strip, flip, swap)) in placement.iter().enumerate() {
            placed[strip] = (position, flip, swap);
        }
        let interval_name = |lab: u32| -> String {
            let position = lab >> STRIP_BITS;
            let side = (lab >> SIDE_BITS) & 1;
            let index = lab & ((1 << SIDE_BITS) - 1);
            let tag = if side == 0 { 'l' } else { 'u' };
            format!("s{position}{tag}{index}")
        };
        let relabel = |at: (usize, SideTag, usize)| -> u32 {
            let (position, flip, swap) = placed[at.0];
            let side = if swap { at.1.opposite() } else { at.1 };
            let len = atlas.strips[at.0].side(at.1).len();
            let index = if flip { len - 1 - at.2 } else { at.2 };
            label(position, side, index)
        };

        let strips = placement
            .iter()
            .enumerate()
            .map(|(position, &(strip, flip, swap))| {
                let s = &atlas.strips[strip];
                let (mut lower, mut upper) = if swap {
                    (s.upper.clone(), s.lower.clone())
                } else {
                    (s.lower.clone(), s.upper.clone())
                };
                if flip {
                    lower.reverse();
                    upper.reverse();
                }
                Strip {
                    id: StripId::new(format!("s{position}")),
                    lower: (0..lower.len())
                        .map(|j| IntervalId::new(format!("s{position}l{j}")))
                        .collect(),
                    upper: (0..upper.len())
                        .map(|j| IntervalId::new(format!("s{position}u{j}")))
                        .collect(),
                }
            })
            .collect();

        let mut triples: Vec<(u32, u32, u32)> = pair_ends
            .iter()
            .map(|ends| {
                let la = relabel(ends.x);
                let lb = relabel(ends.y);
                let crossed = placed[ends.x.0].1 != placed[ends.y.0].1;
                let sign = match (ends.sign, crossed) {
                    (Sign::Plus, false) | (Sign::Minus, true) => 0,
                    _ => 1,
                };
                (la.min(lb), la.max(lb), sign)
            })
            .collect();
        triples.sort_unstable();
        let pairs = triples
            .into_iter()
            .enumerate()
            .map(|(k, (la, lb, sign))| GluingPair {
                id: PairId::new(format!("g{k}")),
                x: IntervalId::new(interval_name(la)),
                y: IntervalId::new(interval_name(lb)),
                sign: if sign == 0 { Sign::Plus } else { Sign::Minus },
            })
            .collect();

        StripedAtlas::new(strips, pairs).serialize()
    }
}
