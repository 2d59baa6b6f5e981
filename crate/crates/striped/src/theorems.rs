//! The characterization results as falsifiable checks over atlases.
//!
//! Each check asserts a structural statement for one atlas and returns a
//! [`TheoremReport`]; a failing report always carries the serialized atlas
//! and the offending detail so it can be replayed from the command line.
//! The checks are meant to be run over whole corpora — every valid atlas
//! should pass all three, so any failure is a bug or a counterexample.

use std::collections::BTreeSet;
use std::fmt;

use crate::atlas::{PairId, StripedAtlas};
use crate::leaves::{BoundaryLeaf, LeafClass, LeafType};
use crate::surgery::ExtractedKind;

/// Which check produced a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckTag {
    Families,
    Fibration,
    Strips,
}

impl CheckTag {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckTag::Families => "families",
            CheckTag::Fibration => "fibration",
            CheckTag::Strips => "strips",
        }
    }
}

impl fmt::Display for CheckTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Reproduction data for a failed check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub detail: String,
    /// Serialized atlas that exhibits the failure.
    pub atlas: String,
}

/// A failing verdict cannot exist without a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(Witness),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub tag: CheckTag,
    pub verdict: Verdict,
}

impl TheoremReport {
    fn pass(tag: CheckTag) -> Self {
        TheoremReport {
            tag,
            verdict: Verdict::Pass,
        }
    }

    fn fail(tag: CheckTag, detail: impl Into<String>, atlas: &StripedAtlas) -> Self {
        TheoremReport {
            tag,
            verdict: Verdict::Fail(Witness {
                detail: detail.into(),
                atlas: atlas.serialize(),
            }),
        }
    }

    pub fn passed(&self) -> bool {
        matches!(self.verdict, Verdict::Pass)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match &self.verdict {
            Verdict::Pass => None,
            Verdict::Fail(w) => Some(w),
        }
    }
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.verdict {
            Verdict::Pass => write!(f, "{}: PASS", self.tag),
            Verdict::Fail(w) => write!(f, "{}: FAIL ({})", self.tag, w.detail),
        }
    }
}

/// Set relations between the leaf families.
///
/// Special leaves are singular; the surface boundary together with the
/// special leaves sits inside the boundary classes; and the atlas is
/// reduced exactly when boundary classes = surface boundary + singular
/// classes.
pub fn check_families(atlas: &StripedAtlas) -> TheoremReport {
    let tag = CheckTag::Families;
    let mut special: BTreeSet<BoundaryLeaf> = BTreeSet::new();
    let mut singular: BTreeSet<BoundaryLeaf> = BTreeSet::new();
    for leaf in atlas.leaves() {
        let ty = match atlas.classify(&leaf) {
            Ok(ty) => ty,
            Err(e) => {
                return TheoremReport::fail(tag, format!("classification failed: {e}"), atlas)
            }
        };
        match &leaf {
            LeafClass::Boundary(b) => {
                if ty.is_special() {
                    special.insert(b.clone());
                }
                if ty.is_singular() {
                    singular.insert(b.clone());
                }
            }
            LeafClass::Interior(strip) => {
                if ty.is_special() || ty.is_singular() {
                    return TheoremReport::fail(
                        tag,
                        format!("interior family of strip {strip:?} is not regular"),
                        atlas,
                    );
                }
            }
        }
    }

    if !special.is_subset(&singular) {
        let offender = special
            .difference(&singular)
            .next()
            .expect("nonempty difference");
        return TheoremReport::fail(
            tag,
            format!("special leaf {offender} is not singular"),
            atlas,
        );
    }

    let boundary = atlas.boundary_classes();
    let surface = atlas.surface_boundary();
    let mut lower_bound = surface.clone();
    lower_bound.extend(special.iter().cloned());
    if !lower_bound.is_subset(&boundary) {
        let offender = lower_bound
            .difference(&boundary)
            .next()
            .expect("nonempty difference");
        return TheoremReport::fail(
            tag,
            format!("leaf {offender} escapes the boundary classes"),
            atlas,
        );
    }

    let mut expected = surface;
    expected.extend(singular.iter().cloned());
    if atlas.is_reduced() != (expected == boundary) {
        return TheoremReport::fail(tag, "reducedness disagrees with the family identity", atlas);
    }

    TheoremReport::pass(tag)
}

/// Equivalence between "every leaf admits a cross section" and "no leaf of
/// type C31 or C32", the two computed by separate routes.
pub fn check_fibration(atlas: &StripedAtlas) -> TheoremReport {
    let tag = CheckTag::Fibration;
    let leaves = atlas.leaves();
    let mut all_admit = true;
    let mut obstructed = false;
    for leaf in &leaves {
        match atlas.admits_cross_section(leaf) {
            Ok(admits) => all_admit &= admits,
            Err(e) => {
                return TheoremReport::fail(tag, format!("classification failed: {e}"), atlas)
            }
        }
        if matches!(atlas.classify(leaf), Ok(LeafType::C31) | Ok(LeafType::C32)) {
            obstructed = true;
        }
    }
    if all_admit == !obstructed {
        TheoremReport::pass(tag)
    } else {
        TheoremReport::fail(
            tag,
            format!("cross sections everywhere = {all_admit}, yet one-sided gluings present = {obstructed}"),
            atlas,
        )
    }
}

/// The decomposition pipeline: cut every singular gluing, reduce, and
/// every component must come out a bare strip or a reported cylinder or
/// Moebius band, with all remaining singular leaves on the surface
/// boundary.
pub fn check_strip_decomposition(atlas: &StripedAtlas) -> TheoremReport {
    let tag = CheckTag::Strips;
    let singular_pairs: BTreeSet<PairId> = atlas
        .pairs
        .iter()
        .filter(|p| {
            let leaf = LeafClass::Boundary(BoundaryLeaf::glued(p.x.as_str(), p.y.as_str()));
            atlas
                .classify(&leaf)
                .map(LeafType::is_singular)
                .unwrap_or(false)
        })
        .map(|p| p.id.clone())
        .collect();

    let (cut, _map) = match atlas.cut(&singular_pairs) {
        Ok(done) => done,
        Err(e) => return TheoremReport::fail(tag, format!("cut failed: {e}"), atlas),
    };

    // classification is local, so no singular gluing may survive the cut
    for pair in &cut.pairs {
        let leaf = LeafClass::Boundary(BoundaryLeaf::glued(pair.x.as_str(), pair.y.as_str()));
        if cut
            .classify(&leaf)
            .map(LeafType::is_singular)
            .unwrap_or(true)
        {
            return TheoremReport::fail(
                tag,
                format!(
                    "pair {:?} is still a singular gluing after the cut",
                    pair.id
                ),
                atlas,
            );
        }
    }

    let (reduced, report) = cut.reduce();
    for component in reduced.components() {
        let bare = component.strips.len() == 1 && component.pairs.is_empty();
        let extracted = component.strips.len() == 1
            && component.pairs.len() == 1
            && report.iter().any(|e| {
                e.strip == component.strips[0].id
                    && matches!(e.kind, ExtractedKind::Cylinder | ExtractedKind::Moebius)
            });
        if !(bare || extracted) {
            return TheoremReport::fail(
                tag,
                format!(
                    "component of strip {:?} is neither a bare strip nor an extracted model",
                    component
                        .strips
                        .first()
                        .map(|s| s.id.as_str())
                        .unwrap_or("?")
                ),
                atlas,
            );
        }
    }

    let surface = reduced.surface_boundary();
    for leaf in reduced.leaves() {
        if reduced
            .classify(&leaf)
            .map(LeafType::is_singular)
            .unwrap_or(false)
        {
            match leaf.as_boundary() {
                Some(b) if surface.contains(b) => {}
                _ => {
                    return TheoremReport::fail(
                        tag,
                        format!("singular leaf {leaf} survives off the surface boundary"),
                        atlas,
                    )
                }
            }
        }
    }

    TheoremReport::pass(tag)
}

/// All three checks, in fixed order.
pub fn check_all(atlas: &StripedAtlas) -> Vec<TheoremReport> {
    vec![
        check_families(atlas),
        check_fibration(atlas),
        check_strip_decomposition(atlas),
    ]
}
