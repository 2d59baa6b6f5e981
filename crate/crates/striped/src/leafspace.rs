//! The leaf space as a graph-like non-Hausdorff 1-complex.
//!
//! Collapsing every leaf of the canonical foliation to a point yields a
//! one-dimensional object: each strip interior contributes an open *edge*
//! (its one-parameter leaf family) and each boundary leaf class a *node*.
//! A node attaches to the end of an edge once per boundary interval it
//! contributes to that side; the ordered slot lists record exactly that.
//!
//! The quotient topology is generally non-Hausdorff: two nodes hanging off
//! the same edge end cannot be separated. [`LeafSpace::hausdorff_closure`]
//! computes the set of points inseparable from a node in closed form, and
//! [`finite_model`] recomputes it from first principles on a finite
//! discretization so the two routes can be compared.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::atlas::{AtlasIndex, SideTag, StripedAtlas};
use crate::error::Error;
use crate::leaves::BoundaryLeaf;

/// One end of a leaf-space edge.
///
/// For an unsmoothed space the edge id is a strip id and `Lower`/`Upper`
/// match the strip sides; smoothed edges keep the two-ended structure with
/// the tags acting as plain indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeEnd {
    pub edge: String,
    pub end: SideTag,
}

impl EdgeEnd {
    pub fn new(edge: impl Into<String>, end: SideTag) -> Self {
        EdgeEnd {
            edge: edge.into(),
            end,
        }
    }
}

/// An edge of the leaf space together with the node slots at its two ends.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LsEdge {
    pub id: String,
    /// A circle component produced by smoothing; carries no slots.
    pub is_loop: bool,
    /// Slot lists at the two ends, index 0 = lower.
    pub ends: [Vec<BoundaryLeaf>; 2],
}

impl LsEdge {
    pub fn end(&self, side: SideTag) -> &[BoundaryLeaf] {
        &self.ends[side.index()]
    }
}

/// The leaf space: edges, nodes and end attachments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeafSpace {
    edges: Vec<LsEdge>,
    nodes: BTreeSet<BoundaryLeaf>,
}

impl StripedAtlas {
    /// Builds the leaf space of a valid atlas.
    pub fn leaf_space(&self) -> LeafSpace {
        let index = AtlasIndex::build(self);
        let mut nodes = BTreeSet::new();
        let edges = self
            .strips
            .iter()
            .map(|strip| {
                let mut ends: [Vec<BoundaryLeaf>; 2] = [Vec::new(), Vec::new()];
                for side in SideTag::BOTH {
                    for interval in strip.side(side) {
                        let node = match index.pair_of(interval) {
                            Some(pair) => BoundaryLeaf::glued(pair.x.as_str(), pair.y.as_str()),
                            None => BoundaryLeaf::unglued(interval.as_str()),
                        };
                        nodes.insert(node.clone());
                        ends[side.index()].push(node);
                    }
                }
                LsEdge {
                    id: strip.id.as_str().to_string(),
                    is_loop: false,
                    ends,
                }
            })
            .collect();
        LeafSpace { edges, nodes }
    }
}

impl LeafSpace {
    pub fn edges(&self) -> &[LsEdge] {
        &self.edges
    }

    pub fn nodes(&self) -> &BTreeSet<BoundaryLeaf> {
        &self.nodes
    }

    /// Slot list at an edge end, in side order.
    pub fn attach(&self, end: &EdgeEnd) -> Option<&[BoundaryLeaf]> {
        self.edges
            .iter()
            .find(|e| e.id == end.edge)
            .map(|e| e.end(end.end))
    }

    fn require_node(&self, node: &BoundaryLeaf) -> Result<(), Error> {
        if self.nodes.contains(node) {
            Ok(())
        } else {
            Err(Error::UnknownNode(node.label()))
        }
    }

    /// Ends (edge index, end index) where the node occupies at least one
    /// slot, with its multiplicity there.
    fn incidences(&self, node: &BoundaryLeaf) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for (ei, edge) in self.edges.iter().enumerate() {
            for end in 0..2 {
                let mult = edge.ends[end].iter().filter(|n| *n == node).count();
                if mult > 0 {
                    out.push((ei, end, mult));
                }
            }
        }
        out
    }

    /// Points of the leaf space inseparable from `node`: the node itself
    /// plus every node occupying a slot at any end the node attaches to.
    pub fn hausdorff_closure(&self, node: &BoundaryLeaf) -> Result<BTreeSet<BoundaryLeaf>, Error> {
        self.require_node(node)?;
        let mut closure = BTreeSet::from([node.clone()]);
        for (ei, end, _) in self.incidences(node) {
            closure.extend(self.edges[ei].ends[end].iter().cloned());
        }
        Ok(closure)
    }

    /// Nodes whose Hausdorff closure is larger than themselves.
    pub fn special_points(&self) -> BTreeSet<BoundaryLeaf> {
        self.nodes
            .iter()
            .filter(|n| {
                self.hausdorff_closure(n)
                    .map(|c| c.len() > 1)
                    .unwrap_or(false)
            })
            .cloned()
            .collect()
    }

    /// Regularity read off the attachment structure alone: every end the
    /// node attaches to carries exactly one slot, and a glued node sits at
    /// two distinct ends. Independent of leaf classification.
    pub fn node_is_regular(&self, node: &BoundaryLeaf) -> Result<bool, Error> {
        self.require_node(node)?;
        let incidences = self.incidences(node);
        let lonely = incidences
            .iter()
            .all(|&(ei, end, _)| self.edges[ei].ends[end].len() == 1);
        let slots: usize = incidences.iter().map(|&(_, _, m)| m).sum();
        let spread = slots == 1 || incidences.len() == 2;
        Ok(lonely && spread)
    }

    /// Erases every regular glued node, splicing its two edge ends
    /// together; a node joining the two ends of one edge leaves a loop.
    /// Idempotent, and the identity when nothing is erasable.
    pub fn smooth(&self) -> LeafSpace {
        let mut edges = self.edges.clone();
        let mut nodes = self.nodes.clone();
        loop {
            let candidate = nodes
                .iter()
                .find(|node| node.is_glued() && erasable(&edges, node))
                .cloned();
            let Some(node) = candidate else { break };
            let spots: Vec<(usize, usize)> = incidence_spots(&edges, &node);
            let [(e1, end1), (e2, end2)] = spots[..] else {
                unreachable!("erasable nodes occupy exactly two ends")
            };
            if e1 == e2 {
                edges[e1].is_loop = true;
                edges[e1].ends = [Vec::new(), Vec::new()];
            } else {
                let keep_a = edges[e1].ends[1 - end1].clone();
                let keep_b = edges[e2].ends[1 - end2].clone();
                let mut parts: Vec<&str> = edges[e1]
                    .id
                    .split('+')
                    .chain(edges[e2].id.split('+'))
                    .collect();
                parts.sort_unstable();
                let merged = LsEdge {
                    id: parts.join("+"),
                    is_loop: false,
                    ends: [keep_a, keep_b],
                };
                let (lo, hi) = if e1 < e2 { (e1, e2) } else { (e2, e1) };
                edges[lo] = merged;
                edges.remove(hi);
            }
            nodes.remove(&node);
        }
        LeafSpace { edges, nodes }
    }

    /// Structure-preserving equivalence: a bijection of edges and nodes
    /// matching end slot multisets, up to swapping the two ends of an edge.
    /// Decided by backtracking search.
    pub fn isomorphic(&self, other: &LeafSpace) -> bool {
        iso::search(self, other)
    }

    /// Deterministic Graphviz rendering: each edge as a two-point chain,
    /// slot attachments fanning out from the end points.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph leafspace {\n");
        for node in &self.nodes {
            let _ = writeln!(
                out,
                "  {} [shape=circle];",
                dot_quote(&format!("n:{}", node.label()))
            );
        }
        for edge in &self.edges {
            let p0 = dot_quote(&format!("{}#0", edge.id));
            let p1 = dot_quote(&format!("{}#1", edge.id));
            let _ = writeln!(out, "  {p0} [shape=point label=\"\"];");
            let _ = writeln!(out, "  {p1} [shape=point label=\"\"];");
            let _ = writeln!(out, "  {p0} -- {p1} [label={}];", dot_quote(&edge.id));
            if edge.is_loop {
                let _ = writeln!(out, "  {p1} -- {p0};");
            }
            for (end, point) in [(&edge.ends[0], &p0), (&edge.ends[1], &p1)] {
                for node in end.iter() {
                    let _ = writeln!(
                        out,
                        "  {point} -- {};",
                        dot_quote(&format!("n:{}", node.label()))
                    );
                }
            }
        }
        out.push_str("}\n");
        out
    }

    /// JSON mirror of the edge/node/attachment structure.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct EdgeDoc<'a> {
            id: &'a str,
            #[serde(rename = "loop")]
            is_loop: bool,
            lower: Vec<String>,
            upper: Vec<String>,
        }
        #[derive(Serialize)]
        struct Doc<'a> {
            edges: Vec<EdgeDoc<'a>>,
            nodes: Vec<String>,
        }
        let doc = Doc {
            edges: self
                .edges
                .iter()
                .map(|e| EdgeDoc {
                    id: &e.id,
                    is_loop: e.is_loop,
                    lower: e.ends[0].iter().map(|n| n.label()).collect(),
                    upper: e.ends[1].iter().map(|n| n.label()).collect(),
                })
                .collect(),
            nodes: self.nodes.iter().map(|n| n.label()).collect(),
        };
        let mut out = serde_json::to_string(&doc).expect("leaf space serialization cannot fail");
        out.push('\n');
        out
    }
}

fn incidence_spots(edges: &[LsEdge], node: &BoundaryLeaf) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (ei, edge) in edges.iter().enumerate() {
        for end in 0..2 {
            for slot in &edge.ends[end] {
                if slot == node {
                    out.push((ei, end));
                }
            }
        }
    }
    out
}

/// A glued node occupying two distinct single-slot ends.
fn erasable(edges: &[LsEdge], node: &BoundaryLeaf) -> bool {
    let spots = incidence_spots(edges, node);
    spots.len() == 2
        && spots[0] != spots[1]
        && spots
            .iter()
            .all(|&(ei, end)| edges[ei].ends[end].len() == 1)
}

fn dot_quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            other => out.push(other),
        }
    }
    out.push('"');
    out
}

mod iso {
    //! Backtracking isomorphism search over leaf spaces.

    use std::collections::BTreeMap;

    use super::{BoundaryLeaf, LeafSpace};

    struct Side {
        /// Per edge: loop flag and the two ends as node-index slot lists.
        edges: Vec<(bool, [Vec<usize>; 2])>,
        node_count: usize,
    }

    fn prepare(ls: &LeafSpace) -> Side {
        let nodes: Vec<&BoundaryLeaf> = ls.nodes().iter().collect();
        let index: BTreeMap<&BoundaryLeaf, usize> =
            nodes.iter().enumerate().map(|(i, n)| (*n, i)).collect();
        let edges = ls
            .edges()
            .iter()
            .map(|e| {
                let ends = [
                    e.ends[0].iter().map(|n| index[n]).collect(),
                    e.ends[1].iter().map(|n| index[n]).collect(),
                ];
                (e.is_loop, ends)
            })
            .collect();
        Side {
            edges,
            node_count: nodes.len(),
        }
    }

    fn signature(edge: &(bool, [Vec<usize>; 2])) -> (bool, usize, usize) {
        let (a, b) = (edge.1[0].len(), edge.1[1].len());
        (edge.0, a.min(b), a.max(b))
    }

    pub(super) fn search(a: &LeafSpace, b: &LeafSpace) -> bool {
        let sa = prepare(a);
        let sb = prepare(b);
        if sa.edges.len() != sb.edges.len() || sa.node_count != sb.node_count {
            return false;
        }
        let mut sig_a: Vec<_> = sa.edges.iter().map(signature).collect();
        let mut sig_b: Vec<_> = sb.edges.iter().map(signature).collect();
        sig_a.sort_unstable();
        sig_b.sort_unstable();
        if sig_a != sig_b {
            return false;
        }
        let state = State {
            node_map: vec![None; sa.node_count],
            node_rev: vec![None; sb.node_count],
            used: vec![false; sb.edges.len()],
        };
        extend(&sa, &sb, 0, state)
    }

    #[derive(Clone)]
    struct State {
        node_map: Vec<Option<usize>>,
        node_rev: Vec<Option<usize>>,
        used: Vec<bool>,
    }

    fn extend(sa: &Side, sb: &Side, depth: usize, state: State) -> bool {
        if depth == sa.edges.len() {
            return true;
        }
        let ea = &sa.edges[depth];
        for (j, eb) in sb.edges.iter().enumerate() {
            if state.used[j] || signature(ea) != signature(eb) {
                continue;
            }
            for orient in [false, true] {
                let (b0, b1) = if orient {
                    (&eb.1[1], &eb.1[0])
                } else {
                    (&eb.1[0], &eb.1[1])
                };
                for st in unify(&ea.1[0], b0, &state) {
                    for mut st2 in unify(&ea.1[1], b1, &st) {
                        st2.used[j] = true;
                        if extend(sa, sb, depth + 1, st2) {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    /// All extensions of the node map matching one slot multiset against
    /// another.
    fn unify(slots_a: &[usize], slots_b: &[usize], state: &State) -> Vec<State> {
        if slots_a.len() != slots_b.len() {
            return Vec::new();
        }
        let mut count_a: BTreeMap<usize, usize> = BTreeMap::new();
        for &n in slots_a {
            *count_a.entry(n).or_insert(0) += 1;
        }
        let mut count_b: BTreeMap<usize, usize> = BTreeMap::new();
        for &n in slots_b {
            *count_b.entry(n).or_insert(0) += 1;
        }

        // retire source nodes that are already mapped
        let mut pending: Vec<(usize, usize)> = Vec::new();
        for (&n, &mult) in &count_a {
            match state.node_map[n] {
                Some(target) => match count_b.remove(&target) {
                    Some(tm) if tm == mult => {}
                    _ => return Vec::new(),
                },
                None => pending.push((n, mult)),
            }
        }
        // remaining targets must be fresh
        if count_b.keys().any(|&t| state.node_rev[t].is_some()) {
            return Vec::new();
        }

        let mut states = vec![state.clone()];
        for (n, mult) in pending {
            let mut next = Vec::new();
            for st in &states {
                for (&t, &tm) in &count_b {
                    if tm != mult || st.node_rev[t].is_some() {
                        continue;
                    }
                    if st.node_map[n].is_some() {
                        continue;
                    }
                    let mut ext = st.clone();
                    ext.node_map[n] = Some(t);
                    ext.node_rev[t] = Some(n);
                    next.push(ext);
                }
            }
            states = next;
            if states.is_empty() {
                break;
            }
        }
        states
    }
}

pub mod finite_model {
    //! Brute-force Hausdorff closures on a finite discretization.
    //!
    //! Each edge is replaced by `m` sample leaves; a node together with the
    //! first `j` samples off every end it attaches to forms its basic open
    //! neighbourhood at level `j` (arcs are never empty — in the continuum
    //! any two collars at one end overlap). Closures are computed from the
    //! basis by definition and intersected over the shrinking levels
    //! `j = m, …, 1`. The node part of the result is reported; retained
    //! samples inside the first mesh cell are a discretization artifact of
    //! the collars and are projected away.

    use std::collections::BTreeSet;

    use super::{BoundaryLeaf, LeafSpace};
    use crate::error::Error;

    #[derive(Clone, Default)]
    struct BitSet {
        words: Vec<u64>,
    }

    impl BitSet {
        fn with_capacity(bits: usize) -> Self {
            BitSet {
                words: vec![0; bits.div_ceil(64)],
            }
        }

        fn insert(&mut self, bit: usize) {
            self.words[bit / 64] |= 1u64 << (bit % 64);
        }

        fn contains(&self, bit: usize) -> bool {
            self.words[bit / 64] & (1u64 << (bit % 64)) != 0
        }

        fn intersects(&self, other: &BitSet) -> bool {
            self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
        }

        fn intersect_with(&mut self, other: &BitSet) {
            for (a, b) in self.words.iter_mut().zip(&other.words) {
                *a &= b;
            }
        }
    }

    /// The Hausdorff closure of a node, recomputed on the `m`-sample model.
    pub fn hausdorff_closure(
        ls: &LeafSpace,
        node: &BoundaryLeaf,
        m: usize,
    ) -> Result<BTreeSet<BoundaryLeaf>, Error> {
        assert!(
            m >= 2,
            "the discretization needs at least two samples per edge"
        );
        if !ls.nodes().contains(node) {
            return Err(Error::UnknownNode(node.label()));
        }

        let nodes: Vec<&BoundaryLeaf> = ls.nodes().iter().collect();
        let n_edges = ls.edges().len();
        let total = n_edges * m + nodes.len();
        let sample = |edge: usize, k: usize| edge * m + k;
        let node_point = |ni: usize| n_edges * m + ni;

        // first j samples walking in from an end: end 0 counts up, end 1 down
        let arc = |edge: usize, end: usize, j: usize| -> Vec<usize> {
            (0..j)
                .map(|step| {
                    let k = if end == 0 { step } else { m - 1 - step };
                    sample(edge, k)
                })
                .collect()
        };

        // basic open neighbourhoods of a node at every level
        let levels = |ni: usize| -> Vec<BitSet> {
            (1..=m)
                .map(|j| {
                    let mut set = BitSet::with_capacity(total);
                    set.insert(node_point(ni));
                    for (ei, edge) in ls.edges().iter().enumerate() {
                        for end in 0..2 {
                            if edge.ends[end].iter().any(|s| s == nodes[ni]) {
                                for p in arc(ei, end, j) {
                                    set.insert(p);
                                }
                            }
                        }
                    }
                    set
                })
                .collect()
        };

        // the full basis: one singleton per sample, all levels of every node
        let mut basis: Vec<BitSet> = Vec::new();
        for ei in 0..n_edges {
            for k in 0..m {
                let mut set = BitSet::with_capacity(total);
                set.insert(sample(ei, k));
                basis.push(set);
            }
        }
        let node_levels: Vec<Vec<BitSet>> = (0..nodes.len()).map(levels).collect();
        for level_sets in &node_levels {
            basis.extend(level_sets.iter().cloned());
        }

        // closure from the basis: p is in cl(A) iff every basic open
        // containing p meets A
        let closure = |a: &BitSet| -> BitSet {
            let mut cl = BitSet::with_capacity(total);
            for p in 0..total {
                let in_all = basis
                    .iter()
                    .filter(|b| b.contains(p))
                    .all(|b| b.intersects(a));
                if in_all {
                    cl.insert(p);
                }
            }
            cl
        };

        let ni = nodes
            .iter()
            .position(|n| *n == node)
            .expect("membership checked above");
        let mut result: Option<BitSet> = None;
        for level in &node_levels[ni] {
            let cl = closure(level);
            match &mut result {
                None => result = Some(cl),
                Some(acc) => acc.intersect_with(&cl),
            }
        }
        let result = result.expect("at least one level exists");

        Ok(nodes
            .iter()
            .enumerate()
            .filter(|(i, _)| result.contains(node_point(*i)))
            .map(|(_, n)| (*n).clone())
            .collect())
    }
}
