//! The combinatorial data model of striped atlases.
//!
//! A striped surface is assembled from finitely many *strips*. Each strip is
//! a horizontal band whose two boundary sides each carry a finite, left-to-right
//! ordered list of open boundary intervals. A *gluing pair* identifies two
//! distinct boundary intervals via a homeomorphism that either preserves
//! (`+`) or reverses (`-`) the horizontal direction. The [`StripedAtlas`] is
//! the whole surface as data: the strips plus the gluing pairs.
//!
//! Values are plain data and may hold ill-formed content; [`StripedAtlas::validate`]
//! reports every rule violation instead of failing, so parsing and validation
//! stay separate concerns.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;

macro_rules! id_type {
    ($(#[$doc:meta])* $name:ident) => {
        $(#[$doc])*
        #[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
        #[serde(transparent)]
        pub struct $name(pub String);

        impl $name {
            pub fn new(s: impl Into<String>) -> Self {
                Self(s.into())
            }

            pub fn as_str(&self) -> &str {
                &self.0
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0)
            }
        }

        impl From<&str> for $name {
            fn from(s: &str) -> Self {
                Self(s.to_string())
            }
        }
    };
}

id_type!(
    /// Identifier of a strip, unique across the atlas.
    StripId
);
id_type!(
    /// Identifier of a boundary interval, unique across the atlas.
    IntervalId
);
id_type!(
    /// Identifier of a gluing pair, unique across the atlas.
    PairId
);

/// One of the two boundary sides of a strip.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SideTag {
    Lower,
    Upper,
}

impl SideTag {
    pub const BOTH: [SideTag; 2] = [SideTag::Lower, SideTag::Upper];

    pub fn opposite(self) -> SideTag {
        match self {
            SideTag::Lower => SideTag::Upper,
            SideTag::Upper => SideTag::Lower,
        }
    }

    /// Index into two-element end arrays: `Lower` is 0, `Upper` is 1.
    pub fn index(self) -> usize {
        match self {
            SideTag::Lower => 0,
            SideTag::Upper => 1,
        }
    }
}

impl fmt::Display for SideTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SideTag::Lower => f.write_str("lower"),
            SideTag::Upper => f.write_str("upper"),
        }
    }
}

/// Orientation of a gluing homeomorphism along the horizontal direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => f.write_str("+"),
            Sign::Minus => f.write_str("-"),
        }
    }
}

/// A strip: two ordered lists of boundary interval ids, one per side.
///
/// The list order encodes the left-to-right order of the open intervals
/// along the side. Interval extents are not modeled; only count and order
/// matter for everything this crate computes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Strip {
    pub id: StripId,
    pub lower: Vec<IntervalId>,
    pub upper: Vec<IntervalId>,
}

impl Strip {
    pub fn new<I: Into<String>>(
        id: impl Into<String>,
        lower: impl IntoIterator<Item = I>,
        upper: impl IntoIterator<Item = I>,
    ) -> Self {
        Strip {
            id: StripId::new(id),
            lower: lower.into_iter().map(|i| IntervalId::new(i)).collect(),
            upper: upper.into_iter().map(|i| IntervalId::new(i)).collect(),
        }
    }

    pub fn side(&self, side: SideTag) -> &[IntervalId] {
        match side {
            SideTag::Lower => &self.lower,
            SideTag::Upper => &self.upper,
        }
    }

    pub fn side_mut(&mut self, side: SideTag) -> &mut Vec<IntervalId> {
        match side {
            SideTag::Lower => &mut self.lower,
            SideTag::Upper => &mut self.upper,
        }
    }
}

/// Identification of two boundary intervals by a gluing homeomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GluingPair {
    pub id: PairId,
    pub x: IntervalId,
    pub y: IntervalId,
    pub sign: Sign,
}

impl GluingPair {
    pub fn new(
        id: impl Into<String>,
        x: impl Into<String>,
        y: impl Into<String>,
        sign: Sign,
    ) -> Self {
        GluingPair {
            id: PairId::new(id),
            x: IntervalId::new(x),
            y: IntervalId::new(y),
            sign,
        }
    }

    pub fn touches(&self, interval: &IntervalId) -> bool {
        &self.x == interval || &self.y == interval
    }
}

/// A finite striped atlas: the surface as data.
///
/// Serialized key order is fixed: `strips` then `glue`, each in stored order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StripedAtlas {
    pub strips: Vec<Strip>,
    #[serde(rename = "glue")]
    pub pairs: Vec<GluingPair>,
}

/// Well-formedness rule identifiers used in validation reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Rule {
    EmptyId,
    DuplicateStripId,
    DuplicateIntervalId,
    DuplicatePairId,
    PairEndpointsEqual,
    UnknownInterval,
    IntervalGluedTwice,
}

impl Rule {
    pub fn as_str(self) -> &'static str {
        match self {
            Rule::EmptyId => "empty-id",
            Rule::DuplicateStripId => "duplicate-strip-id",
            Rule::DuplicateIntervalId => "duplicate-interval-id",
            Rule::DuplicatePairId => "duplicate-pair-id",
            Rule::PairEndpointsEqual => "pair-endpoints-equal",
            Rule::UnknownInterval => "unknown-interval",
            Rule::IntervalGluedTwice => "interval-glued-twice",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A single well-formedness violation: the broken rule plus the offending id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub rule: Rule,
    pub id: String,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {:?}: {}", self.rule, self.id, self.detail)
    }
}

/// Outcome of validation; empty means the atlas is well-formed.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    fn push(&mut self, rule: Rule, id: impl Into<String>, detail: impl Into<String>) {
        self.violations.push(Violation {
            rule,
            id: id.into(),
            detail: detail.into(),
        });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        Ok(())
    }
}

impl StripedAtlas {
    pub fn new(strips: Vec<Strip>, pairs: Vec<GluingPair>) -> Self {
        StripedAtlas { strips, pairs }
    }

    pub fn empty() -> Self {
        StripedAtlas {
            strips: Vec::new(),
            pairs: Vec::new(),
        }
    }

    pub fn strip(&self, id: &StripId) -> Option<&Strip> {
        self.strips.iter().find(|s| &s.id == id)
    }

    pub fn pair(&self, id: &PairId) -> Option<&GluingPair> {
        self.pairs.iter().find(|p| &p.id == id)
    }

    /// All interval ids in walk order: strips in order, lower side then
    /// upper side, each left to right.
    pub fn intervals(&self) -> impl Iterator<Item = &IntervalId> {
        self.strips
            .iter()
            .flat_map(|s| s.lower.iter().chain(s.upper.iter()))
    }

    /// Checks every well-formedness rule and reports all violations.
    ///
    /// Total on arbitrary data: violations are data, not failures.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();

        let mut strip_ids: BTreeMap<&str, usize> = BTreeMap::new();
        for strip in &self.strips {
            if strip.id.as_str().is_empty() {
                report.push(Rule::EmptyId, "", "strip with empty id");
            }
            *strip_ids.entry(strip.id.as_str()).or_insert(0) += 1;
        }
        for (id, count) in &strip_ids {
            if *count > 1 {
                report.push(
                    Rule::DuplicateStripId,
                    *id,
                    format!("strip id used {count} times"),
                );
            }
        }

        let mut interval_ids: BTreeMap<&str, usize> = BTreeMap::new();
        for interval in self.intervals() {
            if interval.as_str().is_empty() {
                report.push(Rule::EmptyId, "", "interval with empty id");
            }
            *interval_ids.entry(interval.as_str()).or_insert(0) += 1;
        }
        for (id, count) in &interval_ids {
            if *count > 1 {
                report.push(
                    Rule::DuplicateIntervalId,
                    *id,
                    format!("interval id appears {count} times across strip sides"),
                );
            }
        }

        let mut pair_ids: BTreeMap<&str, usize> = BTreeMap::new();
        let mut glued: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
        for pair in &self.pairs {
            if pair.id.as_str().is_empty() {
                report.push(Rule::EmptyId, "", "pair with empty id");
            }
            *pair_ids.entry(pair.id.as_str()).or_insert(0) += 1;
            if pair.x == pair.y {
                report.push(
                    Rule::PairEndpointsEqual,
                    pair.id.as_str(),
                    format!("pair glues interval {:?} to itself", pair.x.as_str()),
                );
            }
            for endpoint in [&pair.x, &pair.y] {
                if !interval_ids.contains_key(endpoint.as_str()) {
                    report.push(
                        Rule::UnknownInterval,
                        endpoint.as_str(),
                        format!("pair {:?} references a missing interval", pair.id.as_str()),
                    );
                }
                glued
                    .entry(endpoint.as_str())
                    .or_default()
                    .push(pair.id.as_str());
            }
        }
        for (id, count) in &pair_ids {
            if *count > 1 {
                report.push(
                    Rule::DuplicatePairId,
                    *id,
                    format!("pair id used {count} times"),
                );
            }
        }
        for (interval, pairs) in &glued {
            if pairs.len() > 1 {
                report.push(
                    Rule::IntervalGluedTwice,
                    *interval,
                    format!("interval glued by pairs {}", pairs.join(", ")),
                );
            }
        }

        report
    }

    /// Parses an interchange document.
    ///
    /// Syntax and shape errors (bad JSON, missing or unknown keys) are
    /// reported with line and column; semantic problems such as duplicate
    /// ids parse fine and are left to [`StripedAtlas::validate`].
    pub fn parse(text: &str) -> Result<StripedAtlas, Error> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    /// Serializes to the interchange document: stable key and list order,
    /// no whitespace beyond the trailing newline.
    pub fn serialize(&self) -> String {
        let mut out = serde_json::to_string(self).expect("atlas serialization cannot fail");
        out.push('\n');
        out
    }

    /// Splits the atlas into connected components of the strip/pair graph.
    ///
    /// Strips keep their ids and relative order, pairs stay with the
    /// component that hosts their endpoints, and components are listed by
    /// first strip occurrence.
    pub fn components(&self) -> Vec<StripedAtlas> {
        let n = self.strips.len();
        let index = AtlasIndex::build(self);
        let mut dsu = Dsu::new(n);
        for pair in &self.pairs {
            if let (Some(a), Some(b)) = (index.host_strip(&pair.x), index.host_strip(&pair.y)) {
                dsu.union(a, b);
            }
        }

        let mut roots: Vec<usize> = Vec::new();
        let mut out: Vec<StripedAtlas> = Vec::new();
        for i in 0..n {
            let root = dsu.find(i);
            let slot = match roots.iter().position(|r| *r == root) {
                Some(pos) => pos,
                None => {
                    roots.push(root);
                    out.push(StripedAtlas::empty());
                    out.len() - 1
                }
            };
            out[slot].strips.push(self.strips[i].clone());
        }
        for pair in &self.pairs {
            if let Some(host) = index.host_strip(&pair.x) {
                let root = dsu.find(host);
                if let Some(slot) = roots.iter().position(|r| *r == root) {
                    out[slot].pairs.push(pair.clone());
                }
            }
        }
        out
    }
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // attach the larger root index under the smaller so components
            // are canonically rooted at their first strip
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// Fast lookups over a well-formed atlas. First occurrence wins on
/// malformed input, keeping the helpers total.
pub(crate) struct AtlasIndex<'a> {
    pub atlas: &'a StripedAtlas,
    interval_loc: BTreeMap<&'a str, (usize, SideTag, usize)>,
    pair_of_interval: BTreeMap<&'a str, usize>,
    strip_pos: BTreeMap<&'a str, usize>,
    pair_pos: BTreeMap<&'a str, usize>,
}

impl<'a> AtlasIndex<'a> {
    pub fn build(atlas: &'a StripedAtlas) -> Self {
        let mut interval_loc = BTreeMap::new();
        let mut strip_pos = BTreeMap::new();
        for (si, strip) in atlas.strips.iter().enumerate() {
            strip_pos.entry(strip.id.as_str()).or_insert(si);
            for side in SideTag::BOTH {
                for (k, interval) in strip.side(side).iter().enumerate() {
                    interval_loc
                        .entry(interval.as_str())
                        .or_insert((si, side, k));
                }
            }
        }
        let mut pair_of_interval = BTreeMap::new();
        let mut pair_pos = BTreeMap::new();
        for (pi, pair) in atlas.pairs.iter().enumerate() {
            pair_pos.entry(pair.id.as_str()).or_insert(pi);
            pair_of_interval.entry(pair.x.as_str()).or_insert(pi);
            pair_of_interval.entry(pair.y.as_str()).or_insert(pi);
        }
        AtlasIndex {
            atlas,
            interval_loc,
            pair_of_interval,
            strip_pos,
            pair_pos,
        }
    }

    /// (strip position, side, slot position) of an interval.
    pub fn locate(&self, interval: &IntervalId) -> Option<(usize, SideTag, usize)> {
        self.interval_loc.get(interval.as_str()).copied()
    }

    pub fn host_strip(&self, interval: &IntervalId) -> Option<usize> {
        self.locate(interval).map(|(si, _, _)| si)
    }

    pub fn side_len(&self, strip_pos: usize, side: SideTag) -> usize {
        self.atlas.strips[strip_pos].side(side).len()
    }

    pub fn pair_of(&self, interval: &IntervalId) -> Option<&'a GluingPair> {
        self.pair_of_interval
            .get(interval.as_str())
            .map(|&pi| &self.atlas.pairs[pi])
    }

    pub fn strip_position(&self, id: &StripId) -> Option<usize> {
        self.strip_pos.get(id.as_str()).copied()
    }

    pub fn pair_position(&self, id: &PairId) -> Option<usize> {
        self.pair_pos.get(id.as_str()).copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn cylinder_is_valid() {
        assert!(fixtures::cylinder().validate().is_valid());
    }

    #[test]
    fn self_glued_endpoint_is_a_violation() {
        let atlas = StripedAtlas::new(
            vec![Strip::new("A", ["x"], [] as [&str; 0])],
            vec![GluingPair::new("g", "x", "x", Sign::Plus)],
        );
        let report = atlas.validate();
        assert!(report
            .violations
            .iter()
            .any(|v| v.rule == Rule::PairEndpointsEqual));
    }

    #[test]
    fn interval_in_two_pairs_is_a_violation() {
        let atlas = StripedAtlas::new(
            vec![Strip::new("A", ["x", "y", "z"], [] as [&str; 0])],
            vec![
                GluingPair::new("g1", "x", "y", Sign::Plus),
                GluingPair::new("g2", "x", "z", Sign::Plus),
            ],
        );
        let report = atlas.validate();
        assert!(report
            .violations
            .iter()
            .any(|v| v.rule == Rule::IntervalGluedTwice && v.id == "x"));
    }

    #[test]
    fn missing_interval_is_a_violation() {
        let atlas = StripedAtlas::new(
            vec![Strip::new("A", ["x"], [] as [&str; 0])],
            vec![GluingPair::new("g", "x", "ghost", Sign::Plus)],
        );
        assert!(atlas
            .validate()
            .violations
            .iter()
            .any(|v| v.rule == Rule::UnknownInterval && v.id == "ghost"));
    }

    #[test]
    fn parse_round_trips_cylinder() {
        let cyl = fixtures::cylinder();
        let text = cyl.serialize();
        let back = StripedAtlas::parse(&text).unwrap();
        assert_eq!(back, cyl);
    }

    #[test]
    fn serialize_is_canonical_and_idempotent() {
        let open = fixtures::open();
        let text = open.serialize();
        assert_eq!(
            text,
            "{\"strips\":[{\"id\":\"A\",\"lower\":[],\"upper\":[]}],\"glue\":[]}\n"
        );
        let again = StripedAtlas::parse(&text).unwrap().serialize();
        assert_eq!(again, text);
    }

    #[test]
    fn missing_strips_key_is_a_parse_error() {
        let err = StripedAtlas::parse("{\"glue\":[]}").unwrap_err();
        match err {
            Error::Parse { message, .. } => assert!(message.contains("strips")),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn unknown_field_is_rejected() {
        let err = StripedAtlas::parse("{\"strips\":[],\"glue\":[],\"extra\":1}").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
    }

    #[test]
    fn duplicate_strip_id_parses_then_fails_validation() {
        let text = "{\"strips\":[{\"id\":\"A\",\"lower\":[],\"upper\":[]},{\"id\":\"A\",\"lower\":[],\"upper\":[]}],\"glue\":[]}";
        let atlas = StripedAtlas::parse(text).unwrap();
        assert!(atlas
            .validate()
            .violations
            .iter()
            .any(|v| v.rule == Rule::DuplicateStripId));
    }

    #[test]
    fn components_split_disjoint_strips() {
        let atlas = StripedAtlas::new(
            vec![
                Strip::new("A", [] as [&str; 0], [] as [&str; 0]),
                Strip::new("B", [] as [&str; 0], [] as [&str; 0]),
            ],
            vec![],
        );
        assert_eq!(atlas.components().len(), 2);
    }

    #[test]
    fn ladder_is_one_component() {
        assert_eq!(fixtures::ladder().components().len(), 1);
        assert_eq!(fixtures::cylinder().components().len(), 1);
    }

    #[test]
    fn components_partition_strips_and_pairs() {
        let mut atlas = fixtures::ladder();
        atlas.strips.push(Strip::new("C", ["c"], [] as [&str; 0]));
        let parts = atlas.components();
        assert_eq!(parts.len(), 2);
        let strips: usize = parts.iter().map(|c| c.strips.len()).sum();
        let pairs: usize = parts.iter().map(|c| c.pairs.len()).sum();
        assert_eq!(strips, atlas.strips.len());
        assert_eq!(pairs, atlas.pairs.len());
        for part in &parts {
            assert!(part.validate().is_valid());
        }
    }

    #[test]
    fn validate_is_total_on_garbage() {
        let atlas = StripedAtlas::new(
            vec![
                Strip::new("", ["x", "x"], ["x"]),
                Strip::new("", [] as [&str; 0], ["x"]),
            ],
            vec![
                GluingPair::new("", "x", "x", Sign::Minus),
                GluingPair::new("", "nope", "x", Sign::Plus),
            ],
        );
        let report = atlas.validate();
        assert!(!report.is_valid());
    }
}
