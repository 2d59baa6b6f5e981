//! Leaves of the canonical foliation and their eight-way classification.
//!
//! The canonical foliation of a glued surface has two kinds of leaves, both
//! finitely describable:
//!
//! * [`LeafClass::Interior`] — the one-parameter family of horizontal leaves
//!   inside one strip. Every predicate computed here is constant along the
//!   family, so it is handled as a single class.
//! * [`LeafClass::Boundary`] — a boundary interval after gluing: either a
//!   lone unglued interval or the image of an identified pair.
//!
//! [`StripedAtlas::classify`] assigns exactly one [`LeafType`] to each class:
//!
//! | type | meaning |
//! |------|---------|
//! | `A`   | strip interior family |
//! | `B1`  | unglued interval, alone on its side |
//! | `B2`  | unglued interval, sharing its side |
//! | `C1`  | gluing of the two full singleton sides of one strip |
//! | `C2`  | gluing of full singleton sides of two distinct strips |
//! | `C31` | same-side gluing exhausting the side |
//! | `C32` | same-side gluing not exhausting the side |
//! | `C33` | every remaining gluing |
//!
//! The derived predicates (special, singular, regular, admits a cross
//! section) are pure functions of the type; the leaf-space module provides
//! independent routes that the test suites compare against.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::atlas::{AtlasIndex, IntervalId, StripId, StripedAtlas};
use crate::error::Error;

/// A boundary leaf class: the set of one or two interval ids it is made of.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BoundaryLeaf {
    intervals: Vec<IntervalId>,
}

impl BoundaryLeaf {
    pub fn unglued(interval: impl Into<String>) -> Self {
        BoundaryLeaf {
            intervals: vec![IntervalId::new(interval)],
        }
    }

    pub fn glued(a: impl Into<String>, b: impl Into<String>) -> Self {
        let mut intervals = vec![IntervalId::new(a), IntervalId::new(b)];
        intervals.sort();
        BoundaryLeaf { intervals }
    }

    pub fn intervals(&self) -> &[IntervalId] {
        &self.intervals
    }

    pub fn is_glued(&self) -> bool {
        self.intervals.len() == 2
    }

    pub fn contains(&self, interval: &IntervalId) -> bool {
        self.intervals.iter().any(|i| i == interval)
    }

    /// Stable display name: interval ids sorted and joined by `+`.
    pub fn label(&self) -> String {
        self.intervals
            .iter()
            .map(|i| i.as_str())
            .collect::<Vec<_>>()
            .join("+")
    }
}

impl fmt::Display for BoundaryLeaf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// A leaf class of the canonical foliation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LeafClass {
    /// The family of leaves filling the interior of one strip.
    Interior(StripId),
    /// A boundary interval class, glued or not.
    Boundary(BoundaryLeaf),
}

impl LeafClass {
    pub fn interior(strip: impl Into<String>) -> Self {
        LeafClass::Interior(StripId::new(strip))
    }

    pub fn boundary(leaf: BoundaryLeaf) -> Self {
        LeafClass::Boundary(leaf)
    }

    pub fn as_boundary(&self) -> Option<&BoundaryLeaf> {
        match self {
            LeafClass::Interior(_) => None,
            LeafClass::Boundary(b) => Some(b),
        }
    }

    pub fn label(&self) -> String {
        match self {
            LeafClass::Interior(s) => s.as_str().to_string(),
            LeafClass::Boundary(b) => b.label(),
        }
    }
}

impl fmt::Display for LeafClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LeafClass::Interior(s) => write!(f, "interior:{s}"),
            LeafClass::Boundary(b) => write!(f, "boundary:{b}"),
        }
    }
}

/// The eight leaf types. Exactly one applies to every leaf class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum LeafType {
    A,
    B1,
    B2,
    C1,
    C2,
    C31,
    C32,
    C33,
}

impl LeafType {
    pub const ALL: [LeafType; 8] = [
        LeafType::A,
        LeafType::B1,
        LeafType::B2,
        LeafType::C1,
        LeafType::C2,
        LeafType::C31,
        LeafType::C32,
        LeafType::C33,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            LeafType::A => "A",
            LeafType::B1 => "B1",
            LeafType::B2 => "B2",
            LeafType::C1 => "C1",
            LeafType::C2 => "C2",
            LeafType::C31 => "C31",
            LeafType::C32 => "C32",
            LeafType::C33 => "C33",
        }
    }

    /// The leaf space fails to be Hausdorff at this leaf.
    pub fn is_special(self) -> bool {
        matches!(self, LeafType::B2 | LeafType::C32 | LeafType::C33)
    }

    /// No saturated collar neighbourhood exists around this leaf.
    pub fn is_singular(self) -> bool {
        matches!(
            self,
            LeafType::B2 | LeafType::C31 | LeafType::C32 | LeafType::C33
        )
    }

    pub fn is_regular(self) -> bool {
        !self.is_singular()
    }

    /// A transversal arc through the leaf meets nearby leaves once each.
    pub fn admits_cross_section(self) -> bool {
        !matches!(self, LeafType::C31 | LeafType::C32)
    }
}

impl fmt::Display for LeafType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl StripedAtlas {
    /// Enumerates every leaf class in deterministic order.
    ///
    /// Interior families come first, in strip order. Boundary classes
    /// follow in walk order (strips in order, lower then upper side, left
    /// to right); a glued class appears at its first endpoint.
    pub fn leaves(&self) -> Vec<LeafClass> {
        let index = AtlasIndex::build(self);
        let mut out: Vec<LeafClass> = self
            .strips
            .iter()
            .map(|s| LeafClass::Interior(s.id.clone()))
            .collect();
        let mut seen: BTreeSet<BoundaryLeaf> = BTreeSet::new();
        for interval in self.intervals() {
            let leaf = match index.pair_of(interval) {
                Some(pair) => BoundaryLeaf::glued(pair.x.as_str(), pair.y.as_str()),
                None => BoundaryLeaf::unglued(interval.as_str()),
            };
            if seen.insert(leaf.clone()) {
                out.push(LeafClass::Boundary(leaf));
            }
        }
        out
    }

    /// Assigns the type of a leaf class.
    ///
    /// Errors when the class does not belong to this atlas (unknown strip,
    /// unknown interval, interval glued differently, or a glued class with
    /// no matching pair).
    pub fn classify(&self, leaf: &LeafClass) -> Result<LeafType, Error> {
        let index = AtlasIndex::build(self);
        match leaf {
            LeafClass::Interior(strip) => {
                if index.strip_position(strip).is_none() {
                    return Err(Error::NotALeaf(leaf.to_string()));
                }
                Ok(LeafType::A)
            }
            LeafClass::Boundary(b) if !b.is_glued() => {
                let interval = &b.intervals()[0];
                let (si, side, _) = index
                    .locate(interval)
                    .ok_or_else(|| Error::NotALeaf(leaf.to_string()))?;
                if index.pair_of(interval).is_some() {
                    return Err(Error::NotALeaf(leaf.to_string()));
                }
                if index.side_len(si, side) == 1 {
                    Ok(LeafType::B1)
                } else {
                    Ok(LeafType::B2)
                }
            }
            LeafClass::Boundary(b) => {
                let (x, y) = (&b.intervals()[0], &b.intervals()[1]);
                if x == y {
                    return Err(Error::NotALeaf(leaf.to_string()));
                }
                let pair = index
                    .pair_of(x)
                    .ok_or_else(|| Error::NotALeaf(leaf.to_string()))?;
                if !(pair.touches(x) && pair.touches(y)) {
                    return Err(Error::NotALeaf(leaf.to_string()));
                }
                let (sx, side_x, _) = index
                    .locate(x)
                    .ok_or_else(|| Error::NotALeaf(leaf.to_string()))?;
                let (sy, side_y, _) = index
                    .locate(y)
                    .ok_or_else(|| Error::NotALeaf(leaf.to_string()))?;
                let len_x = index.side_len(sx, side_x);
                let len_y = index.side_len(sy, side_y);
                let ty = if sx == sy && side_x == side_y {
                    // both endpoints on one side of one strip
                    if len_x == 2 {
                        LeafType::C31
                    } else {
                        LeafType::C32
                    }
                } else if sx == sy && len_x == 1 && len_y == 1 {
                    LeafType::C1
                } else if sx != sy && len_x == 1 && len_y == 1 {
                    LeafType::C2
                } else {
                    LeafType::C33
                };
                Ok(ty)
            }
        }
    }

    pub fn is_special(&self, leaf: &LeafClass) -> Result<bool, Error> {
        Ok(self.classify(leaf)?.is_special())
    }

    pub fn is_singular(&self, leaf: &LeafClass) -> Result<bool, Error> {
        Ok(self.classify(leaf)?.is_singular())
    }

    pub fn is_regular(&self, leaf: &LeafClass) -> Result<bool, Error> {
        Ok(self.classify(leaf)?.is_regular())
    }

    pub fn admits_cross_section(&self, leaf: &LeafClass) -> Result<bool, Error> {
        Ok(self.classify(leaf)?.admits_cross_section())
    }

    /// All boundary leaf classes: the image of every boundary interval.
    pub fn boundary_classes(&self) -> BTreeSet<BoundaryLeaf> {
        self.leaves()
            .into_iter()
            .filter_map(|l| match l {
                LeafClass::Boundary(b) => Some(b),
                LeafClass::Interior(_) => None,
            })
            .collect()
    }

    /// Boundary classes that remain boundary after gluing: the unglued ones.
    pub fn surface_boundary(&self) -> BTreeSet<BoundaryLeaf> {
        self.boundary_classes()
            .into_iter()
            .filter(|b| !b.is_glued())
            .collect()
    }

    /// True when no leaf is of type `C1` or `C2`.
    ///
    /// Equivalently the boundary classes are exactly the surface boundary
    /// plus the singular classes; the equivalence is cross-checked in debug
    /// builds but never used as the primary computation.
    pub fn is_reduced(&self) -> bool {
        let by_types = self
            .leaves()
            .iter()
            .all(|leaf| !matches!(self.classify(leaf), Ok(LeafType::C1) | Ok(LeafType::C2)));
        debug_assert_eq!(by_types, self.reduced_by_families());
        by_types
    }

    fn reduced_by_families(&self) -> bool {
        let mut expected = self.surface_boundary();
        for leaf in self.leaves() {
            if let LeafClass::Boundary(b) = &leaf {
                if self
                    .classify(&leaf)
                    .map(LeafType::is_singular)
                    .unwrap_or(false)
                {
                    expected.insert(b.clone());
                }
            }
        }
        expected == self.boundary_classes()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn boundary(ids: &[&str]) -> LeafClass {
        match ids {
            [one] => LeafClass::Boundary(BoundaryLeaf::unglued(*one)),
            [a, b] => LeafClass::Boundary(BoundaryLeaf::glued(*a, *b)),
            _ => panic!("boundary classes have one or two intervals"),
        }
    }

    #[test]
    fn leaf_enumeration_matches_structure() {
        assert_eq!(fixtures::open().leaves(), vec![LeafClass::interior("A")]);
        assert_eq!(
            fixtures::cylinder().leaves(),
            vec![LeafClass::interior("A"), boundary(&["x", "y"])]
        );
        assert_eq!(
            fixtures::fold2().leaves(),
            vec![
                LeafClass::interior("A"),
                boundary(&["x1", "x2"]),
                boundary(&["x3"]),
            ]
        );
    }

    #[test]
    fn classification_of_the_named_fixtures() {
        let cases: Vec<(StripedAtlas, LeafClass, LeafType)> = vec![
            (fixtures::cylinder(), boundary(&["x", "y"]), LeafType::C1),
            (fixtures::fold1(), boundary(&["x1", "x2"]), LeafType::C31),
            (fixtures::fold2(), boundary(&["x1", "x2"]), LeafType::C32),
            (fixtures::fold2(), boundary(&["x3"]), LeafType::B2),
            (fixtures::ladder(), boundary(&["a1", "b1"]), LeafType::C33),
            (fixtures::half(), boundary(&["x"]), LeafType::B1),
            (fixtures::chain(), boundary(&["a", "b"]), LeafType::C2),
            (fixtures::open(), LeafClass::interior("A"), LeafType::A),
        ];
        for (atlas, leaf, expected) in cases {
            assert_eq!(atlas.classify(&leaf).unwrap(), expected, "{leaf}");
        }
    }

    #[test]
    fn one_sided_gluing_between_distinct_sides_is_c33() {
        // same strip, opposite sides, upper side not a singleton
        let atlas = StripedAtlas::new(
            vec![crate::atlas::Strip::new("A", ["x"], ["y1", "y2"])],
            vec![crate::atlas::GluingPair::new(
                "g",
                "x",
                "y1",
                crate::atlas::Sign::Plus,
            )],
        );
        assert_eq!(
            atlas.classify(&boundary(&["x", "y1"])).unwrap(),
            LeafType::C33
        );
    }

    #[test]
    fn predicates_follow_the_type_table() {
        let fold1 = fixtures::fold1();
        let leaf = boundary(&["x1", "x2"]);
        assert!(fold1.is_singular(&leaf).unwrap());
        assert!(!fold1.is_special(&leaf).unwrap());
        assert!(!fold1.admits_cross_section(&leaf).unwrap());

        let half = fixtures::half();
        let leaf = boundary(&["x"]);
        assert!(half.is_regular(&leaf).unwrap());
        assert!(!half.is_special(&leaf).unwrap());

        let ladder = fixtures::ladder();
        let leaf = boundary(&["a1", "b1"]);
        assert!(ladder.is_special(&leaf).unwrap());
        assert!(ladder.is_singular(&leaf).unwrap());
        assert!(ladder.admits_cross_section(&leaf).unwrap());
    }

    #[test]
    fn unknown_leaves_are_rejected() {
        let cyl = fixtures::cylinder();
        assert!(matches!(
            cyl.classify(&LeafClass::interior("Z")),
            Err(Error::NotALeaf(_))
        ));
        // x is glued in the cylinder, so {x} alone is not a leaf
        assert!(matches!(
            cyl.classify(&boundary(&["x"])),
            Err(Error::NotALeaf(_))
        ));
        // {x, y} is only a leaf when an actual pair identifies x with y
        assert!(matches!(
            fixtures::fork().classify(&boundary(&["x1", "x2"])),
            Err(Error::NotALeaf(_))
        ));
    }

    #[test]
    fn boundary_families_of_fixtures() {
        let cyl = fixtures::cylinder();
        assert_eq!(
            cyl.boundary_classes(),
            BTreeSet::from([BoundaryLeaf::glued("x", "y")])
        );
        assert!(cyl.surface_boundary().is_empty());

        let fork = fixtures::fork();
        let expected = BTreeSet::from([BoundaryLeaf::unglued("x1"), BoundaryLeaf::unglued("x2")]);
        assert_eq!(fork.boundary_classes(), expected);
        assert_eq!(fork.surface_boundary(), expected);

        let fold2 = fixtures::fold2();
        assert_eq!(
            fold2.boundary_classes(),
            BTreeSet::from([BoundaryLeaf::glued("x1", "x2"), BoundaryLeaf::unglued("x3"),])
        );
        assert_eq!(
            fold2.surface_boundary(),
            BTreeSet::from([BoundaryLeaf::unglued("x3")])
        );
    }

    #[test]
    fn reducedness_of_fixtures() {
        assert!(!fixtures::chain().is_reduced());
        assert!(!fixtures::cylinder().is_reduced());
        assert!(fixtures::fold2().is_reduced());
        assert!(fixtures::open().is_reduced());
        assert!(fixtures::ladder().is_reduced());
    }

    #[test]
    fn every_leaf_gets_exactly_one_type() {
        for atlas in [
            fixtures::open(),
            fixtures::cylinder(),
            fixtures::moebius(),
            fixtures::fold1(),
            fixtures::fold2(),
            fixtures::ladder(),
            fixtures::chain(),
        ] {
            for leaf in atlas.leaves() {
                let ty = atlas.classify(&leaf).unwrap();
                assert_eq!(LeafType::ALL.iter().filter(|t| **t == ty).count(), 1);
            }
        }
    }
}
