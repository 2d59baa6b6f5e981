//! Combinatorics of striped surfaces.
//!
//! A *striped surface* is glued from finitely many horizontal strips along
//! selected boundary intervals. This crate models the gluing data — the
//! [`StripedAtlas`] — and computes everything the data determines about
//! the glued surface's canonical foliation:
//!
//! * classification of every leaf into eight types, with the derived
//!   special / singular / regular predicates ([`leaves`]);
//! * the leaf space as a non-Hausdorff 1-complex, with Hausdorff closures,
//!   smoothing, isomorphism testing and DOT/JSON export ([`leafspace`]);
//! * surgeries: strip flips and side swaps, reduction of two-strip
//!   gluings with cylinder/Moebius extraction, cutting along gluings with
//!   exact re-gluing, and canonical forms ([`surgery`]);
//! * the structure results as falsifiable per-atlas checks ([`theorems`]);
//! * seeded random and exhaustive-up-to-canonical-form atlas generation
//!   to drive the checks ([`generator`]).
//!
//! Atlases travel as single-document JSON (see [`StripedAtlas::parse`] and
//! [`StripedAtlas::serialize`]); the `striped` binary exposes every
//! operation over that format. The `examples/` directory walks through
//! each capability; start with `classify_leaves`.
//!
//! ```
//! use striped::fixtures;
//!
//! let cylinder = fixtures::cylinder();
//! let leaves = cylinder.leaves();
//! assert_eq!(leaves.len(), 2); // the interior family and one glued leaf
//! let (reduced, extracted) = cylinder.reduce();
//! assert_eq!(reduced, cylinder);
//! assert_eq!(extracted[0].kind, striped::surgery::ExtractedKind::Cylinder);
//! ```

pub mod atlas;
mod error;
pub mod fixtures;
pub mod generator;
pub mod leafspace;
pub mod leaves;
pub mod surgery;
pub mod theorems;

pub use atlas::{
    GluingPair, IntervalId, PairId, Rule, SideTag, Sign, Strip, StripId, StripedAtlas,
    ValidationReport, Violation,
};
pub use error::Error;
pub use leafspace::{EdgeEnd, LeafSpace, LsEdge};
pub use leaves::{BoundaryLeaf, LeafClass, LeafType};
pub use surgery::{CutMap, CutRecord, ExtractedKind, Extraction, ExtractionReport};
pub use theorems::{CheckTag, TheoremReport, Verdict, Witness};
