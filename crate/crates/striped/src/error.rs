use thiserror::Error;

use crate::atlas::{IntervalId, PairId, StripId};

/// Errors surfaced by atlas operations.
///
/// Well-formedness problems are not errors; they are reported as data by
/// [`crate::StripedAtlas::validate`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown strip {0:?}")]
    UnknownStrip(StripId),

    #[error("unknown pair {0:?}")]
    UnknownPair(PairId),

    #[error("not a leaf of this atlas: {0}")]
    NotALeaf(String),

    #[error("unknown node {0:?} in leaf space")]
    UnknownNode(String),

    #[error(
        "pair {0:?} is not mergeable: both endpoints must exhaust singleton sides of two distinct strips"
    )]
    NotMergeable(PairId),

    #[error("interval {0:?} is already glued")]
    AlreadyGlued(IntervalId),

    #[error("interval {0:?} does not exist in the atlas")]
    UnknownInterval(IntervalId),

    #[error("pair id {0:?} already present in the atlas")]
    DuplicatePairId(PairId),
}
