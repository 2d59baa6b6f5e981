//! Small named atlases used throughout tests, examples and docs.
//!
//! Each one is the minimal witness of some classification or surgery
//! behaviour; the constructors return fresh owned values.

use crate::atlas::{GluingPair, Sign, Strip, StripedAtlas};

/// One strip, no boundary intervals, no gluings: an open plane band.
pub fn open() -> StripedAtlas {
    StripedAtlas::new(
        vec![Strip::new("A", [] as [&str; 0], [] as [&str; 0])],
        vec![],
    )
}

/// One strip whose lower side is a single boundary interval.
pub fn half() -> StripedAtlas {
    StripedAtlas::new(vec![Strip::new("A", ["x"], [] as [&str; 0])], vec![])
}

/// One strip with two unglued intervals on the lower side.
pub fn fork() -> StripedAtlas {
    StripedAtlas::new(vec![Strip::new("A", ["x1", "x2"], [] as [&str; 0])], vec![])
}

/// One strip with its full lower side glued to its full upper side,
/// direction preserved: the standard cylinder.
pub fn cylinder() -> StripedAtlas {
    StripedAtlas::new(
        vec![Strip::new("A", ["x"], ["y"])],
        vec![GluingPair::new("g", "x", "y", Sign::Plus)],
    )
}

/// Same as [`cylinder`] but with the direction reversed: the standard
/// Moebius band.
pub fn moebius() -> StripedAtlas {
    StripedAtlas::new(
        vec![Strip::new("A", ["x"], ["y"])],
        vec![GluingPair::new("g", "x", "y", Sign::Plus.flipped())],
    )
}

/// Two intervals on one side glued to each other, exhausting the side.
pub fn fold1() -> StripedAtlas {
    StripedAtlas::new(
        vec![Strip::new("A", ["x1", "x2"], [] as [&str; 0])],
        vec![GluingPair::new("g", "x1", "x2", Sign::Plus)],
    )
}

/// Like [`fold1`] but the side keeps a third, unglued interval.
pub fn fold2() -> StripedAtlas {
    StripedAtlas::new(
        vec![Strip::new("A", ["x1", "x2", "x3"], [] as [&str; 0])],
        vec![GluingPair::new("g", "x1", "x2", Sign::Plus)],
    )
}

/// Two strips joined by two parallel gluings between two-interval sides.
pub fn ladder() -> StripedAtlas {
    StripedAtlas::new(
        vec![
            Strip::new("A", [] as [&str; 0], ["a1", "a2"]),
            Strip::new("B", ["b1", "b2"], [] as [&str; 0]),
        ],
        vec![
            GluingPair::new("g1", "a1", "b1", Sign::Plus),
            GluingPair::new("g2", "a2", "b2", Sign::Plus),
        ],
    )
}

/// Two strips joined along full singleton sides: merges to a single strip.
pub fn chain() -> StripedAtlas {
    StripedAtlas::new(
        vec![
            Strip::new("A", [] as [&str; 0], ["a"]),
            Strip::new("B", ["b"], [] as [&str; 0]),
        ],
        vec![GluingPair::new("g", "a", "b", Sign::Plus)],
    )
}

/// Two strips glued top-to-bottom both ways: a cylinder built from two
/// charts. Flip the sign of `g2` to build a Moebius band instead.
pub fn double_chain(second_sign: Sign) -> StripedAtlas {
    StripedAtlas::new(
        vec![
            Strip::new("A", ["a1"], ["a2"]),
            Strip::new("B", ["b1"], ["b2"]),
        ],
        vec![
            GluingPair::new("g1", "a2", "b1", Sign::Plus),
            GluingPair::new("g2", "b2", "a1", second_sign),
        ],
    )
}
