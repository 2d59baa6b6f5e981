//! Reduce atlases: merge away every two-strip gluing and report the
//! components that close up into cylinders or Moebius bands.
//!
//! ```bash
//! cargo run --example reduce_and_extract
//! ```

use striped::{fixtures, Sign, StripedAtlas};

fn reduce_and_report(name: &str, atlas: &StripedAtlas) {
    let (reduced, extracted) = atlas.reduce();
    println!("{name}");
    println!(
        "  strips {} -> {}",
        atlas.strips.len(),
        reduced.strips.len()
    );
    if extracted.is_empty() {
        println!("  nothing extracted");
    }
    for extraction in &extracted {
        println!(
            "  strip {} closes into a {}",
            extraction.strip, extraction.kind
        );
    }

    // reduction never changes the smoothed leaf space
    let before = atlas.leaf_space().smooth();
    let after = reduced.leaf_space().smooth();
    println!(
        "  smoothed leaf space preserved: {}",
        before.isomorphic(&after)
    );
    println!();
}

fn main() {
    reduce_and_report("chain of two strips", &fixtures::chain());
    reduce_and_report("cylinder", &fixtures::cylinder());

    // two charts glued both ways make a cylinder or a Moebius band,
    // depending on the sign of the second seam
    reduce_and_report(
        "double chain, both seams direct",
        &fixtures::double_chain(Sign::Plus),
    );
    reduce_and_report(
        "double chain, one seam reversed",
        &fixtures::double_chain(Sign::Minus),
    );

    // already reduced: a fixed point
    reduce_and_report("fold with a spare interval", &fixtures::fold2());
}
