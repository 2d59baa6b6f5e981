//! Classify every leaf of a handful of small atlases.
//!
//! ```bash
//! cargo run --example classify_leaves
//! ```

use striped::{fixtures, StripedAtlas};

fn show(name: &str, atlas: &StripedAtlas) {
    println!("{name}");
    for leaf in atlas.leaves() {
        let ty = atlas.classify(&leaf).expect("fixture leaves classify");
        println!(
            "  {:<12} type {:<3}  special={:<5} singular={:<5} regular={:<5} cross_section={}",
            leaf.label(),
            ty.as_str(),
            ty.is_special(),
            ty.is_singular(),
            ty.is_regular(),
            ty.admits_cross_section(),
        );
    }
    println!("  reduced: {}", atlas.is_reduced());
    println!();
}

fn main() {
    // the two self-gluings of a single strip
    show("cylinder", &fixtures::cylinder());
    show("moebius band", &fixtures::moebius());

    // unglued boundary: alone on its side vs sharing it
    show("half plane", &fixtures::half());
    show("fork", &fixtures::fork());

    // same-side gluings: exhausting the side or not
    show("fold (whole side)", &fixtures::fold1());
    show("fold (side kept)", &fixtures::fold2());

    // two-strip gluings: mergeable chain vs the general case
    show("chain", &fixtures::chain());
    show("ladder", &fixtures::ladder());
}
