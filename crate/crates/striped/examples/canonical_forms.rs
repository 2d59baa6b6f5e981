//! Canonical forms name an atlas's class under relabeling, reordering,
//! strip flips and side swaps — so differently presented atlases of the
//! same surface compare equal, and the cylinder and Moebius band stay
//! apart.
//!
//! ```bash
//! cargo run --example canonical_forms
//! ```

use striped::{fixtures, StripId, StripedAtlas};

fn main() {
    let cylinder = fixtures::cylinder();

    // the same cylinder, renamed, reversed and upside down
    let disguised = StripedAtlas::parse(
        "{\"strips\":[{\"id\":\"band\",\"lower\":[\"top\"],\"upper\":[\"bot\"]}],\"glue\":[{\"id\":\"seam\",\"x\":\"bot\",\"y\":\"top\",\"sign\":\"+\"}]}",
    )
    .expect("document parses")
    .flip_strip(&StripId::new("band"))
    .expect("strip exists")
    .swap_sides(&StripId::new("band"))
    .expect("strip exists");

    println!(
        "cylinder canonical form:  {}",
        cylinder.canonical_form().trim_end()
    );
    println!(
        "disguised canonical form: {}",
        disguised.canonical_form().trim_end()
    );
    println!(
        "same class: {}",
        cylinder.canonical_form() == disguised.canonical_form()
    );
    println!();

    let moebius = fixtures::moebius();
    println!(
        "moebius canonical form:   {}",
        moebius.canonical_form().trim_end()
    );
    println!(
        "cylinder vs moebius: {}",
        if cylinder.canonical_form() == moebius.canonical_form() {
            "indistinguishable (bug!)"
        } else {
            "distinct classes"
        }
    );
    println!();

    // the leaf space is a coarser invariant: both smooth to a circle
    let same_space = cylinder
        .leaf_space()
        .smooth()
        .isomorphic(&moebius.leaf_space().smooth());
    println!("smoothed leaf spaces isomorphic: {same_space}");
}
