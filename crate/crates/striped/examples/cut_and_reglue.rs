//! Cut an atlas along chosen gluings and glue it back together.
//!
//! Cutting removes pairs; each cut leaf doubles into two boundary leaves,
//! everything else keeps its classification, and the recorded cut map
//! restores the original atlas exactly.
//!
//! ```bash
//! cargo run --example cut_and_reglue
//! ```

use std::collections::BTreeSet;

use striped::{fixtures, PairId};

fn main() {
    let ladder = fixtures::ladder();
    println!("ladder: {}", ladder.serialize().trim_end());

    let to_cut: BTreeSet<PairId> = ladder.pairs.iter().map(|p| p.id.clone()).collect();
    let (cut, map) = ladder.cut(&to_cut).expect("pairs exist");

    println!("after cutting both seams: {}", cut.serialize().trim_end());
    for record in &map.removed {
        println!(
            "  pair {} doubled leaf {} into {} and {}",
            record.pair.id,
            record.leaf.label(),
            record.doubled.0,
            record.doubled.1,
        );
    }

    // the doubled intervals are now surface boundary
    let boundary: Vec<String> = cut.surface_boundary().iter().map(|b| b.label()).collect();
    println!(
        "surface boundary after the cut: {{{}}}",
        boundary.join(", ")
    );

    // the cut map document a pipeline would carry along
    print!("cut map: {}", map.to_json());

    let restored = cut.reglue(&map).expect("cut map fits");
    println!("reglue restores the original: {}", restored == ladder);
}
