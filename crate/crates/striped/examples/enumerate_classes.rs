//! Walk every atlas class within small bounds and take a census of the
//! leaf types appearing in them.
//!
//! ```bash
//! cargo run --release --example enumerate_classes
//! ```

use std::collections::BTreeMap;

use striped::generator::enumerate_small;
use striped::LeafType;

fn main() {
    for (strips, ivals) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        let classes = enumerate_small(strips, ivals);
        let mut census: BTreeMap<&str, usize> = BTreeMap::new();
        let mut reduced = 0usize;
        for atlas in &classes {
            for leaf in atlas.leaves() {
                let ty = atlas.classify(&leaf).expect("enumerated leaves classify");
                *census.entry(ty.as_str()).or_insert(0) += 1;
            }
            if atlas.is_reduced() {
                reduced += 1;
            }
        }
        println!(
            "bounds ({strips} strips, {ivals} intervals/side): {} classes, {} reduced",
            classes.len(),
            reduced
        );
        for ty in LeafType::ALL {
            if let Some(count) = census.get(ty.as_str()) {
                println!("  {:<3} x {}", ty.as_str(), count);
            }
        }
    }
}
