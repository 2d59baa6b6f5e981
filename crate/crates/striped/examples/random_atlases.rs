//! Draw seeded random atlases and run every characterization check on
//! them. A seed names the same atlas in every build, so any failure here
//! is a reproducible bug report.
//!
//! ```bash
//! cargo run --release --example random_atlases
//! ```

use striped::generator::{random_atlas, GenParams};
use striped::theorems;

fn main() {
    let mut checked = 0usize;
    let mut failures = 0usize;

    for seed in 1..=500 {
        let atlas = random_atlas(&GenParams {
            seed,
            max_strips: 6,
            max_intervals_per_side: 3,
            gluing_density: 0.5,
        });
        assert!(atlas.validate().is_valid(), "generator broke its contract");

        for report in theorems::check_all(&atlas) {
            checked += 1;
            if !report.passed() {
                failures += 1;
                println!("seed {seed}: {report}");
                if let Some(witness) = report.witness() {
                    print!("witness: {}", witness.atlas);
                }
            }
        }
    }

    println!("{checked} checks over 500 seeded atlases, {failures} failures");

    // determinism: the seed is the atlas
    let params = GenParams {
        seed: 2024,
        max_strips: 4,
        max_intervals_per_side: 2,
        gluing_density: 0.7,
    };
    let again = random_atlas(&params).serialize();
    assert_eq!(random_atlas(&params).serialize(), again);
    print!("seed 2024 always draws: {again}");
}
