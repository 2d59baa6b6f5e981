//! Run the three characterization checks over the exhaustive small corpus.
//!
//! Every valid atlas must pass all three; a failure prints a replayable
//! witness document.
//!
//! ```bash
//! cargo run --release --example theorem_checks
//! ```

use striped::generator::enumerate_small;
use striped::theorems;

fn main() {
    let corpus = enumerate_small(2, 2);
    println!("corpus: {} atlas classes", corpus.len());

    let mut verdicts = [0usize; 2];
    for atlas in &corpus {
        for report in theorems::check_all(atlas) {
            if report.passed() {
                verdicts[0] += 1;
            } else {
                verdicts[1] += 1;
                println!("{report}");
                if let Some(witness) = report.witness() {
                    print!("witness: {}", witness.atlas);
                }
            }
        }
    }
    println!("{} checks passed, {} failed", verdicts[0], verdicts[1]);

    // the pipeline behind the strips check, spelled out on one atlas
    let ladder = striped::fixtures::ladder();
    let singular: std::collections::BTreeSet<striped::PairId> = ladder
        .pairs
        .iter()
        .filter(|p| {
            let leaf = striped::LeafClass::Boundary(striped::BoundaryLeaf::glued(
                p.x.as_str(),
                p.y.as_str(),
            ));
            ladder.is_singular(&leaf).expect("pair leaves classify")
        })
        .map(|p| p.id.clone())
        .collect();
    println!("\nladder: cutting singular gluings {singular:?}");
    let (cut, _) = ladder.cut(&singular).expect("pairs exist");
    let (reduced, extracted) = cut.reduce();
    println!(
        "after cut + reduce: {} components, {} extracted",
        reduced.components().len(),
        extracted.len()
    );
    for component in reduced.components() {
        println!(
            "  strip {} with {} gluings",
            component.strips[0].id,
            component.pairs.len()
        );
    }
}
