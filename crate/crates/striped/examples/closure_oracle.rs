//! Cross-check the closed-form Hausdorff closure against the finite-model
//! recomputation.
//!
//! The closed form reads closures straight off the attachment lists. The
//! model discretizes every edge into `m` sample leaves, builds the basic
//! open sets of the resulting finite space, and intersects closures of a
//! shrinking neighbourhood basis — the definition, executed literally.
//! Both must agree, and the model must stabilize across `m`.
//!
//! ```bash
//! cargo run --release --example closure_oracle
//! ```

use striped::generator::{random_atlas, GenParams};
use striped::leafspace::finite_model;

fn main() {
    let mut compared = 0usize;
    for seed in 1..=200 {
        let atlas = random_atlas(&GenParams {
            seed,
            max_strips: 5,
            max_intervals_per_side: 3,
            gluing_density: 0.5,
        });
        let space = atlas.leaf_space();
        for node in space.nodes() {
            let closed = space.hausdorff_closure(node).expect("node belongs");
            for m in [3, 4, 5] {
                let model = finite_model::hausdorff_closure(&space, node, m).expect("node belongs");
                assert_eq!(model, closed, "seed {seed}, node {node}, m {m}");
                compared += 1;
            }
        }
    }
    println!("closed form == finite model on {compared} closures (m = 3, 4, 5)");

    let fork = striped::fixtures::fork().leaf_space();
    for node in fork.nodes() {
        let names: Vec<String> = fork
            .hausdorff_closure(node)
            .expect("node belongs")
            .iter()
            .map(|n| n.label())
            .collect();
        println!("fork: hcl({}) = {{{}}}", node.label(), names.join(", "));
    }
}
