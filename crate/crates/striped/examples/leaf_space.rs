//! Build the leaf space of an atlas, inspect where it fails to be
//! Hausdorff, and render it as Graphviz DOT.
//!
//! ```bash
//! cargo run --example leaf_space | dot -Tsvg > leafspace.svg
//! ```

use striped::fixtures;

fn main() {
    let atlas = fixtures::fold2();
    let space = atlas.leaf_space();

    eprintln!("edges: {}", space.edges().len());
    eprintln!("nodes: {}", space.nodes().len());
    for node in space.nodes() {
        let closure = space.hausdorff_closure(node).expect("node belongs");
        let names: Vec<String> = closure.iter().map(|n| n.label()).collect();
        eprintln!("  hcl({}) = {{{}}}", node.label(), names.join(", "));
    }
    let special: Vec<String> = space.special_points().iter().map(|n| n.label()).collect();
    eprintln!("special points: {{{}}}", special.join(", "));

    // diagnostics above went to stderr; the DOT document is the output
    print!("{}", space.to_dot());
}
