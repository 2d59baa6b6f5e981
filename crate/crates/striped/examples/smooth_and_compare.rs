//! Smooth leaf spaces and compare them up to isomorphism.
//!
//! Smoothing erases the regular glued nodes — points where two edges meet
//! seamlessly — so leaf spaces of the same surface presented by different
//! atlases become directly comparable.
//!
//! ```bash
//! cargo run --example smooth_and_compare
//! ```

use striped::{fixtures, Sign};

fn describe(name: &str, space: &striped::LeafSpace) {
    let loops = space.edges().iter().filter(|e| e.is_loop).count();
    println!(
        "{name}: {} edges ({} loops), {} nodes",
        space.edges().len(),
        loops,
        space.nodes().len()
    );
}

fn main() {
    // a chain of two strips smooths to the same space as one bare strip
    let chain = fixtures::chain().leaf_space().smooth();
    let open = fixtures::open().leaf_space();
    describe("smoothed chain", &chain);
    describe("bare strip", &open);
    println!("isomorphic: {}\n", chain.isomorphic(&open));

    // one-chart and two-chart cylinders both smooth to a circle
    let one_chart = fixtures::cylinder().leaf_space().smooth();
    let two_charts = fixtures::double_chain(Sign::Plus).leaf_space().smooth();
    describe("cylinder, one chart", &one_chart);
    describe("cylinder, two charts", &two_charts);
    println!("isomorphic: {}\n", one_chart.isomorphic(&two_charts));

    // the circle is not the open arc
    println!("circle vs arc: {}\n", one_chart.isomorphic(&open));

    // folds resist smoothing: their node is glued but not regular
    let fold = fixtures::fold1().leaf_space();
    describe("fold", &fold);
    println!("fold is its own smoothing: {}", fold.smooth() == fold);
}
