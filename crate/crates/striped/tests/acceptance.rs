//! Acceptance suite: every criterion below runs over the exhaustive small
//! corpus (all atlas classes with up to 2 strips and 2 intervals per side)
//! plus 1,000 seeded random atlases (seeds 1–1000, up to 6 strips, up to 3
//! intervals per side, gluing density 0.5), and prints one pass/fail line.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use striped::generator::{enumerate_small, random_atlas, GenParams, SplitMix64};
use striped::leafspace::finite_model;
use striped::theorems;
use striped::{fixtures, BoundaryLeaf, LeafClass, LeafType, PairId, StripedAtlas};

static CORPUS: OnceLock<Vec<StripedAtlas>> = OnceLock::new();

fn corpus() -> &'static [StripedAtlas] {
    CORPUS.get_or_init(|| {
        let mut all = enumerate_small(2, 2);
        for seed in 1..=1000 {
            all.push(random_atlas(&GenParams {
                seed,
                max_strips: 6,
                max_intervals_per_side: 3,
                gluing_density: 0.5,
            }));
        }
        all
    })
}

/// Prints the criterion verdict even when the test panics.
struct Gate {
    name: &'static str,
    passed: bool,
}

impl Gate {
    fn new(name: &'static str) -> Self {
        Gate {
            name,
            passed: false,
        }
    }

    fn pass(mut self) {
        self.passed = true;
        println!("{}: PASS", self.name);
    }
}

impl Drop for Gate {
    fn drop(&mut self) {
        if !self.passed {
            println!("{}: FAIL", self.name);
        }
    }
}

fn types_by_class(atlas: &StripedAtlas) -> BTreeMap<LeafClass, LeafType> {
    atlas
        .leaves()
        .into_iter()
        .map(|leaf| {
            let ty = atlas.classify(&leaf).expect("corpus leaves classify");
            (leaf, ty)
        })
        .collect()
}

#[test]
fn criterion_1_taxonomy_partition_and_equivalences() {
    let gate = Gate::new("criterion 1 (taxonomy partition and set equivalences)");
    for atlas in corpus() {
        let types = types_by_class(atlas);

        // exactly one of the eight types per leaf: classification is total
        // and the leaf list is duplicate-free
        let distinct: BTreeSet<&LeafClass> = types.keys().collect();
        assert_eq!(
            distinct.len(),
            atlas.leaves().len(),
            "duplicate leaf classes"
        );

        let of_types = |wanted: &[LeafType]| -> BTreeSet<&LeafClass> {
            types
                .iter()
                .filter(|(_, ty)| wanted.contains(ty))
                .map(|(leaf, _)| leaf)
                .collect()
        };
        let special: BTreeSet<&LeafClass> = types
            .keys()
            .filter(|leaf| atlas.is_special(leaf).unwrap())
            .collect();
        let singular: BTreeSet<&LeafClass> = types
            .keys()
            .filter(|leaf| atlas.is_singular(leaf).unwrap())
            .collect();

        assert_eq!(
            special,
            of_types(&[LeafType::B2, LeafType::C32, LeafType::C33]),
            "special family mismatch"
        );
        assert_eq!(
            singular,
            of_types(&[LeafType::B2, LeafType::C31, LeafType::C32, LeafType::C33]),
            "singular family mismatch"
        );
        assert!(special.is_subset(&singular), "special leaf not singular");

        for (leaf, ty) in &types {
            assert_eq!(atlas.is_regular(leaf).unwrap(), ty.is_regular());
            assert_eq!(
                atlas.is_regular(leaf).unwrap(),
                !atlas.is_singular(leaf).unwrap()
            );
        }
    }
    gate.pass();
}

#[test]
fn criterion_2_hausdorff_closure_oracle_agreement() {
    let gate = Gate::new("criterion 2 (Hausdorff closure oracle agreement, m = 3, 4, 5)");
    for atlas in corpus() {
        let ls = atlas.leaf_space();
        for node in ls.nodes() {
            let closed = ls.hausdorff_closure(node).unwrap();
            for m in [3, 4, 5] {
                let model = finite_model::hausdorff_closure(&ls, node, m).unwrap();
                assert_eq!(model, closed, "m={m} node={node}");
            }
        }

        let by_hcl = ls.special_points();
        let by_type: BTreeSet<BoundaryLeaf> = atlas
            .leaves()
            .into_iter()
            .filter(|leaf| atlas.is_special(leaf).unwrap())
            .filter_map(|leaf| leaf.as_boundary().cloned())
            .collect();
        assert_eq!(
            by_hcl, by_type,
            "special points disagree with special leaves"
        );
    }
    gate.pass();
}

#[test]
fn criterion_3_regularity_oracle() {
    let gate = Gate::new("criterion 3 (attachment regularity matches classification)");
    for atlas in corpus() {
        let ls = atlas.leaf_space();
        for leaf in atlas.leaves() {
            let by_type = atlas.is_regular(&leaf).unwrap();
            match leaf.as_boundary() {
                Some(node) => {
                    assert_eq!(ls.node_is_regular(node).unwrap(), by_type, "node {node}");
                }
                None => assert!(by_type, "interior families are always regular"),
            }
        }
    }
    gate.pass();
}

/// Replays reduction by hand to count merges independently.
fn replay_reduce(atlas: &StripedAtlas) -> (StripedAtlas, usize) {
    let mut work = atlas.clone();
    let mut merges = 0;
    loop {
        let next = work
            .pairs
            .iter()
            .filter(|p| {
                let leaf = LeafClass::Boundary(BoundaryLeaf::glued(p.x.as_str(), p.y.as_str()));
                work.classify(&leaf) == Ok(LeafType::C2)
            })
            .map(|p| p.id.clone())
            .min();
        match next {
            Some(id) => {
                work = work.merge_strips(&id).unwrap();
                merges += 1;
            }
            None => break,
        }
    }
    (work, merges)
}

fn reduction_results_over_all_orders(atlas: &StripedAtlas, out: &mut BTreeSet<String>) {
    let mergeable: Vec<PairId> = atlas
        .pairs
        .iter()
        .filter(|p| {
            let leaf = LeafClass::Boundary(BoundaryLeaf::glued(p.x.as_str(), p.y.as_str()));
            atlas.classify(&leaf) == Ok(LeafType::C2)
        })
        .map(|p| p.id.clone())
        .collect();
    if mergeable.is_empty() {
        out.insert(atlas.canonical_form());
        return;
    }
    for id in mergeable {
        reduction_results_over_all_orders(&atlas.merge_strips(&id).unwrap(), out);
    }
}

#[test]
fn criterion_4_reduction() {
    let gate =
        Gate::new("criterion 4 (reduction: termination, output shape, leaf-space invariance)");
    for atlas in corpus() {
        let (reduced, report) = atlas.reduce();
        let (replayed, merges) = replay_reduce(atlas);
        assert_eq!(replayed, reduced, "reduce disagrees with its replay");
        assert_eq!(
            merges,
            atlas.strips.len() - reduced.strips.len(),
            "merge count differs from strip-count drop"
        );
        if !atlas.strips.is_empty() {
            assert!(merges < atlas.strips.len());
        }

        let types = types_by_class(&reduced);
        assert!(
            !types.values().any(|ty| *ty == LeafType::C2),
            "reduced atlas keeps a two-strip gluing"
        );
        let components = reduced.components();
        for (leaf, ty) in &types {
            if *ty == LeafType::C1 {
                let node = leaf.as_boundary().unwrap();
                let host = components
                    .iter()
                    .find(|c| c.pairs.iter().any(|p| node.contains(&p.x)))
                    .expect("glued leaf lives in a component");
                assert_eq!(
                    host.strips.len(),
                    1,
                    "self-closed gluing in a big component"
                );
                assert!(
                    report.iter().any(|e| e.strip == host.strips[0].id),
                    "self-closed component not reported"
                );
            }
        }
        for extraction in &report {
            let host = components
                .iter()
                .find(|c| c.strips.iter().any(|s| s.id == extraction.strip))
                .expect("reported strip exists");
            assert_eq!(host.strips.len(), 1);
            assert_eq!(host.pairs.len(), 1);
        }

        assert!(
            atlas
                .leaf_space()
                .smooth()
                .isomorphic(&reduced.leaf_space().smooth()),
            "reduction changed the smoothed leaf space"
        );
    }

    // merge-order confluence, exhaustively on the small corpus
    for atlas in enumerate_small(2, 2) {
        let mut results = BTreeSet::new();
        reduction_results_over_all_orders(&atlas, &mut results);
        assert_eq!(
            results.len(),
            1,
            "merge order changed the reduction class of {}",
            atlas.serialize()
        );
    }
    gate.pass();
}

#[test]
fn criterion_5_cutting_contract() {
    let gate = Gate::new("criterion 5 (cutting: round trip, locality, doubling)");
    for (i, atlas) in corpus().iter().enumerate() {
        let mut rng = SplitMix64::new(0x5EED_0000 + i as u64);
        let before_types = types_by_class(atlas);
        let boundary_before = atlas.surface_boundary();
        for _ in 0..10 {
            let subset: BTreeSet<PairId> = atlas
                .pairs
                .iter()
                .filter(|_| rng.chance(0.5))
                .map(|p| p.id.clone())
                .collect();
            let (cut, map) = atlas.cut(&subset).unwrap();
            assert_eq!(map.removed.len(), subset.len());

            // round trip
            assert_eq!(cut.reglue(&map).unwrap(), *atlas, "reglue(cut(a, P)) != a");

            // untouched classes keep their types
            let cut_intervals: BTreeSet<&str> = map
                .removed
                .iter()
                .flat_map(|r| [r.doubled.0.as_str(), r.doubled.1.as_str()])
                .collect();
            for (leaf, ty) in &before_types {
                let touched = leaf
                    .as_boundary()
                    .map(|b| {
                        b.intervals()
                            .iter()
                            .any(|i| cut_intervals.contains(i.as_str()))
                    })
                    .unwrap_or(false);
                if !touched {
                    assert_eq!(
                        cut.classify(leaf).unwrap(),
                        *ty,
                        "untouched leaf {leaf} changed type"
                    );
                }
            }

            // each cut pair doubles into exactly two new boundary leaves
            let boundary_after = cut.surface_boundary();
            let mut expected = boundary_before.clone();
            for record in &map.removed {
                expected.insert(BoundaryLeaf::unglued(record.doubled.0.as_str()));
                expected.insert(BoundaryLeaf::unglued(record.doubled.1.as_str()));
            }
            assert_eq!(boundary_after, expected);
            assert_eq!(
                boundary_after.len(),
                boundary_before.len() + 2 * subset.len(),
                "doubling count"
            );
        }
    }
    gate.pass();
}

#[test]
fn criterion_6_characterization_pipeline() {
    let gate = Gate::new("criterion 6 (strip decomposition pipeline)");
    for atlas in corpus() {
        let report = theorems::check_strip_decomposition(atlas);
        assert!(
            report.passed(),
            "{report}\nwitness: {}",
            report.witness().map(|w| w.atlas.as_str()).unwrap_or("")
        );
    }
    gate.pass();
}

#[test]
fn criterion_7_fibration_criterion() {
    let gate = Gate::new("criterion 7 (cross-section criterion)");
    for atlas in corpus() {
        let report = theorems::check_fibration(atlas);
        assert!(
            report.passed(),
            "{report}\nwitness: {}",
            report.witness().map(|w| w.atlas.as_str()).unwrap_or("")
        );
    }
    gate.pass();
}

#[test]
fn criterion_8_families_corollary() {
    let gate = Gate::new("criterion 8 (leaf family identities and reducedness)");
    for atlas in corpus() {
        let report = theorems::check_families(atlas);
        assert!(
            report.passed(),
            "{report}\nwitness: {}",
            report.witness().map(|w| w.atlas.as_str()).unwrap_or("")
        );
    }
    gate.pass();
}

#[test]
fn criterion_9_standard_models() {
    let gate = Gate::new("criterion 9 (cylinder and Moebius fixtures)");
    let cylinder = fixtures::cylinder();
    let moebius = fixtures::moebius();

    let (_, report) = cylinder.reduce();
    assert_eq!(report.len(), 1);
    assert_eq!(report[0].kind, striped::ExtractedKind::Cylinder);
    let (_, report) = moebius.reduce();
    assert_eq!(report.len(), 1);
    assert_eq!(report[0].kind, striped::ExtractedKind::Moebius);

    for atlas in [&cylinder, &moebius] {
        let smoothed = atlas.leaf_space().smooth();
        assert_eq!(smoothed.edges().len(), 1, "one circle component");
        assert!(smoothed.edges()[0].is_loop);
        assert!(smoothed.nodes().is_empty());
    }

    assert_ne!(cylinder.canonical_form(), moebius.canonical_form());
    assert!(cylinder
        .leaf_space()
        .smooth()
        .isomorphic(&moebius.leaf_space().smooth()));

    // the same comparison through the command line interface
    let dir = std::env::temp_dir().join(format!("striped-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cyl_path = dir.join("cylinder.json");
    let mob_path = dir.join("moebius.json");
    std::fs::write(&cyl_path, cylinder.serialize()).unwrap();
    std::fs::write(&mob_path, moebius.serialize()).unwrap();

    let bin = env!("CARGO_BIN_EXE_striped");
    let canonical = std::process::Command::new(bin)
        .args([
            "iso",
            cyl_path.to_str().unwrap(),
            mob_path.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(canonical.status.code(), Some(1));
    assert_eq!(String::from_utf8_lossy(&canonical.stdout), "unequal\n");

    let spaces = std::process::Command::new(bin)
        .args([
            "iso",
            "--leafspace",
            cyl_path.to_str().unwrap(),
            mob_path.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(spaces.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&spaces.stdout), "equal\n");

    std::fs::remove_dir_all(&dir).ok();
    gate.pass();
}
