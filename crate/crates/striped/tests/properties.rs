//! Property tests over seeded random atlases.

use std::collections::BTreeSet;

use proptest::prelude::*;

use striped::generator::{random_atlas, GenParams, SplitMix64};
use striped::{PairId, StripedAtlas};

fn atlas_from(seed: u64) -> StripedAtlas {
    random_atlas(&GenParams {
        seed,
        max_strips: 5,
        max_intervals_per_side: 3,
        gluing_density: 0.6,
    })
}

proptest! {
    #[test]
    fn serialization_round_trips(seed in any::<u64>()) {
        let atlas = atlas_from(seed);
        let text = atlas.serialize();
        prop_assert_eq!(StripedAtlas::parse(&text).unwrap(), atlas);
        // serializing a reparse is a fixed point
        prop_assert_eq!(StripedAtlas::parse(&text).unwrap().serialize(), text);
    }

    #[test]
    fn generated_atlases_validate(seed in any::<u64>()) {
        prop_assert!(atlas_from(seed).validate().is_valid());
    }

    #[test]
    fn components_partition_the_atlas(seed in any::<u64>()) {
        let atlas = atlas_from(seed);
        let parts = atlas.components();
        let strip_total: usize = parts.iter().map(|c| c.strips.len()).sum();
        let pair_total: usize = parts.iter().map(|c| c.pairs.len()).sum();
        prop_assert_eq!(strip_total, atlas.strips.len());
        prop_assert_eq!(pair_total, atlas.pairs.len());
        let mut ids = BTreeSet::new();
        for part in &parts {
            prop_assert!(part.validate().is_valid());
            for strip in &part.strips {
                prop_assert!(ids.insert(strip.id.clone()), "strip in two components");
            }
        }
    }

    #[test]
    fn strip_symmetries_are_involutions_preserving_types(seed in any::<u64>()) {
        let atlas = atlas_from(seed);
        let types: Vec<_> = atlas
            .leaves()
            .into_iter()
            .map(|leaf| (leaf.clone(), atlas.classify(&leaf).unwrap()))
            .collect();
        for strip in atlas.strips.iter().map(|s| s.id.clone()) {
            let flipped = atlas.flip_strip(&strip).unwrap();
            prop_assert_eq!(flipped.flip_strip(&strip).unwrap(), atlas.clone());
            let swapped = atlas.swap_sides(&strip).unwrap();
            prop_assert_eq!(swapped.swap_sides(&strip).unwrap(), atlas.clone());
            for (leaf, ty) in &types {
                prop_assert_eq!(flipped.classify(leaf).unwrap(), *ty);
                prop_assert_eq!(swapped.classify(leaf).unwrap(), *ty);
            }
        }
    }

    #[test]
    fn cut_and_reglue_restore_the_atlas(seed in any::<u64>(), subset_seed in any::<u64>()) {
        let atlas = atlas_from(seed);
        let mut rng = SplitMix64::new(subset_seed);
        let subset: BTreeSet<PairId> = atlas
            .pairs
            .iter()
            .filter(|_| rng.chance(0.5))
            .map(|p| p.id.clone())
            .collect();
        let (cut, map) = atlas.cut(&subset).unwrap();
        prop_assert_eq!(cut.strips.clone(), atlas.strips.clone());
        prop_assert_eq!(cut.pairs.len() + subset.len(), atlas.pairs.len());
        prop_assert_eq!(cut.reglue(&map).unwrap(), atlas);
    }

    #[test]
    fn smoothing_is_idempotent(seed in any::<u64>()) {
        let smoothed = atlas_from(seed).leaf_space().smooth();
        prop_assert_eq!(smoothed.smooth(), smoothed);
    }

    #[test]
    fn canonical_form_is_move_invariant(seed in any::<u64>(), move_seed in any::<u64>()) {
        let atlas = random_atlas(&GenParams {
            seed,
            max_strips: 4,
            max_intervals_per_side: 2,
            gluing_density: 0.6,
        });
        let reference = atlas.canonical_form();
        let mut rng = SplitMix64::new(move_seed);
        let mut scrambled = atlas;
        for _ in 0..12 {
            match rng.below(5) {
                0 => {
                    // relabel every id reversibly
                    for strip in &mut scrambled.strips {
                        strip.id = striped::StripId::new(format!("{}x", strip.id));
                        for side in [&mut strip.lower, &mut strip.upper] {
                            for interval in side.iter_mut() {
                                *interval = striped::IntervalId::new(format!("{}x", interval));
                            }
                        }
                    }
                    for pair in &mut scrambled.pairs {
                        pair.id = PairId::new(format!("{}x", pair.id));
                        pair.x = striped::IntervalId::new(format!("{}x", pair.x));
                        pair.y = striped::IntervalId::new(format!("{}x", pair.y));
                    }
                }
                1 => {
                    // reorder strips and pairs
                    let by = rng.below(scrambled.strips.len().max(1) as u64) as usize;
                    scrambled.strips.rotate_left(by);
                    scrambled.pairs.reverse();
                }
                2 => {
                    let pick = rng.below(scrambled.strips.len() as u64) as usize;
                    let id = scrambled.strips[pick].id.clone();
                    scrambled = scrambled.flip_strip(&id).unwrap();
                }
                3 => {
                    let pick = rng.below(scrambled.strips.len() as u64) as usize;
                    let id = scrambled.strips[pick].id.clone();
                    scrambled = scrambled.swap_sides(&id).unwrap();
                }
                _ => {
                    // a gluing and its inverse are the same identification
                    if !scrambled.pairs.is_empty() {
                        let pick = rng.below(scrambled.pairs.len() as u64) as usize;
                        let pair = &mut scrambled.pairs[pick];
                        std::mem::swap(&mut pair.x, &mut pair.y);
                    }
                }
            }
            prop_assert!(scrambled.validate().is_valid());
        }
        prop_assert_eq!(scrambled.canonical_form(), reference);
    }
}
