mod common;

use common::laws::all_laws;
use fintop::{enumerate_topologies, FiniteSpace, SpaceAnalysis, SubsetMask};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn laws_hold_on_every_space_up_to_four_points() {
    let mut spaces = 0;
    for n in 1..=4 {
        for space in enumerate_topologies(n).unwrap() {
            let s = SpaceAnalysis::new(space);
            for a in SubsetMask::all(n) {
                for b in SubsetMask::all(n) {
                    if let Err(e) = all_laws(&s, a, b) {
                        panic!("{e} in {}", s.space());
                    }
                }
            }
            spaces += 1;
        }
    }
    assert_eq!(spaces, 1 + 4 + 29 + 355);
}

#[test]
fn laws_hold_on_sampled_five_point_pairs() {
    let spaces: Vec<FiniteSpace> = enumerate_topologies(5).unwrap().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    for _ in 0..1000 {
        let s = SpaceAnalysis::new(spaces[rng.gen_range(0..spaces.len())].clone());
        let a = SubsetMask::new(5, rng.gen_range(0..32)).unwrap();
        let b = SubsetMask::new(5, rng.gen_range(0..32)).unwrap();
        if let Err(e) = all_laws(&s, a, b) {
            panic!("{e} in {}", s.space());
        }
    }
}

/// Random topologies on up to 8 points: the topology generated by a few random sets.
fn generated_space(n: usize, gens: &[u32]) -> FiniteSpace {
    let full = (1u32 << n) - 1;
    let mut fam: Vec<u32> = vec![0, full];
    // close under intersection, then union
    for &g in gens {
        let g = g & full;
        let mut add = vec![g];
        for &f in &fam {
            add.push(f & g);
        }
        fam.extend(add);
        fam.sort_unstable();
        fam.dedup();
    }
    let base = fam.clone();
    for mask in 0u64..(1u64 << base.len().min(16)) {
        let u = base
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .fold(0, |acc, (_, &s)| acc | s);
        fam.push(u);
    }
    fam.sort_unstable();
    fam.dedup();
    FiniteSpace::from_bits(n, &fam).expect("generated family is a topology")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn laws_hold_on_generated_spaces(
        n in 1usize..=7,
        gens in proptest::collection::vec(any::<u32>(), 0..3),
        a in any::<u32>(),
        b in any::<u32>(),
    ) {
        let space = generated_space(n, &gens);
        let s = SpaceAnalysis::new(space);
        let a = SubsetMask::truncated(n, a);
        let b = SubsetMask::truncated(n, b);
        prop_assert!(all_laws(&s, a, b).is_ok(), "{:?}", all_laws(&s, a, b));
    }
}
