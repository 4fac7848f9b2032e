//! Hom/Ext dimensions between catalog blocks and random tuples.

use monodromic::random::random_tuple;
use monodromic::{
    block_tuple, derived_hom_dim, euler_form, homext, nilpotent_order, Block, BlockKind, HalfTwist,
    MonodromicTuple, NormalForm,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn cat(kind: BlockKind, size: usize) -> MonodromicTuple {
    block_tuple(kind, size).unwrap()
}

fn nf(kind: BlockKind, size: usize) -> NormalForm {
    NormalForm::new(vec![Block::perverse(kind, size).unwrap()])
}

#[test]
fn maps_between_a_blocks_factor_through_the_smaller_one() {
    for s in 2..=6 {
        for sp in 1..s {
            assert_eq!(homext(&cat(BlockKind::A, s), &cat(BlockKind::A, sp)), (sp, sp), "A_{s} -> A_{sp}");
        }
    }
}

#[test]
fn maps_from_a_to_p() {
    for s in 1..=6 {
        for sp in 1..=s {
            assert_eq!(homext(&cat(BlockKind::A, s), &cat(BlockKind::P, sp)), (sp, sp), "A_{s} -> P_{sp}");
        }
    }
}

#[test]
fn skyscraper_to_a_blocks() {
    for s in 1..=6 {
        assert_eq!(homext(&cat(BlockKind::Sky, 1), &cat(BlockKind::A, s)), (1, 1));
    }
}

#[test]
fn identity_endomorphisms_exist() {
    for kind in BlockKind::PLAIN {
        for s in kind.min_size()..=kind.fixed_size().unwrap_or(5) {
            let t = cat(kind, s);
            assert!(homext(&t, &t).0 >= 1, "{kind:?}_{s}");
        }
    }
}

#[test]
fn q_maps_out_like_a_one_size_down() {
    // Morphisms from the unshifted Q_{s+1} to a perverse F of nilpotent order
    // ≤ s are induced by A_s → Q_{s+1}. Unshifted blocks sit one degree below
    // the perverse ones, so these are Ext¹ groups between perverse objects.
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for s in 1..=5 {
        let q = cat(BlockKind::Q, s + 1);
        let a = cat(BlockKind::A, s);
        let mut tested = 0;
        while tested < 10 {
            let (f, _) = random_tuple(&mut rng, 12);
            if nilpotent_order(&f).unwrap() > s {
                continue;
            }
            assert_eq!(homext(&q, &f).1, homext(&a, &f).1, "s = {s}");
            tested += 1;
        }
    }
}

#[test]
fn derived_hom_examples() {
    let a1 = nf(BlockKind::A, 1);
    assert_eq!(derived_hom_dim(&a1, &a1, 0, HalfTwist::ZERO).unwrap(), 1);
    assert_eq!(derived_hom_dim(&nf(BlockKind::A, 2), &a1, 1, HalfTwist::ZERO).unwrap(), 1);
    let sky = NormalForm::new(vec![Block::sky()]);
    for s in -3..=3 {
        assert_eq!(derived_hom_dim(&sky, &sky, 2, HalfTwist::halves(s)).unwrap(), 0);
    }
}

#[test]
fn derived_hom_vanishes_outside_the_shift_window() {
    let blocks: Vec<NormalForm> = [
        (BlockKind::A, 2),
        (BlockKind::B, 3),
        (BlockKind::P, 2),
        (BlockKind::Q, 3),
        (BlockKind::Sky, 1),
    ]
    .into_iter()
    .map(|(k, s)| nf(k, s))
    .collect();
    for x in &blocks {
        for y in &blocks {
            for k in [-3, -2, -1, 2, 3] {
                assert_eq!(derived_hom_dim(x, y, k, HalfTwist::ZERO).unwrap(), 0);
            }
        }
    }
}

#[test]
fn derived_hom_matches_twists() {
    let x = NormalForm::new(vec![Block::new(BlockKind::A, 2, 0, HalfTwist::halves(1)).unwrap()]);
    let y = NormalForm::new(vec![Block::new(BlockKind::A, 2, 0, HalfTwist::halves(3)).unwrap()]);
    assert_eq!(derived_hom_dim(&x, &y, 0, HalfTwist::halves(2)).unwrap(), 2);
    assert_eq!(derived_hom_dim(&x, &y, 0, HalfTwist::ZERO).unwrap(), 0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn euler_form_consistency(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (m, _) = random_tuple(&mut rng, 20);
        let (n, _) = random_tuple(&mut rng, 20);
        let (hom, ext) = homext(&m, &n);
        prop_assert_eq!(hom as i64 - ext as i64, euler_form(&m, &n));
    }

    #[test]
    fn homext_is_additive(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (m1, _) = random_tuple(&mut rng, 8);
        let (m2, _) = random_tuple(&mut rng, 8);
        let (n, _) = random_tuple(&mut rng, 8);
        let (h1, e1) = homext(&m1, &n);
        let (h2, e2) = homext(&m2, &n);
        prop_assert_eq!(homext(&m1.direct_sum(&m2), &n), (h1 + h2, e1 + e2));
    }
}
