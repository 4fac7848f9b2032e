//! Decomposition of tuples into catalog blocks.

use corelin::{Matrix, Rational};
use monodromic::random::{block_dim, random_tuple};
use monodromic::{
    block_tuple, decompose, synthesize, Block, BlockKind, MonodromicError, MonodromicTuple, NormalForm,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn perverse(kind: BlockKind, size: usize) -> Block {
    Block::perverse(kind, size).unwrap()
}

#[test]
fn skyscraper_decomposes_to_itself() {
    let nf = decompose(&block_tuple(BlockKind::Sky, 1).unwrap()).unwrap();
    assert_eq!(nf, NormalForm::new(vec![Block::sky()]));
}

#[test]
fn sum_of_a2_and_q3() {
    let t = block_tuple(BlockKind::A, 2)
        .unwrap()
        .direct_sum(&block_tuple(BlockKind::Q, 3).unwrap());
    let nf = decompose(&t).unwrap();
    assert_eq!(nf, NormalForm::new(vec![perverse(BlockKind::A, 2), perverse(BlockKind::Q, 3)]));
}

#[test]
fn zero_maps_split_into_constant_sheaf_and_skyscraper() {
    let t = MonodromicTuple::new(1, 1, Matrix::zeros(1, 1), Matrix::zeros(1, 1)).unwrap();
    let nf = decompose(&t).unwrap();
    assert_eq!(nf, NormalForm::new(vec![perverse(BlockKind::P, 1), Block::sky()]));
}

#[test]
fn zero_tuple_has_empty_normal_form() {
    assert!(decompose(&MonodromicTuple::zero()).unwrap().is_empty());
}

#[test]
fn every_catalog_block_is_recognised() {
    for kind in BlockKind::PLAIN {
        let sizes: Vec<usize> = match kind.fixed_size() {
            Some(s) => vec![s],
            None => (kind.min_size()..=7).collect(),
        };
        for s in sizes {
            let nf = decompose(&block_tuple(kind, s).unwrap()).unwrap();
            assert_eq!(nf, NormalForm::new(vec![perverse(kind, s)]), "{kind:?}_{s}");
        }
    }
}

#[test]
fn non_nilpotent_tuples_are_rejected() {
    let one = Matrix::identity(1);
    let t = MonodromicTuple::new(1, 1, one.clone(), one).unwrap();
    assert_eq!(decompose(&t), Err(MonodromicError::NotNilpotent));
}

#[test]
fn rescaled_presentations_decompose_the_same_way() {
    // (2·id, J/2) is isomorphic to A_3 but not the catalog matrices.
    let a3 = block_tuple(BlockKind::A, 3).unwrap();
    let t = MonodromicTuple::new(
        3,
        3,
        a3.can().scale(&Rational::from_int(2)),
        a3.var().scale(&Rational::new(1, 2)),
    )
    .unwrap();
    assert_eq!(decompose(&t).unwrap(), NormalForm::new(vec![perverse(BlockKind::A, 3)]));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn build_then_decompose_is_identity(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (t, nf) = random_tuple(&mut rng, 40);
        prop_assert!(t.total_dim() <= 40);
        prop_assert_eq!(nf.blocks().iter().map(block_dim).sum::<usize>(), t.total_dim());
        prop_assert_eq!(decompose(&t).unwrap(), nf);
    }

    #[test]
    fn synthesis_inverts_decomposition(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (t, _) = random_tuple(&mut rng, 16);
        let nf = decompose(&t).unwrap();
        let rebuilt = synthesize(&nf).unwrap();
        prop_assert_eq!(decompose(&rebuilt).unwrap(), nf);
    }
}
