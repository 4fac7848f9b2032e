//! Fourier transform on normal forms, tuples and general monodromic objects.

use corelin::{Matrix, Rational};
use monodromic::random::{random_normal_form, random_tuple};
use monodromic::{
    block_tuple, decompose, fourier, fourier_general, fourier_tuple, Block, BlockKind, EigenPart,
    GeneralMonodromicTuple, HalfTwist, MonodromicError, NormalForm,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn blk(kind: BlockKind, size: usize, halves: i64) -> Block {
    Block::new(kind, size, 0, HalfTwist::halves(halves)).unwrap()
}

#[test]
fn a_goes_to_b_with_a_half_twist() {
    let nf = NormalForm::new(vec![blk(BlockKind::A, 2, 0)]);
    assert_eq!(fourier(&nf).unwrap(), NormalForm::new(vec![blk(BlockKind::B, 2, 1)]));
}

#[test]
fn skyscraper_goes_to_constant_sheaf_with_a_half_twist() {
    let nf = NormalForm::new(vec![Block::sky()]);
    assert_eq!(fourier(&nf).unwrap(), NormalForm::new(vec![blk(BlockKind::P, 1, 1)]));
}

#[test]
fn p_and_q_swap() {
    let nf = NormalForm::new(vec![blk(BlockKind::P, 3, 0), blk(BlockKind::Q, 2, 4)]);
    assert_eq!(
        fourier(&nf).unwrap(),
        NormalForm::new(vec![blk(BlockKind::Q, 3, 1), blk(BlockKind::P, 2, 3)])
    );
}

#[test]
fn shifts_are_preserved() {
    let b = Block::new(BlockKind::B, 4, -3, HalfTwist::ZERO).unwrap();
    let out = fourier(&NormalForm::new(vec![b])).unwrap();
    assert_eq!(out.blocks()[0].shift(), -3);
}

#[test]
fn decorated_blocks_have_no_transform() {
    let nf = NormalForm::new(vec![blk(BlockKind::OveB, 2, 0)]);
    assert_eq!(fourier(&nf), Err(MonodromicError::DecoratedBlock(BlockKind::OveB)));
}

#[test]
fn tuple_transform_of_skyscraper() {
    let (t, tw) = fourier_tuple(&block_tuple(BlockKind::Sky, 1).unwrap(), HalfTwist::ZERO);
    assert_eq!(t, block_tuple(BlockKind::P, 1).unwrap());
    assert_eq!(tw, HalfTwist::HALF);
}

#[test]
fn tuple_transform_of_a2_is_b2() {
    let (t, _) = fourier_tuple(&block_tuple(BlockKind::A, 2).unwrap(), HalfTwist::ZERO);
    assert_eq!(t.can(), &Matrix::from_i64_rows(&[&[0, 0], &[-1, 0]]));
    assert_eq!(t.var(), &Matrix::identity(2));
    assert_eq!(decompose(&t).unwrap(), NormalForm::new(vec![blk(BlockKind::B, 2, 0)]));
}

#[test]
fn tuple_transform_twice_has_zero_net_normal_form_change() {
    let t = block_tuple(BlockKind::Q, 4).unwrap();
    let (once, tw1) = fourier_tuple(&t, HalfTwist::ZERO);
    let (twice, tw2) = fourier_tuple(&once, tw1);
    assert_eq!(twice.can(), &t.can().neg());
    assert_eq!(twice.var(), &t.var().neg());
    assert_eq!(decompose(&twice).unwrap(), decompose(&t).unwrap());
    assert_eq!(tw2, HalfTwist::whole(1));
}

fn k_minus_one() -> GeneralMonodromicTuple {
    GeneralMonodromicTuple::new(vec![], 1, 0, Matrix::zeros(1, 0), Matrix::zeros(0, 1)).unwrap()
}

#[test]
fn general_transform_moves_minus_one_part_to_zero_eigenspace() {
    let out = fourier_general(&k_minus_one());
    assert_eq!(out.parts().len(), 1);
    assert!(out.parts()[0].alpha.is_zero());
    assert_eq!(out.parts()[0].dim, 1);
    assert_eq!(out.minus_one_dim(), 0);
}

#[test]
fn general_transform_twice_adds_one_tate_twist() {
    let twice = fourier_general(&fourier_general(&k_minus_one()));
    assert_eq!(twice.minus_one_dim(), 1);
    assert_eq!(twice.minus_one_tate(), 1);
    assert!(twice.parts().is_empty());

    let a2 = block_tuple(BlockKind::A, 2).unwrap();
    let g = GeneralMonodromicTuple::from_unipotent(&a2);
    let twice = fourier_general(&fourier_general(&g));
    let zero = twice.zero_part().unwrap();
    assert_eq!((zero.dim, zero.tate), (2, 1));
    assert_eq!((twice.minus_one_dim(), twice.minus_one_tate()), (2, 1));
    assert_eq!(decompose(&twice.unipotent_part()).unwrap(), decompose(&a2).unwrap());
}

#[test]
fn general_transform_relabels_non_integral_eigenvalues() {
    let part = EigenPart {
        alpha: Rational::new(-1, 3),
        dim: 2,
        n: Matrix::from_i64_rows(&[&[0, 0], &[1, 0]]),
        tate: 0,
    };
    let g = GeneralMonodromicTuple::new(vec![part.clone()], 0, 0, Matrix::zeros(0, 0), Matrix::zeros(0, 0)).unwrap();
    let once = fourier_general(&g);
    assert_eq!(once.parts()[0].alpha, Rational::new(-2, 3));
    assert_eq!(once.parts()[0].n, part.n);
    let twice = fourier_general(&once);
    assert_eq!(twice.parts(), &[part]);
}

#[test]
fn general_tuples_are_validated() {
    let bad_alpha = EigenPart { alpha: Rational::from_int(-1), dim: 1, n: Matrix::zeros(1, 1), tate: 0 };
    assert!(GeneralMonodromicTuple::new(vec![bad_alpha], 0, 0, Matrix::zeros(0, 0), Matrix::zeros(0, 0)).is_err());
    let zero = EigenPart { alpha: Rational::zero(), dim: 1, n: Matrix::zeros(1, 1), tate: 0 };
    // v·c = 1 ≠ N = 0.
    assert!(GeneralMonodromicTuple::new(vec![zero], 1, 0, Matrix::identity(1), Matrix::identity(1)).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fourier_is_an_involution_on_normal_forms(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let nf = random_normal_form(&mut rng, 30, true);
        prop_assert_eq!(fourier(&fourier(&nf).unwrap()).unwrap(), nf);
    }

    #[test]
    fn tuple_transform_commutes_with_decomposition(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (t, _) = random_tuple(&mut rng, 12);
        let (ft, tw) = fourier_tuple(&t, HalfTwist::ZERO);
        prop_assert_eq!(tw, HalfTwist::HALF);
        let lhs = decompose(&ft).unwrap();
        let rhs = fourier(&decompose(&t).unwrap()).unwrap().forget_twists();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn general_transform_specialises_to_tuple_transform(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (t, _) = random_tuple(&mut rng, 12);
        let via_general = fourier_general(&GeneralMonodromicTuple::from_unipotent(&t)).unwrap_part();
        prop_assert_eq!(via_general, fourier_tuple(&t, HalfTwist::ZERO).0);
    }
}

trait UnwrapPart {
    fn unwrap_part(&self) -> monodromic::MonodromicTuple;
}

impl UnwrapPart for GeneralMonodromicTuple {
    fn unwrap_part(&self) -> monodromic::MonodromicTuple {
        self.unipotent_part()
    }
}
