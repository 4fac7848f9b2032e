//! Catalog presentations, restriction/specialization lookups, stalks and
//! nilpotency conditions.

use corelin::Matrix;
use monodromic::{
    block_tuple, check_ns, jordan, nilpotent_order, restrict_w, specialize_nu0, stalk0_dims, Block,
    BlockKind, Decoration, HalfTwist, LocalSystemTerm, MonodromicError, MonodromicTuple, NormalForm,
};

fn blk(kind: BlockKind, size: usize, shift: i64, halves: i64) -> Block {
    Block::new(kind, size, shift, HalfTwist::halves(halves)).unwrap()
}

#[test]
fn skyscraper_has_no_nearby_cycles() {
    let t = block_tuple(BlockKind::Sky, 1).unwrap();
    assert_eq!((t.psi_dim(), t.phi_dim()), (0, 1));
    assert!(t.can().is_zero() && t.var().is_zero());
}

#[test]
fn p1_is_the_constant_sheaf() {
    let t = block_tuple(BlockKind::P, 1).unwrap();
    assert_eq!((t.psi_dim(), t.phi_dim()), (1, 0));
}

#[test]
fn a2_is_identity_and_jordan() {
    let t = block_tuple(BlockKind::A, 2).unwrap();
    assert_eq!(t.can(), &Matrix::identity(2));
    assert_eq!(t.var(), &Matrix::from_i64_rows(&[&[0, 0], &[1, 0]]));
}

#[test]
fn p_and_q_compose_to_jordan_blocks() {
    for s in 2..=6 {
        let p = block_tuple(BlockKind::P, s).unwrap();
        assert_eq!(p.n_psi(), jordan(s));
        assert_eq!(p.n_phi(), jordan(s - 1));
        let q = block_tuple(BlockKind::Q, s).unwrap();
        assert_eq!(q.n_psi(), jordan(s - 1));
        assert_eq!(q.n_phi(), jordan(s));
    }
}

#[test]
fn size_constraints_are_enforced() {
    assert!(matches!(block_tuple(BlockKind::Q, 1), Err(MonodromicError::InvalidSize { .. })));
    assert!(Block::new(BlockKind::OveUndP, 1, 0, HalfTwist::ZERO).is_err());
    assert!(Block::new(BlockKind::Sky, 2, 0, HalfTwist::ZERO).is_err());
    assert!(Block::new(BlockKind::TildeUndP, 2, 0, HalfTwist::ZERO).is_err());
    assert!(Block::new(BlockKind::A, 0, 0, HalfTwist::ZERO).is_err());
    assert!(matches!(block_tuple(BlockKind::OveA, 2), Err(MonodromicError::DecoratedBlock(_))));
}

#[test]
fn restriction_lookups() {
    let q3 = blk(BlockKind::Q, 3, 0, 0);
    assert_eq!(
        restrict_w(&q3),
        Some(LocalSystemTerm { size: 2, decorated: Decoration::Plain, shift: 1, twist: HalfTwist::ZERO })
    );
    assert_eq!(restrict_w(&Block::sky()), None);
    let ovep = blk(BlockKind::OveP, 2, 0, 1);
    assert_eq!(
        restrict_w(&ovep),
        Some(LocalSystemTerm { size: 2, decorated: Decoration::Ove, shift: 1, twist: HalfTwist::HALF })
    );
    for kind in [BlockKind::A, BlockKind::B, BlockKind::P] {
        assert_eq!(restrict_w(&blk(kind, 4, -1, 3)).unwrap().size, 4);
    }
    assert_eq!(restrict_w(&blk(BlockKind::UndA, 3, -1, 0)).unwrap().decorated, Decoration::Und);
    assert_eq!(restrict_w(&blk(BlockKind::OveUndA, 3, -1, 0)).unwrap().decorated, Decoration::OveUnd);
}

#[test]
fn specialization_lookups() {
    assert_eq!(specialize_nu0(&blk(BlockKind::OveB, 3, 0, 0)).unwrap(), blk(BlockKind::B, 3, 0, 0));
    let a = blk(BlockKind::A, 2, 0, 2);
    assert_eq!(specialize_nu0(&a).unwrap(), a);
    assert_eq!(specialize_nu0(&blk(BlockKind::OveUndP, 4, -1, 5)).unwrap(), blk(BlockKind::P, 4, -1, 5));
    for k in [BlockKind::OveA, BlockKind::UndA, BlockKind::OveUndA] {
        assert_eq!(specialize_nu0(&blk(k, 2, 0, 0)).unwrap().kind(), BlockKind::A);
    }
    for k in [BlockKind::OveP, BlockKind::UndP] {
        assert_eq!(specialize_nu0(&blk(k, 2, 0, 0)).unwrap().kind(), BlockKind::P);
    }
    assert!(matches!(
        specialize_nu0(&blk(BlockKind::TildeUndP, 1, 0, 0)),
        Err(MonodromicError::UnsupportedSpecialization(BlockKind::TildeUndP))
    ));
}

#[test]
fn stalks_at_the_origin() {
    // Unshifted sheaves are blocks of shift −1 (the skyscraper is perverse as is).
    assert!(stalk0_dims(&blk(BlockKind::A, 5, -1, 0)).unwrap().is_empty());
    assert_eq!(
        stalk0_dims(&blk(BlockKind::B, 2, -1, 0)).unwrap().into_iter().collect::<Vec<_>>(),
        vec![(0, 1), (1, 1)]
    );
    assert_eq!(stalk0_dims(&Block::sky()).unwrap().into_iter().collect::<Vec<_>>(), vec![(0, 1)]);
    assert_eq!(stalk0_dims(&blk(BlockKind::P, 3, -1, 0)).unwrap().into_iter().collect::<Vec<_>>(), vec![(0, 1)]);
    assert_eq!(stalk0_dims(&blk(BlockKind::Q, 3, -1, 0)).unwrap().into_iter().collect::<Vec<_>>(), vec![(1, 1)]);
    // The perverse P_s[1] has its stalk in degree −1.
    assert_eq!(stalk0_dims(&blk(BlockKind::P, 3, 0, 0)).unwrap().into_iter().collect::<Vec<_>>(), vec![(-1, 1)]);
    assert!(stalk0_dims(&blk(BlockKind::OveB, 2, 0, 0)).is_err());
}

#[test]
fn nilpotent_orders_and_condition_ns() {
    for s in 1..=6 {
        let p = block_tuple(BlockKind::P, s).unwrap();
        assert_eq!(nilpotent_order(&p).unwrap(), s);
        assert!(check_ns(&p, s).unwrap());
        for kind in [BlockKind::A, BlockKind::B] {
            let t = block_tuple(kind, s).unwrap();
            assert!(check_ns(&t, s + 1).unwrap(), "{kind:?}_{s}");
            assert!(!check_ns(&t, s).unwrap(), "{kind:?}_{s}");
        }
    }
    assert_eq!(nilpotent_order(&MonodromicTuple::zero()).unwrap(), 0);
    assert!(check_ns(&MonodromicTuple::zero(), 0).unwrap());
}

#[test]
fn tuples_round_trip_through_json() {
    let t = block_tuple(BlockKind::P, 3).unwrap();
    let s = serde_json::to_string(&t).unwrap();
    assert_eq!(s, r#"{"psi":3,"phi":2,"can":[["1","0","0"],["0","1","0"]],"var":[["0","0"],["1","0"],["0","1"]]}"#);
    assert_eq!(serde_json::from_str::<MonodromicTuple>(&s).unwrap(), t);
    let sky: MonodromicTuple = serde_json::from_str(r#"{"psi":0,"phi":1,"can":[[]],"var":[]}"#).unwrap();
    assert_eq!(sky, block_tuple(BlockKind::Sky, 1).unwrap());
    assert!(serde_json::from_str::<MonodromicTuple>(r#"{"psi":1,"phi":1,"can":[["1","2"]],"var":[["0"]]}"#).is_err());
}

#[test]
fn normal_forms_serialise_canonically() {
    let nf = NormalForm::new(vec![blk(BlockKind::Q, 3, 0, 0), blk(BlockKind::A, 2, 0, 1)]);
    let s = serde_json::to_string(&nf).unwrap();
    assert_eq!(
        s,
        r#"{"blocks":[{"kind":"A","size":2,"shift":0,"twist_halves":1},{"kind":"Q","size":3,"shift":0,"twist_halves":0}]}"#
    );
    assert_eq!(serde_json::from_str::<NormalForm>(&s).unwrap(), nf);
    assert!(serde_json::from_str::<NormalForm>(r#"{"blocks":[{"kind":"Q","size":1,"shift":0,"twist_halves":0}]}"#).is_err());
    assert_eq!(nf.to_string(), "{A_2[1](1/2), Q_3[1]}");
}
