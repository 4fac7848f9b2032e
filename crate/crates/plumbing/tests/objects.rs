//! The objects 𝓗_j, their towers and the gluing condition.

use monodromic::{Block, BlockKind, Decoration, HalfTwist};
use plumbing::{
    block_h_slots, build_block_h, build_block_h_primed, build_tower, check_compat, restrict_tower,
    restriction_formula, s_index, tower_layers, tower_restrictions, PlumbingError, PlumbingObject, PlumbingShape, Slot,
    SlotObject, TwistTable,
};

fn b(kind: BlockKind, size: usize, halves: i64) -> Block {
    Block::new(kind, size, -1, HalfTwist::halves(halves)).unwrap()
}

#[test]
fn one_component_uses_the_tilde_block() {
    let slots = block_h_slots(1, 1, false).unwrap();
    assert_eq!(slots, vec![(b(BlockKind::TildeUndP, 1, 0), b(BlockKind::TildeUndP, 1, 0))]);
    assert!(check_compat(&build_block_h(1, 1).unwrap()).unwrap());
}

#[test]
fn two_components_first_index() {
    use BlockKind::*;
    let slots = block_h_slots(2, 1, false).unwrap();
    assert_eq!(slots, vec![(b(UndP, 1, 0), b(UndA, 1, 0)), (b(OveB, 1, 1), b(OveP, 1, 1))]);
    assert_eq!(TwistTable::new(2, 1).unwrap().w, HalfTwist::HALF);
}

#[test]
fn four_components_second_index() {
    use BlockKind::*;
    let slots = block_h_slots(4, 2, false).unwrap();
    assert_eq!(
        slots,
        vec![
            (b(P, 1, 1), b(Q, 2, 1)),
            (b(UndP, 2, 0), b(UndA, 2, 0)),
            (b(OveB, 2, 1), b(OveP, 2, 1)),
            (b(Q, 2, 2), b(P, 1, 2)),
        ]
    );
    let primed = block_h_slots(4, 2, true).unwrap();
    assert_eq!(primed[1], (b(P, 2, 0), b(A, 2, 0)));
}

#[test]
fn five_components_all_cases() {
    use BlockKind::*;
    // j = 1: und slot, two middle slots, ove slot.
    assert_eq!(
        block_h_slots(5, 1, false).unwrap(),
        vec![
            (b(UndP, 1, 0), b(UndA, 1, 0)),
            (b(B, 1, 1), b(A, 1, 1)),
            (b(B, 1, 2), b(A, 1, 2)),
            (b(B, 1, 3), b(A, 1, 3)),
            (b(OveB, 1, 4), b(OveP, 1, 4)),
        ]
    );
    // The odd middle.
    assert_eq!(
        block_h_slots(5, 3, false).unwrap(),
        vec![
            (b(P, 1, 2), b(Q, 2, 2)),
            (b(P, 2, 1), b(Q, 3, 1)),
            (b(OveUndP, 3, 0), b(OveUndP, 3, 0)),
            (b(Q, 3, 1), b(P, 2, 1)),
            (b(Q, 2, 2), b(P, 1, 2)),
        ]
    );
    // Upper half is the flip of the lower half.
    let upper = block_h_slots(5, 4, false).unwrap();
    let lower = block_h_slots(5, 2, false).unwrap();
    let flipped: Vec<_> = lower.into_iter().rev().map(|(f, g)| (g, f)).collect();
    assert_eq!(upper, flipped);
}

#[test]
fn twist_tables() {
    let t = |n, j| TwistTable::new(n, j).unwrap();
    assert_eq!(t(4, 1).w, HalfTwist::halves(3));
    assert_eq!(t(4, 1).wtilde, HalfTwist::halves(5));
    assert_eq!(t(4, 4), TwistTable { j: 4, ..t(4, 1) });
    assert_eq!(t(5, 3).wtilde, HalfTwist::halves(2));
    assert_eq!(t(1, 1).wtilde, HalfTwist::halves(2));
    assert_eq!(t(2, 1).wtilde, HalfTwist::halves(3));
    assert!(matches!(TwistTable::new(3, 4), Err(PlumbingError::IndexOutOfRange { .. })));
}

#[test]
fn all_block_objects_glue() {
    for n in 1..=6 {
        for j in 1..=n {
            assert!(check_compat(&build_block_h(n, j).unwrap()).unwrap(), "n={n} j={j}");
            assert!(check_compat(&build_block_h_primed(n, j).unwrap()).unwrap(), "n={n} j={j}");
        }
    }
}

#[test]
fn all_towers_glue() {
    for n in 1..=6 {
        for j in 1..=n {
            for k in 0..=4 {
                for primed in [true, false] {
                    let t = build_tower(n, j, k, primed).unwrap();
                    assert!(check_compat(&t).unwrap(), "n={n} j={j} k={k}");
                }
            }
        }
    }
}

#[test]
fn tower_base_is_the_primed_block() {
    assert_eq!(build_tower(4, 2, 0, true).unwrap(), build_block_h_primed(4, 2).unwrap());
    let layers = tower_layers(2, 1, 1, true).unwrap();
    assert_eq!(layers[0], block_h_slots(2, 1, true).unwrap());
    // Layer 1 is the flip, shifted by one and twisted by w̃₁ = 3/2.
    use BlockKind::*;
    let s = |kind, size, halves| b(kind, size, halves).shifted(1);
    assert_eq!(layers[1], vec![(s(OveP, 1, 4), s(OveB, 1, 4)), (s(UndA, 1, 3), s(UndP, 1, 3))]);
}

#[test]
fn mismatched_sizes_do_not_glue() {
    use BlockKind::*;
    let obj = PlumbingObject::from_pairs(2, vec![(vec![b(B, 2, 0)], vec![b(A, 2, 0)]), (vec![b(B, 3, 1)], vec![b(A, 3, 1)])]).unwrap();
    assert!(!check_compat(&obj).unwrap());
    let ok = PlumbingObject::from_pairs(2, vec![(vec![b(B, 2, 0)], vec![b(A, 2, 0)]), (vec![b(B, 2, 1)], vec![b(A, 2, 1)])]).unwrap();
    assert!(check_compat(&ok).unwrap());
    // Twists are part of the comparison.
    let twisted = PlumbingObject::from_pairs(2, vec![(vec![b(B, 2, 0)], vec![b(A, 2, 0)]), (vec![b(B, 2, 0)], vec![b(A, 2, 0)])]).unwrap();
    assert!(!check_compat(&twisted).unwrap());
}

#[test]
fn tilde_block_at_a_junction_is_rejected() {
    use BlockKind::*;
    let obj = PlumbingObject::from_pairs(2, vec![(vec![b(A, 1, 0)], vec![b(TildeUndP, 1, 0)]), (vec![b(B, 1, 1)], vec![])]).unwrap();
    assert!(check_compat(&obj).is_err());
}

#[test]
fn shape_validation() {
    use BlockKind::*;
    let slot = |f: Vec<Block>, g: Option<Vec<Block>>| Slot {
        left: SlotObject::new(f),
        right: g.map(SlotObject::new),
    };
    let relcore = PlumbingShape::relcore(2);
    assert!(PlumbingObject::new(relcore, vec![slot(vec![b(A, 1, 0)], Some(vec![b(A, 1, 0)])), slot(vec![b(B, 1, 1)], None)]).is_ok());
    assert!(PlumbingObject::new(relcore, vec![slot(vec![], None), slot(vec![], None)]).is_err());
    assert!(PlumbingObject::new(PlumbingShape::core(2), vec![slot(vec![], Some(vec![]))]).is_err());
    let sky = vec![Block::sky()];
    assert!(matches!(
        PlumbingObject::new(PlumbingShape::core(1), vec![slot(sky.clone(), Some(vec![]))]),
        Err(PlumbingError::SkyWithoutStops(1))
    ));
    let stops = PlumbingShape { with_stops: true, ..PlumbingShape::core(1) };
    assert!(PlumbingObject::new(stops, vec![slot(sky, Some(vec![]))]).is_ok());
}

#[test]
fn object_json_roundtrip() {
    let t = build_tower(3, 1, 2, true).unwrap();
    let json = serde_json::to_string(&t).unwrap();
    assert!(json.contains(r#""variant":"core""#));
    assert_eq!(serde_json::from_str::<PlumbingObject>(&json).unwrap(), t);
}

#[test]
fn restriction_matches_the_layers() {
    for n in 1..=6 {
        for j in 1..=n {
            for i in 1..=n {
                let formula = restriction_formula(n, j, 4, i).unwrap();
                let literal = tower_restrictions(n, j, 4, i, false).unwrap();
                assert_eq!(literal.len(), 5);
                for (f, l) in formula.iter().zip(&literal) {
                    assert_eq!(*f, monodromic::LocalSystemTerm { decorated: Decoration::Plain, ..*l }, "n={n} j={j} i={i}");
                    assert_eq!(f.size, s_index(n, j, i));
                }
            }
        }
    }
}

#[test]
fn restrict_tower_examples() {
    // i = j: the base term is L_{s(j,j)}[0](0).
    let r = restrict_tower(4, 2, 3, 2).unwrap();
    assert_eq!(r[0].size, 2);
    assert_eq!((r[0].shift, r[0].twist), (0, HalfTwist::ZERO));
    // n = 3, j = 2, i = 1, k = 2: the odd middle has w̃ = 1.
    let r = restrict_tower(3, 2, 2, 1).unwrap();
    let twists: Vec<i64> = r.iter().map(|t| t.twist.halves).collect();
    assert_eq!(twists, vec![1, 3, 5]);
    assert!(r.iter().all(|t| t.size == 1));
    assert_eq!(r.iter().map(|t| t.shift).collect::<Vec<_>>(), vec![0, 1, 2]);
    // The top layer keeps its decoration: at i = j, k even, it is und-L_j.
    let r = restrict_tower(4, 2, 2, 2).unwrap();
    assert_eq!(r[2].decorated, Decoration::Und);
    assert!(r[..2].iter().all(|t| t.decorated == Decoration::Plain));
    // With k = 0 the base layer is primed: plain at the und slot.
    assert_eq!(restrict_tower(4, 2, 0, 2).unwrap()[0].decorated, Decoration::Plain);
}
