//! Closed-form endomorphism dimensions and their cross-checks.

use corelin::BidegreeTable;
use pathalg::{construct_ginzburg, construct_lgamma, Bidegree};
use plumbing::{
    endo_dim_core, endo_dim_core_with, endo_dim_relcore, endo_table, endo_table_core_with, saturation_sum_check,
    saturation_sum_check_with, uniform_wtilde_halves, EndoVariant,
};
use proptest::prelude::*;

fn ginzburg_table(n: usize, cutoff: u32) -> BidegreeTable {
    construct_ginzburg(n).unwrap().cohomology_table(cutoff).relabel(|c, a| (c, -a))
}

/// Restricts to `0 ≤ b ≤ cutoff`, the window where the Ginzburg side is complete.
fn window(t: &BidegreeTable, cutoff: i64) -> BidegreeTable {
    t.filter(|_, b| (0..=cutoff).contains(&b))
}

#[test]
fn one_component_is_a_polynomial_ring() {
    let t = endo_table(1, EndoVariant::Core, 12, 12);
    let expected: BidegreeTable = (0..=6).map(|m| ((m, 2 * m), 1)).collect();
    assert_eq!(t, expected);
    for m in 0..6 {
        assert_eq!(endo_dim_core(1, 1, 1, -m, -2 * m), 1);
        assert_eq!(endo_dim_core(1, 1, 1, -m, -2 * m - 2), 0);
    }
}

#[test]
fn documented_core_values() {
    assert_eq!(endo_dim_core(2, 1, 1, -1, -4), 1);
    for n in 1..=6 {
        for i in 1..=n {
            assert_eq!(endo_dim_core(n, i, i, 0, 0), 1);
            assert_eq!(endo_dim_core(n, i, i, 1, 0), 0);
            assert_eq!(endo_dim_core(n, i, i, 0, 1), 0);
        }
    }
}

#[test]
fn core_table_matches_ginzburg_for_up_to_two_components() {
    for n in 1..=2 {
        let formula = window(&endo_table(n, EndoVariant::Core, 12, 12), 12);
        assert_eq!(formula.diff(&ginzburg_table(n, 12)), vec![], "n={n}");
    }
}

#[test]
fn uniform_wtilde_reproduces_ginzburg() {
    for n in 1..=6 {
        let formula = window(&endo_table_core_with(n, 12, 12, uniform_wtilde_halves), 12);
        assert_eq!(formula.diff(&ginzburg_table(n, 12)), vec![], "n={n}");
    }
}

#[test]
fn core_table_vanishing_pattern() {
    for n in 1..=6 {
        let t = endo_table(n, EndoVariant::Core, 12, 12);
        assert_eq!(t.get(0, 0), n);
        for ((a, b), _) in t.iter() {
            assert!(a >= 0 && b >= 0, "n={n}: ({a},{b})");
            assert!(!(b == 0 && a > 0) && !(a == 0 && b > 0), "n={n}: ({a},{b})");
        }
    }
}

#[test]
fn relcore_supported_on_the_diagonal_with_min_totals() {
    for n in 1..=6 {
        let t = endo_table(n, EndoVariant::Relcore, 2 * n as i64, 2 * n as i64);
        for ((a, b), _) in t.iter() {
            assert_eq!(a, b);
        }
        assert_eq!(t.get(0, 0), n);
        for i in 1..=n {
            for j in 1..=n {
                let total: usize = (-2 * n as i64..=0).map(|s| endo_dim_relcore(n, i, j, 0, s)).sum();
                assert_eq!(total, i.min(j));
                if n >= 2 {
                    let l = construct_lgamma(n).unwrap();
                    for s in 0..=2 * n as i64 {
                        assert_eq!(
                            endo_dim_relcore(n, i, j, 0, -s),
                            l.path_count(i, j, Bidegree::new(s, s)).unwrap(),
                            "n={n} {i}->{j} length {s}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn relcore_vanishes_off_k_zero() {
    for k in [-3, -1, 1, 2] {
        for s in -6..=0 {
            assert_eq!(endo_dim_relcore(4, 2, 3, k, s), 0);
        }
    }
}

#[test]
fn saturation_checks() {
    assert!(saturation_sum_check(1, EndoVariant::Core, 12).unwrap());
    assert!(saturation_sum_check(2, EndoVariant::Core, 12).unwrap());
    for n in 1..=6 {
        assert!(saturation_sum_check(n, EndoVariant::Relcore, 12).unwrap(), "n={n}");
        assert!(saturation_sum_check_with(n, 12, uniform_wtilde_halves).unwrap(), "n={n}");
    }
    // Perturbing w̃ breaks saturation.
    assert!(!saturation_sum_check_with(1, 12, |_, _| 3).unwrap());
    assert!(!saturation_sum_check_with(2, 12, |_, _| 2).unwrap());
}

proptest! {
    #[test]
    fn flip_symmetry(n in 1usize..=6, i0 in 0usize..6, j0 in 0usize..6, k in -8i64..=2, s in -16i64..=2) {
        let (i, j) = (i0 % n + 1, j0 % n + 1);
        prop_assert_eq!(endo_dim_core(n, i, j, k, s), endo_dim_core(n, n + 1 - i, n + 1 - j, k, s));
        prop_assert_eq!(
            endo_dim_core_with(n, i, j, k, s, uniform_wtilde_halves),
            endo_dim_core_with(n, n + 1 - i, n + 1 - j, k, s, uniform_wtilde_halves)
        );
    }
}

#[test]
fn table_json_shape() {
    let t = endo_table(2, EndoVariant::Core, 2, 2);
    let json = serde_json::to_value(&t).unwrap();
    assert_eq!(json[0], serde_json::json!({"a": 0, "b": 0, "dim": 2}));
}
