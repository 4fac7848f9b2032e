//! Graded dimensions of the constructed algebras, computed by enumeration.

use corelin::{Rational, SparseEchelon};
use pathalg::{
    construct_agamma, construct_lgamma, construct_mgamma, lgamma_basis, lgamma_dim_closed, truncated_polynomial,
    Bidegree, PresentedAlgebra,
};

fn diag(k: i64) -> Bidegree {
    Bidegree::new(k, k)
}

fn anti(k: i64) -> Bidegree {
    Bidegree::new(k, -k)
}

#[test]
fn agamma_n2_dims_are_2_2_2() {
    let a = construct_agamma(2).unwrap();
    let dims: Vec<usize> = (0..=3).map(|k| a.graded_dim(anti(k)).unwrap()).collect();
    assert_eq!(dims, vec![2, 2, 2, 0]);
}

#[test]
fn agamma_n1_keeps_the_loop() {
    let a = construct_agamma(1).unwrap();
    let dims: Vec<usize> = (0..=3).map(|k| a.graded_dim(anti(k)).unwrap()).collect();
    assert_eq!(dims, vec![1, 0, 1, 0]);
}

#[test]
fn agamma_is_concentrated_on_the_antidiagonal_up_to_degree_two() {
    for n in 1..=6 {
        let b = construct_agamma(n).unwrap().basis(6).unwrap();
        for (d, dim) in b.graded_dims() {
            assert_eq!(d.coh, -d.adams);
            assert!(d.coh <= 2, "n={n}: {d} has dim {dim}");
        }
        assert_eq!(b.graded_dim(Bidegree::ZERO), n);
        assert_eq!(b.graded_dim(anti(1)), 2 * (n - 1));
        assert_eq!(b.graded_dim(anti(2)), n);
    }
}

#[test]
fn agamma_path_counts() {
    for n in 1..=5 {
        let a = construct_agamma(n).unwrap();
        for i in 1..=n {
            for j in 1..=n {
                for k in 0..=3 {
                    let expected = match (i.abs_diff(j), k) {
                        (0, 0) | (0, 2) | (1, 1) => 1,
                        _ => 0,
                    };
                    assert_eq!(a.path_count(i, j, anti(k)).unwrap(), expected, "n={n} {i}->{j} k={k}");
                }
            }
        }
    }
}

#[test]
fn lgamma_dims_match_closed_form_and_basis() {
    for n in 2..=6 {
        let l = construct_lgamma(n).unwrap();
        let b = l.basis(2 * n as u32 + 1).unwrap();
        let enumerated = lgamma_basis(n);
        for i in 0..=2 * n + 1 {
            let dim = b.graded_dim(diag(i as i64));
            assert_eq!(dim, lgamma_dim_closed(n, i), "n={n} i={i}");
            assert_eq!(dim, enumerated.iter().filter(|e| e.degree() == i).count(), "n={n} i={i}");
        }
        assert_eq!(b.graded_dim(diag(2 * (n as i64 - 1))), 1);
        assert_eq!(lgamma_dim_closed(n, 2 * n - 1), 0);
    }
}

#[test]
fn lgamma_basis_words_are_independent() {
    for n in 2..=5 {
        let l = construct_lgamma(n).unwrap();
        let b = l.basis(2 * n as u32).unwrap();
        let q = l.quiver();
        let mut spans = std::collections::BTreeMap::new();
        for e in lgamma_basis(n) {
            let word = e.word();
            let ids: Vec<&str> = word.iter().map(String::as_str).collect();
            let path = q.path(&ids).unwrap();
            let s = q.vertex(e.start).unwrap();
            let t = q.vertex(e.end).unwrap();
            let d = diag(e.degree() as i64);
            let coords = b.mul_word((s, s, Bidegree::ZERO), &[(0, Rational::one())], &path).unwrap();
            let echelon = spans
                .entry((s, t, d))
                .or_insert_with(|| SparseEchelon::new(b.dim(s, t, d)));
            assert!(echelon.insert(coords), "n={n}: {e:?} is dependent");
        }
        for ((s, t, d), e) in spans {
            assert_eq!(e.rank(), b.dim(s, t, d));
        }
    }
}

#[test]
fn lgamma_path_totals_are_min() {
    for n in 2..=6 {
        let l = construct_lgamma(n).unwrap();
        for i in 1..=n {
            for j in 1..=n {
                let total: usize = (0..=2 * n as i64).map(|k| l.path_count(i, j, diag(k)).unwrap()).sum();
                assert_eq!(total, i.min(j));
                assert_eq!(l.path_count(i, j, Bidegree::ZERO).unwrap(), usize::from(i == j));
            }
        }
    }
}

#[test]
fn mgamma_lives_in_degrees_zero_to_two() {
    for n in 2..=6 {
        let m = construct_mgamma(n).unwrap();
        let b = m.basis(5).unwrap();
        let dims: Vec<usize> = (0..=5).map(|k| b.graded_dim(diag(k))).collect();
        assert_eq!(dims, vec![n, 2 * (n - 1), n - 1, 0, 0, 0], "n={n}");
        for i in 1..=n {
            assert_eq!(m.path_count(i, i, diag(2)).unwrap(), usize::from(i < n));
            for j in [i.wrapping_sub(1), i + 1] {
                if (1..=n).contains(&j) {
                    assert_eq!(m.path_count(i, j, diag(1)).unwrap(), 1);
                }
            }
        }
    }
}

#[test]
fn truncated_polynomial_dims() {
    let a = truncated_polynomial(3).unwrap();
    let dims: Vec<usize> = (0..=4).map(|k| a.graded_dim(diag(k)).unwrap()).collect();
    assert_eq!(dims, vec![1, 1, 1, 0, 0]);
}

#[test]
fn presentation_json_roundtrip() {
    let l = construct_lgamma(3).unwrap();
    let json = serde_json::to_string(&l).unwrap();
    assert!(json.contains(r#""deg":[1,1]"#));
    let back: PresentedAlgebra = serde_json::from_str(&json).unwrap();
    assert_eq!(back, l);
}

#[test]
fn invalid_presentations_are_rejected() {
    let bad = r#"{"vertices":[1,2],"arrows":[{"id":"f1","src":1,"tgt":2,"deg":[1,1]},{"id":"g1","src":2,"tgt":1,"deg":[1,1]}],"relations":[[{"path":["f1","f1"],"coef":"1"}]]}"#;
    assert!(serde_json::from_str::<PresentedAlgebra>(bad).is_err());
    let inhomogeneous = r#"{"vertices":[1,2],"arrows":[{"id":"f1","src":1,"tgt":2,"deg":[1,1]},{"id":"g1","src":2,"tgt":1,"deg":[1,1]}],"relations":[[{"path":["f1","g1"],"coef":"1"},{"path":["f1","g1","f1","g1"],"coef":"1"}]]}"#;
    assert!(serde_json::from_str::<PresentedAlgebra>(inhomogeneous).is_err());
    let zero_weight = r#"{"vertices":[1],"arrows":[{"id":"x","src":1,"tgt":1,"deg":[1,0]}],"relations":[]}"#;
    assert!(serde_json::from_str::<PresentedAlgebra>(zero_weight).is_err());
}
