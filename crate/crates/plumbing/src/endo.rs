//! Closed-form bigraded endomorphism dimensions of the towers and their
//! cross-checks against the path-algebra side.
//!
//! A pair `(k, s)` of Hom degree and Hodge twist between `𝓗_i^∞` and `𝓗_j^∞`
//! lands in the bidegree `(a, b) = (k − s, −s)`. All half-integers are handled
//! as integer counts of halves.

use corelin::BidegreeTable;
use pathalg::{construct_ginzburg, construct_lgamma, Bidegree};
use serde::{Deserialize, Serialize};

use crate::{s_index, PlumbingError, TwistTable};

/// Which plumbing the endomorphism algebra belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EndoVariant {
    /// All components are `ℙ¹`.
    Core,
    /// The last component is `ℂ`.
    Relcore,
}

/// `w̃_j` in halves, as tabulated by [`TwistTable`].
pub fn paper_wtilde_halves(n: usize, j: usize) -> i64 {
    TwistTable::new(n, j).map_or(0, |t| t.wtilde.halves)
}

/// The index-independent alternative `w̃ = (n + 1)/2`, in halves.
pub fn uniform_wtilde_halves(n: usize, _j: usize) -> i64 {
    n as i64 + 1
}

/// `endo_dim_core` with a caller-supplied `w̃` (in halves), for diagnostics
/// and negative controls.
pub fn endo_dim_core_with(
    n: usize,
    i: usize,
    j: usize,
    k: i64,
    s: i64,
    wtilde_halves: impl Fn(usize, usize) -> i64,
) -> usize {
    if k > 0 || s > 0 {
        return 0;
    }
    let u = -k;
    let d = if u % 2 == 0 { i.abs_diff(j) } else { (n + 1 - i).abs_diff(j) } as i64;
    // 2·(e + s/2), with e = u·w̃_i + d.
    let twice = u * wtilde_halves(n, i) + d + s;
    if twice % 2 != 0 {
        return 0;
    }
    let depth = -twice / 2;
    usize::from(depth >= 0 && depth < s_index(n, i, j) as i64)
}

/// `dim Hom^k(𝓗_i^∞, 𝓗_j^∞(s/2))` on the core plumbing: `1` iff `k ≤ 0`,
/// `s ≤ 0`, `e + s/2` is an integer and `0 ≤ −(e + s/2) ≤ s(i, j) − 1`, where
/// `e = (−k)·w̃_i + d` and `d = |i − j|/2` for even `k`, `|n − i + 1 − j|/2`
/// for odd `k`.
pub fn endo_dim_core(n: usize, i: usize, j: usize, k: i64, s: i64) -> usize {
    endo_dim_core_with(n, i, j, k, s, paper_wtilde_halves)
}

/// The relcore analogue: `1` iff `k = 0`, `s/2 + |j − i|/2` is an integer and
/// `0 ≤ −(s/2 + |j − i|/2) ≤ min(i, j) − 1`.
pub fn endo_dim_relcore(_n: usize, i: usize, j: usize, k: i64, s: i64) -> usize {
    if k != 0 {
        return 0;
    }
    let twice = s + i.abs_diff(j) as i64;
    if twice % 2 != 0 {
        return 0;
    }
    let depth = -twice / 2;
    usize::from(depth >= 0 && depth < i.min(j) as i64)
}

fn table_from(n: usize, a_cutoff: i64, b_cutoff: i64, dim: impl Fn(usize, usize, i64, i64) -> usize) -> BidegreeTable {
    let mut t = BidegreeTable::new();
    for a in -a_cutoff..=a_cutoff {
        for b in -b_cutoff..=b_cutoff {
            let (k, s) = (a - b, -b);
            let total: usize = (1..=n)
                .flat_map(|i| (1..=n).map(move |j| (i, j)))
                .map(|(i, j)| dim(i, j, k, s))
                .sum();
            t.add(a, b, total);
        }
    }
    t
}

/// `(a, b) ↦ Σ_{i,j} dim` over `|a| ≤ a_cutoff`, `|b| ≤ b_cutoff`. Negative
/// bidegrees are included so that vanishing there is actually tested.
pub fn endo_table(n: usize, variant: EndoVariant, a_cutoff: i64, b_cutoff: i64) -> BidegreeTable {
    match variant {
        EndoVariant::Core => table_from(n, a_cutoff, b_cutoff, |i, j, k, s| endo_dim_core(n, i, j, k, s)),
        EndoVariant::Relcore => table_from(n, a_cutoff, b_cutoff, |i, j, k, s| endo_dim_relcore(n, i, j, k, s)),
    }
}

/// The core table with a caller-supplied `w̃`.
pub fn endo_table_core_with(
    n: usize,
    a_cutoff: i64,
    b_cutoff: i64,
    wtilde_halves: impl Fn(usize, usize) -> i64 + Copy,
) -> BidegreeTable {
    table_from(n, a_cutoff, b_cutoff, |i, j, k, s| endo_dim_core_with(n, i, j, k, s, wtilde_halves))
}

/// Ungraded reference dimensions per total degree `a ∈ 0..=a_max`: the
/// degree-`a` cohomology of the Ginzburg dga (core), which is complete once
/// the Adams cutoff reaches `2a`, or `dim L_Γ^a` (relcore).
pub fn reference_row_sums(n: usize, variant: EndoVariant, a_max: usize) -> Result<Vec<usize>, PlumbingError> {
    match variant {
        EndoVariant::Core => {
            let t = construct_ginzburg(n)?.cohomology_table(2 * a_max as u32);
            let rows = t.row_sums();
            Ok((0..=a_max as i64).map(|a| rows.get(&a).copied().unwrap_or(0)).collect())
        }
        EndoVariant::Relcore => {
            if n == 1 {
                return Ok((0..=a_max).map(|a| usize::from(a == 0)).collect());
            }
            let basis = construct_lgamma(n)?.basis(a_max as u32)?;
            Ok((0..=a_max as i64).map(|a| basis.graded_dim(Bidegree::new(a, a))).collect())
        }
    }
}

fn rows_match(table: &BidegreeTable, reference: &[usize]) -> bool {
    let rows = table.row_sums();
    let negative_rows_vanish = rows.range(..0).all(|(_, &d)| d == 0);
    negative_rows_vanish
        && reference
            .iter()
            .enumerate()
            .all(|(a, &r)| rows.get(&(a as i64)).copied().unwrap_or(0) == r)
}

/// Saturation by row sums: for each total degree `0 ≤ a ≤ cutoff/2` (core) or
/// `0 ≤ a ≤ cutoff` (relcore), `Σ_b dim B^{a,b}` equals the ungraded reference
/// dimension of [`reference_row_sums`]; negative rows vanish.
pub fn saturation_sum_check(n: usize, variant: EndoVariant, cutoff: usize) -> Result<bool, PlumbingError> {
    let a_max = match variant {
        EndoVariant::Core => cutoff / 2,
        EndoVariant::Relcore => cutoff,
    };
    let c = cutoff as i64;
    Ok(rows_match(&endo_table(n, variant, c, c), &reference_row_sums(n, variant, a_max)?))
}

/// [`saturation_sum_check`] for the core variant with a caller-supplied `w̃`.
pub fn saturation_sum_check_with(
    n: usize,
    cutoff: usize,
    wtilde_halves: impl Fn(usize, usize) -> i64 + Copy,
) -> Result<bool, PlumbingError> {
    let c = cutoff as i64;
    let table = endo_table_core_with(n, c, c, wtilde_halves);
    Ok(rows_match(&table, &reference_row_sums(n, EndoVariant::Core, cutoff / 2)?))
}
