//! The (degree, weight) sequence predicted by wrapping, and its comparison
//! with bar cohomology.

use corelin::BidegreeTable;

use crate::{bar_cohomology_table, cohomology_ring_pn, BarError, WeightedAlgebra};

/// The pairs `(2mn, 2mn + 2m)` and `(2mn + 1, 2mn + 2m + 2)` for `m ≥ 0`, in
/// degree order, truncated to `count` entries.
pub fn wrapping_weight_sequence(n: usize, count: usize) -> Vec<(i64, i64)> {
    let n = n as i64;
    let mut out = Vec::with_capacity(count + 1);
    let mut m = 0;
    while out.len() < count {
        out.push((2 * m * n, 2 * m * n + 2 * m));
        out.push((2 * m * n + 1, 2 * m * n + 2 * m + 2));
        m += 1;
    }
    out.truncate(count);
    out
}

/// True iff the bar cohomology of `alg` up to `degree_cutoff` is exactly the
/// wrapping sequence of `n` within that degree range, with every dim 1.
pub fn compare_with_sequence(alg: &WeightedAlgebra, n: usize, degree_cutoff: u32) -> bool {
    let table = bar_cohomology_table(alg, degree_cutoff);
    let expected: BidegreeTable = wrapping_weight_sequence(n, 2 * degree_cutoff as usize + 2)
        .into_iter()
        .filter(|&(d, _)| d <= degree_cutoff as i64)
        .map(|p| (p, 1))
        .collect();
    table == expected
}

/// [`compare_with_sequence`] for `H*(ℙⁿ)`.
pub fn compare_loop_hodge(n: usize, degree_cutoff: u32) -> Result<bool, BarError> {
    Ok(compare_with_sequence(&cohomology_ring_pn(n)?, n, degree_cutoff))
}
