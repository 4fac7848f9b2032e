//! Hom and Ext dimensions between tuples, derived Hom between normal forms,
//! and nilpotency orders.
//!
//! Tuples are representations of the quiver with two vertices ψ, φ and arrows
//! `can: ψ → φ`, `var: φ → ψ`, with nilpotent cycles. Morphisms and extensions
//! are computed from the two-term complex
//!
//! ```text
//! δ: Hom(ψ_m, ψ_n) ⊕ Hom(φ_m, φ_n) → Hom(ψ_m, φ_n) ⊕ Hom(φ_m, ψ_n)
//!    (f, g) ↦ (g·can_m − can_n·f,  f·var_m − var_n·g)
//! ```
//!
//! whose kernel is `Hom` and whose cokernel is `Ext¹` (the category of
//! nilpotent representations is hereditary). In particular
//! `hom − ext = χ = ψ_m ψ_n + φ_m φ_n − ψ_m φ_n − φ_m ψ_n`.

use corelin::SparseMatrix;

use crate::{block_tuple, HalfTwist, MonodromicError, MonodromicTuple, NormalForm};

/// `(dim Hom(m, n), dim Ext¹(m, n))`.
pub fn homext(m: &MonodromicTuple, n: &MonodromicTuple) -> (usize, usize) {
    let (pm, fm, pn, fn_) = (m.psi_dim(), m.phi_dim(), n.psi_dim(), n.phi_dim());
    let f_idx = |a: usize, b: usize| a * pm + b;
    let g_off = pn * pm;
    let g_idx = |a: usize, b: usize| g_off + a * fm + b;
    let source = pn * pm + fn_ * fm;
    let target = fn_ * pm + pn * fm;

    let mut delta = SparseMatrix::new(source);
    // g·can_m − can_n·f, entry (i, j) with i ∈ φ_n, j ∈ ψ_m.
    for i in 0..fn_ {
        for j in 0..pm {
            let mut row = Vec::new();
            for k in 0..fm {
                let c = m.can().get(k, j);
                if !c.is_zero() {
                    row.push((g_idx(i, k), c.clone()));
                }
            }
            for k in 0..pn {
                let c = n.can().get(i, k);
                if !c.is_zero() {
                    row.push((f_idx(k, j), -c));
                }
            }
            delta.push_row(row).expect("indices within the source space");
        }
    }
    // f·var_m − var_n·g, entry (i, j) with i ∈ ψ_n, j ∈ φ_m.
    for i in 0..pn {
        for j in 0..fm {
            let mut row = Vec::new();
            for k in 0..pm {
                let v = m.var().get(k, j);
                if !v.is_zero() {
                    row.push((f_idx(i, k), v.clone()));
                }
            }
            for k in 0..fn_ {
                let v = n.var().get(i, k);
                if !v.is_zero() {
                    row.push((g_idx(k, j), -v));
                }
            }
            delta.push_row(row).expect("indices within the source space");
        }
    }
    let r = delta.rank();
    (source - r, target - r)
}

/// The Euler form `χ(m, n) = dim Hom − dim Ext¹`.
pub fn euler_form(m: &MonodromicTuple, n: &MonodromicTuple) -> i64 {
    let (pm, fm, pn, fn_) = (
        m.psi_dim() as i64,
        m.phi_dim() as i64,
        n.psi_dim() as i64,
        n.phi_dim() as i64,
    );
    pm * pn + fm * fn_ - pm * fn_ - fm * pn
}

/// `dim Hom(x, y[k](s/2))` between direct sums of perverse blocks.
///
/// A pair of blocks contributes only when their twists differ by exactly `s`;
/// with `d = shift(b_y) + k − shift(b_x)` it then contributes `dim Hom` for
/// `d = 0`, `dim Ext¹` for `d = 1` and nothing otherwise.
pub fn derived_hom_dim(x: &NormalForm, y: &NormalForm, k: i64, s: HalfTwist) -> Result<usize, MonodromicError> {
    let mut total = 0;
    for bx in x.blocks() {
        let tx = block_tuple(bx.kind(), bx.size())?;
        for by in y.blocks() {
            let ty = block_tuple(by.kind(), by.size())?;
            if by.twist() - bx.twist() != s {
                continue;
            }
            let (hom, ext) = homext(&tx, &ty);
            total += match by.shift() + k - bx.shift() {
                0 => hom,
                1 => ext,
                _ => 0,
            };
        }
    }
    Ok(total)
}

/// The least `e` with `(var·can)^e = 0` (zero when ψ vanishes).
pub fn nilpotent_order(t: &MonodromicTuple) -> Result<usize, MonodromicError> {
    let n = t.n_psi();
    let mut power = corelin::Matrix::identity(t.psi_dim());
    for e in 0..=t.psi_dim() {
        if power.is_zero() {
            return Ok(e);
        }
        power = power.mul(&n)?;
    }
    Err(MonodromicError::NotNilpotent)
}

/// The condition `(N_s)`: `(var·can)^s = 0` and `(can·var)^{s−1} = 0`.
/// For `s = 0` this holds only for the zero tuple.
pub fn check_ns(t: &MonodromicTuple, s: usize) -> Result<bool, MonodromicError> {
    if s == 0 {
        return Ok(t.total_dim() == 0);
    }
    let psi_ok = t.n_psi().pow(s)?.is_zero();
    let phi_ok = t.n_phi().pow(s - 1)?.is_zero();
    Ok(psi_ok && phi_ok)
}
