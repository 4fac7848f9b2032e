//! Krull–Schmidt decomposition of can/var tuples.
//!
//! Every finite-dimensional tuple with nilpotent `var·can` is a direct sum of
//! *strings*: chains `x₁ ↦ x₂ ↦ … ↦ x_L ↦ 0` that alternate between ψ and φ,
//! applying `can` at ψ and `var` at φ. A string is determined by its start
//! vertex and length, and corresponds to a catalog block:
//!
//! | start | length | block |
//! |-------|--------|-------|
//! | ψ     | 2s     | A_s   |
//! | φ     | 2s     | B_s   |
//! | ψ     | 2s − 1 | P_s   |
//! | φ     | 2s − 1 | Q_s (Q₁ = ℂ₀) |
//!
//! Multiplicities are read off the ranks `r_X(ℓ)` of alternating words. Let
//! `c_X(ℓ) = r_X(ℓ) − r_X(ℓ+1)` count string nodes at `X` with exactly ℓ
//! successors. Such a node either heads a string of length ℓ + 1 or follows a
//! node at the other vertex `Y` with ℓ + 1 successors, so
//! `mult(X, L) = c_X(L−1) − c_Y(L)`. Longer strings are thereby peeled off
//! before shorter ones.

use crate::tuple::Vertex;
use crate::{block_tuple, Block, BlockKind, MonodromicError, MonodromicTuple, NormalForm};

/// The catalog block of the string of length `len ≥ 1` starting at `start`.
pub fn string_block(start: Vertex, len: usize) -> Block {
    let (kind, size) = match (start, len % 2) {
        (Vertex::Psi, 0) => (BlockKind::A, len / 2),
        (Vertex::Phi, 0) => (BlockKind::B, len / 2),
        (Vertex::Psi, _) => (BlockKind::P, len.div_ceil(2)),
        (Vertex::Phi, _) if len == 1 => (BlockKind::Sky, 1),
        (Vertex::Phi, _) => (BlockKind::Q, len.div_ceil(2)),
    };
    Block::perverse(kind, size).expect("string sizes satisfy the catalog constraints")
}

/// Direct sum of the catalog tuples of the blocks of a plain normal form
/// (shifts and twists are ignored).
pub fn synthesize(nf: &NormalForm) -> Result<MonodromicTuple, MonodromicError> {
    nf.blocks().iter().try_fold(MonodromicTuple::zero(), |acc, b| {
        Ok(acc.direct_sum(&block_tuple(b.kind(), b.size())?))
    })
}

/// Decomposes a tuple into plain perverse blocks (shift 0, twist 0).
///
/// The result is verified: every alternating word of length up to
/// `2·max(dim ψ, dim φ) + 1` has the same rank on the input and on the
/// re-synthesised catalog sum.
pub fn decompose(t: &MonodromicTuple) -> Result<NormalForm, MonodromicError> {
    t.check_nilpotent()?;
    let max_len = 2 * t.psi_dim().max(t.phi_dim()) + 1;
    let ranks_psi = t.word_ranks(Vertex::Psi, max_len + 1);
    let ranks_phi = t.word_ranks(Vertex::Phi, max_len + 1);
    let rank = |v: Vertex, l: usize| -> i64 {
        let r = match v {
            Vertex::Psi => &ranks_psi,
            Vertex::Phi => &ranks_phi,
        };
        r.get(l).copied().unwrap_or(0) as i64
    };
    let corank = |v: Vertex, l: usize| rank(v, l) - rank(v, l + 1);

    let mut blocks = Vec::new();
    for len in 1..=t.total_dim() {
        for start in [Vertex::Psi, Vertex::Phi] {
            let mult = corank(start, len - 1) - corank(start.other(), len);
            if mult < 0 {
                return Err(MonodromicError::Inconsistent(format!(
                    "negative multiplicity {mult} for strings of length {len}"
                )));
            }
            let block = string_block(start, len);
            blocks.extend(std::iter::repeat_n(block, mult as usize));
        }
    }
    let nf = NormalForm::new(blocks);

    let rebuilt = synthesize(&nf)?;
    for (start, ranks) in [(Vertex::Psi, &ranks_psi), (Vertex::Phi, &ranks_phi)] {
        if rebuilt.word_ranks(start, max_len)[..] != ranks[..=max_len] {
            return Err(MonodromicError::Inconsistent(
                "word ranks of the decomposition differ from the input".into(),
            ));
        }
    }
    Ok(nf)
}
