//! The Fourier transform of monodromic objects.
//!
//! On can/var data the transform swaps the two spaces: `(ψ, φ, can, var)`
//! becomes `(φ, ψ, −var, can)` together with a half Tate twist. On normal forms
//! it acts blockwise, `A_s ↔ B_s`, `P_s ↔ Q_s` (`s ≥ 2`) and `ℂ₀ ↔ P₁ = ℂ_V`.
//! The forward directions `A → B`, `P → Q` and `ℂ₀ → P₁` add `(1/2)` and the
//! reverse directions subtract it, so applying the transform twice is the
//! identity including twists.

use corelin::{Matrix, Rational};
use serde::{Deserialize, Serialize};

use crate::{Block, BlockKind, HalfTwist, MonodromicError, MonodromicTuple, NormalForm};

/// Blockwise Fourier transform of a plain normal form.
pub fn fourier(nf: &NormalForm) -> Result<NormalForm, MonodromicError> {
    nf.try_map(fourier_block)
}

/// Fourier transform of a single plain block.
pub fn fourier_block(b: &Block) -> Result<Block, MonodromicError> {
    let half = HalfTwist::HALF;
    let (kind, size, dt) = match (b.kind(), b.size()) {
        (BlockKind::A, s) => (BlockKind::B, s, half),
        (BlockKind::B, s) => (BlockKind::A, s, -half),
        (BlockKind::P, 1) => (BlockKind::Sky, 1, -half),
        (BlockKind::P, s) => (BlockKind::Q, s, half),
        (BlockKind::Q, s) => (BlockKind::P, s, -half),
        (BlockKind::Sky, _) => (BlockKind::P, 1, half),
        (k, _) => return Err(MonodromicError::DecoratedBlock(k)),
    };
    Block::new(kind, size, b.shift(), b.twist() + dt)
}

/// Fourier transform on tuples: `((φ, ψ, −var, can), tw + 1/2)`.
///
/// The result is isomorphic to the catalog sum of [`fourier`] applied to the
/// decomposition of the input, block for block. The twist argument is a single
/// global marker; per-block twist bookkeeping lives on normal forms.
pub fn fourier_tuple(t: &MonodromicTuple, tw: HalfTwist) -> (MonodromicTuple, HalfTwist) {
    let out = MonodromicTuple::new(t.phi_dim(), t.psi_dim(), t.var().neg(), t.can().clone())
        .expect("swapping spaces keeps shapes consistent");
    (out, tw + HalfTwist::HALF)
}

/// One generalised eigenspace `C_α` of the semisimple monodromy, with its
/// nilpotent part `N` and a Tate-twist marker counting applied `(−1)` twists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigenPart {
    /// The log-eigenvalue α ∈ (−1, 0].
    pub alpha: Rational,
    pub dim: usize,
    pub n: Matrix,
    pub tate: i64,
}

/// A mixed monodromic object `(C_{(−1,0]}, T_s, N, C_{−1}, c, v)`, with
/// `C_{(−1,0]}` stored as its eigenspaces, `c: C_0 → C_{−1}` and
/// `v: C_{−1} → C_0` satisfying `v·c = N|_{C_0}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneralMonodromicTuple {
    /// Nonzero eigenspaces with distinct α, sorted by α (so α = 0 comes last).
    parts: Vec<EigenPart>,
    minus_one_dim: usize,
    minus_one_tate: i64,
    c: Matrix,
    v: Matrix,
}

impl GeneralMonodromicTuple {
    /// Builds and validates a general tuple. Zero-dimensional eigenspaces are
    /// dropped and twist markers on zero spaces reset.
    pub fn new(
        mut parts: Vec<EigenPart>,
        minus_one_dim: usize,
        minus_one_tate: i64,
        c: Matrix,
        v: Matrix,
    ) -> Result<Self, MonodromicError> {
        parts.retain(|p| p.dim > 0);
        parts.sort_by(|x, y| x.alpha.cmp(&y.alpha));
        let minus_one_tate = if minus_one_dim == 0 { 0 } else { minus_one_tate };
        let bad = |msg: &str| Err(MonodromicError::InvalidGeneralTuple(msg.to_string()));
        for w in parts.windows(2) {
            if w[0].alpha == w[1].alpha {
                return bad("repeated eigenvalue");
            }
        }
        let minus_one = Rational::from_int(-1);
        for p in &parts {
            if p.alpha <= minus_one || p.alpha > Rational::zero() {
                return bad("eigenvalue outside (-1, 0]");
            }
            if (p.n.rows(), p.n.cols()) != (p.dim, p.dim) {
                return bad("N has the wrong shape");
            }
            if !p.n.pow(p.dim)?.is_zero() {
                return Err(MonodromicError::NotNilpotent);
            }
        }
        let zero_part = parts.iter().find(|p| p.alpha.is_zero());
        let d0 = zero_part.map_or(0, |p| p.dim);
        if (c.rows(), c.cols()) != (minus_one_dim, d0) || (v.rows(), v.cols()) != (d0, minus_one_dim) {
            return bad("c or v has the wrong shape");
        }
        let vc = v.mul(&c)?;
        let n0 = zero_part.map_or_else(|| Matrix::zeros(0, 0), |p| p.n.clone());
        if vc != n0 {
            return bad("v·c differs from N on the α = 0 part");
        }
        Ok(GeneralMonodromicTuple {
            parts,
            minus_one_dim,
            minus_one_tate,
            c,
            v,
        })
    }

    /// The unipotent tuple viewed as a general one: `C_0 = ψ`, `C_{−1} = φ`.
    pub fn from_unipotent(t: &MonodromicTuple) -> Self {
        let parts = if t.psi_dim() > 0 {
            vec![EigenPart {
                alpha: Rational::zero(),
                dim: t.psi_dim(),
                n: t.n_psi(),
                tate: 0,
            }]
        } else {
            Vec::new()
        };
        GeneralMonodromicTuple {
            parts,
            minus_one_dim: t.phi_dim(),
            minus_one_tate: 0,
            c: t.can().clone(),
            v: t.var().clone(),
        }
    }

    /// The unipotent part `(C_0, C_{−1}, c, v)` as a can/var tuple.
    pub fn unipotent_part(&self) -> MonodromicTuple {
        let d0 = self.zero_part().map_or(0, |p| p.dim);
        MonodromicTuple::new(d0, self.minus_one_dim, self.c.clone(), self.v.clone())
            .expect("shapes validated on construction")
    }

    pub fn parts(&self) -> &[EigenPart] {
        &self.parts
    }

    /// The α = 0 eigenspace, if present.
    pub fn zero_part(&self) -> Option<&EigenPart> {
        self.parts.iter().find(|p| p.alpha.is_zero())
    }

    pub fn minus_one_dim(&self) -> usize {
        self.minus_one_dim
    }

    pub fn minus_one_tate(&self) -> i64 {
        self.minus_one_tate
    }

    pub fn c(&self) -> &Matrix {
        &self.c
    }

    pub fn v(&self) -> &Matrix {
        &self.v
    }
}

/// The Fourier transform on general monodromic objects:
///
/// * the new α = 0 eigenspace is the old `C_{−1}` (keeping its marker) with
///   `N' = −c·v`, the sign forced by `v'·c' = N'`;
/// * for α ∈ (−1, 0) the monodromy is inverted, which relabels `C_α` as
///   `C_{−1−α}` with the same `N`;
/// * the new `C_{−1}` is the old α = 0 eigenspace with one more `(−1)` marker;
/// * `c' = −v` and `v' = c`.
pub fn fourier_general(t: &GeneralMonodromicTuple) -> GeneralMonodromicTuple {
    let minus_one = Rational::from_int(-1);
    let mut parts: Vec<EigenPart> = t
        .parts
        .iter()
        .filter(|p| !p.alpha.is_zero())
        .map(|p| EigenPart {
            alpha: &minus_one - &p.alpha,
            dim: p.dim,
            n: p.n.clone(),
            tate: p.tate,
        })
        .collect();
    if t.minus_one_dim > 0 {
        let cv = t.c.mul(&t.v).expect("shapes validated on construction");
        parts.push(EigenPart {
            alpha: Rational::zero(),
            dim: t.minus_one_dim,
            n: cv.neg(),
            tate: t.minus_one_tate,
        });
    }
    parts.sort_by(|x, y| x.alpha.cmp(&y.alpha));
    let (old_zero_dim, old_zero_tate) = t.zero_part().map_or((0, 0), |p| (p.dim, p.tate));
    GeneralMonodromicTuple {
        parts,
        minus_one_dim: old_zero_dim,
        // Markers on zero spaces carry no information; keep them normalised.
        minus_one_tate: if old_zero_dim == 0 { 0 } else { old_zero_tate + 1 },
        c: t.v.neg(),
        v: t.c.clone(),
    }
}
