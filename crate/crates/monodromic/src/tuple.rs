//! Can/var tuples and the catalog presentations of the plain blocks.

use corelin::{Matrix, Rational};
use serde::{Deserialize, Serialize};

use crate::{BlockKind, MonodromicError};

/// A unipotent monodromic object as nearby/vanishing cycle data:
/// `can: ψ → φ` and `var: φ → ψ` with `var·can` and `can·var` nilpotent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "TupleRepr", into = "TupleRepr")]
pub struct MonodromicTuple {
    psi_dim: usize,
    phi_dim: usize,
    can: Matrix,
    var: Matrix,
}

#[derive(Serialize, Deserialize)]
struct TupleRepr {
    psi: usize,
    phi: usize,
    can: Matrix,
    var: Matrix,
}

impl TryFrom<TupleRepr> for MonodromicTuple {
    type Error = MonodromicError;
    fn try_from(r: TupleRepr) -> Result<Self, Self::Error> {
        let can = r.can.reshape_empty(r.phi, r.psi)?;
        let var = r.var.reshape_empty(r.psi, r.phi)?;
        MonodromicTuple::new(r.psi, r.phi, can, var)
    }
}

impl From<MonodromicTuple> for TupleRepr {
    fn from(t: MonodromicTuple) -> Self {
        TupleRepr {
            psi: t.psi_dim,
            phi: t.phi_dim,
            can: t.can,
            var: t.var,
        }
    }
}

/// The vertex a word starts from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Vertex {
    Psi,
    Phi,
}

impl Vertex {
    /// The other vertex.
    pub fn other(self) -> Vertex {
        match self {
            Vertex::Psi => Vertex::Phi,
            Vertex::Phi => Vertex::Psi,
        }
    }
}

impl MonodromicTuple {
    /// A tuple, checking that `can` is `φ × ψ` and `var` is `ψ × φ`.
    /// Nilpotency is checked separately by [`MonodromicTuple::check_nilpotent`].
    pub fn new(psi_dim: usize, phi_dim: usize, can: Matrix, var: Matrix) -> Result<Self, MonodromicError> {
        if (can.rows(), can.cols()) != (phi_dim, psi_dim) || (var.rows(), var.cols()) != (psi_dim, phi_dim) {
            return Err(MonodromicError::Shape {
                psi: psi_dim,
                phi: phi_dim,
                can: (can.rows(), can.cols()),
                var: (var.rows(), var.cols()),
            });
        }
        Ok(MonodromicTuple {
            psi_dim,
            phi_dim,
            can,
            var,
        })
    }

    /// The zero object.
    pub fn zero() -> Self {
        MonodromicTuple {
            psi_dim: 0,
            phi_dim: 0,
            can: Matrix::zeros(0, 0),
            var: Matrix::zeros(0, 0),
        }
    }

    pub fn psi_dim(&self) -> usize {
        self.psi_dim
    }

    pub fn phi_dim(&self) -> usize {
        self.phi_dim
    }

    /// `can: ψ → φ`.
    pub fn can(&self) -> &Matrix {
        &self.can
    }

    /// `var: φ → ψ`.
    pub fn var(&self) -> &Matrix {
        &self.var
    }

    /// Total dimension `dim ψ + dim φ`.
    pub fn total_dim(&self) -> usize {
        self.psi_dim + self.phi_dim
    }

    /// `N = var·can` on ψ.
    pub fn n_psi(&self) -> Matrix {
        self.var.mul(&self.can).expect("shapes checked on construction")
    }

    /// `can·var` on φ.
    pub fn n_phi(&self) -> Matrix {
        self.can.mul(&self.var).expect("shapes checked on construction")
    }

    /// Errors unless `var·can` (equivalently `can·var`) is nilpotent.
    ///
    /// The images `im Nᵏ` shrink strictly until they vanish exactly when `N`
    /// is nilpotent; a step that keeps the dimension means `N` is bijective on
    /// a nonzero subspace.
    pub fn check_nilpotent(&self) -> Result<(), MonodromicError> {
        let n = self.n_psi();
        let mut image = Matrix::identity(self.psi_dim);
        while image.cols() > 0 {
            let next = column_basis(&n.mul(&image).expect("square"));
            if next.cols() == image.cols() {
                return Err(MonodromicError::NotNilpotent);
            }
            image = next;
        }
        Ok(())
    }

    /// Direct sum of two tuples (block-diagonal maps).
    pub fn direct_sum(&self, other: &MonodromicTuple) -> MonodromicTuple {
        MonodromicTuple {
            psi_dim: self.psi_dim + other.psi_dim,
            phi_dim: self.phi_dim + other.phi_dim,
            can: self.can.direct_sum(&other.can),
            var: self.var.direct_sum(&other.var),
        }
    }

    /// Transports the tuple along base changes `gψ` on ψ and `gφ` on φ:
    /// `(gφ·can·gψ⁻¹, gψ·var·gφ⁻¹)`, given the matrices and their inverses.
    pub fn conjugate(
        &self,
        g_psi: &Matrix,
        g_psi_inv: &Matrix,
        g_phi: &Matrix,
        g_phi_inv: &Matrix,
    ) -> Result<MonodromicTuple, MonodromicError> {
        let can = g_phi.mul(&self.can)?.mul(g_psi_inv)?;
        let var = g_psi.mul(&self.var)?.mul(g_phi_inv)?;
        MonodromicTuple::new(self.psi_dim, self.phi_dim, can, var)
    }

    /// The alternating word of length `len` starting at `start`, as a matrix
    /// (e.g. length 3 from ψ is `can·var·can`). Length 0 is the identity.
    pub fn word(&self, start: Vertex, len: usize) -> Matrix {
        let mut at = start;
        let mut acc = Matrix::identity(self.dim_of(start));
        for _ in 0..len {
            let step = match at {
                Vertex::Psi => &self.can,
                Vertex::Phi => &self.var,
            };
            acc = step.mul(&acc).expect("alternating words are composable");
            at = at.other();
        }
        acc
    }

    /// Ranks of the alternating words from `start` of lengths `0..=max_len`.
    ///
    /// Only a reduced basis of each image is carried along, so entries stay
    /// small under random base changes.
    pub fn word_ranks(&self, start: Vertex, max_len: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(max_len + 1);
        let mut at = start;
        // Columns spanning the image of the current word.
        let mut image = Matrix::identity(self.dim_of(start));
        out.push(image.cols());
        for _ in 0..max_len {
            if image.cols() == 0 {
                out.push(0);
                continue;
            }
            let step = match at {
                Vertex::Psi => &self.can,
                Vertex::Phi => &self.var,
            };
            image = column_basis(&step.mul(&image).expect("alternating words are composable"));
            at = at.other();
            out.push(image.cols());
        }
        out
    }

    fn dim_of(&self, v: Vertex) -> usize {
        match v {
            Vertex::Psi => self.psi_dim,
            Vertex::Phi => self.phi_dim,
        }
    }
}

/// A basis of the column space of `m`, as the columns of the reduced row
/// echelon form of `mᵀ`.
fn column_basis(m: &Matrix) -> Matrix {
    let echelon = m.transpose().rref();
    let rank = echelon.pivots.len();
    Matrix::from_fn(m.rows(), rank, |r, c| echelon.reduced.get(c, r).clone())
}

/// The nilpotent Jordan matrix `J_s` with `J e_i = e_{i+1}`.
pub fn jordan(s: usize) -> Matrix {
    Matrix::from_fn(s, s, |r, c| {
        if r == c + 1 {
            Rational::one()
        } else {
            Rational::zero()
        }
    })
}

/// The surjection `ℚ^s → ℚ^{s−1}` dropping the last coordinate.
pub fn drop_last(s: usize) -> Matrix {
    Matrix::from_fn(s - 1, s, |r, c| {
        if r == c {
            Rational::one()
        } else {
            Rational::zero()
        }
    })
}

/// The injection `ℚ^{s−1} → ℚ^s` prepending a zero coordinate.
pub fn prepend_zero(s: usize) -> Matrix {
    Matrix::from_fn(s, s - 1, |r, c| {
        if r == c + 1 {
            Rational::one()
        } else {
            Rational::zero()
        }
    })
}

/// The catalog presentation of the perverse plain block of a given kind:
///
/// * `A_s[1] = (s, s, id, J_s)`
/// * `B_s[1] = (s, s, J_s, id)`
/// * `P_s[1] = (s, s−1, π, ι)` (so `P_1[1] = ℂ_V[1] = (1, 0, 0, 0)`)
/// * `Q_s[1] = (s−1, s, ι, π)`
/// * `ℂ₀ = (0, 1, 0, 0)`
pub fn block_tuple(kind: BlockKind, size: usize) -> Result<MonodromicTuple, MonodromicError> {
    if !kind.is_plain() {
        return Err(MonodromicError::DecoratedBlock(kind));
    }
    kind.check_size(size)?;
    let s = size;
    let t = match kind {
        BlockKind::A => MonodromicTuple::new(s, s, Matrix::identity(s), jordan(s)),
        BlockKind::B => MonodromicTuple::new(s, s, jordan(s), Matrix::identity(s)),
        BlockKind::P => MonodromicTuple::new(s, s - 1, drop_last(s), prepend_zero(s)),
        BlockKind::Q => MonodromicTuple::new(s - 1, s, prepend_zero(s), drop_last(s)),
        BlockKind::Sky => MonodromicTuple::new(0, 1, Matrix::zeros(1, 0), Matrix::zeros(0, 1)),
        _ => unreachable!("decorated kinds rejected above"),
    };
    Ok(t.expect("catalog shapes are consistent"))
}
