//! The unipotent skyscraper chain: `ℂ[y]/y^N` at every component of a window,
//! glued by `(can, var) = (y, id)` left of the center and `(id, y)` from the
//! center on, so that `var·can` is multiplication by `y` at every junction.

use corelin::{Matrix, Rational};
use monodromic::{decompose, MonodromicTuple, NormalForm};
use serde::{Deserialize, Serialize};

use crate::PlumbingError;

/// The chain description in the monomial basis `1, y, …, y^{N−1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkyscraperChain {
    /// `N`, the length of the truncated polynomial module.
    pub length: usize,
    pub window: usize,
    pub center: usize,
    /// Junction `l` (1-based) sits between components `l` and `l + 1`.
    pub junctions: Vec<Junction>,
}

/// The gluing data `ψ = φ = ℂ[y]/y^N` at one junction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Junction {
    pub index: usize,
    pub can: Matrix,
    pub var: Matrix,
}

/// Multiplication by `y` on `ℂ[y]/y^N`: `y^m ↦ y^{m+1}`.
pub fn y_matrix(length: usize) -> Matrix {
    Matrix::from_fn(length, length, |r, c| {
        if r == c + 1 {
            Rational::one()
        } else {
            Rational::zero()
        }
    })
}

/// Builds the chain on components `1..=window`.
pub fn unipotent_skyscraper_chain(length: usize, window: usize, center: usize) -> Result<SkyscraperChain, PlumbingError> {
    if length == 0 {
        return Err(PlumbingError::InvalidSlots("ℂ[y]/y^N needs N ≥ 1".into()));
    }
    let y = y_matrix(length);
    let id = Matrix::identity(length);
    let junctions = (1..window)
        .map(|index| {
            let (can, var) = if index < center {
                (y.clone(), id.clone())
            } else {
                (id.clone(), y.clone())
            };
            Junction { index, can, var }
        })
        .collect();
    Ok(SkyscraperChain {
        length,
        window,
        center,
        junctions,
    })
}

impl SkyscraperChain {
    /// `var·can = y` at every junction.
    pub fn verify(&self) -> bool {
        let y = y_matrix(self.length);
        self.junctions
            .iter()
            .all(|j| j.var.mul(&j.can).is_ok_and(|m| m == y))
    }

    /// The junction data as monodromic tuples.
    pub fn tuples(&self) -> Result<Vec<MonodromicTuple>, PlumbingError> {
        self.junctions
            .iter()
            .map(|j| Ok(MonodromicTuple::new(self.length, self.length, j.can.clone(), j.var.clone())?))
            .collect()
    }

    /// The block decomposition of every junction tuple.
    pub fn decompositions(&self) -> Result<Vec<NormalForm>, PlumbingError> {
        self.tuples()?
            .iter()
            .map(|t| Ok(decompose(t)?))
            .collect()
    }
}
