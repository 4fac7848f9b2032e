//! The reduced bar construction on a finite-dimensional, weight-graded,
//! graded-commutative algebra with zero differential, and the resulting
//! (degree, weight) table for the based loop space of `ℙⁿ`.
//!
//! [`WeightedAlgebra`] holds the algebra by structure constants;
//! [`BarComplex`] enumerates tensor words up to a degree cutoff and computes
//! bar cohomology by exact ranks; [`wrapping_weight_sequence`] generates the
//! weight sequence predicted from wrapping, and [`compare_loop_hodge`]
//! compares the two.

mod algebra;
mod bar;
mod wrapping;

pub use algebra::{cohomology_ring_pn, cohomology_ring_pn_weighted, BasisElement, WeightedAlgebra};
pub use bar::{bar_cohomology_table, BarComplex, Word};
pub use wrapping::{compare_loop_hodge, compare_with_sequence, wrapping_weight_sequence};

/// Errors raised when building weighted algebras.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BarError {
    #[error("algebra has no basis")]
    EmptyBasis,
    #[error("basis index {0} out of range")]
    IndexOutOfRange(usize),
    /// The designated unit is not a two-sided unit of degree and weight 0.
    #[error("element {0} is not a unit")]
    NotUnital(usize),
    /// A product term violates additivity of degree or weight.
    #[error("product {0} · {1} is not homogeneous")]
    Inhomogeneous(usize, usize),
    #[error("multiplication is not associative at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("multiplication is not graded-commutative at ({0}, {1})")]
    NotCommutative(usize, usize),
    /// The augmentation ideal must be concentrated in positive degree.
    #[error("basis element {0} other than the unit has degree 0")]
    NotConnected(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
