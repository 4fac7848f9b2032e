//! Exact linear algebra over the rationals.
//!
//! Every dimension computed elsewhere in the workspace bottoms out here:
//! [`Rational`] is an exact big rational, [`Matrix`] a dense row-major matrix
//! with deterministic Gauss–Jordan elimination, and [`SparseMatrix`] a sparse
//! row store used for the large, very sparse differentials of path-algebra
//! chain complexes. [`BidegreeTable`] is the sparse `(a, b) → dim` map that
//! every dimension computation in the workspace reports. No floating point is
//! used anywhere.

mod matrix;
mod rational;
mod sparse;
mod table;

pub use matrix::{compose, kernel_basis, rank, Echelon, Matrix};
pub use rational::Rational;
pub use sparse::{SparseEchelon, SparseMatrix, SparseRow};
pub use table::{BidegreeTable, TableEntry};

/// Errors raised by linear-algebra operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinAlgError {
    /// Operand shapes are incompatible for the named operation.
    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    /// A square matrix was required.
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    /// Entry list length does not match the declared shape.
    #[error("{len} entries cannot fill a {rows}x{cols} matrix")]
    EntryCount { rows: usize, cols: usize, len: usize },
    /// A row has the wrong length.
    #[error("row {row} has length {found}, expected {expected}")]
    RaggedRow {
        row: usize,
        expected: usize,
        found: usize,
    },
    /// A column index is outside the matrix.
    #[error("index {index} out of range (bound {bound})")]
    IndexOutOfRange { index: usize, bound: usize },
    /// A string could not be parsed as a rational.
    #[error("cannot parse {0:?} as a rational")]
    Parse(String),
}
