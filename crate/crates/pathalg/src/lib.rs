//! Quiver path algebras over ℚ with a bigrading `(cohomological, Adams)`.
//!
//! [`PresentedAlgebra`] is a path algebra modulo homogeneous relations, whose
//! degree pieces are computed one weight at a time as exact cokernels
//! ([`AlgebraBasis`]). [`DGAlgebra`] is a free path algebra with a
//! differential, whose cohomology is computed by exact sparse ranks. On top of
//! these the crate builds minimal free resolutions of the augmentation module,
//! `Ext(k, k)` tables and Koszulity checks, and constructs the concrete
//! algebras of the type-A story: the zigzag-type algebra `A_Γ`, the Ginzburg
//! dga `G_Γ`, and the Koszul dual pair `L_Γ`, `M_Γ` together with the explicit
//! length-two projective resolution of `k` over `L_Γ`.
//!
//! Paths are written in traversal order throughout (see [`quiver`]).

mod algebra;
mod constructors;
mod dga;
mod lgamma;
pub mod quiver;
mod resolution;

pub use algebra::{AlgebraBasis, Piece, PieceKey, PresentedAlgebra};
pub use constructors::{
    construct_agamma, construct_ginzburg, construct_ginzburg_oriented, construct_lgamma, construct_mgamma,
    truncated_polynomial,
};
pub use dga::DGAlgebra;
pub use lgamma::{
    lgamma_basis, lgamma_dim_closed, verify_lgamma_resolution, verify_lgamma_resolution_variant, LBasisElement,
    LBasisKind, ResolutionReport, ResolutionVariant,
};
pub use quiver::{Arrow, Bidegree, LinComb, Path, Quiver};
pub use resolution::{
    ext_kk_table, ext_table, koszul_check, minimal_resolution, ExtTable, Generator, KoszulMode, ModuleElement,
    ResolutionStep,
};

use corelin::LinAlgError;

/// Errors raised by path-algebra operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PathAlgError {
    /// A vertex label is not part of the quiver.
    #[error("unknown vertex {0}")]
    UnknownVertex(usize),
    /// An arrow id is not part of the quiver.
    #[error("unknown arrow {0:?}")]
    UnknownArrow(String),
    #[error("duplicate vertex {0}")]
    DuplicateVertex(usize),
    #[error("duplicate arrow {0:?}")]
    DuplicateArrow(String),
    /// Arrows must have nonzero Adams degree so that each degree is finite.
    #[error("arrow {0:?} has Adams degree 0")]
    ZeroWeightArrow(String),
    /// Arrows must all have Adams degrees of the same sign.
    #[error("arrows have Adams degrees of both signs")]
    MixedAdamsSign,
    #[error("path {0:?} is not composable")]
    NotComposable(Vec<String>),
    /// A relation or differential mixes endpoints or bidegrees.
    #[error("combination containing {0:?} is not homogeneous")]
    Inhomogeneous(Vec<String>),
    #[error("empty path where an arrow word is required")]
    EmptyPath,
    #[error("empty relation")]
    EmptyRelation,
    /// `d` of a generator does not have bidegree `deg + (1, 0)`.
    #[error("differential of {0:?} has the wrong bidegree or endpoints")]
    DifferentialDegree(String),
    /// `d²` of a generator is nonzero.
    #[error("d² is nonzero on generator {0:?}")]
    DSquaredNonzero(String),
    /// A product would leave the computed range.
    #[error("weight {weight} exceeds the cutoff {cutoff}")]
    BeyondCutoff { weight: u32, cutoff: u32 },
    /// A constructor parameter is outside its domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
}
