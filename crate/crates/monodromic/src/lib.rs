//! Unipotent monodromic perverse sheaves on the complex line, modelled by
//! their nearby/vanishing cycle data.
//!
//! An object is a [`MonodromicTuple`] `(ψ, φ, can, var)` with `var·can`
//! nilpotent. The five plain indecomposables `A_s, B_s, P_s, Q_s, ℂ₀` have
//! fixed catalog presentations ([`block_tuple`]); any tuple splits into them
//! ([`decompose`]). On top of this the crate provides the Fourier transform on
//! tuples, normal forms and general (non-unipotent) objects, Hom/Ext
//! dimensions, restriction to the punctured line, specialization of the
//! decorated blocks, and half-Tate-twist bookkeeping.

mod block;
mod decompose;
mod fourier;
mod homext;
pub mod random;
mod tuple;
mod twist;

pub use block::{
    restrict_w, specialize_nu0, stalk0_dims, Block, BlockKind, Decoration, LocalSystemTerm, NormalForm,
};
pub use decompose::{decompose, string_block, synthesize};
pub use fourier::{fourier, fourier_block, fourier_general, fourier_tuple, EigenPart, GeneralMonodromicTuple};
pub use homext::{check_ns, derived_hom_dim, euler_form, homext, nilpotent_order};
pub use tuple::{block_tuple, drop_last, jordan, prepend_zero, MonodromicTuple, Vertex};
pub use twist::HalfTwist;

use corelin::LinAlgError;

/// Errors raised by monodromic operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MonodromicError {
    /// A block size violates the constraint of its kind.
    #[error("size {size} is not allowed for kind {kind}")]
    InvalidSize { kind: BlockKind, size: usize },
    /// A decorated block was passed where a plain block is required.
    #[error("decorated block {0} has no can/var presentation")]
    DecoratedBlock(BlockKind),
    /// The specialization of this kind is not tabulated.
    #[error("unsupported specialization of {0}")]
    UnsupportedSpecialization(BlockKind),
    /// `can`/`var` shapes do not match the declared dimensions.
    #[error("tuple shapes inconsistent: psi={psi}, phi={phi}, can {can:?}, var {var:?}")]
    Shape {
        psi: usize,
        phi: usize,
        can: (usize, usize),
        var: (usize, usize),
    },
    /// `var·can` is not nilpotent.
    #[error("var·can is not nilpotent")]
    NotNilpotent,
    /// A general monodromic tuple violates its invariants.
    #[error("invalid general monodromic tuple: {0}")]
    InvalidGeneralTuple(String),
    /// Internal consistency check failed (indicates a bug).
    #[error("inconsistent decomposition: {0}")]
    Inconsistent(String),
    /// Underlying linear-algebra failure.
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
}
