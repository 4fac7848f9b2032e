//! The `A_n`-plumbing of `T*ℙ¹` at the level of block bookkeeping.
//!
//! An object of the microsheaf category is modelled slot by slot: slot `l`
//! holds a pair `(F^l, G^l)` of monodromic sheaves, each a list of shifted and
//! twisted catalog blocks from [`monodromic`], and consecutive slots glue when
//! the Fourier transform of the specialization of `G^l` matches the
//! specialization of `F^{l+1}` ([`check_compat`]).
//!
//! On top of that model the crate builds the objects `𝓗_j` and their finite
//! towers `𝓗_j^k` with Hodge twists ([`build_block_h`], [`build_tower`]),
//! restricts towers to the open parts of the components
//! ([`restrict_tower`]), evaluates the closed-form bigraded endomorphism
//! dimensions ([`endo_dim_core`], [`endo_dim_relcore`], [`endo_table`]) and
//! cross-checks them against the path-algebra side ([`saturation_sum_check`]).
//! The unipotent skyscraper chain `ℂ[y]/y^N ⇄ ℂ[y]/y^N` lives in [`chain`].

mod blocks;
pub mod chain;
mod endo;
mod object;

pub use blocks::{
    block_h_slots, build_block_h, build_block_h_primed, build_tower, flip_slots, restrict_tower, restriction_formula,
    s_index, tower_layers, tower_restrictions, TwistTable,
};
pub use chain::{unipotent_skyscraper_chain, SkyscraperChain};
pub use endo::{
    endo_dim_core, endo_dim_core_with, endo_dim_relcore, endo_table, endo_table_core_with, paper_wtilde_halves,
    reference_row_sums, saturation_sum_check, saturation_sum_check_with, uniform_wtilde_halves, EndoVariant,
};
pub use object::{check_compat, PlumbingObject, PlumbingShape, Slot, SlotObject};

use monodromic::MonodromicError;
use pathalg::PathAlgError;

/// Errors raised by plumbing operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PlumbingError {
    /// An index is outside `1..=n`.
    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    /// The plumbing needs at least one component.
    #[error("a plumbing needs n ≥ 1")]
    EmptyPlumbing,
    /// The slot list does not fit the shape.
    #[error("invalid slot layout: {0}")]
    InvalidSlots(String),
    /// A skyscraper block appears in a shape without stops.
    #[error("skyscraper block in slot {0} of a shape without stops")]
    SkyWithoutStops(usize),
    #[error(transparent)]
    Monodromic(#[from] MonodromicError),
    #[error(transparent)]
    PathAlg(#[from] PathAlgError),
}

fn check_index(index: usize, n: usize) -> Result<(), PlumbingError> {
    if n == 0 {
        return Err(PlumbingError::EmptyPlumbing);
    }
    if (1..=n).contains(&index) {
        Ok(())
    } else {
        Err(PlumbingError::IndexOutOfRange { index, n })
    }
}
