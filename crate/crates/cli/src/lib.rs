//! Verification suites behind the `hodge-micro` command-line tool.
//!
//! Every command returns a [`Report`]: the parameters it ran with, a list of
//! named checks comparing expected against actual values, an optional payload
//! and the elapsed time. The binary prints the report on stdout and exits with
//! `0` when every check passes, `1` when some check fails, `2` on malformed
//! flags or input and `3` when the input violates an invariant (for example a
//! tuple whose `var·can` is not nilpotent).

mod commands;
mod report;

pub use commands::{
    bar, decompose_input, endo, fourier_input, fourier_roundtrip, koszul, parse_tuple, verify_homtables, AlgebraName,
};
pub use report::{Check, Report, Status};

/// Environment variable holding the RNG seed for randomized suites.
pub const SEED_VAR: &str = "HODGE_MICRO_SEED";

/// Why a command could not produce a report.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Malformed flags or input.
    #[error("usage error: {0}")]
    Usage(String),
    /// The input, or an intermediate result, violates an invariant.
    #[error("invariant violation: {0}")]
    Invariant(String),
}

impl CliError {
    /// Wraps an unexpected library error.
    pub fn internal(e: impl std::fmt::Display) -> Self {
        CliError::Invariant(e.to_string())
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Invariant(_) => 3,
        }
    }
}

/// Reads the seed from [`SEED_VAR`] (default `0`).
pub fn seed_from_env() -> Result<u64, CliError> {
    match std::env::var(SEED_VAR) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{SEED_VAR} must be a non-negative integer, got {s:?}"))),
        Err(std::env::VarError::NotPresent) => Ok(0),
        Err(e) => Err(CliError::Usage(format!("{SEED_VAR}: {e}"))),
    }
}
