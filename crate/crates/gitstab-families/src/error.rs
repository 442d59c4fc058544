//! Error type of the family analysis.

use gitstab_core::CoreError;
use gitstab_lp::LpError;
use gitstab_poset::PosetError;
use thiserror::Error;

/// Failures of family operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    /// Malformed monomials, weights or cones.
    #[error(transparent)]
    Core(#[from] CoreError),
    /// The exact solver failed.
    #[error(transparent)]
    Lp(#[from] LpError),
    /// A poset operation failed.
    #[error(transparent)]
    Poset(#[from] PosetError),
    /// The zero weight vector was given where a 1-PS is required.
    #[error("the zero weight vector does not define a one-parameter subgroup")]
    ZeroWeight,
    /// A support is not contained in the universe.
    #[error("support is not contained in the universe: {0}")]
    NotInUniverse(String),
    /// A solver answer failed its independent re-check.
    #[error("certificate verification failed: {0}")]
    Verification(String),
}
