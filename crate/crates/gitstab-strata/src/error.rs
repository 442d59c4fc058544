//! Errors of the stratification layer.

use thiserror::Error;

/// Failures while canonicalizing families or building the graph.
#[derive(Debug, Error)]
pub enum StrataError {
    /// Propagated from the core algebra.
    #[error(transparent)]
    Core(#[from] gitstab_core::CoreError),
    /// Propagated from the LP layer.
    #[error(transparent)]
    Lp(#[from] gitstab_lp::LpError),
    /// Propagated from the family layer.
    #[error(transparent)]
    Family(#[from] gitstab_families::FamilyError),
    /// Propagated from the Luna layer.
    #[error(transparent)]
    Luna(#[from] gitstab_luna::LunaError),
    /// Canonical forms are only defined for non-empty supports.
    #[error("cannot canonicalize an empty support")]
    EmptySupport,
    /// Graph nodes must equal their own invariant span.
    #[error("support {0} is not closed under its diagonal stabilizer")]
    NotInvariantClosed(String),
    /// An internally produced certificate failed to re-verify.
    #[error("verification failed: {0}")]
    Verification(String),
}
