//! Error type of the Luna analysis.

use gitstab_core::CoreError;
use gitstab_families::FamilyError;
use gitstab_lp::LpError;
use thiserror::Error;

/// Failures of centralizer contexts and Luna verdicts.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LunaError {
    /// Malformed monomials, weights or supports.
    #[error(transparent)]
    Core(#[from] CoreError),
    /// The exact solver failed.
    #[error(transparent)]
    Lp(#[from] LpError),
    /// A family computation failed.
    #[error(transparent)]
    Family(#[from] FamilyError),
    /// The invariant 1-PS was zero.
    #[error("the invariant one-parameter subgroup must be nonzero")]
    ZeroWeight,
    /// No monomial of the requested degree is fixed by the given weight.
    #[error("no monomial of degree {degree} has weight 0 under {h}")]
    EmptyInvariants {
        /// The weight.
        h: String,
        /// The degree.
        degree: u32,
    },
    /// A support is not contained in the invariant subspace.
    #[error("support is not contained in the invariant subspace: {0}")]
    NotInvariant(String),
    /// `μ(S, w) < 0`: the limit along `w` is the zero form.
    #[error("the limit is the zero form: μ = {0} < 0")]
    UnstableLimit(i64),
    /// `μ(S, w) > 0`: the orbit of `w` has no limit.
    #[error("no limit along the weight: μ = {0} > 0")]
    NoLimit(i64),
    /// A solver answer failed its independent re-check.
    #[error("certificate verification failed: {0}")]
    Verification(String),
}
