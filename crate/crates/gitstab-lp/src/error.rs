//! Error type of the feasibility solver.

use thiserror::Error;

/// Failures of the solver that are not infeasibility (which is a result).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LpError {
    /// A row has the wrong number of coefficients.
    #[error("row has {found} coefficients, expected {expected}")]
    Shape {
        /// Number of unknowns of the system.
        expected: usize,
        /// Length of the offending row.
        found: usize,
    },
    /// The query mixes monomials of different shapes.
    #[error("query error: {0}")]
    Query(String),
    /// Internal consistency check failed (a bug, never expected in practice).
    #[error("internal solver inconsistency: {0}")]
    Internal(String),
}
