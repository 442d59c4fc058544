//! Error type shared by the core data structures.

use thiserror::Error;

/// Errors raised when constructing or combining core values.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    /// A size parameter (variable count or degree) was zero.
    #[error("{what} must be at least 1")]
    ZeroParameter {
        /// Name of the offending parameter.
        what: &'static str,
    },
    /// Two objects that must live in the same ambient space do not.
    #[error("shape mismatch: expected {expected} variables, found {found}")]
    LengthMismatch {
        /// Expected number of coordinates.
        expected: usize,
        /// Number of coordinates actually supplied.
        found: usize,
    },
    /// Monomials of different degrees were mixed in one support.
    #[error("degree mismatch: expected degree {expected}, found {found} in {monomial}")]
    DegreeMismatch {
        /// Degree of the ambient universe.
        expected: u32,
        /// Degree of the offending monomial.
        found: u32,
        /// Rendering of the offending monomial.
        monomial: String,
    },
    /// A weight vector did not sum to zero.
    #[error("weight vector {weights:?} does not sum to zero (sum = {sum})")]
    NonZeroSum {
        /// The offending weights.
        weights: Vec<i64>,
        /// Their sum.
        sum: i64,
    },
    /// An operation required a nonzero weight vector.
    #[error("the zero weight vector is not allowed here")]
    ZeroWeight,
    /// An operation required a non-empty support.
    #[error("empty support")]
    EmptySupport,
    /// A monomial was expected to be in a universe but is not.
    #[error("monomial {0} is not in the universe")]
    NotInUniverse(String),
    /// The block structure of a normalization cone is invalid.
    #[error("invalid block partition: {0}")]
    InvalidBlocks(String),
    /// A permutation is not a bijection of the expected size.
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    /// Text or JSON input could not be parsed.
    #[error("parse error at offset {offset}: {message}")]
    Parse {
        /// Byte offset where the problem was detected.
        offset: usize,
        /// Human readable description.
        message: String,
    },
}

impl CoreError {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        CoreError::Parse {
            offset,
            message: message.into(),
        }
    }
}
