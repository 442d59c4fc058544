//! Exact feasibility over normalization cones.
//!
//! Given sign conditions on the weights `μ(m, w)` of chosen monomials, this
//! crate decides whether an integer one-parameter subgroup `w` in a
//! normalization cone satisfies them, and always returns a certificate:
//!
//! * a primitive integer witness, re-checked by substitution, or
//! * Farkas multipliers for every branch of the query, re-checked exactly.
//!
//! The solver is Fourier–Motzkin elimination on fraction-free big-integer
//! rows. Equalities (`Σw = 0` and any orthogonality to a stabilizer lattice)
//! are removed first by working in an integer basis of their solution
//! lattice, so only inequalities are eliminated; certificates are mapped
//! back to the original rows. [`find_weight`] returns a canonical witness:
//! the smallest max-norm, ties broken towards the lexicographically greatest
//! vector.
//!
//! # Example
//!
//! ```
//! use gitstab_core::{ExponentVector, NormalizationCone};
//! use gitstab_lp::{find_weight, nonpositive_query, verify_certificate};
//!
//! let m = ExponentVector::from_slice(&[1, 4, 0, 0, 0]);
//! let q = nonpositive_query(&NormalizationCone::standard(5), [&m]);
//! let cert = find_weight(&q).unwrap();
//! assert!(verify_certificate(&q, &cert));
//! assert_eq!(cert.weight().unwrap().weights(), &[4, -1, -1, -1, -1]);
//! ```

pub mod error;
mod fm;
pub mod query;
pub mod system;

pub use error::LpError;
pub use query::{
    decide, find_weight, is_feasible, nonpositive_query, verify_certificate, Branch, Certificate,
    FeasibilityQuery, InfeasibleBranch,
};
pub use system::{FarkasCertificate, Inequality, LinearSystem};
