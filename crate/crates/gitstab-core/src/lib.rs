//! Exact integer algebra for the Hilbert–Mumford analysis of hypersurfaces.
//!
//! A degree-`d` hypersurface in `ℙ^{n-1}` is studied through its *support*:
//! the set of monomials carrying nonzero coefficients. A diagonal
//! one-parameter subgroup `λ(t) = diag(t^{a_0}, …, t^{a_{n-1}})` with
//! `Σ a_k = 0` acts on a monomial `x^i` with weight `μ(x^i, λ) = Σ a_k i_k`.
//! The numerical function of a form is the maximum weight over its support.
//! The form is non-stable (unstable) for `λ` when that maximum is `≤ 0`
//! (`< 0`).
//!
//! This crate provides:
//!
//! * [`ExponentVector`], [`WeightVector`], [`SupportSet`]: the atoms, all
//!   exact integers.
//! * [`NormalizationCone`]: Weyl chambers of the acting group (standard
//!   chamber, centralizer chambers, or the full torus), with a closed-form
//!   dominance test.
//! * [`lattice`]: stabilizer lattices and invariant spans `V^H`.
//! * [`expr`]: expansion of generic-form shorthand such as
//!   `q{2,3}(x0,x1 | x2,x3,x4)` into monomial sets.
//! * [`perm`]: coordinate permutations.
//!
//! # Example
//!
//! ```
//! use gitstab_core::{enumerate_monomials, mu_support, SupportSet, WeightVector};
//!
//! let universe = enumerate_monomials(5, 5).unwrap();
//! assert_eq!(universe.len(), 126);
//! let family = SupportSet::parse("x4*q4(x0,x1,x2,x3,x4)", 5).unwrap();
//! let w = WeightVector::new(vec![1, 1, 1, 1, -4]).unwrap();
//! assert_eq!(mu_support(&family, &w).unwrap(), 0);
//! ```

pub mod cone;
pub mod error;
pub mod expr;
pub mod lattice;
pub mod monomial;
pub mod perm;
pub mod support;
pub mod weight;

pub use cone::NormalizationCone;
pub use error::CoreError;
pub use lattice::{invariant_span, stabilizer_lattice, Lattice};
pub use monomial::{enumerate_monomials, mu_monomial, mu_support, ExponentVector};
pub use perm::{all_permutations, block_permutations, Permutation};
pub use support::SupportSet;
pub use weight::{primitive, WeightVector};
