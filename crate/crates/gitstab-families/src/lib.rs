//! Maximal non-stable families of monomials, their destabilizing
//! one-parameter subgroups and flags, and support classification.
//!
//! A weight `w` cuts the universe of monomials into the family
//! `M_{≤0}(w) = { m : μ(m, w) ≤ 0 }` ([`family_of`]). The inclusion-maximal
//! such families are enumerated completely by [`maximal_nonstable_families`]:
//! the sign pattern of the universe is constant on the relatively open faces
//! of the hyperplane arrangement `{μ(m, ·) = 0}` restricted to the cone, and
//! a non-positive family grows as the weight moves to the boundary of its
//! face, so every maximal family is attained at an extremal ray of the
//! arrangement ([`arrangement`]). Each family comes with a canonical
//! destabilizer and one infeasibility certificate per excluded monomial.
//!
//! [`classify_support`] gives the Hilbert–Mumford verdict of a single
//! support up to coordinate permutation, with certificates either way.
//!
//! # Example
//!
//! ```
//! use gitstab_core::{enumerate_monomials, NormalizationCone, SupportSet, WeightVector};
//! use gitstab_families::{associated_flag, family_of};
//!
//! let universe = enumerate_monomials(5, 5).unwrap();
//! let w = WeightVector::new(vec![1, 1, 1, 1, -4]).unwrap();
//! assert_eq!(family_of(&w, &universe, false).unwrap().len(), 70);
//! assert_eq!(associated_flag(&w).unwrap().to_string(), "∅ ⊆ (x4=0) ⊆ P^4");
//! ```

pub mod arrangement;
pub mod classify;
pub mod error;
pub mod family;
pub mod flag;
pub mod kempf;

pub use arrangement::{Arrangement, Face};
pub use classify::{classify_support, ideal_power_predicate, verify_classification, Classification};
pub use error::FamilyError;
pub use family::{
    certify_family, chamber_ray_families, family_of, maximal_elements, maximal_families,
    maximal_nonstable_families, topmost_nonstable, verify_record, CandidateFamily, Exclusion,
    FamilyRecord, SearchSpace, Threshold,
};
pub use flag::{associated_flag, Flag};
pub use kempf::{optimal_destabilizer, sorting_permutation};
