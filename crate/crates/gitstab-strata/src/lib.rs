//! Families up to coordinate permutation and the boundary stratification
//! graph.
//!
//! A boundary family is identified with the canonical form of its support
//! ([`canonicalize`]): the least image under all coordinate permutations.
//! Starting from the first-level minimal-orbit families,
//! [`build_stratification`] follows every certified degeneration inside
//! each family's centralizer chamber until only the normal-crossings
//! family `x0·x1·x2·x3·x4` is left, and [`audit`] re-checks the result.
//!
//! # Example
//!
//! ```
//! use gitstab_core::SupportSet;
//! use gitstab_strata::canonicalize;
//!
//! let a = SupportSet::parse("q{3,2}(x0,x1,x2|x3,x4)", 5).unwrap();
//! let b = SupportSet::parse("q{2,3}(x0,x1|x2,x3,x4)", 5).unwrap();
//! assert_eq!(
//!     canonicalize(&a).unwrap().canonical_support,
//!     canonicalize(&b).unwrap().canonical_support
//! );
//! ```

pub mod canonical;
pub mod catalogue;
pub mod error;
pub mod graph;

pub use canonical::{canonical_support, canonicalize, CanonicalFamily, Catalogue};
pub use catalogue::{
    minimal_orbit_support, quintic_catalogue, quintic_seeds, second_level_support, MINIMAL_ORBITS,
    SECOND_LEVEL,
};
pub use error::StrataError;
pub use graph::{
    audit, build_stratification, replay_edge, torus_polystable, Audit, Edge, Node, StratGraph,
};
