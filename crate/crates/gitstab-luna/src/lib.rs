//! Luna's criterion applied to diagonal stabilizers.
//!
//! A family fixed by a diagonal one-parameter subgroup `H` lives in the
//! invariant subspace `V^H`, on which the centralizer `Z_G(H)` acts. Its
//! diagonal part is the torus of weights constant on the blocks of
//! coordinates that `H` does not separate, so the Hilbert–Mumford analysis
//! of the centralizer action is the analysis of the previous levels
//! restricted to `V^H`, over the block chamber, modulo the stabilizer
//! lattice ([`CentralizerContext`]).
//!
//! [`luna_classify`] decides, with certificates, whether the generic member
//! of a sub-family has a closed orbit, is unstable, or degenerates to a
//! smaller family (which is again fixed by a larger torus).
//!
//! # Example
//!
//! ```
//! use gitstab_core::WeightVector;
//! use gitstab_luna::centralizer_context;
//!
//! let h = WeightVector::new(vec![4, -1, -1, -1, -1]).unwrap();
//! let ctx = centralizer_context(&h, 5).unwrap();
//! assert_eq!(ctx.invariant_universe.len(), 35);
//! assert_eq!(ctx.blocks.blocks(), &[vec![0], vec![1, 2, 3, 4]]);
//! ```

pub mod context;
pub mod error;
pub mod report;
pub mod verdict;

pub use context::{
    centralizer_context, context_for_support, generic_element, limit_support, CentralizerContext,
};
pub use error::LunaError;
pub use report::{luna_report, sublevel_families, witnesses_family, LunaReport, SublevelFamilies, VerdictRow};
pub use verdict::{block_images, forced_zero, luna_classify, verify_verdict, LunaVerdict, Refutation};
