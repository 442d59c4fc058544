//! Centralizer contexts: the invariant subspace `V^H` of a diagonal
//! stabilizer `H` together with the normalization cone of its centralizer.

use gitstab_core::{
    enumerate_monomials, invariant_span, mu_support, stabilizer_lattice, Lattice,
    NormalizationCone, SupportSet, WeightVector,
};
use gitstab_families::SearchSpace;
use gitstab_lp::FeasibilityQuery;
use serde::{Deserialize, Serialize};

use crate::error::LunaError;

/// The data of one Luna step: the invariant 1-PS, the lattice of all
/// diagonal weights fixing `V^H` pointwise up to a common character, the
/// centralizer chamber and `V^H` itself.
///
/// Weights are analysed modulo the lattice: a weight in the lattice acts on
/// `V^H` by a scalar and destabilizes nothing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralizerContext {
    /// A generic element of the stabilizer lattice (the given `H` for
    /// contexts built from a weight).
    pub h: WeightVector,
    /// The full diagonal stabilizer of `V^H`.
    pub lattice: Lattice,
    /// Blocks of coordinates not separated by the lattice, each ordered
    /// non-increasingly: the Weyl chamber of the centralizer.
    pub blocks: NormalizationCone,
    /// The monomials spanning `V^H`.
    pub invariant_universe: SupportSet,
}

impl CentralizerContext {
    /// The context of the invariant subspace spanned by `universe`, which
    /// must equal its own invariant span.
    fn from_invariant_universe(
        h: WeightVector,
        universe: SupportSet,
    ) -> Result<Self, LunaError> {
        let lattice = stabilizer_lattice(&universe)?;
        let blocks = lattice.centralizer_cone();
        Ok(CentralizerContext {
            h,
            lattice,
            blocks,
            invariant_universe: universe,
        })
    }

    /// The family-search space of this context: `V^H` over the centralizer
    /// chamber, modulo the stabilizer lattice.
    pub fn space(&self) -> SearchSpace<'_> {
        SearchSpace::new(&self.invariant_universe, &self.blocks).modulo(&self.lattice)
    }

    /// An empty query over the centralizer chamber modulo the lattice.
    pub fn query(&self) -> FeasibilityQuery {
        FeasibilityQuery::new(self.blocks.clone()).modulo(&self.lattice)
    }

    /// Number of coordinates.
    pub fn n_vars(&self) -> usize {
        self.invariant_universe.n_vars()
    }

    /// Checks `s ⊆ V^H`.
    pub fn check_member(&self, s: &SupportSet) -> Result<(), LunaError> {
        match s.iter().find(|m| !self.invariant_universe.contains(m)) {
            Some(m) => Err(LunaError::NotInvariant(m.to_text())),
            None => Ok(()),
        }
    }
}

/// The context of the 1-PS `h` in degree `degree`: `V^H` is the set of
/// monomials of `h`-weight 0 and the blocks are the classes of coordinates
/// not separated by the stabilizer of `V^H`.
///
/// When `V^H` is fixed by a larger torus than the one generated by `h`, the
/// centralizer is taken with respect to that full stabilizer.
pub fn centralizer_context(h: &WeightVector, degree: u32) -> Result<CentralizerContext, LunaError> {
    if h.is_zero() {
        return Err(LunaError::ZeroWeight);
    }
    let all = enumerate_monomials(h.n_vars(), degree)?;
    let universe = all.filter(|m| m.dot(h.weights()) == 0);
    if universe.is_empty() {
        return Err(LunaError::EmptyInvariants {
            h: h.to_angle_string(),
            degree,
        });
    }
    CentralizerContext::from_invariant_universe(h.clone(), universe)
}

/// The context of a support family: `H` is its full diagonal stabilizer
/// and `V^H` the invariant span of the support.
pub fn context_for_support(s: &SupportSet) -> Result<CentralizerContext, LunaError> {
    let all = enumerate_monomials(s.n_vars(), s.degree())?;
    let universe = invariant_span(s, &all)?;
    let lattice = stabilizer_lattice(&universe)?;
    let h = generic_element(&lattice).unwrap_or_else(|| WeightVector::zero(s.n_vars()));
    CentralizerContext::from_invariant_universe(h, universe)
}

/// A lattice vector whose coordinates coincide exactly on unseparated
/// coordinates: `Σ M^k b_k` for a basis `b_k` and a large enough `M`.
pub fn generic_element(lattice: &Lattice) -> Option<WeightVector> {
    let basis = lattice.basis();
    if basis.is_empty() {
        return None;
    }
    let span: i64 = basis
        .iter()
        .flat_map(|b| b.iter().map(|x| x.abs()))
        .max()
        .unwrap_or(1);
    let m = 2 * span + 1;
    let mut acc = vec![0i64; lattice.n_vars()];
    let mut scale = 1i64;
    for b in basis {
        for (a, x) in acc.iter_mut().zip(b) {
            *a += scale * x;
        }
        scale *= m;
    }
    WeightVector::new(acc).ok()
}

/// The support of the limit of the generic member of `s` along `w`:
/// `{ m ∈ s : μ(m, w) = 0 }`, provided `max μ = 0`.
pub fn limit_support(s: &SupportSet, w: &WeightVector) -> Result<SupportSet, LunaError> {
    let mu = mu_support(s, w)?;
    match mu.cmp(&0) {
        std::cmp::Ordering::Less => Err(LunaError::UnstableLimit(mu)),
        std::cmp::Ordering::Greater => Err(LunaError::NoLimit(mu)),
        std::cmp::Ordering::Equal => Ok(s.filter(|m| m.dot(w.weights()) == 0)),
    }
}
