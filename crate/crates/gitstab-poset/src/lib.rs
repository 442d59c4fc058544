//! The dominance order on monomials induced by a normalization cone.
//!
//! `m1 ≤ m2` when `μ(m1, w) ≤ μ(m2, w)` for every weight `w` of the cone.
//! For the standard chamber this is the classical prefix-sum criterion
//! (`i_0 + ⋯ + i_k ≤ j_0 + ⋯ + j_k` for every `k`); for block cones it is the
//! within-block prefix criterion with balanced block totals. [`leq`] is the
//! closed form, [`leq_oracle`] decides the same question with the exact LP
//! solver and serves as ground truth in tests.
//!
//! [`hasse`] builds the covering relation of a whole universe, and
//! [`MonomialPoset::downset`] gives the monomials below a set of tops — the
//! shape of every non-stable family, since `M_{≤0}(w)` is downward closed.
//!
//! # Example
//!
//! ```
//! use gitstab_core::{enumerate_monomials, ExponentVector, NormalizationCone};
//! use gitstab_poset::hasse;
//!
//! let universe = enumerate_monomials(5, 5).unwrap();
//! let poset = hasse(&universe, &NormalizationCone::standard(5)).unwrap();
//! let top = ExponentVector::from_slice(&[4, 0, 0, 0, 1]);
//! assert_eq!(poset.downset([&top]).unwrap().len(), 70);
//! ```

use std::fmt::Write as _;

use gitstab_core::{CoreError, ExponentVector, NormalizationCone, SupportSet};
use gitstab_lp::{is_feasible, FeasibilityQuery, LpError};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Failures of poset operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    /// Shape mismatch between monomials or with the cone.
    #[error(transparent)]
    Core(#[from] CoreError),
    /// The LP oracle failed.
    #[error(transparent)]
    Lp(#[from] LpError),
    /// A requested monomial is not part of the poset's universe.
    #[error("monomial {0} is not in the universe")]
    NotInUniverse(String),
    /// The universe is empty.
    #[error("empty universe")]
    EmptyUniverse,
}

/// Closed-form dominance: `μ(m1, w) ≤ μ(m2, w)` for every `w` in the cone.
pub fn leq(m1: &ExponentVector, m2: &ExponentVector, cone: &NormalizationCone) -> Result<bool, PosetError> {
    Ok(cone.dominates(m1, m2)?)
}

/// Dominance decided by exact LP: true iff no `w` in the cone has
/// `μ(m1, w) ≥ μ(m2, w) + 1`.
///
/// Integrality makes `≥ 1` equivalent to `> 0` up to scaling, so this is
/// the defining condition of the order. Intended as a test oracle for
/// [`leq`].
pub fn leq_oracle(
    m1: &ExponentVector,
    m2: &ExponentVector,
    cone: &NormalizationCone,
) -> Result<bool, PosetError> {
    // Shape checks shared with the closed form.
    cone.dominates(m1, m2)?;
    let diff: Vec<i64> = m2
        .to_i64()
        .iter()
        .zip(m1.to_i64())
        .map(|(b, a)| b - a)
        .collect();
    // (m2 − m1) · w ≤ −1
    let q = FeasibilityQuery::new(cone.clone()).row(diff, -1);
    Ok(!is_feasible(&q)?)
}

/// A finite poset of monomials under cone dominance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialPoset {
    universe: SupportSet,
    cone: NormalizationCone,
    /// Covering pairs `(parent, child)` as indices into the universe, sorted.
    covers: Vec<(usize, usize)>,
}

/// Computes all dominance pairs of `universe` and reduces them to covers.
pub fn hasse(universe: &SupportSet, cone: &NormalizationCone) -> Result<MonomialPoset, PosetError> {
    if universe.is_empty() {
        return Err(PosetError::EmptyUniverse);
    }
    let ms = universe.as_slice();
    let k = ms.len();
    // below[i][j]: m_i ≤ m_j.
    let mut below = vec![vec![false; k]; k];
    for i in 0..k {
        for j in 0..k {
            below[i][j] = cone.dominates(&ms[i], &ms[j])?;
        }
    }
    let mut covers = Vec::new();
    for j in 0..k {
        for i in 0..k {
            if i == j || !below[i][j] {
                continue;
            }
            let between = (0..k).any(|l| l != i && l != j && below[i][l] && below[l][j]);
            if !between {
                covers.push((j, i));
            }
        }
    }
    covers.sort_unstable();
    Ok(MonomialPoset {
        universe: universe.clone(),
        cone: cone.clone(),
        covers,
    })
}

impl MonomialPoset {
    /// The underlying monomials.
    pub fn universe(&self) -> &SupportSet {
        &self.universe
    }

    /// The cone defining the order.
    pub fn cone(&self) -> &NormalizationCone {
        &self.cone
    }

    fn index(&self, m: &ExponentVector) -> Result<usize, PosetError> {
        self.universe
            .as_slice()
            .binary_search(m)
            .map_err(|_| PosetError::NotInUniverse(m.to_string()))
    }

    /// Whether `m1 ≤ m2` in this poset.
    pub fn leq(&self, m1: &ExponentVector, m2: &ExponentVector) -> Result<bool, PosetError> {
        self.index(m1)?;
        self.index(m2)?;
        leq(m1, m2, &self.cone)
    }

    /// Covering pairs `(parent, child)`: `child < parent` with nothing in
    /// between.
    pub fn covers(&self) -> Vec<(&ExponentVector, &ExponentVector)> {
        let ms = self.universe.as_slice();
        self.covers.iter().map(|&(p, c)| (&ms[p], &ms[c])).collect()
    }

    /// Whether `(parent, child)` is a covering pair.
    pub fn is_cover(&self, parent: &ExponentVector, child: &ExponentVector) -> bool {
        match (self.index(parent), self.index(child)) {
            (Ok(p), Ok(c)) => self.covers.binary_search(&(p, c)).is_ok(),
            _ => false,
        }
    }

    /// Elements with no element above them.
    pub fn maxima(&self) -> Vec<&ExponentVector> {
        let ms = self.universe.as_slice();
        (0..ms.len())
            .filter(|&i| !self.covers.iter().any(|&(_, c)| c == i))
            .map(|i| &ms[i])
            .collect()
    }

    /// Elements with no element below them.
    pub fn minima(&self) -> Vec<&ExponentVector> {
        let ms = self.universe.as_slice();
        (0..ms.len())
            .filter(|&i| !self.covers.iter().any(|&(p, _)| p == i))
            .map(|i| &ms[i])
            .collect()
    }

    /// The monomials below (or equal to) at least one of `tops`.
    pub fn downset<'a>(
        &self,
        tops: impl IntoIterator<Item = &'a ExponentVector>,
    ) -> Result<SupportSet, PosetError> {
        let idx: Vec<usize> = tops
            .into_iter()
            .map(|t| self.index(t))
            .collect::<Result<_, _>>()?;
        let ms = self.universe.as_slice();
        let kept = (0..ms.len()).filter(|&i| {
            idx.iter()
                .any(|&t| self.cone.dominates(&ms[i], &ms[t]).unwrap_or(false))
        });
        Ok(SupportSet::new(
            self.universe.n_vars(),
            self.universe.degree(),
            kept.map(|i| ms[i].clone()),
        )?)
    }

    /// The maximal elements of a subset (its "top" monomials).
    pub fn maximal_elements(&self, s: &SupportSet) -> Vec<ExponentVector> {
        s.iter()
            .filter(|m| {
                !s.iter()
                    .any(|o| o != *m && self.cone.dominates(m, o).unwrap_or(false))
            })
            .cloned()
            .collect()
    }

    /// The sub-poset on `s` (covers recomputed inside `s`).
    pub fn restrict(&self, s: &SupportSet) -> Result<MonomialPoset, PosetError> {
        if let Some(m) = s.iter().find(|m| !self.universe.contains(m)) {
            return Err(PosetError::NotInUniverse(m.to_string()));
        }
        hasse(s, &self.cone)
    }

    /// Graphviz rendering: one node per monomial labelled `[i0,…]`, one edge
    /// per cover from parent to child.
    pub fn to_dot(&self) -> String {
        let ms = self.universe.as_slice();
        let mut out = String::from("digraph poset {\n  rankdir=TB;\n  node [shape=plaintext];\n");
        for m in ms {
            let _ = writeln!(out, "  \"{m}\";");
        }
        for &(p, c) in &self.covers {
            let _ = writeln!(out, "  \"{}\" -> \"{}\";", ms[p], ms[c]);
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use gitstab_core::enumerate_monomials;

    fn m(v: &[u32]) -> ExponentVector {
        ExponentVector::from_slice(v)
    }

    #[test]
    fn covering_pair_at_the_top() {
        let u = enumerate_monomials(5, 5).unwrap();
        let p = hasse(&u, &NormalizationCone::standard(5)).unwrap();
        assert!(p.is_cover(&m(&[5, 0, 0, 0, 0]), &m(&[4, 1, 0, 0, 0])));
        assert!(!p.is_cover(&m(&[5, 0, 0, 0, 0]), &m(&[3, 2, 0, 0, 0])));
    }

    #[test]
    fn incomparable_pair() {
        let c = NormalizationCone::standard(5);
        let (a, b) = (m(&[3, 0, 0, 2, 0]), m(&[2, 0, 3, 0, 0]));
        assert!(!leq(&a, &b, &c).unwrap());
        assert!(!leq(&b, &a, &c).unwrap());
        assert!(!leq_oracle(&a, &b, &c).unwrap());
        assert!(!leq_oracle(&b, &a, &c).unwrap());
    }
}
