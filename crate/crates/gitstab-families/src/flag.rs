//! Destabilizing flags of one-parameter subgroups.

use std::fmt;

use gitstab_core::WeightVector;
use serde::{Deserialize, Serialize};

use crate::error::FamilyError;

/// A chain of coordinate subspaces of `ℙ^{n-1}`, each given by the set of
/// coordinates vanishing on it.
///
/// The chain runs from the empty set (all coordinates vanish) to the whole
/// space (none vanish) and is strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct Flag {
    n_vars: usize,
    vanishing: Vec<Vec<usize>>,
}

impl Flag {
    /// Builds a flag from vanishing sets, checking that they are strictly
    /// nested from all coordinates down to none.
    pub fn new(vanishing: Vec<Vec<usize>>) -> Result<Self, String> {
        let n = vanishing.first().map_or(0, Vec::len);
        if n == 0 {
            return Err("a flag needs at least one coordinate".into());
        }
        let mut vanishing = vanishing;
        for v in vanishing.iter_mut() {
            v.sort_unstable();
        }
        if vanishing[0] != (0..n).collect::<Vec<_>>() || !vanishing.last().is_some_and(Vec::is_empty) {
            return Err("a flag runs from the empty subspace to the whole space".into());
        }
        for pair in vanishing.windows(2) {
            let strictly_smaller =
                pair[1].len() < pair[0].len() && pair[1].iter().all(|i| pair[0].contains(i));
            if !strictly_smaller {
                return Err("flag subspaces must be strictly nested".into());
            }
        }
        Ok(Flag { n_vars: n, vanishing })
    }

    /// Number of coordinates.
    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    /// The vanishing coordinate sets, from the empty subspace to the whole
    /// space.
    pub fn vanishing_sets(&self) -> &[Vec<usize>] {
        &self.vanishing
    }

    /// Number of proper nonzero subspaces in the chain.
    pub fn length(&self) -> usize {
        self.vanishing.len().saturating_sub(2)
    }
}

impl TryFrom<Vec<Vec<usize>>> for Flag {
    type Error = String;
    fn try_from(v: Vec<Vec<usize>>) -> Result<Self, Self::Error> {
        Flag::new(v)
    }
}

impl From<Flag> for Vec<Vec<usize>> {
    fn from(f: Flag) -> Self {
        f.vanishing
    }
}

impl fmt::Display for Flag {
    /// Renders e.g. `∅ ⊆ (x3=x4=0) ⊆ P^4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .vanishing
            .iter()
            .map(|v| {
                if v.len() == self.n_vars {
                    "∅".to_string()
                } else if v.is_empty() {
                    format!("P^{}", self.n_vars - 1)
                } else {
                    let eqs: Vec<String> = v.iter().map(|i| format!("x{i}")).collect();
                    format!("({}=0)", eqs.join("="))
                }
            })
            .collect();
        f.write_str(&parts.join(" ⊆ "))
    }
}

/// The flag of `w`: coordinates grouped by equal weight, blocks taken in
/// decreasing weight order and included cumulatively.
///
/// The `k`-th subspace is spanned by the coordinates of the `k` heaviest
/// blocks; all other coordinates vanish on it.
pub fn associated_flag(w: &WeightVector) -> Result<Flag, FamilyError> {
    if w.is_zero() {
        return Err(FamilyError::ZeroWeight);
    }
    let ws = w.weights();
    let mut levels: Vec<i64> = ws.to_vec();
    levels.sort_unstable_by(|a, b| b.cmp(a));
    levels.dedup();
    let mut vanishing = vec![(0..ws.len()).collect::<Vec<_>>()];
    for &level in &levels {
        vanishing.push((0..ws.len()).filter(|&i| ws[i] < level).collect());
    }
    Ok(Flag::new(vanishing).expect("weight levels give a strictly nested chain"))
}
