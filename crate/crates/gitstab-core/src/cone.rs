//! Normalization cones: Weyl chambers of a reductive subgroup of `SL(n)`
//! whose maximal torus is the diagonal torus.

use serde::{Deserialize, Serialize};

use crate::error::CoreError;
use crate::monomial::ExponentVector;

/// The chamber of normalized one-parameter subgroups for a block partition.
///
/// A sum-zero weight vector lies in the cone iff its entries are
/// non-increasing inside every block (in increasing index order). Weights in
/// different blocks are unconstrained relative to each other, which models
/// the `GL`/`ℂ^*` factors of a centralizer. One block of size `n` is the
/// standard chamber `a_0 ≥ ⋯ ≥ a_{n-1}`; `n` singleton blocks give the full
/// diagonal torus.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NormalizationCone {
    n_vars: usize,
    blocks: Vec<Vec<usize>>,
}

impl NormalizationCone {
    /// Validates that `blocks` partition `{0, …, n_vars-1}`.
    ///
    /// Blocks are normalized (each sorted, blocks ordered by smallest
    /// element). They are usually contiguous index ranges, but any
    /// partition is accepted.
    pub fn from_blocks(n_vars: usize, blocks: Vec<Vec<usize>>) -> Result<Self, CoreError> {
        if n_vars == 0 {
            return Err(CoreError::ZeroParameter { what: "n_vars" });
        }
        let mut seen = vec![false; n_vars];
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        for b in &blocks {
            if b.is_empty() {
                return Err(CoreError::InvalidBlocks("empty block".into()));
            }
            for &i in b {
                if i >= n_vars || seen[i] {
                    return Err(CoreError::InvalidBlocks(format!(
                        "index {i} out of range or repeated"
                    )));
                }
                seen[i] = true;
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(CoreError::InvalidBlocks("blocks do not cover all coordinates".into()));
        }
        blocks.sort_by_key(|b| b[0]);
        Ok(NormalizationCone { n_vars, blocks })
    }

    /// Contiguous blocks of the given sizes, e.g. `[2, 3]` → `{0,1},{2,3,4}`.
    pub fn from_block_sizes(sizes: &[usize]) -> Result<Self, CoreError> {
        let mut blocks = Vec::new();
        let mut start = 0;
        for &s in sizes {
            blocks.push((start..start + s).collect());
            start += s;
        }
        NormalizationCone::from_blocks(start, blocks)
    }

    /// The standard chamber `a_0 ≥ a_1 ≥ ⋯ ≥ a_{n-1}`.
    pub fn standard(n_vars: usize) -> Self {
        NormalizationCone {
            n_vars,
            blocks: vec![(0..n_vars).collect()],
        }
    }

    /// The full diagonal torus: every coordinate is its own block.
    pub fn torus(n_vars: usize) -> Self {
        NormalizationCone {
            n_vars,
            blocks: (0..n_vars).map(|i| vec![i]).collect(),
        }
    }

    /// Number of coordinates.
    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    /// The blocks, each sorted, ordered by smallest element.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Whether every block is a run of consecutive indices.
    pub fn is_contiguous(&self) -> bool {
        self.blocks.iter().all(|b| b.windows(2).all(|p| p[1] == p[0] + 1))
    }

    /// The wall pairs `(i, j)` with `i` directly before `j` in a block; the
    /// cone is `{w : Σw = 0, w_i ≥ w_j for every wall}`.
    pub fn walls(&self) -> Vec<(usize, usize)> {
        self.blocks
            .iter()
            .flat_map(|b| b.windows(2).map(|p| (p[0], p[1])))
            .collect()
    }

    /// The first (largest-weight) coordinate of every block.
    pub fn leaders(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b[0]).collect()
    }

    /// Whether `w` sums to zero and is non-increasing inside every block.
    pub fn contains(&self, w: &[i64]) -> bool {
        w.len() == self.n_vars
            && w.iter().sum::<i64>() == 0
            && self.walls().iter().all(|&(i, j)| w[i] >= w[j])
    }

    /// Block index of every coordinate.
    pub fn block_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.n_vars];
        for (k, b) in self.blocks.iter().enumerate() {
            for &i in b {
                out[i] = k;
            }
        }
        out
    }

    /// Closed-form dominance: `μ(m1, w) ≤ μ(m2, w)` for every `w` in the cone.
    ///
    /// With `d = m2 − m1` this holds iff every block total of `d` vanishes
    /// (only needed when there are at least two blocks, otherwise it is the
    /// equal-degree condition) and every proper prefix sum of `d` inside each
    /// block is non-negative. For the standard chamber this is the classical
    /// prefix-sum lemma `i_0 + ⋯ + i_k ≤ j_0 + ⋯ + j_k`.
    pub fn dominates(&self, m1: &ExponentVector, m2: &ExponentVector) -> Result<bool, CoreError> {
        if m1.n_vars() != self.n_vars || m2.n_vars() != self.n_vars {
            return Err(CoreError::LengthMismatch {
                expected: self.n_vars,
                found: if m1.n_vars() != self.n_vars {
                    m1.n_vars()
                } else {
                    m2.n_vars()
                },
            });
        }
        if m1.degree() != m2.degree() {
            return Err(CoreError::DegreeMismatch {
                expected: m1.degree(),
                found: m2.degree(),
                monomial: m2.to_string(),
            });
        }
        let (a, b) = (m1.exponents(), m2.exponents());
        for block in &self.blocks {
            let mut prefix: i64 = 0;
            for &i in block {
                prefix += i64::from(b[i]) - i64::from(a[i]);
                if prefix < 0 {
                    return Ok(false);
                }
            }
            if prefix != 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(v: &[u32]) -> ExponentVector {
        ExponentVector::from_slice(v)
    }

    #[test]
    fn standard_prefix_lemma() {
        let c = NormalizationCone::standard(5);
        assert!(c.dominates(&m(&[4, 1, 0, 0, 0]), &m(&[5, 0, 0, 0, 0])).unwrap());
        assert!(!c.dominates(&m(&[3, 0, 0, 2, 0]), &m(&[2, 0, 3, 0, 0])).unwrap());
        assert!(!c.dominates(&m(&[2, 0, 3, 0, 0]), &m(&[3, 0, 0, 2, 0])).unwrap());
    }

    #[test]
    fn block_cone_requires_equal_block_totals() {
        let c = NormalizationCone::from_block_sizes(&[2, 3]).unwrap();
        assert!(c.dominates(&m(&[0, 2, 0, 0, 3]), &m(&[2, 0, 3, 0, 0])).unwrap());
        assert!(c.dominates(&m(&[1, 1, 1, 1, 1]), &m(&[2, 0, 3, 0, 0])).unwrap());
        assert!(!c.dominates(&m(&[0, 0, 5, 0, 0]), &m(&[5, 0, 0, 0, 0])).unwrap());
        let t = NormalizationCone::torus(3);
        assert!(!t.dominates(&m(&[1, 0, 0]), &m(&[0, 1, 0])).unwrap());
        assert!(t.dominates(&m(&[1, 0, 0]), &m(&[1, 0, 0])).unwrap());
    }

    #[test]
    fn validation() {
        assert!(NormalizationCone::from_blocks(3, vec![vec![0, 1]]).is_err());
        assert!(NormalizationCone::from_blocks(3, vec![vec![0, 1], vec![1, 2]]).is_err());
        let c = NormalizationCone::from_blocks(4, vec![vec![3, 1], vec![0, 2]]).unwrap();
        assert_eq!(c.blocks(), &[vec![0, 2], vec![1, 3]]);
        assert!(!c.is_contiguous());
        assert!(c.contains(&[1, 1, -1, -1]));
        assert!(!c.contains(&[-1, 1, 1, -1]));
    }
}
