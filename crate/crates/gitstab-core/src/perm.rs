//! Coordinate permutations (the Weyl group of the diagonal torus).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::CoreError;

/// A permutation `p` of `{0, …, n-1}` acting on coordinate vectors by
/// `(p·v)[i] = v[p[i]]`.
///
/// With this convention `μ(p·m, p·w) = μ(m, w)` for every monomial `m` and
/// weight `w`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Validates that `images` is a bijection of `{0, …, n-1}`.
    pub fn new(images: Vec<usize>) -> Result<Self, CoreError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(CoreError::InvalidPermutation(format!("{images:?}")));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// The identity permutation on `n` points.
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// The image list `p[0], …, p[n-1]`.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Number of points.
    pub fn len(&self) -> usize {
        self.images.len()
    }

    /// Whether the permutation acts on zero points.
    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// Whether this is the identity.
    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// Applies the permutation to a coordinate vector.
    pub fn apply<T: Clone>(&self, v: &[T]) -> Vec<T> {
        debug_assert_eq!(v.len(), self.images.len());
        self.images.iter().map(|&j| v[j].clone()).collect()
    }

    /// The inverse permutation, so that `p.inverse().apply(&p.apply(v)) == v`.
    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    /// Composition `self ∘ other` as an action: applying the result equals
    /// applying `other` first and then `self`.
    pub fn then_after(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = CoreError;
    fn try_from(v: Vec<usize>) -> Result<Self, Self::Error> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.images
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images)
    }
}

/// Advances `v` to the next permutation in lexicographic order; returns
/// `false` (leaving `v` sorted ascending) after the last one.
fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        v.reverse();
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All `n!` permutations of `n` points in lexicographic order (identity first).
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut cur: Vec<usize> = (0..n).collect();
    let mut out = vec![Permutation {
        images: cur.clone(),
    }];
    while next_permutation(&mut cur) {
        out.push(Permutation {
            images: cur.clone(),
        });
    }
    out
}

/// All permutations that map each block to itself, in lexicographic order of
/// their image lists (identity first).
pub fn block_permutations(n: usize, blocks: &[Vec<usize>]) -> Vec<Permutation> {
    let mut out = vec![Permutation::identity(n)];
    for block in blocks {
        let mut next = Vec::new();
        for base in &out {
            let mut order = block.clone();
            loop {
                let mut images = base.images.clone();
                for (slot, &src) in block.iter().zip(&order) {
                    images[*slot] = src;
                }
                next.push(Permutation { images });
                if !next_permutation(&mut order) {
                    break;
                }
            }
        }
        out = next;
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(all_permutations(5).len(), 120);
        assert_eq!(all_permutations(1).len(), 1);
        assert!(all_permutations(4)[0].is_identity());
        let bp = block_permutations(5, &[vec![0, 1], vec![2, 3, 4]]);
        assert_eq!(bp.len(), 12);
        assert!(bp[0].is_identity());
        for p in &bp {
            assert!(p.images()[0] < 2 && p.images()[1] < 2);
        }
    }

    #[test]
    fn inverse_and_composition() {
        for p in all_permutations(4) {
            let v = vec![10, 20, 30, 40];
            assert_eq!(p.inverse().apply(&p.apply(&v)), v);
            for q in all_permutations(4) {
                assert_eq!(p.then_after(&q).apply(&v), p.apply(&q.apply(&v)));
            }
        }
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
        assert!(Permutation::new(vec![0, 3, 1]).is_err());
    }
}
