//! Integer weight vectors of one-parameter subgroups of `SL(n)`.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::CoreError;
use crate::perm::Permutation;

/// A diagonal one-parameter subgroup `t ↦ diag(t^{a_0}, …, t^{a_{n-1}})`.
///
/// The weights sum to zero and are stored in primitive form (the gcd of the
/// nonzero entries is 1), because every sign question about `μ` is
/// invariant under positive rescaling.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct WeightVector {
    weights: Vec<i64>,
}

/// Divides an integer vector by the gcd of its entries (zero stays zero).
pub fn primitive(v: &[i64]) -> Vec<i64> {
    let g = v.iter().fold(0i64, |g, &x| g.gcd(&x));
    if g == 0 {
        v.to_vec()
    } else {
        v.iter().map(|&x| x / g).collect()
    }
}

impl WeightVector {
    /// Builds a weight vector, reducing it to primitive form.
    ///
    /// Fails if the entries do not sum to zero or the vector is empty.
    pub fn new(weights: Vec<i64>) -> Result<Self, CoreError> {
        if weights.is_empty() {
            return Err(CoreError::ZeroParameter { what: "n_vars" });
        }
        let sum: i64 = weights.iter().sum();
        if sum != 0 {
            return Err(CoreError::NonZeroSum { weights, sum });
        }
        Ok(WeightVector {
            weights: primitive(&weights),
        })
    }

    /// The zero weight vector in `n_vars` coordinates.
    pub fn zero(n_vars: usize) -> Self {
        WeightVector {
            weights: vec![0; n_vars],
        }
    }

    /// The weights `a_0, …, a_{n-1}`.
    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    /// Number of coordinates.
    pub fn n_vars(&self) -> usize {
        self.weights.len()
    }

    /// Whether every weight is zero.
    pub fn is_zero(&self) -> bool {
        self.weights.iter().all(|&a| a == 0)
    }

    /// Largest absolute weight.
    pub fn max_norm(&self) -> i64 {
        self.weights.iter().map(|a| a.abs()).max().unwrap_or(0)
    }

    /// Whether `other` is a positive multiple of `self` (both taken primitive).
    ///
    /// Vectors with a nonzero sum are never equal to a stored weight vector.
    pub fn equals_up_to_positive_scale(&self, other: &[i64]) -> bool {
        other.len() == self.weights.len()
            && other.iter().sum::<i64>() == 0
            && primitive(other) == self.weights
    }

    /// Applies a coordinate permutation (coordinate `i` becomes old coordinate `p[i]`).
    pub fn permuted(&self, p: &Permutation) -> WeightVector {
        WeightVector {
            weights: p.apply(&self.weights),
        }
    }

    /// Renders as `⟨a_0,…,a_{n-1}⟩`.
    pub fn to_angle_string(&self) -> String {
        let inner: Vec<String> = self.weights.iter().map(|a| a.to_string()).collect();
        format!("⟨{}⟩", inner.join(","))
    }
}

impl TryFrom<Vec<i64>> for WeightVector {
    type Error = CoreError;
    fn try_from(v: Vec<i64>) -> Result<Self, Self::Error> {
        WeightVector::new(v)
    }
}

impl From<WeightVector> for Vec<i64> {
    fn from(w: WeightVector) -> Self {
        w.weights
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_angle_string())
    }
}

impl fmt::Debug for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stored_primitive() {
        let w = WeightVector::new(vec![4, 4, -2, -2, -4]).unwrap();
        assert_eq!(w.weights(), &[2, 2, -1, -1, -2]);
        assert!(w.equals_up_to_positive_scale(&[6, 6, -3, -3, -6]));
        assert!(!w.equals_up_to_positive_scale(&[-2, -2, 1, 1, 2]));
    }

    #[test]
    fn rejects_nonzero_sum() {
        assert!(matches!(
            WeightVector::new(vec![5, 3, -1, -2, -7]),
            Err(CoreError::NonZeroSum { sum: -2, .. })
        ));
    }

    #[test]
    fn zero_vector() {
        let z = WeightVector::new(vec![0, 0, 0]).unwrap();
        assert!(z.is_zero());
        assert_eq!(z, WeightVector::zero(3));
    }
}
