//! Exponent vectors of fixed-degree monomials and the numerical function μ.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::CoreError;
use crate::perm::Permutation;
use crate::support::SupportSet;
use crate::weight::WeightVector;

/// A monomial `x_0^{i_0} ⋯ x_{n-1}^{i_{n-1}}`, stored by its exponents.
///
/// The derived ordering is lexicographic on the exponent list, so
/// `[0,0,5] < [0,1,4] < … < [5,0,0]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct ExponentVector {
    exps: Vec<u32>,
}

impl ExponentVector {
    /// Builds an exponent vector; at least one variable is required.
    pub fn new(exps: Vec<u32>) -> Result<Self, CoreError> {
        if exps.is_empty() {
            return Err(CoreError::ZeroParameter { what: "n_vars" });
        }
        Ok(ExponentVector { exps })
    }

    /// Builds an exponent vector from a slice (convenience for literals).
    ///
    /// # Panics
    /// Panics on an empty slice.
    pub fn from_slice(exps: &[u32]) -> Self {
        ExponentVector::new(exps.to_vec()).expect("exponent vector must be non-empty")
    }

    /// The exponents `i_0, …, i_{n-1}`.
    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// Number of variables.
    pub fn n_vars(&self) -> usize {
        self.exps.len()
    }

    /// Total degree `Σ i_k`.
    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// Exponent of variable `k`.
    pub fn get(&self, k: usize) -> u32 {
        self.exps[k]
    }

    /// The exponents as signed integers, for linear algebra.
    pub fn to_i64(&self) -> Vec<i64> {
        self.exps.iter().map(|&e| i64::from(e)).collect()
    }

    /// Dot product with an integer vector of the same length (no length check).
    #[inline]
    pub fn dot(&self, w: &[i64]) -> i64 {
        debug_assert_eq!(self.exps.len(), w.len());
        self.exps
            .iter()
            .zip(w)
            .map(|(&e, &a)| i64::from(e) * a)
            .sum()
    }

    /// Applies a coordinate permutation: coordinate `i` of the result is
    /// coordinate `p[i]` of `self`.
    pub fn permuted(&self, p: &Permutation) -> ExponentVector {
        ExponentVector {
            exps: p.apply(&self.exps),
        }
    }

    /// Renders in caret syntax, e.g. `x0^2*x3*x4^2`; the constant monomial is `1`.
    pub fn to_text(&self) -> String {
        let mut parts = Vec::new();
        for (k, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("x{k}")),
                _ => parts.push(format!("x{k}^{e}")),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl TryFrom<Vec<u32>> for ExponentVector {
    type Error = CoreError;
    fn try_from(v: Vec<u32>) -> Result<Self, Self::Error> {
        ExponentVector::new(v)
    }
}

impl From<ExponentVector> for Vec<u32> {
    fn from(m: ExponentVector) -> Self {
        m.exps
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, e) in self.exps.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All monomials of the given degree in `n_vars` variables, in ascending
/// lexicographic order of exponent vectors.
pub fn enumerate_monomials(n_vars: usize, degree: u32) -> Result<SupportSet, CoreError> {
    if n_vars == 0 {
        return Err(CoreError::ZeroParameter { what: "n_vars" });
    }
    if degree == 0 {
        return Err(CoreError::ZeroParameter { what: "degree" });
    }
    let mut out = Vec::new();
    let mut cur = vec![0u32; n_vars];
    fill(&mut cur, 0, degree, &mut out);
    out.sort();
    SupportSet::from_sorted_unchecked(n_vars, degree, out)
}

fn fill(cur: &mut Vec<u32>, k: usize, left: u32, out: &mut Vec<ExponentVector>) {
    if k + 1 == cur.len() {
        cur[k] = left;
        out.push(ExponentVector { exps: cur.clone() });
        return;
    }
    for e in 0..=left {
        cur[k] = e;
        fill(cur, k + 1, left - e, out);
    }
}

/// The numerical function of a single monomial: `μ(m, w) = Σ a_k i_k`.
pub fn mu_monomial(m: &ExponentVector, w: &WeightVector) -> Result<i64, CoreError> {
    if m.n_vars() != w.n_vars() {
        return Err(CoreError::LengthMismatch {
            expected: m.n_vars(),
            found: w.n_vars(),
        });
    }
    Ok(m.dot(w.weights()))
}

/// The numerical function of a support: the maximum of `μ(m, w)` over `m ∈ S`.
pub fn mu_support(s: &SupportSet, w: &WeightVector) -> Result<i64, CoreError> {
    if s.is_empty() {
        return Err(CoreError::EmptySupport);
    }
    if s.n_vars() != w.n_vars() {
        return Err(CoreError::LengthMismatch {
            expected: s.n_vars(),
            found: w.n_vars(),
        });
    }
    Ok(s.iter().map(|m| m.dot(w.weights())).max().expect("non-empty"))
}
