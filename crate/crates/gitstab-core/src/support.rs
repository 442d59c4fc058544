//! Coefficient-free supports: finite sets of monomials of one degree.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::CoreError;
use crate::expr;
use crate::monomial::ExponentVector;
use crate::perm::Permutation;

/// A set of monomials of a common degree in a common number of variables,
/// kept sorted in ascending lexicographic order without duplicates.
///
/// A support stands for the family of forms with generic coefficients on
/// exactly these monomials.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "SupportRepr", into = "SupportRepr")]
pub struct SupportSet {
    n_vars: usize,
    degree: u32,
    monomials: Vec<ExponentVector>,
}

#[derive(Serialize, Deserialize)]
struct SupportRepr {
    n_vars: usize,
    degree: u32,
    monomials: Vec<ExponentVector>,
}

impl TryFrom<SupportRepr> for SupportSet {
    type Error = CoreError;
    fn try_from(r: SupportRepr) -> Result<Self, Self::Error> {
        SupportSet::new(r.n_vars, r.degree, r.monomials)
    }
}

impl From<SupportSet> for SupportRepr {
    fn from(s: SupportSet) -> Self {
        SupportRepr {
            n_vars: s.n_vars,
            degree: s.degree,
            monomials: s.monomials,
        }
    }
}

impl SupportSet {
    /// Builds a support, checking that every monomial has the given shape.
    pub fn new(
        n_vars: usize,
        degree: u32,
        monomials: impl IntoIterator<Item = ExponentVector>,
    ) -> Result<Self, CoreError> {
        if n_vars == 0 {
            return Err(CoreError::ZeroParameter { what: "n_vars" });
        }
        let mut ms: Vec<ExponentVector> = monomials.into_iter().collect();
        for m in &ms {
            if m.n_vars() != n_vars {
                return Err(CoreError::LengthMismatch {
                    expected: n_vars,
                    found: m.n_vars(),
                });
            }
            if m.degree() != degree {
                return Err(CoreError::DegreeMismatch {
                    expected: degree,
                    found: m.degree(),
                    monomial: m.to_string(),
                });
            }
        }
        ms.sort();
        ms.dedup();
        Ok(SupportSet {
            n_vars,
            degree,
            monomials: ms,
        })
    }

    /// Builds a support from a non-empty list, inferring the shape from the
    /// first monomial.
    pub fn from_monomials(
        monomials: impl IntoIterator<Item = ExponentVector>,
    ) -> Result<Self, CoreError> {
        let ms: Vec<ExponentVector> = monomials.into_iter().collect();
        let first = ms.first().ok_or(CoreError::EmptySupport)?;
        let (n, d) = (first.n_vars(), first.degree());
        SupportSet::new(n, d, ms)
    }

    /// Convenience constructor from exponent literals.
    ///
    /// # Panics
    /// Panics if the literals are empty or of mixed shape.
    pub fn from_exponents(rows: &[&[u32]]) -> Self {
        SupportSet::from_monomials(rows.iter().map(|r| ExponentVector::from_slice(r)))
            .expect("well-formed exponent literals")
    }

    pub(crate) fn from_sorted_unchecked(
        n_vars: usize,
        degree: u32,
        monomials: Vec<ExponentVector>,
    ) -> Result<Self, CoreError> {
        debug_assert!(monomials.windows(2).all(|p| p[0] < p[1]));
        Ok(SupportSet {
            n_vars,
            degree,
            monomials,
        })
    }

    /// The empty support (the zero form) of the given shape.
    pub fn empty(n_vars: usize, degree: u32) -> Self {
        SupportSet {
            n_vars,
            degree,
            monomials: Vec::new(),
        }
    }

    /// Parses caret syntax with `q`-patterns, e.g.
    /// `x4*q4(x0,x1,x2,x3)` or `q{2,3}(x0,x1 | x2,x3,x4)`; see [`crate::expr`].
    ///
    /// The degree is taken from the expression; mixed degrees are an error.
    pub fn parse(text: &str, n_vars: usize) -> Result<Self, CoreError> {
        let ms = expr::expand(text, n_vars)?;
        SupportSet::from_monomials(ms)
    }

    /// Parses like [`SupportSet::parse`] but also requires the given degree.
    pub fn parse_with_degree(text: &str, n_vars: usize, degree: u32) -> Result<Self, CoreError> {
        let ms = expr::expand(text, n_vars)?;
        SupportSet::new(n_vars, degree, ms)
    }

    /// Number of variables.
    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    /// Common degree.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Number of monomials.
    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    /// Whether this is the zero form.
    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    /// Iterates in ascending lexicographic order.
    pub fn iter(&self) -> std::slice::Iter<'_, ExponentVector> {
        self.monomials.iter()
    }

    /// The monomials as a sorted slice.
    pub fn as_slice(&self) -> &[ExponentVector] {
        &self.monomials
    }

    /// Membership test.
    pub fn contains(&self, m: &ExponentVector) -> bool {
        self.monomials.binary_search(m).is_ok()
    }

    /// Whether every monomial of `self` lies in `other`.
    pub fn is_subset(&self, other: &SupportSet) -> bool {
        self.monomials.iter().all(|m| other.contains(m))
    }

    /// The monomials satisfying a predicate, as a support of the same shape.
    pub fn filter(&self, mut keep: impl FnMut(&ExponentVector) -> bool) -> SupportSet {
        SupportSet {
            n_vars: self.n_vars,
            degree: self.degree,
            monomials: self.monomials.iter().filter(|m| keep(m)).cloned().collect(),
        }
    }

    /// Set union (shapes must agree).
    pub fn union(&self, other: &SupportSet) -> Result<SupportSet, CoreError> {
        self.check_shape(other)?;
        SupportSet::new(
            self.n_vars,
            self.degree,
            self.monomials.iter().chain(other.iter()).cloned(),
        )
    }

    /// Set intersection (shapes must agree).
    pub fn intersection(&self, other: &SupportSet) -> Result<SupportSet, CoreError> {
        self.check_shape(other)?;
        Ok(self.filter(|m| other.contains(m)))
    }

    /// Set difference (shapes must agree).
    pub fn difference(&self, other: &SupportSet) -> Result<SupportSet, CoreError> {
        self.check_shape(other)?;
        Ok(self.filter(|m| !other.contains(m)))
    }

    /// Applies a coordinate permutation to every monomial.
    pub fn permuted(&self, p: &Permutation) -> SupportSet {
        let mut ms: Vec<ExponentVector> = self.monomials.iter().map(|m| m.permuted(p)).collect();
        ms.sort();
        SupportSet {
            n_vars: self.n_vars,
            degree: self.degree,
            monomials: ms,
        }
    }

    /// Renders as a sum in caret syntax, e.g. `x0^5 + x1^5`; the zero form is `0`.
    pub fn to_text(&self) -> String {
        if self.monomials.is_empty() {
            return "0".into();
        }
        self.monomials
            .iter()
            .rev()
            .map(|m| m.to_text())
            .collect::<Vec<_>>()
            .join(" + ")
    }

    fn check_shape(&self, other: &SupportSet) -> Result<(), CoreError> {
        if self.n_vars != other.n_vars {
            return Err(CoreError::LengthMismatch {
                expected: self.n_vars,
                found: other.n_vars,
            });
        }
        if self.degree != other.degree && !self.is_empty() && !other.is_empty() {
            return Err(CoreError::DegreeMismatch {
                expected: self.degree,
                found: other.degree,
                monomial: other.monomials[0].to_string(),
            });
        }
        Ok(())
    }
}

impl<'a> IntoIterator for &'a SupportSet {
    type Item = &'a ExponentVector;
    type IntoIter = std::slice::Iter<'a, ExponentVector>;
    fn into_iter(self) -> Self::IntoIter {
        self.monomials.iter()
    }
}

impl fmt::Display for SupportSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for SupportSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.monomials.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_operations() {
        let a = SupportSet::from_exponents(&[&[2, 0], &[1, 1]]);
        let b = SupportSet::from_exponents(&[&[1, 1], &[0, 2]]);
        assert_eq!(a.union(&b).unwrap().len(), 3);
        assert_eq!(a.intersection(&b).unwrap().len(), 1);
        assert_eq!(a.difference(&b).unwrap().len(), 1);
        assert!(a.intersection(&b).unwrap().is_subset(&a));
    }

    #[test]
    fn rejects_mixed_shapes() {
        let ms = vec![
            ExponentVector::from_slice(&[2, 0]),
            ExponentVector::from_slice(&[1, 0]),
        ];
        assert!(SupportSet::from_monomials(ms).is_err());
    }

    #[test]
    fn serde_round_trip() {
        let s = SupportSet::from_exponents(&[&[1, 2], &[3, 0]]);
        let j = serde_json::to_string(&s).unwrap();
        let back: SupportSet = serde_json::from_str(&j).unwrap();
        assert_eq!(s, back);
    }
}
