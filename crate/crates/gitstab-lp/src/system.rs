//! Linear systems over integer weight vectors and their Farkas certificates.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::LpError;

/// One inequality `coeffs · w ≤ rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Inequality {
    /// Coefficient vector, one entry per coordinate of `w`.
    pub coeffs: Vec<i64>,
    /// Right-hand side.
    pub rhs: i64,
}

impl Inequality {
    /// `coeffs · w ≤ rhs`.
    pub fn new(coeffs: Vec<i64>, rhs: i64) -> Self {
        Inequality { coeffs, rhs }
    }

    /// Whether an integer point satisfies the inequality.
    pub fn holds_at(&self, w: &[i64]) -> bool {
        let lhs: i128 = self
            .coeffs
            .iter()
            .zip(w)
            .map(|(&a, &x)| i128::from(a) * i128::from(x))
            .sum();
        lhs <= i128::from(self.rhs)
    }
}

/// A system `E w = 0`, `A w ≤ b` in `n_vars` integer unknowns.
///
/// Equalities are homogeneous: in this crate they encode `Σ w = 0` and
/// orthogonality to a lattice that is being quotiented out.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinearSystem {
    /// Number of unknowns.
    pub n_vars: usize,
    /// Homogeneous equality rows `e · w = 0`.
    pub equalities: Vec<Vec<i64>>,
    /// Inequality rows `a · w ≤ b`.
    pub inequalities: Vec<Inequality>,
}

impl LinearSystem {
    /// An empty system in `n_vars` unknowns.
    pub fn new(n_vars: usize) -> Self {
        LinearSystem {
            n_vars,
            equalities: Vec::new(),
            inequalities: Vec::new(),
        }
    }

    /// Adds `e · w = 0`.
    pub fn push_equality(&mut self, e: Vec<i64>) {
        debug_assert_eq!(e.len(), self.n_vars);
        self.equalities.push(e);
    }

    /// Adds `a · w ≤ b`.
    pub fn push_inequality(&mut self, a: Vec<i64>, b: i64) {
        debug_assert_eq!(a.len(), self.n_vars);
        self.inequalities.push(Inequality::new(a, b));
    }

    /// Whether an integer point satisfies every row.
    pub fn holds_at(&self, w: &[i64]) -> bool {
        w.len() == self.n_vars
            && self.equalities.iter().all(|e| {
                e.iter()
                    .zip(w)
                    .map(|(&a, &x)| i128::from(a) * i128::from(x))
                    .sum::<i128>()
                    == 0
            })
            && self.inequalities.iter().all(|r| r.holds_at(w))
    }

    /// Checks that every row has `n_vars` coefficients.
    pub fn validate(&self) -> Result<(), LpError> {
        let bad = self
            .equalities
            .iter()
            .map(Vec::len)
            .chain(self.inequalities.iter().map(|r| r.coeffs.len()))
            .find(|&l| l != self.n_vars);
        match bad {
            Some(found) => Err(LpError::Shape {
                expected: self.n_vars,
                found,
            }),
            None => Ok(()),
        }
    }
}

/// A Farkas certificate of infeasibility for a [`LinearSystem`].
///
/// Multipliers `y ≥ 0` on the inequalities and free multipliers `z` on the
/// equalities such that `yᵀA + zᵀE = 0` while `yᵀb < 0`. Adding up the rows
/// with these weights yields the contradiction `0 ≤ yᵀb < 0`. All
/// multipliers are integers (a rational certificate scaled by a positive
/// common denominator).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FarkasCertificate {
    /// One non-negative multiplier per inequality row.
    #[serde(with = "bigint_vec")]
    pub inequality_multipliers: Vec<BigInt>,
    /// One free multiplier per equality row.
    #[serde(with = "bigint_vec")]
    pub equality_multipliers: Vec<BigInt>,
}

impl FarkasCertificate {
    /// Checks the certificate against a system with exact arithmetic.
    pub fn verify(&self, sys: &LinearSystem) -> bool {
        if self.inequality_multipliers.len() != sys.inequalities.len()
            || self.equality_multipliers.len() != sys.equalities.len()
        {
            return false;
        }
        if self.inequality_multipliers.iter().any(|y| y.is_negative()) {
            return false;
        }
        let mut combo = vec![BigInt::zero(); sys.n_vars];
        let mut rhs = BigInt::zero();
        for (y, row) in self.inequality_multipliers.iter().zip(&sys.inequalities) {
            if y.is_zero() {
                continue;
            }
            for (c, &a) in combo.iter_mut().zip(&row.coeffs) {
                *c += y * a;
            }
            rhs += y * row.rhs;
        }
        for (z, row) in self.equality_multipliers.iter().zip(&sys.equalities) {
            if z.is_zero() {
                continue;
            }
            for (c, &a) in combo.iter_mut().zip(row) {
                *c += z * a;
            }
        }
        combo.iter().all(Zero::is_zero) && rhs.is_negative()
    }

    /// Indices of inequality rows with a nonzero multiplier.
    pub fn support(&self) -> Vec<usize> {
        self.inequality_multipliers
            .iter()
            .enumerate()
            .filter(|(_, y)| !y.is_zero())
            .map(|(i, _)| i)
            .collect()
    }
}

/// Serializes big integers as decimal strings so certificates survive JSON
/// round trips without precision loss.
mod bigint_vec {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        let strings: Vec<String> = v.iter().map(ToString::to_string).collect();
        strings.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        let strings = Vec::<String>::deserialize(d)?;
        strings
            .iter()
            .map(|x| x.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verifies_textbook_certificate() {
        // x ≤ -1 and -x ≤ 0 is infeasible: 1·(x ≤ -1) + 1·(-x ≤ 0) gives 0 ≤ -1.
        let mut sys = LinearSystem::new(1);
        sys.push_inequality(vec![1], -1);
        sys.push_inequality(vec![-1], 0);
        let cert = FarkasCertificate {
            inequality_multipliers: vec![1.into(), 1.into()],
            equality_multipliers: vec![],
        };
        assert!(cert.verify(&sys));
        let bad = FarkasCertificate {
            inequality_multipliers: vec![1.into(), 2.into()],
            equality_multipliers: vec![],
        };
        assert!(!bad.verify(&sys));
        let negative = FarkasCertificate {
            inequality_multipliers: vec![(-1).into(), (-1).into()],
            equality_multipliers: vec![],
        };
        assert!(!negative.verify(&sys));
    }

    #[test]
    fn equality_multipliers_are_free() {
        // x + y = 0, x ≤ -1, y ≤ 0: (x ≤ -1) + (y ≤ 0) - (x + y = 0) gives 0 ≤ -1.
        let mut sys = LinearSystem::new(2);
        sys.push_equality(vec![1, 1]);
        sys.push_inequality(vec![1, 0], -1);
        sys.push_inequality(vec![0, 1], 0);
        let cert = FarkasCertificate {
            inequality_multipliers: vec![1.into(), 1.into()],
            equality_multipliers: vec![(-1).into()],
        };
        assert!(cert.verify(&sys));
    }
}
