//! Feasibility queries over a normalization cone and their certificates.

use std::collections::BTreeSet;

use gitstab_core::lattice::integer_kernel;
use gitstab_core::{primitive, ExponentVector, Lattice, NormalizationCone, WeightVector};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::LpError;
use crate::fm::{eliminate, Outcome};
use crate::system::{FarkasCertificate, Inequality, LinearSystem};

/// Which weight vectors are wanted: sign conditions on `μ(m, w)` for chosen
/// monomials, over the weights of a normalization cone.
///
/// The weights range over `{w ∈ ℤ^n : Σw = 0, w · l = 0 for every row l of
/// `orthogonal_to`}` intersected with the cone. The orthogonality rows are
/// used to work modulo a lattice of weights that act trivially (a
/// stabilizer), so that "nonzero" means nonzero in the quotient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FeasibilityQuery {
    /// The cone of admissible weights.
    pub cone: NormalizationCone,
    /// Monomials required to satisfy `μ ≤ 0`.
    pub nonpositive: BTreeSet<ExponentVector>,
    /// Monomials required to satisfy `μ ≤ −1` (strictly negative).
    pub strict: BTreeSet<ExponentVector>,
    /// Monomials required to satisfy `μ = 0`.
    pub zero: BTreeSet<ExponentVector>,
    /// Monomials required to satisfy `μ ≥ 1` (strictly positive).
    pub positive: BTreeSet<ExponentVector>,
    /// Additional linear rows `a · w ≤ b` (e.g. comparisons of two
    /// monomials).
    pub extra: Vec<Inequality>,
    /// Extra homogeneous equalities `l · w = 0`.
    pub orthogonal_to: Vec<Vec<i64>>,
    /// Whether `w = 0` is excluded.
    pub nontrivial: bool,
}

/// One branch of a query: the nontrivial condition is split into "block
/// leader `k` has weight ≥ 1", one branch per block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Branch {
    /// The coordinate forced to be `≥ 1`, if the query is nontrivial.
    pub leader: Option<usize>,
    /// The linear system of this branch.
    pub system: LinearSystem,
}

/// Infeasibility of one branch.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InfeasibleBranch {
    /// The leader forced to be `≥ 1` in this branch, if any.
    pub leader: Option<usize>,
    /// Farkas multipliers over the branch system's rows.
    pub farkas: FarkasCertificate,
}

/// The answer to a [`FeasibilityQuery`], checkable with
/// [`verify_certificate`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Certificate {
    /// A primitive integer weight satisfying every condition.
    Feasible {
        /// The witness.
        weight: WeightVector,
    },
    /// A Farkas certificate for every branch.
    Infeasible {
        /// One certificate per branch, in branch order.
        branches: Vec<InfeasibleBranch>,
    },
}

impl Certificate {
    /// The witness, if feasible.
    pub fn weight(&self) -> Option<&WeightVector> {
        match self {
            Certificate::Feasible { weight } => Some(weight),
            Certificate::Infeasible { .. } => None,
        }
    }

    /// Whether this is a feasibility answer.
    pub fn is_feasible(&self) -> bool {
        matches!(self, Certificate::Feasible { .. })
    }
}

impl FeasibilityQuery {
    /// A query with no monomial conditions over `cone`.
    pub fn new(cone: NormalizationCone) -> Self {
        FeasibilityQuery {
            cone,
            nonpositive: BTreeSet::new(),
            strict: BTreeSet::new(),
            zero: BTreeSet::new(),
            positive: BTreeSet::new(),
            extra: Vec::new(),
            orthogonal_to: Vec::new(),
            nontrivial: false,
        }
    }

    /// Adds `μ(m, w) ≤ 0` conditions.
    pub fn nonpositive<'a>(mut self, ms: impl IntoIterator<Item = &'a ExponentVector>) -> Self {
        self.nonpositive.extend(ms.into_iter().cloned());
        self
    }

    /// Adds `μ(m, w) ≤ −1` conditions.
    pub fn strict<'a>(mut self, ms: impl IntoIterator<Item = &'a ExponentVector>) -> Self {
        self.strict.extend(ms.into_iter().cloned());
        self
    }

    /// Adds `μ(m, w) = 0` conditions.
    pub fn zero<'a>(mut self, ms: impl IntoIterator<Item = &'a ExponentVector>) -> Self {
        self.zero.extend(ms.into_iter().cloned());
        self
    }

    /// Adds `μ(m, w) ≥ 1` conditions.
    pub fn positive<'a>(mut self, ms: impl IntoIterator<Item = &'a ExponentVector>) -> Self {
        self.positive.extend(ms.into_iter().cloned());
        self
    }

    /// Adds a general row `a · w ≤ b`.
    pub fn row(mut self, a: Vec<i64>, b: i64) -> Self {
        self.extra.push(Inequality::new(a, b));
        self
    }

    /// Restricts to weights orthogonal to every basis vector of `lattice`.
    pub fn modulo(mut self, lattice: &Lattice) -> Self {
        self.orthogonal_to.extend(lattice.basis().iter().cloned());
        self
    }

    /// Requires `w ≠ 0`.
    pub fn nontrivial(mut self, yes: bool) -> Self {
        self.nontrivial = yes;
        self
    }

    fn n_vars(&self) -> usize {
        self.cone.n_vars()
    }

    fn monomials(&self) -> impl Iterator<Item = &ExponentVector> {
        self.nonpositive
            .iter()
            .chain(&self.strict)
            .chain(&self.zero)
            .chain(&self.positive)
    }

    /// Checks that all monomials and equality rows match the cone's shape.
    pub fn validate(&self) -> Result<(), LpError> {
        let n = self.n_vars();
        let mut degree = None;
        for m in self.monomials() {
            if m.n_vars() != n {
                return Err(LpError::Shape {
                    expected: n,
                    found: m.n_vars(),
                });
            }
            match degree {
                None => degree = Some(m.degree()),
                Some(d) if d != m.degree() => {
                    return Err(LpError::Query(format!(
                        "monomial {m} has degree {}, expected {d}",
                        m.degree()
                    )))
                }
                Some(_) => {}
            }
        }
        if let Some(l) = self
            .orthogonal_to
            .iter()
            .chain(self.extra.iter().map(|r| &r.coeffs))
            .find(|l| l.len() != n)
        {
            return Err(LpError::Shape {
                expected: n,
                found: l.len(),
            });
        }
        Ok(())
    }

    /// Whether an integer weight satisfies every condition of the query.
    pub fn holds_at(&self, w: &[i64]) -> bool {
        let mu = |m: &ExponentVector| m.dot(w);
        w.len() == self.n_vars()
            && self.cone.contains(w)
            && self
                .orthogonal_to
                .iter()
                .all(|l| l.iter().zip(w).map(|(a, b)| a * b).sum::<i64>() == 0)
            && self.nonpositive.iter().all(|m| mu(m) <= 0)
            && self.strict.iter().all(|m| mu(m) <= -1)
            && self.zero.iter().all(|m| mu(m) == 0)
            && self.positive.iter().all(|m| mu(m) >= 1)
            && self.extra.iter().all(|r| r.holds_at(w))
            && (!self.nontrivial || w.iter().any(|&x| x != 0))
    }

    /// The branch systems, in a fixed row layout:
    ///
    /// 1. one row `w_j − w_i ≤ 0` per cone wall `(i, j)`;
    /// 2. `m · w ≤ 0` for every nonpositive monomial (sorted);
    /// 3. `m · w ≤ −1` for every strict monomial;
    /// 4. `m · w ≤ 0` and `−m · w ≤ 0` for every zero monomial;
    /// 5. `−m · w ≤ −1` for every positive monomial;
    /// 6. the extra rows, in insertion order;
    /// 7. for nontrivial queries, `−w_k ≤ −1` for the branch leader `k`.
    ///
    /// Equalities are `Σw = 0` followed by the orthogonality rows.
    pub fn branches(&self) -> Vec<Branch> {
        let n = self.n_vars();
        let mut base = LinearSystem::new(n);
        base.push_equality(vec![1; n]);
        for l in &self.orthogonal_to {
            base.push_equality(l.clone());
        }
        for (i, j) in self.cone.walls() {
            let mut a = vec![0; n];
            a[j] = 1;
            a[i] = -1;
            base.push_inequality(a, 0);
        }
        for m in &self.nonpositive {
            base.push_inequality(m.to_i64(), 0);
        }
        for m in &self.strict {
            base.push_inequality(m.to_i64(), -1);
        }
        for m in &self.zero {
            base.push_inequality(m.to_i64(), 0);
            base.push_inequality(m.to_i64().iter().map(|x| -x).collect(), 0);
        }
        for m in &self.positive {
            base.push_inequality(m.to_i64().iter().map(|x| -x).collect(), -1);
        }
        for r in &self.extra {
            base.push_inequality(r.coeffs.clone(), r.rhs);
        }
        if !self.nontrivial {
            return vec![Branch {
                leader: None,
                system: base,
            }];
        }
        self.cone
            .leaders()
            .into_iter()
            .map(|k| {
                let mut system = base.clone();
                let mut a = vec![0; n];
                a[k] = -1;
                system.push_inequality(a, -1);
                Branch {
                    leader: Some(k),
                    system,
                }
            })
            .collect()
    }

    /// Indices of inequality rows that are not implied by another row plus
    /// the cone walls (via monomial dominance). Feeding only these rows to
    /// the eliminator keeps it small; certificates still refer to the full
    /// row layout.
    fn essential_rows(&self) -> Vec<usize> {
        let walls = self.cone.walls().len();
        // (monomial, bound, is_upper, row index)
        let mut rows: Vec<(&ExponentVector, i64, bool, usize)> = Vec::new();
        let mut idx = walls;
        for m in &self.nonpositive {
            rows.push((m, 0, true, idx));
            idx += 1;
        }
        for m in &self.strict {
            rows.push((m, -1, true, idx));
            idx += 1;
        }
        for m in &self.zero {
            rows.push((m, 0, true, idx));
            rows.push((m, 0, false, idx + 1));
            idx += 2;
        }
        for m in &self.positive {
            rows.push((m, 1, false, idx));
            idx += 1;
        }
        let extra = idx..idx + self.extra.len();
        let total = extra.end;
        let dominated = |i: usize| {
            let (m, c, upper, _) = rows[i];
            rows.iter().enumerate().any(|(j, &(m2, c2, upper2, _))| {
                if j == i || upper2 != upper {
                    return false;
                }
                let same = m2 == m;
                if upper {
                    // μ(m) ≤ μ(m2) ≤ c2 ≤ c; ties broken by position.
                    c2 <= c
                        && (!same || c2 < c || j < i)
                        && (same || self.cone.dominates(m, m2).unwrap_or(false))
                } else {
                    // μ(m) ≥ μ(m2) ≥ c2 ≥ c.
                    c2 >= c
                        && (!same || c2 > c || j < i)
                        && (same || self.cone.dominates(m2, m).unwrap_or(false))
                }
            })
        };
        let mut keep: Vec<usize> = (0..walls).collect();
        keep.extend(
            (0..rows.len())
                .filter(|&i| !dominated(i))
                .map(|i| rows[i].3),
        );
        keep.extend(extra);
        keep.sort_unstable();
        // The leader row (if any) comes last in the layout.
        if self.nontrivial {
            keep.push(total);
        }
        keep
    }
}

/// An integer basis of the weights allowed by the equalities, as rows.
fn weight_basis(sys: &LinearSystem) -> Vec<Vec<i64>> {
    integer_kernel(&sys.equalities, sys.n_vars)
}

/// `a · (Σ t_k b_k) ≤ rhs` rewritten in the coordinates `t`.
fn to_t_space(a: &[i64], basis: &[Vec<i64>]) -> Vec<BigInt> {
    basis
        .iter()
        .map(|b| BigInt::from(a.iter().zip(b).map(|(x, y)| x * y).sum::<i64>()))
        .collect()
}

fn lcm_of_denominators<'a>(xs: impl IntoIterator<Item = &'a BigRational>) -> BigInt {
    xs.into_iter()
        .fold(BigInt::one(), |l, x| l.lcm(x.denom()))
}

/// Solves `Σ_j z_j e_j = target` for rational `z`, given that a solution
/// exists. Free variables are set to zero.
fn solve_combination(eqs: &[Vec<i64>], target: &[BigInt]) -> Option<Vec<BigRational>> {
    let n = target.len();
    let k = eqs.len();
    // Augmented matrix: n equations (coordinates), k unknowns.
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigRational> = eqs
                .iter()
                .map(|e| BigRational::from_integer(BigInt::from(e[i])))
                .collect();
            row.push(BigRational::from_integer(target[i].clone()));
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..k {
        let Some(p) = (r..n).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    let mut z = vec![BigRational::zero(); k];
    for (i, &c) in pivots.iter().enumerate() {
        z[c] = m[i][k].clone();
    }
    Some(z)
}

/// Converts an eliminator history over the essential rows into a Farkas
/// certificate over the full branch system.
fn farkas_from_history(
    sys: &LinearSystem,
    active: &[usize],
    hist: &[(usize, BigInt)],
) -> Option<FarkasCertificate> {
    let mut y = vec![BigInt::zero(); sys.inequalities.len()];
    for (i, c) in hist {
        y[active[*i]] += c;
    }
    // v = Σ y_i a_i must be cancelled by the equalities.
    let mut v = vec![BigInt::zero(); sys.n_vars];
    for (yi, row) in y.iter().zip(&sys.inequalities) {
        if !yi.is_zero() {
            for (acc, &a) in v.iter_mut().zip(&row.coeffs) {
                *acc += yi * a;
            }
        }
    }
    let neg: Vec<BigInt> = v.iter().map(|x| -x).collect();
    let z = solve_combination(&sys.equalities, &neg)?;
    let scale = lcm_of_denominators(&z);
    let cert = FarkasCertificate {
        inequality_multipliers: y.into_iter().map(|x| x * &scale).collect(),
        equality_multipliers: z
            .into_iter()
            .map(|x| (x * BigRational::from_integer(scale.clone())).to_integer())
            .collect(),
    };
    cert.verify(sys).then_some(cert)
}

/// Turns a rational point in `t`-coordinates into a primitive integer weight.
fn weight_from_t(t: &[BigRational], basis: &[Vec<i64>], n: usize) -> Option<Vec<i64>> {
    let scale = lcm_of_denominators(t);
    let ti: Vec<BigInt> = t
        .iter()
        .map(|x| (x * BigRational::from_integer(scale.clone())).to_integer())
        .collect();
    let w = combine_basis(&ti, basis, n);
    let w: Option<Vec<i64>> = w.iter().map(ToPrimitive::to_i64).collect();
    w.map(|w| primitive(&w))
}

fn combine_basis(t: &[BigInt], basis: &[Vec<i64>], n: usize) -> Vec<BigInt> {
    let mut w = vec![BigInt::zero(); n];
    for (tk, b) in t.iter().zip(basis) {
        if !tk.is_zero() {
            for (x, &y) in w.iter_mut().zip(b) {
                *x += tk * y;
            }
        }
    }
    w
}

enum BranchResult {
    Feasible(Vec<i64>),
    Infeasible(FarkasCertificate),
}

fn solve_branch(
    branch: &Branch,
    active: &[usize],
    basis: &[Vec<i64>],
) -> Result<BranchResult, LpError> {
    let sys = &branch.system;
    let rows: Vec<(Vec<BigInt>, BigInt)> = active
        .iter()
        .map(|&i| {
            let r = &sys.inequalities[i];
            (to_t_space(&r.coeffs, basis), BigInt::from(r.rhs))
        })
        .collect();
    for prune in [true, false] {
        match eliminate(basis.len(), &rows, prune, None) {
            Outcome::Infeasible(hist) => {
                if let Some(cert) = farkas_from_history(sys, active, &hist) {
                    return Ok(BranchResult::Infeasible(cert));
                }
            }
            Outcome::Feasible(proj) => {
                if let Some(w) = proj
                    .back_substitute()
                    .and_then(|t| weight_from_t(&t, basis, sys.n_vars))
                {
                    if sys.holds_at(&w) {
                        return Ok(BranchResult::Feasible(w));
                    }
                }
            }
        }
    }
    Err(LpError::Internal(
        "elimination result failed exact re-verification".into(),
    ))
}

/// Decides the query, returning a certified answer.
///
/// A feasible answer carries some valid primitive witness (not necessarily
/// the canonical one of [`find_weight`]); this is the cheap entry point for
/// yes/no questions such as dominance or maximality checks.
pub fn decide(q: &FeasibilityQuery) -> Result<Certificate, LpError> {
    q.validate()?;
    let active = q.essential_rows();
    let branches = q.branches();
    let basis = weight_basis(&branches[0].system);
    let mut infeasible = Vec::with_capacity(branches.len());
    for branch in &branches {
        match solve_branch(branch, &active, &basis)? {
            BranchResult::Feasible(w) => {
                return Ok(Certificate::Feasible {
                    weight: WeightVector::new(w).map_err(|e| LpError::Internal(e.to_string()))?,
                })
            }
            BranchResult::Infeasible(farkas) => infeasible.push(InfeasibleBranch {
                leader: branch.leader,
                farkas,
            }),
        }
    }
    Ok(Certificate::Infeasible {
        branches: infeasible,
    })
}

/// Whether the query has a solution (with certificate checking).
pub fn is_feasible(q: &FeasibilityQuery) -> Result<bool, LpError> {
    decide(q).map(|c| c.is_feasible())
}

/// Decides the query and, when feasible, returns the canonical witness: the
/// primitive solution of smallest max-norm, ties broken towards the
/// lexicographically greatest vector.
pub fn find_weight(q: &FeasibilityQuery) -> Result<Certificate, LpError> {
    let first = decide(q)?;
    let Certificate::Feasible { weight } = &first else {
        return Ok(first);
    };
    let upper = weight.max_norm();
    let active = q.essential_rows();
    let branches = q.branches();
    let basis = weight_basis(&branches[0].system);
    let mut best: Option<(i64, Vec<i64>)> = None;
    for branch in &branches {
        let limit = best.as_ref().map_or(upper, |b| b.0);
        if let Some((r, w)) = min_norm_in_branch(branch, &active, &basis, limit)? {
            let better = match &best {
                None => true,
                Some((br, bw)) => r < *br || (r == *br && w > *bw),
            };
            if better {
                best = Some((r, w));
            }
        }
    }
    let (_, w) = best.ok_or_else(|| LpError::Internal("witness search found no point".into()))?;
    debug_assert!(q.holds_at(&w));
    Ok(Certificate::Feasible {
        weight: WeightVector::new(w).map_err(|e| LpError::Internal(e.to_string()))?,
    })
}

/// Smallest max-norm `r ≤ limit` with an integer point in the branch, and the
/// lexicographically greatest such point.
fn min_norm_in_branch(
    branch: &Branch,
    active: &[usize],
    basis: &[Vec<i64>],
    limit: i64,
) -> Result<Option<(i64, Vec<i64>)>, LpError> {
    let sys = &branch.system;
    let n = sys.n_vars;
    let d = basis.len();
    let rows: Vec<(Vec<BigInt>, BigInt)> = active
        .iter()
        .map(|&i| {
            let r = &sys.inequalities[i];
            (to_t_space(&r.coeffs, basis), BigInt::from(r.rhs))
        })
        .collect();
    // Coordinate functionals w_i = Σ_k t_k b_k[i].
    let coord: Vec<Vec<BigInt>> = (0..n)
        .map(|i| basis.iter().map(|b| BigInt::from(b[i])).collect())
        .collect();
    // Lower bound on the norm from the real relaxation: add a variable r
    // with −r ≤ w_i ≤ r and minimise it.
    let mut relaxed = Vec::with_capacity(rows.len() + 2 * n);
    for (a, b) in &rows {
        let mut a = a.clone();
        a.push(BigInt::zero());
        relaxed.push((a, b.clone()));
    }
    for c in &coord {
        let mut up = c.clone();
        up.push(-BigInt::one());
        relaxed.push((up, BigInt::zero()));
        let mut down: Vec<BigInt> = c.iter().map(|x| -x).collect();
        down.push(-BigInt::one());
        relaxed.push((down, BigInt::zero()));
    }
    let start = match eliminate(d + 1, &relaxed, true, Some(d)) {
        Outcome::Infeasible(_) => return Ok(None),
        Outcome::Feasible(p) => p
            .last_interval()
            .0
            .map_or(0, |lo| lo.ceil().to_integer().to_i64().unwrap_or(i64::MAX))
            .max(0),
    };
    for r in start..=limit {
        let mut boxed = rows.clone();
        for c in &coord {
            boxed.push((c.clone(), BigInt::from(r)));
            boxed.push((c.iter().map(|x| -x).collect(), BigInt::from(r)));
        }
        let Outcome::Feasible(p) = eliminate(d, &boxed, true, None) else {
            continue;
        };
        let mut best: Option<Vec<i64>> = None;
        p.for_each_integer_point(&mut |t| {
            let w: Option<Vec<i64>> = combine_basis(t, basis, n)
                .iter()
                .map(ToPrimitive::to_i64)
                .collect();
            if let Some(w) = w {
                if sys.holds_at(&w) && best.as_ref().map_or(true, |b| w > *b) {
                    best = Some(w);
                }
            }
        });
        if let Some(w) = best {
            return Ok(Some((r, w)));
        }
    }
    Ok(None)
}

/// Re-checks a certificate against the query with exact arithmetic.
///
/// A feasible certificate must satisfy every condition (including `w ≠ 0`
/// for nontrivial queries); an infeasible one must refute every branch.
pub fn verify_certificate(q: &FeasibilityQuery, c: &Certificate) -> bool {
    if q.validate().is_err() {
        return false;
    }
    match c {
        Certificate::Feasible { weight } => q.holds_at(weight.weights()),
        Certificate::Infeasible { branches } => {
            let expected = q.branches();
            expected.len() == branches.len()
                && expected
                    .iter()
                    .zip(branches)
                    .all(|(e, b)| e.leader == b.leader && b.farkas.verify(&e.system))
        }
    }
}

/// Convenience: a nontrivial query with the given non-positive monomials.
pub fn nonpositive_query<'a>(
    cone: &NormalizationCone,
    ms: impl IntoIterator<Item = &'a ExponentVector>,
) -> FeasibilityQuery {
    FeasibilityQuery::new(cone.clone())
        .nonpositive(ms)
        .nontrivial(true)
}
