//! Integer lattices of weight vectors: kernels, stabilizers and invariant spans.
//!
//! All bases are returned in row Hermite normal form (positive pivots,
//! entries above a pivot reduced into `[0, pivot)`), so results are
//! canonical and independent of the order in which generators were supplied.

use serde::{Deserialize, Serialize};

use crate::cone::NormalizationCone;
use crate::error::CoreError;
use crate::monomial::ExponentVector;
use crate::support::SupportSet;
use crate::weight::WeightVector;

/// A saturated sublattice of `ℤ^n` given by a basis in Hermite normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Lattice {
    n_vars: usize,
    basis: Vec<Vec<i64>>,
}

fn narrow(x: i128) -> i64 {
    i64::try_from(x).expect("lattice entry exceeds 64 bits")
}

/// `a*x + b*y` with overflow treated as a bug at the sizes handled here.
fn lin(a: i128, x: i128, b: i128, y: i128) -> i128 {
    a.checked_mul(x)
        .and_then(|p| b.checked_mul(y).and_then(|q| p.checked_add(q)))
        .expect("integer overflow in lattice reduction")
}

/// A `ℤ`-basis of `{x ∈ ℤ^n : A x = 0}` for the integer matrix with the given
/// rows, in Hermite normal form.
///
/// The kernel is computed with unimodular column operations (`A U = [H | 0]`),
/// so the returned vectors generate every integer solution, not just a
/// rational basis.
pub fn integer_kernel(rows: &[Vec<i64>], n: usize) -> Vec<Vec<i64>> {
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| {
            assert_eq!(r.len(), n, "row length must equal the number of columns");
            r.iter().map(|&x| i128::from(x)).collect()
        })
        .collect();
    // u[j] is column j of the unimodular transform, stored as a row.
    let mut u: Vec<Vec<i128>> = (0..n)
        .map(|j| (0..n).map(|i| i128::from(i == j)).collect())
        .collect();
    let mut col = 0;
    for r in 0..a.len() {
        if col == n {
            break;
        }
        // Euclid on the entries a[r][col..] using column operations.
        loop {
            let mut best: Option<usize> = None;
            for j in col..n {
                if a[r][j] != 0 && best.map_or(true, |b| a[r][j].abs() < a[r][b].abs()) {
                    best = Some(j);
                }
            }
            let Some(p) = best else { break };
            swap_cols(&mut a, &mut u, col, p);
            let mut done = true;
            for j in col + 1..n {
                if a[r][j] != 0 {
                    let q = a[r][j].div_euclid(a[r][col]);
                    add_col(&mut a, &mut u, j, col, -q);
                    if a[r][j] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                col += 1;
                break;
            }
        }
    }
    let kernel: Vec<Vec<i64>> = u[col..]
        .iter()
        .map(|v| v.iter().map(|&x| narrow(x)).collect())
        .collect();
    hermite_rows(kernel)
}

fn swap_cols(a: &mut [Vec<i128>], u: &mut [Vec<i128>], i: usize, j: usize) {
    if i == j {
        return;
    }
    for row in a.iter_mut() {
        row.swap(i, j);
    }
    u.swap(i, j);
}

/// Column operation `col_j += q * col_k` on both `a` and the transform.
fn add_col(a: &mut [Vec<i128>], u: &mut [Vec<i128>], j: usize, k: usize, q: i128) {
    for row in a.iter_mut() {
        row[j] = lin(1, row[j], q, row[k]);
    }
    let src = u[k].clone();
    for (x, s) in u[j].iter_mut().zip(src) {
        *x = lin(1, *x, q, s);
    }
}

/// Row Hermite normal form of the lattice generated by `rows` (zero rows dropped).
pub fn hermite_rows(rows: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    let Some(n) = rows.first().map(Vec::len) else {
        return Vec::new();
    };
    let mut m: Vec<Vec<i128>> = rows
        .into_iter()
        .map(|r| r.into_iter().map(i128::from).collect())
        .collect();
    let mut top = 0;
    for c in 0..n {
        if top == m.len() {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for i in top..m.len() {
                if m[i][c] != 0 && best.map_or(true, |b| m[i][c].abs() < m[b][c].abs()) {
                    best = Some(i);
                }
            }
            let Some(p) = best else { break };
            m.swap(top, p);
            let mut done = true;
            for i in top + 1..m.len() {
                if m[i][c] != 0 {
                    let q = m[i][c].div_euclid(m[top][c]);
                    let pivot = m[top].clone();
                    for (x, y) in m[i].iter_mut().zip(&pivot) {
                        *x = lin(1, *x, -q, *y);
                    }
                    if m[i][c] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                if m[top][c] < 0 {
                    for x in m[top].iter_mut() {
                        *x = -*x;
                    }
                }
                let pivot = m[top].clone();
                for i in 0..top {
                    let q = m[i][c].div_euclid(pivot[c]);
                    if q != 0 {
                        for (x, y) in m[i].iter_mut().zip(&pivot) {
                            *x = lin(1, *x, -q, *y);
                        }
                    }
                }
                top += 1;
                break;
            }
        }
    }
    m.truncate(top);
    m.into_iter()
        .map(|r| r.into_iter().map(narrow).collect())
        .collect()
}

impl Lattice {
    /// The lattice generated by the given integer vectors.
    pub fn generated_by(n_vars: usize, generators: Vec<Vec<i64>>) -> Result<Self, CoreError> {
        for g in &generators {
            if g.len() != n_vars {
                return Err(CoreError::LengthMismatch {
                    expected: n_vars,
                    found: g.len(),
                });
            }
        }
        Ok(Lattice {
            n_vars,
            basis: hermite_rows(generators),
        })
    }

    /// The zero lattice.
    pub fn zero(n_vars: usize) -> Self {
        Lattice {
            n_vars,
            basis: Vec::new(),
        }
    }

    /// Number of coordinates of the ambient space.
    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    /// Rank of the lattice.
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Basis rows in Hermite normal form.
    pub fn basis(&self) -> &[Vec<i64>] {
        &self.basis
    }

    /// The basis as weight vectors (only meaningful for sum-zero lattices).
    pub fn weight_basis(&self) -> Vec<WeightVector> {
        self.basis
            .iter()
            .filter_map(|b| WeightVector::new(b.clone()).ok())
            .collect()
    }

    /// Exact membership test for an integer vector.
    pub fn contains(&self, w: &[i64]) -> bool {
        if w.len() != self.n_vars {
            return false;
        }
        let mut r: Vec<i128> = w.iter().map(|&x| i128::from(x)).collect();
        for row in &self.basis {
            let p = row.iter().position(|&x| x != 0).expect("HNF rows are nonzero");
            let piv = i128::from(row[p]);
            if r[p] % piv != 0 {
                return false;
            }
            let q = r[p] / piv;
            for (x, &y) in r.iter_mut().zip(row) {
                *x = lin(1, *x, -q, i128::from(y));
            }
        }
        r.iter().all(|&x| x == 0)
    }

    /// Coordinates not separated by any lattice vector, grouped into blocks
    /// (each sorted, ordered by smallest element).
    pub fn unseparated_blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for i in 0..self.n_vars {
            match blocks
                .iter_mut()
                .find(|b| self.basis.iter().all(|row| row[b[0]] == row[i]))
            {
                Some(b) => b.push(i),
                None => blocks.push(vec![i]),
            }
        }
        blocks
    }

    /// The centralizer chamber: blocks of unseparated coordinates.
    pub fn centralizer_cone(&self) -> NormalizationCone {
        NormalizationCone::from_blocks(self.n_vars, self.unseparated_blocks())
            .expect("unseparated classes partition the coordinates")
    }

    /// A basis of the sum-zero integer vectors orthogonal to this lattice —
    /// the weights that act nontrivially modulo the lattice.
    pub fn sum_zero_complement(&self) -> Vec<Vec<i64>> {
        let mut rows = vec![vec![1; self.n_vars]];
        rows.extend(self.basis.iter().cloned());
        integer_kernel(&rows, self.n_vars)
    }
}

/// The diagonal one-parameter subgroups fixing the generic point of `S`:
/// `{w : Σw = 0 and μ(m, w) is the same for all m ∈ S}`.
///
/// The common value of `μ` need not be zero. The result is saturated, so
/// membership of any integer vector can be decided exactly.
pub fn stabilizer_lattice(s: &SupportSet) -> Result<Lattice, CoreError> {
    let m0 = s.iter().next().ok_or(CoreError::EmptySupport)?;
    let n = s.n_vars();
    let mut rows = vec![vec![1i64; n]];
    let base = m0.to_i64();
    for m in s.iter().skip(1) {
        rows.push(m.to_i64().iter().zip(&base).map(|(a, b)| a - b).collect());
    }
    Ok(Lattice {
        n_vars: n,
        basis: integer_kernel(&rows, n),
    })
}

/// The monomials of `universe` on which every stabilizer of `S` has the same
/// weight as on `S`: the affine hull of `S` intersected with `universe`.
///
/// For an `H`-invariant family this is the invariant subspace `V^H`.
pub fn invariant_span(s: &SupportSet, universe: &SupportSet) -> Result<SupportSet, CoreError> {
    let lat = stabilizer_lattice(s)?;
    let m0 = s.iter().next().ok_or(CoreError::EmptySupport)?;
    let targets: Vec<i64> = lat.basis().iter().map(|l| m0.dot(l)).collect();
    Ok(universe.filter(|m: &ExponentVector| {
        lat.basis().iter().zip(&targets).all(|(l, &t)| m.dot(l) == t)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::enumerate_monomials;

    #[test]
    fn kernel_is_saturated() {
        // x + 2y = 0 over Z: generated by (2, -1), not (4, -2).
        let k = integer_kernel(&[vec![1, 2]], 2);
        assert_eq!(k, vec![vec![2, -1]]);
        let k = integer_kernel(&[vec![2, 4, 6]], 3);
        assert_eq!(k.len(), 2);
        let lat = Lattice::generated_by(3, k).unwrap();
        assert!(lat.contains(&[1, 1, -1]));
        assert!(lat.contains(&[2, -1, 0]));
        assert!(!lat.contains(&[1, 0, 0]));
    }

    #[test]
    fn hermite_is_canonical() {
        let a = hermite_rows(vec![vec![1, 0, -1], vec![0, 1, -1]]);
        let b = hermite_rows(vec![vec![1, 1, -2], vec![2, 1, -3], vec![0, 0, 0]]);
        assert_eq!(a, b);
    }

    #[test]
    fn stabilizer_of_single_monomial_is_everything() {
        let s = SupportSet::from_exponents(&[&[1, 1, 1, 1, 1]]);
        assert_eq!(stabilizer_lattice(&s).unwrap().rank(), 4);
    }

    #[test]
    fn stabilizer_of_d_family() {
        let u = enumerate_monomials(5, 5).unwrap();
        let s = SupportSet::parse("x0*q4(x1,x2,x3,x4)", 5).unwrap();
        let lat = stabilizer_lattice(&s).unwrap();
        assert_eq!(lat.basis(), &[vec![4, -1, -1, -1, -1]]);
        assert_eq!(invariant_span(&s, &u).unwrap(), s);
        assert_eq!(lat.unseparated_blocks(), vec![vec![0], vec![1, 2, 3, 4]]);
        let comp = lat.sum_zero_complement();
        assert_eq!(comp.len(), 3);
        for c in comp {
            assert_eq!(c[0], 0);
        }
    }
}
