//! The monomial hyperplane arrangement inside a normalization cone.
//!
//! Every monomial `m` defines the hyperplane `μ(m, ·) = 0` in weight space.
//! Together with the cone walls these hyperplanes cut the cone into faces on
//! which the sign of every `μ(m, ·)` is constant. Sets of the form
//! `M_{≤0}(w)` or `M_{<0}(w)` only depend on the face containing `w`, so the
//! finitely many faces describe every family at once:
//!
//! * `M_{≤0}` only grows when moving to the boundary of a face, so its
//!   inclusion-maximal values are attained on the rays;
//! * `M_{<0}` only grows when moving into a larger face, so its maximal
//!   values are attained on full-dimensional faces.
//!
//! Weights are parametrized by an integer basis of the space
//! `{w : Σw = 0, w ⊥ L}` for an optional lattice `L` (a stabilizer acting
//! trivially), and rays are computed as one-dimensional intersections of
//! hyperplanes in that space.

use std::collections::{BTreeMap, BTreeSet};

use gitstab_core::lattice::integer_kernel;
use gitstab_core::{primitive, Lattice, NormalizationCone, SupportSet, WeightVector};
use rayon::prelude::*;

use crate::error::FamilyError;

/// A face of the arrangement: the signs of `μ(m, ·)` on its relative
/// interior, one per universe monomial, and an interior point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    /// `-1`, `0` or `1` for every monomial of the universe, in order.
    pub signs: Vec<i8>,
    /// A primitive integer point in the relative interior (a sum of rays).
    pub witness: WeightVector,
}

/// The arrangement of monomial hyperplanes of a universe inside a cone.
#[derive(Clone, Debug)]
pub struct Arrangement {
    universe: SupportSet,
    cone: NormalizationCone,
    orthogonal_to: Vec<Vec<i64>>,
    basis: Vec<Vec<i64>>,
    rays: Vec<WeightVector>,
}

/// Determinant of a square integer matrix (fraction-free elimination).
fn det(mut m: Vec<Vec<i128>>) -> i128 {
    let k = m.len();
    if k == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for c in 0..k {
        let Some(p) = (c..k).find(|&r| m[r][c] != 0) else {
            return 0;
        };
        if p != c {
            m.swap(p, c);
            sign = -sign;
        }
        for r in c + 1..k {
            for j in c + 1..k {
                m[r][j] = (m[r][j] * m[c][c] - m[r][c] * m[c][j]) / prev;
            }
            m[r][c] = 0;
        }
        prev = m[c][c];
    }
    sign * m[k - 1][k - 1]
}

/// The line `{x : rows · x = 0}` for `d − 1` rows in dimension `d`, as the
/// vector of signed maximal minors; `None` if the rows are dependent.
fn kernel_line(rows: &[&Vec<i64>], d: usize) -> Option<Vec<i64>> {
    let mut out = Vec::with_capacity(d);
    for skip in 0..d {
        let minor: Vec<Vec<i128>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != skip)
                    .map(|(_, &x)| i128::from(x))
                    .collect()
            })
            .collect();
        let v = det(minor);
        out.push(if skip % 2 == 0 { v } else { -v });
    }
    if out.iter().all(|&x| x == 0) {
        return None;
    }
    let narrow: Vec<i64> = out
        .into_iter()
        .map(|x| i64::try_from(x).expect("ray coordinates fit in 64 bits"))
        .collect();
    Some(primitive(&narrow))
}

/// Primitive representative with positive first nonzero entry.
fn normalize_hyperplane(h: Vec<i64>) -> Option<Vec<i64>> {
    let p = primitive(&h);
    let first = *p.iter().find(|&&x| x != 0)?;
    Some(if first < 0 { p.iter().map(|x| -x).collect() } else { p })
}

fn combinations(n: usize, k: usize, first: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, f);
            cur.pop();
        }
    }
    let mut cur = vec![first];
    rec(first + 1, n, k, &mut cur, f);
}

impl Arrangement {
    /// Builds the arrangement of `universe` in `cone`, optionally modulo a
    /// lattice of weights acting trivially.
    pub fn new(
        universe: &SupportSet,
        cone: &NormalizationCone,
        quotient: Option<&Lattice>,
    ) -> Result<Self, FamilyError> {
        let n = cone.n_vars();
        if universe.n_vars() != n {
            return Err(gitstab_core::CoreError::LengthMismatch {
                expected: n,
                found: universe.n_vars(),
            }
            .into());
        }
        let orthogonal_to: Vec<Vec<i64>> =
            quotient.map_or_else(Vec::new, |l| l.basis().to_vec());
        let mut eqs = vec![vec![1i64; n]];
        eqs.extend(orthogonal_to.iter().cloned());
        let basis = integer_kernel(&eqs, n);
        let mut arr = Arrangement {
            universe: universe.clone(),
            cone: cone.clone(),
            orthogonal_to,
            basis,
            rays: Vec::new(),
        };
        arr.rays = arr.compute_rays();
        Ok(arr)
    }

    /// Dimension of the weight space.
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// The universe whose hyperplanes are arranged.
    pub fn universe(&self) -> &SupportSet {
        &self.universe
    }

    /// The cone.
    pub fn cone(&self) -> &NormalizationCone {
        &self.cone
    }

    /// Rows `l` with `w · l = 0` imposed on every weight.
    pub fn orthogonal_to(&self) -> &[Vec<i64>] {
        &self.orthogonal_to
    }

    /// The rays (one-dimensional faces), sorted, as primitive weights.
    pub fn rays(&self) -> &[WeightVector] {
        &self.rays
    }

    fn to_t(&self, a: &[i64]) -> Vec<i64> {
        self.basis
            .iter()
            .map(|b| a.iter().zip(b).map(|(x, y)| x * y).sum())
            .collect()
    }

    fn lift_t(&self, t: &[i64]) -> Vec<i64> {
        let n = self.cone.n_vars();
        let mut w = vec![0i64; n];
        for (tk, b) in t.iter().zip(&self.basis) {
            for (x, y) in w.iter_mut().zip(b) {
                *x += tk * y;
            }
        }
        w
    }

    fn compute_rays(&self) -> Vec<WeightVector> {
        let d = self.dimension();
        if d == 0 {
            return Vec::new();
        }
        let n = self.cone.n_vars();
        let mut hyperplanes: BTreeSet<Vec<i64>> = BTreeSet::new();
        for m in self.universe.iter() {
            if let Some(h) = normalize_hyperplane(self.to_t(&m.to_i64())) {
                hyperplanes.insert(h);
            }
        }
        for (i, j) in self.cone.walls() {
            let mut a = vec![0i64; n];
            a[i] = 1;
            a[j] = -1;
            if let Some(h) = normalize_hyperplane(self.to_t(&a)) {
                hyperplanes.insert(h);
            }
        }
        let hyperplanes: Vec<Vec<i64>> = hyperplanes.into_iter().collect();
        let lines: BTreeSet<Vec<i64>> = if d == 1 {
            BTreeSet::from([vec![1]])
        } else {
            (0..hyperplanes.len())
                .into_par_iter()
                .map(|first| {
                    let mut found = BTreeSet::new();
                    combinations(hyperplanes.len(), d - 1, first, &mut |idx| {
                        let rows: Vec<&Vec<i64>> = idx.iter().map(|&i| &hyperplanes[i]).collect();
                        if let Some(c) = kernel_line(&rows, d) {
                            if let Some(c) = normalize_hyperplane(c) {
                                found.insert(c);
                            }
                        }
                    });
                    found
                })
                .reduce(BTreeSet::new, |mut a, b| {
                    a.extend(b);
                    a
                })
        };
        let mut rays = BTreeSet::new();
        for c in lines {
            for s in [1i64, -1] {
                let t: Vec<i64> = c.iter().map(|x| s * x).collect();
                let w = primitive(&self.lift_t(&t));
                if w.iter().any(|&x| x != 0) && self.cone.contains(&w) {
                    rays.insert(w);
                }
            }
        }
        rays.into_iter()
            .map(|w| WeightVector::new(w).expect("basis vectors sum to zero"))
            .collect()
    }

    /// Sign of `μ(m, w)` for every universe monomial.
    pub fn signs(&self, w: &[i64]) -> Vec<i8> {
        self.universe
            .iter()
            .map(|m| m.dot(w).signum() as i8)
            .collect()
    }

    /// All faces of positive dimension, found as conformal joins of ray sign
    /// vectors, in a deterministic order (sorted by sign vector).
    ///
    /// The cone restricted to the weight space is pointed whenever the
    /// hyperplanes meet only in the origin (always the case for a universe
    /// equal to its own invariant span), so every face is the positive hull
    /// of its rays and its sign vector is the join of theirs.
    pub fn faces(&self) -> Vec<Face> {
        let ray_data: Vec<(Vec<i8>, Vec<i64>)> = self
            .rays
            .iter()
            .map(|r| (self.signs(r.weights()), r.weights().to_vec()))
            .collect();
        let mut seen: BTreeMap<Vec<i8>, Vec<i64>> = BTreeMap::new();
        for (s, w) in &ray_data {
            seen.entry(s.clone()).or_insert_with(|| w.clone());
        }
        let mut frontier: Vec<Vec<i8>> = seen.keys().cloned().collect();
        while !frontier.is_empty() {
            let mut next: BTreeMap<Vec<i8>, Vec<i64>> = BTreeMap::new();
            for f in &frontier {
                let fw = seen[f].clone();
                for (s, w) in &ray_data {
                    if f.iter().zip(s).any(|(a, b)| a * b < 0) {
                        continue;
                    }
                    let g: Vec<i8> = f.iter().zip(s).map(|(&a, &b)| if a != 0 { a } else { b }).collect();
                    if g == *f || seen.contains_key(&g) || next.contains_key(&g) {
                        continue;
                    }
                    let sum: Vec<i64> = fw.iter().zip(w).map(|(x, y)| x + y).collect();
                    next.insert(g, primitive(&sum));
                }
            }
            frontier = next.keys().cloned().collect();
            seen.extend(next);
        }
        seen.into_iter()
            .map(|(signs, w)| Face {
                signs,
                witness: WeightVector::new(w).expect("sums of rays sum to zero"),
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use gitstab_core::enumerate_monomials;

    #[test]
    fn determinant_and_kernel() {
        assert_eq!(det(vec![vec![2, 1], vec![1, 3]]), 5);
        assert_eq!(det(vec![vec![0, 1, 2], vec![1, 0, 3], vec![4, -3, 8]]), -2);
        let r1 = vec![1, 0, 0];
        let r2 = vec![0, 1, 0];
        assert_eq!(kernel_line(&[&r1, &r2], 3), Some(vec![0, 0, 1]));
        assert_eq!(kernel_line(&[&r1, &r1], 3), None);
    }

    #[test]
    fn chamber_rays_are_fundamental_weights() {
        let empty = SupportSet::empty(5, 5);
        let arr = Arrangement::new(&empty, &NormalizationCone::standard(5), None).unwrap();
        let rays: Vec<Vec<i64>> = arr.rays().iter().map(|r| r.weights().to_vec()).collect();
        assert_eq!(
            rays,
            vec![
                vec![1, 1, 1, 1, -4],
                vec![2, 2, 2, -3, -3],
                vec![3, 3, -2, -2, -2],
                vec![4, -1, -1, -1, -1],
            ]
        );
    }

    #[test]
    fn binary_arrangement() {
        let u = enumerate_monomials(2, 4).unwrap();
        let arr = Arrangement::new(&u, &NormalizationCone::standard(2), None).unwrap();
        assert_eq!(arr.rays().len(), 1);
        assert_eq!(arr.rays()[0].weights(), &[1, -1]);
        assert_eq!(arr.faces().len(), 1);
        let torus = Arrangement::new(&u, &NormalizationCone::torus(2), None).unwrap();
        assert_eq!(torus.rays().len(), 2);
    }
}
