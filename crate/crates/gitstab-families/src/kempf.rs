//! The optimal (Kempf) destabilizing weight of a support over the full
//! diagonal torus.
//!
//! Shift every exponent vector to the sum-zero hyperplane, `p_m = n·m − d·1`.
//! A weight `w` has `μ(m, w) < 0` for all `m ∈ S` exactly when the origin is
//! not in `conv{p_m}`; in that case the weight maximizing
//! `−max_m μ(m, w) / |w|` is `−x*`, where `x*` is the point of the hull
//! closest to the origin. `x*` is computed exactly with Wolfe's
//! minimum-norm-point algorithm over the rationals.

use gitstab_core::{Permutation, SupportSet, WeightVector};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

type Q = BigRational;

fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn combine(points: &[Vec<Q>], idx: &[usize], coeffs: &[Q]) -> Vec<Q> {
    let n = points[0].len();
    let mut out = vec![Q::zero(); n];
    for (&i, c) in idx.iter().zip(coeffs) {
        for (o, p) in out.iter_mut().zip(&points[i]) {
            *o += c * p;
        }
    }
    out
}

/// Affine coefficients of the point of `aff{points[idx]}` closest to the
/// origin; `None` if the points are affinely dependent.
fn affine_min_norm(points: &[Vec<Q>], idx: &[usize]) -> Option<Vec<Q>> {
    let k = idx.len();
    // [G 1; 1ᵀ 0] [α; t] = [0; 1]
    let mut m: Vec<Vec<Q>> = (0..=k)
        .map(|r| {
            let mut row: Vec<Q> = (0..=k)
                .map(|c| match (r < k, c < k) {
                    (true, true) => dot(&points[idx[r]], &points[idx[c]]),
                    (false, false) => Q::zero(),
                    _ => Q::one(),
                })
                .collect();
            row.push(if r == k { Q::one() } else { Q::zero() });
            row
        })
        .collect();
    for c in 0..=k {
        let pivot = (c..=k).find(|&r| !m[r][c].is_zero())?;
        m.swap(c, pivot);
        let inv = m[c][c].recip();
        for x in m[c].iter_mut() {
            *x *= &inv;
        }
        for r in 0..=k {
            if r != c && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                for j in c..=k + 1 {
                    let v = &f * &m[c][j];
                    m[r][j] -= v;
                }
            }
        }
    }
    Some(m.iter().take(k).map(|row| row[k + 1].clone()).collect())
}

/// The point of `conv(points)` closest to the origin.
fn min_norm_point(points: &[Vec<Q>]) -> Vec<Q> {
    let norm = |p: &Vec<Q>| dot(p, p);
    let start = (0..points.len())
        .min_by(|&a, &b| norm(&points[a]).cmp(&norm(&points[b])))
        .expect("nonempty point set");
    let mut idx = vec![start];
    let mut lambda = vec![Q::one()];
    let mut x = points[start].clone();
    loop {
        let xx = dot(&x, &x);
        if xx.is_zero() {
            return x;
        }
        let (j, xj) = points
            .iter()
            .enumerate()
            .map(|(j, p)| (j, dot(&x, p)))
            .min_by(|a, b| a.1.cmp(&b.1))
            .expect("nonempty point set");
        if xj >= xx || idx.contains(&j) {
            return x;
        }
        idx.push(j);
        lambda.push(Q::zero());
        loop {
            let alpha = affine_min_norm(points, &idx)
                .expect("Wolfe's corral stays affinely independent");
            if alpha.iter().all(Signed::is_positive) {
                lambda = alpha;
                break;
            }
            let theta = lambda
                .iter()
                .zip(&alpha)
                .filter(|(_, a)| !a.is_positive())
                .map(|(l, a)| l / (l - a))
                .min()
                .expect("some coefficient is non-positive");
            let mixed: Vec<Q> = lambda
                .iter()
                .zip(&alpha)
                .map(|(l, a)| (Q::one() - &theta) * l + &theta * a)
                .collect();
            let keep: Vec<bool> = mixed.iter().map(Signed::is_positive).collect();
            idx = idx.iter().zip(&keep).filter(|(_, k)| **k).map(|(i, _)| *i).collect();
            lambda = mixed.into_iter().filter(Signed::is_positive).collect();
        }
        x = combine(points, &idx, &lambda);
    }
}

/// The optimal destabilizing weight of `s` over the whole sum-zero torus,
/// if `s` is torus-unstable (some weight has `μ < 0` on every monomial).
///
/// The result is primitive and unique; `None` when the origin lies in the
/// convex hull of the shifted exponents.
pub fn optimal_destabilizer(s: &SupportSet) -> Option<WeightVector> {
    if s.is_empty() {
        return None;
    }
    let n = s.n_vars() as i64;
    let d = i64::from(s.degree());
    let points: Vec<Vec<Q>> = s
        .iter()
        .map(|m| {
            m.exponents()
                .iter()
                .map(|&e| Q::from_integer(BigInt::from(n * i64::from(e) - d)))
                .collect()
        })
        .collect();
    let x = min_norm_point(&points);
    if x.iter().all(Zero::is_zero) {
        return None;
    }
    let lcm = x
        .iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let w: Vec<i64> = x
        .iter()
        .map(|q| {
            let v = -(q.numer() * (&lcm / q.denom()));
            i64::try_from(v).expect("optimal weight fits in i64")
        })
        .collect();
    WeightVector::new(w).ok()
}

/// The permutation moving `w` into the standard chamber (non-increasing
/// entries), stable on ties.
pub fn sorting_permutation(w: &WeightVector) -> Permutation {
    let mut images: Vec<usize> = (0..w.n_vars()).collect();
    images.sort_by_key(|&i| std::cmp::Reverse(w.weights()[i]));
    Permutation::new(images).expect("a sorted index list is a permutation")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_monomials() {
        let s = SupportSet::parse("x0^5", 5).unwrap();
        let w = optimal_destabilizer(&s).unwrap();
        assert_eq!(w.weights(), &[-4, 1, 1, 1, 1]);
        let p = sorting_permutation(&w);
        assert_eq!(p.apply(w.weights()), vec![1, 1, 1, 1, -4]);
        assert_eq!(s.permuted(&p), SupportSet::parse("x4^5", 5).unwrap());
    }

    #[test]
    fn segment_and_balanced_supports() {
        // x4·x0^4 and x4·x1^4: the hull's closest point is the midpoint.
        let s = SupportSet::parse("x4*x0^4 + x4*x1^4", 5).unwrap();
        assert_eq!(optimal_destabilizer(&s).unwrap().weights(), &[-1, -1, 1, 1, 0]);
        let fermat = SupportSet::parse("x0^5+x1^5+x2^5+x3^5+x4^5", 5).unwrap();
        assert!(optimal_destabilizer(&fermat).is_none());
        let central = SupportSet::parse("x0*x1*x2*x3*x4", 5).unwrap();
        assert!(optimal_destabilizer(&central).is_none());
    }

    #[test]
    fn triangle_with_interior_projection() {
        // Closest point inside a 2-face, not at a vertex or edge.
        let s = SupportSet::parse("x0^3 + x1^3 + x2^3", 4).unwrap();
        assert_eq!(optimal_destabilizer(&s).unwrap().weights(), &[-1, -1, -1, 3]);
    }
}
