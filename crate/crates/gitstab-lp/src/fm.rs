//! Fraction-free Fourier–Motzkin elimination with Farkas history.
//!
//! Rows are `a · t ≤ b` with big-integer coefficients. Every derived row
//! remembers the non-negative integer combination of input rows that
//! produced it, so a contradiction `0 ≤ b < 0` immediately yields a Farkas
//! certificate. Feasible systems keep their projection chain, which supports
//! exact back-substitution and bounded integer enumeration.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A set of input-row indices.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn singleton(len: usize, i: usize) -> Self {
        let mut v = vec![0u64; len.div_ceil(64).max(1)];
        v[i / 64] |= 1 << (i % 64);
        Bits(v)
    }

    fn union(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a | b).collect())
    }

    fn count(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }
}

#[derive(Clone, Debug)]
struct Row {
    a: Vec<BigInt>,
    b: BigInt,
    /// Sparse non-negative combination of input rows, sorted by index.
    hist: Vec<(usize, BigInt)>,
    anc: Bits,
}

impl Row {
    /// Divides the row (and its history) by the common content.
    fn normalize(&mut self) {
        let mut g = self.b.abs();
        for x in self.a.iter().chain(self.hist.iter().map(|(_, c)| c)) {
            g = g.gcd(x);
            if g.is_one() {
                return;
            }
        }
        if g.is_zero() || g.is_one() {
            return;
        }
        for x in self.a.iter_mut() {
            *x = &*x / &g;
        }
        self.b = &self.b / &g;
        for (_, c) in self.hist.iter_mut() {
            *c = &*c / &g;
        }
    }

    fn is_constant(&self) -> bool {
        self.a.iter().all(Zero::is_zero)
    }

    /// Positive combination `p·self + q·other` of two rows.
    fn combine(&self, p: &BigInt, other: &Row, q: &BigInt) -> Row {
        let a = self
            .a
            .iter()
            .zip(&other.a)
            .map(|(x, y)| x * p + y * q)
            .collect();
        let b = &self.b * p + &other.b * q;
        let mut hist = Vec::with_capacity(self.hist.len() + other.hist.len());
        let (mut i, mut j) = (0, 0);
        while i < self.hist.len() || j < other.hist.len() {
            let take_left = j == other.hist.len()
                || (i < self.hist.len() && self.hist[i].0 < other.hist[j].0);
            let take_right = i == self.hist.len()
                || (j < other.hist.len() && other.hist[j].0 < self.hist[i].0);
            if take_left {
                hist.push((self.hist[i].0, &self.hist[i].1 * p));
                i += 1;
            } else if take_right {
                hist.push((other.hist[j].0, &other.hist[j].1 * q));
                j += 1;
            } else {
                hist.push((self.hist[i].0, &self.hist[i].1 * p + &other.hist[j].1 * q));
                i += 1;
                j += 1;
            }
        }
        let mut row = Row {
            a,
            b,
            hist,
            anc: self.anc.union(&other.anc),
        };
        row.normalize();
        row
    }
}

/// One stage of the projection chain: the rows that mention `var`, taken from
/// the system just before `var` was eliminated. All other variables in these
/// rows are eliminated later, hence assigned earlier during back-substitution.
#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub var: usize,
    pub rows: Vec<(Vec<BigInt>, BigInt)>,
}

/// The projection chain of a feasible system, in elimination order.
#[derive(Clone, Debug)]
pub(crate) struct Projection {
    pub n_vars: usize,
    pub levels: Vec<Level>,
}

/// Result of running elimination to completion.
#[derive(Clone, Debug)]
pub(crate) enum Outcome {
    /// Non-negative integer multipliers (sparse, by input row) whose
    /// combination reads `0 ≤ b` with `b < 0`.
    Infeasible(Vec<(usize, BigInt)>),
    Feasible(Projection),
}

/// Eliminates every variable of `a · t ≤ b`.
///
/// With `prune`, Chernikov's rule and dominated-row removal keep the systems
/// small; both preserve the projection exactly, so the chain stays valid.
///
/// When `last` is given, that variable is eliminated after all others, so
/// the first level of back-substitution bounds it alone.
pub(crate) fn eliminate(
    n_vars: usize,
    input: &[(Vec<BigInt>, BigInt)],
    prune: bool,
    last: Option<usize>,
) -> Outcome {
    let m = input.len();
    let mut rows: Vec<Row> = Vec::with_capacity(m);
    for (i, (a, b)) in input.iter().enumerate() {
        debug_assert_eq!(a.len(), n_vars);
        let mut row = Row {
            a: a.clone(),
            b: b.clone(),
            hist: vec![(i, BigInt::one())],
            anc: Bits::singleton(m, i),
        };
        row.normalize();
        rows.push(row);
    }
    let mut remaining: Vec<usize> = (0..n_vars).collect();
    let mut levels = Vec::with_capacity(n_vars);
    let mut eliminated = 0u32;
    loop {
        // Constant rows are either contradictions or vacuous.
        let mut kept = Vec::with_capacity(rows.len());
        for row in rows {
            if row.is_constant() {
                if row.b.is_negative() {
                    return Outcome::Infeasible(row.hist);
                }
            } else {
                kept.push(row);
            }
        }
        rows = if prune { dedup(kept) } else { kept };
        if remaining.is_empty() {
            break;
        }
        let candidates: Vec<usize> = match last {
            Some(l) if remaining.len() > 1 => {
                remaining.iter().copied().filter(|&v| v != l).collect()
            }
            _ => remaining.clone(),
        };
        let var = pick_variable(&rows, &candidates);
        remaining.retain(|&v| v != var);
        eliminated += 1;
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for row in rows {
            if row.a[var].is_positive() {
                pos.push(row);
            } else if row.a[var].is_negative() {
                neg.push(row);
            } else {
                rest.push(row);
            }
        }
        levels.push(Level {
            var,
            rows: pos
                .iter()
                .chain(&neg)
                .map(|r| (r.a.clone(), r.b.clone()))
                .collect(),
        });
        for p in &pos {
            for q in &neg {
                if prune && p.anc.union(&q.anc).count() > eliminated + 1 {
                    continue;
                }
                let row = p.combine(&-&q.a[var], q, &p.a[var]);
                rest.push(row);
            }
        }
        rows = rest;
    }
    Outcome::Feasible(Projection { n_vars, levels })
}

/// The variable whose elimination creates the fewest new rows.
fn pick_variable(rows: &[Row], remaining: &[usize]) -> usize {
    let mut best = (usize::MAX, remaining[0]);
    for &v in remaining {
        let p = rows.iter().filter(|r| r.a[v].is_positive()).count();
        let n = rows.iter().filter(|r| r.a[v].is_negative()).count();
        let cost = (p * n + rows.len()).saturating_sub(p + n);
        if cost < best.0 {
            best = (cost, v);
        }
    }
    best.1
}

/// Keeps, for each direction of `a`, only the tightest bound.
fn dedup(rows: Vec<Row>) -> Vec<Row> {
    let mut best: HashMap<Vec<BigInt>, usize> = HashMap::new();
    let mut out: Vec<Option<Row>> = Vec::with_capacity(rows.len());
    let mut content: Vec<BigInt> = Vec::with_capacity(rows.len());
    for row in rows {
        let g = row.a.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        let key: Vec<BigInt> = row.a.iter().map(|x| x / &g).collect();
        match best.get(&key) {
            Some(&k) => {
                let old = out[k].as_ref().expect("kept row");
                // Compare b/g with b_old/g_old.
                if &row.b * &content[k] < &old.b * &g {
                    out[k] = Some(row);
                    content[k] = g;
                }
            }
            None => {
                best.insert(key, out.len());
                out.push(Some(row));
                content.push(g);
            }
        }
    }
    out.into_iter().flatten().collect()
}

/// Interval of values for `level.var` allowed by the level's rows given the
/// values already fixed in `x`. `None` bounds are infinite.
fn bounds(level: &Level, x: &[BigRational]) -> (Option<BigRational>, Option<BigRational>) {
    let v = level.var;
    let mut lo: Option<BigRational> = None;
    let mut hi: Option<BigRational> = None;
    for (a, b) in &level.rows {
        let mut s = BigRational::from_integer(b.clone());
        for (j, c) in a.iter().enumerate() {
            if j != v && !c.is_zero() {
                s -= &x[j] * BigRational::from_integer(c.clone());
            }
        }
        let bound = s / BigRational::from_integer(a[v].clone());
        if a[v].is_positive() {
            if hi.as_ref().map_or(true, |h| bound < *h) {
                hi = Some(bound);
            }
        } else if lo.as_ref().map_or(true, |l| bound > *l) {
            lo = Some(bound);
        }
    }
    (lo, hi)
}

impl Projection {
    /// Exact rational back-substitution. Picks, at each level, the integer
    /// closest to zero inside the interval when there is one, otherwise the
    /// lower end. Returns `None` only if the chain is inconsistent.
    pub fn back_substitute(&self) -> Option<Vec<BigRational>> {
        let mut x = vec![BigRational::zero(); self.n_vars];
        for level in self.levels.iter().rev() {
            let (lo, hi) = bounds(level, &x);
            if let (Some(l), Some(h)) = (&lo, &hi) {
                if l > h {
                    return None;
                }
            }
            let lo_int = lo.as_ref().map(|l| l.ceil());
            let hi_int = hi.as_ref().map(|h| h.floor());
            let zero = BigRational::zero();
            let value = match (&lo_int, &hi_int) {
                (Some(l), Some(h)) if l > h => lo.clone().expect("finite lower bound"),
                (Some(l), _) if *l > zero => l.clone(),
                (_, Some(h)) if *h < zero => h.clone(),
                _ => zero,
            };
            x[level.var] = value;
        }
        Some(x)
    }

    /// Calls `visit` on every integer point of the polyhedron, which must be
    /// bounded in every variable that occurs in the chain.
    pub fn for_each_integer_point(&self, visit: &mut dyn FnMut(&[BigInt])) {
        let mut x = vec![BigRational::zero(); self.n_vars];
        let mut xi = vec![BigInt::zero(); self.n_vars];
        self.dfs(self.levels.len(), &mut x, &mut xi, visit);
    }

    fn dfs(
        &self,
        depth: usize,
        x: &mut Vec<BigRational>,
        xi: &mut Vec<BigInt>,
        visit: &mut dyn FnMut(&[BigInt]),
    ) {
        if depth == 0 {
            visit(xi);
            return;
        }
        let level = &self.levels[depth - 1];
        let (lo, hi) = bounds(level, x);
        let (Some(lo), Some(hi)) = (lo, hi) else {
            panic!("integer enumeration over an unbounded polyhedron");
        };
        let mut v = lo.ceil().to_integer();
        let end = hi.floor().to_integer();
        while v <= end {
            x[level.var] = BigRational::from_integer(v.clone());
            xi[level.var] = v.clone();
            self.dfs(depth - 1, x, xi, visit);
            v += 1;
        }
        x[level.var] = BigRational::zero();
        xi[level.var] = BigInt::zero();
    }

    /// The interval of the variable eliminated last, over the whole
    /// polyhedron. `None` bounds are infinite; an empty chain has no
    /// variables and yields `(None, None)`.
    pub fn last_interval(&self) -> (Option<BigRational>, Option<BigRational>) {
        match self.levels.last() {
            Some(level) => bounds(level, &vec![BigRational::zero(); self.n_vars]),
            None => (None, None),
        }
    }
}
