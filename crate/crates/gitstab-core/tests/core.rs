use gitstab_core::{
    enumerate_monomials, invariant_span, mu_support, stabilizer_lattice, ExponentVector, NormalizationCone,
    Permutation, SupportSet, WeightVector,
};
use proptest::prelude::*;

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn universe_sizes() {
    for n in 1..=5usize {
        for d in 1..=6u32 {
            let u = enumerate_monomials(n, d).unwrap();
            assert_eq!(u.len() as u64, binomial(n as u64 + d as u64 - 1, d as u64));
            assert!(u.iter().all(|m| m.degree() == d));
        }
    }
    assert!(enumerate_monomials(0, 5).is_err());
    assert!(enumerate_monomials(5, 0).is_err());
}

#[test]
fn shorthand_expansion() {
    let q = SupportSet::parse("q{2,3}(x0,x1 | x2,x3,x4)", 5).unwrap();
    assert_eq!(q.len(), 3 * 10);
    let f = SupportSet::parse("x4*q4(x0,x1,x2,x3,x4)", 5).unwrap();
    assert_eq!(f.len(), 70);
    let fermat = SupportSet::parse("x0^5+x1^5+x2^5+x3^5+x4^5", 5).unwrap();
    assert_eq!(fermat.len(), 5);
    assert!(SupportSet::parse("x0^5 + x1^4", 5).is_err());
    assert!(SupportSet::parse_with_degree("x0^4", 5, 5).is_err());
}

#[test]
fn support_json_validates_shape() {
    let s = SupportSet::parse("x0^3*x3^2 + x1^5", 5).unwrap();
    let json = serde_json::to_string(&s).unwrap();
    let back: SupportSet = serde_json::from_str(&json).unwrap();
    assert_eq!(back, s);
    let bad = r#"{"n_vars":2,"degree":3,"monomials":[[1,1]]}"#;
    assert!(serde_json::from_str::<SupportSet>(bad).is_err());
}

#[test]
fn weights_must_sum_to_zero() {
    assert!(WeightVector::new(vec![1, 2, 0, 0, 0]).is_err());
    let w = WeightVector::new(vec![4, 4, 4, -6, -6]).unwrap();
    assert_eq!(w.weights(), &[2, 2, 2, -3, -3]);
}

#[test]
fn lattice_of_the_central_monomial_is_everything() {
    let s = SupportSet::from_exponents(&[&[1, 1, 1, 1, 1]]);
    let lat = stabilizer_lattice(&s).unwrap();
    assert_eq!(lat.rank(), 4);
    assert!(lat.contains(&[3, -1, 0, 0, -2]));
    let u = enumerate_monomials(5, 5).unwrap();
    // V^H of the full torus is spanned by the central monomial alone.
    assert_eq!(invariant_span(&s, &u).unwrap(), s);
}

#[test]
fn lattice_membership_is_exact() {
    // x0^2 x1^3 and x0^3 x1^2 force a0 = a1.
    let s = SupportSet::from_exponents(&[&[2, 3, 0, 0, 0], &[3, 2, 0, 0, 0]]);
    let lat = stabilizer_lattice(&s).unwrap();
    assert_eq!(lat.rank(), 3);
    assert!(lat.contains(&[1, 1, 0, 0, -2]));
    assert!(!lat.contains(&[1, 0, 0, 0, -1]));
    for b in lat.basis() {
        let w = WeightVector::new(b.clone()).unwrap();
        let values: Vec<i64> = s.iter().map(|m| m.dot(w.weights())).collect();
        assert!(values.windows(2).all(|p| p[0] == p[1]));
    }
}

#[test]
fn permutation_action() {
    let p = Permutation::new(vec![1, 2, 3, 4, 0]).unwrap();
    let v = [10, 20, 30, 40, 50];
    assert_eq!(p.apply(&v), vec![20, 30, 40, 50, 10]);
    assert_eq!(p.inverse().apply(&p.apply(&v)), v.to_vec());
    assert!(Permutation::new(vec![0, 0, 1]).is_err());
}

fn sample_chamber_weights() -> Vec<Vec<i64>> {
    // Non-negative combinations of the fundamental chamber rays.
    let rays = [
        [4, -1, -1, -1, -1],
        [3, 3, -2, -2, -2],
        [2, 2, 2, -3, -3],
        [1, 1, 1, 1, -4],
    ];
    let mut out = Vec::new();
    for c in 0..81u32 {
        let coef = [c % 3, (c / 3) % 3, (c / 9) % 3, (c / 27) % 3];
        let w: Vec<i64> = (0..5)
            .map(|k| (0..4).map(|r| i64::from(coef[r]) * rays[r][k]).sum())
            .collect();
        out.push(w);
    }
    out
}

proptest! {
    #[test]
    fn dominance_is_sound(i in 0usize..126, j in 0usize..126) {
        let u = enumerate_monomials(5, 5).unwrap();
        let cone = NormalizationCone::standard(5);
        let (a, b) = (&u.as_slice()[i], &u.as_slice()[j]);
        if cone.dominates(a, b).unwrap() {
            for w in sample_chamber_weights() {
                prop_assert!(a.dot(&w) <= b.dot(&w));
            }
        } else {
            // Some chamber ray separates them.
            prop_assert!(sample_chamber_weights().iter().any(|w| a.dot(w) > b.dot(w)));
        }
    }

    #[test]
    fn mu_is_max_over_support(picks in proptest::collection::btree_set(0usize..126, 1..8), c in 0usize..81) {
        let u = enumerate_monomials(5, 5).unwrap();
        let s = SupportSet::new(5, 5, picks.iter().map(|&i| u.as_slice()[i].clone())).unwrap();
        let w = sample_chamber_weights()[c].clone();
        let value = s.iter().map(|m: &ExponentVector| m.dot(&w)).max().unwrap();
        if w.iter().any(|&x| x != 0) {
            let wv = WeightVector::new(w.clone()).unwrap();
            let scale = w.iter().zip(wv.weights()).find(|(_, &b)| b != 0).map(|(&a, &b)| a / b).unwrap();
            prop_assert_eq!(mu_support(&s, &wv).unwrap() * scale, value);
        }
    }
}
