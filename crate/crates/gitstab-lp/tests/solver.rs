use gitstab_core::{enumerate_monomials, ExponentVector, Lattice, NormalizationCone, WeightVector};
use gitstab_lp::{
    decide, find_weight, nonpositive_query, verify_certificate, Certificate, FeasibilityQuery,
};

fn m(v: &[u32]) -> ExponentVector {
    ExponentVector::from_slice(v)
}

fn witness(c: &Certificate) -> Vec<i64> {
    c.weight().expect("feasible").weights().to_vec()
}

#[test]
fn single_monomial_witness() {
    let q = nonpositive_query(&NormalizationCone::standard(5), [&m(&[1, 4, 0, 0, 0])]);
    let c = find_weight(&q).unwrap();
    assert!(verify_certificate(&q, &c));
    assert_eq!(witness(&c), vec![4, -1, -1, -1, -1]);
}

#[test]
fn identically_zero_weight_cannot_be_negative() {
    let one = m(&[1, 1, 1, 1, 1]);
    for cone in [
        NormalizationCone::standard(5),
        NormalizationCone::torus(5),
        NormalizationCone::from_block_sizes(&[2, 3]).unwrap(),
    ] {
        let q = FeasibilityQuery::new(cone)
            .nonpositive([&one])
            .strict([&one]);
        let c = find_weight(&q).unwrap();
        assert!(!c.is_feasible());
        assert!(verify_certificate(&q, &c));
    }
}

#[test]
fn three_top_monomials_share_a_destabilizer() {
    let tops = [m(&[1, 0, 4, 0, 0]), m(&[3, 0, 0, 0, 2]), m(&[2, 0, 2, 0, 1])];
    let q = nonpositive_query(&NormalizationCone::standard(5), &tops);
    let c = find_weight(&q).unwrap();
    assert!(verify_certificate(&q, &c));
    let printed = WeightVector::new(vec![4, 4, -1, -1, -6]).unwrap();
    assert!(q.holds_at(printed.weights()));
    for t in &tops {
        assert_eq!(t.dot(printed.weights()), 0);
    }
    // The canonical witness is the printed vector itself.
    assert_eq!(witness(&c), printed.weights());
}

#[test]
fn table_vectors_verify_as_certificates() {
    let family = gitstab_core::SupportSet::parse("x4*q4(x0,x1,x2,x3,x4)", 5).unwrap();
    let q = nonpositive_query(&NormalizationCone::standard(5), family.iter());
    let c = Certificate::Feasible {
        weight: WeightVector::new(vec![1, 1, 1, 1, -4]).unwrap(),
    };
    assert!(verify_certificate(&q, &c));
    let zero = Certificate::Feasible {
        weight: WeightVector::zero(5),
    };
    assert!(!verify_certificate(&q, &zero));
}

#[test]
fn infeasible_certificates_verify_and_tampering_is_detected() {
    // Nothing in the standard chamber makes x0^5 non-positive.
    let q = nonpositive_query(&NormalizationCone::standard(5), [&m(&[5, 0, 0, 0, 0])]);
    let c = decide(&q).unwrap();
    assert!(!c.is_feasible());
    assert!(verify_certificate(&q, &c));
    let Certificate::Infeasible { mut branches } = c else {
        unreachable!()
    };
    branches[0].farkas.inequality_multipliers[0] += 1;
    assert!(!verify_certificate(&q, &Certificate::Infeasible { branches }));
}

#[test]
fn quotient_by_a_stabilizer() {
    // Modulo the stabilizer of x0*q4(x1..x4), the weights live on x1..x4.
    let lat = Lattice::generated_by(5, vec![vec![4, -1, -1, -1, -1]]).unwrap();
    let cone = lat.centralizer_cone();
    let q = FeasibilityQuery::new(cone)
        .modulo(&lat)
        .nonpositive([&m(&[1, 0, 4, 0, 0])])
        .nontrivial(true);
    let c = find_weight(&q).unwrap();
    assert!(verify_certificate(&q, &c));
    let w = witness(&c);
    assert_eq!(w[0], 0);
    assert_eq!(w, vec![0, 1, 0, 0, -1]);
}

#[test]
fn zero_dimensional_space() {
    let lat = Lattice::generated_by(
        3,
        vec![vec![1, -1, 0], vec![0, 1, -1]],
    )
    .unwrap();
    let q = FeasibilityQuery::new(NormalizationCone::torus(3))
        .modulo(&lat)
        .nontrivial(true);
    let c = find_weight(&q).unwrap();
    assert!(!c.is_feasible());
    assert!(verify_certificate(&q, &c));
    let trivial = FeasibilityQuery::new(NormalizationCone::torus(3)).modulo(&lat);
    assert_eq!(witness(&find_weight(&trivial).unwrap()), vec![0, 0, 0]);
}

#[test]
fn sign_conditions_of_a_face() {
    // μ = 0 on x0 x4 (...), negative and positive sides prescribed.
    let cone = NormalizationCone::standard(5);
    let q = FeasibilityQuery::new(cone)
        .zero([&m(&[1, 1, 1, 1, 1]), &m(&[1, 0, 3, 0, 1])])
        .strict([&m(&[0, 0, 5, 0, 0])])
        .positive([&m(&[5, 0, 0, 0, 0])])
        .nontrivial(true);
    let c = find_weight(&q).unwrap();
    assert!(verify_certificate(&q, &c));
    let w = witness(&c);
    assert_eq!(m(&[1, 0, 3, 0, 1]).dot(&w), 0);
    assert!(m(&[0, 0, 5, 0, 0]).dot(&w) < 0);
}

#[test]
fn json_round_trip() {
    let q = nonpositive_query(&NormalizationCone::standard(5), [&m(&[5, 0, 0, 0, 0])]);
    let c = decide(&q).unwrap();
    let text = serde_json::to_string(&c).unwrap();
    let back: Certificate = serde_json::from_str(&text).unwrap();
    assert_eq!(back, c);
    let qt = serde_json::to_string(&q).unwrap();
    let qb: FeasibilityQuery = serde_json::from_str(&qt).unwrap();
    assert_eq!(qb, q);
}

/// Standard-chamber integer weights with entries in `[-r, r]`, ordered by
/// max-norm, then lexicographically decreasing.
fn chamber_points(r: i64) -> Vec<Vec<i64>> {
    let mut pts = Vec::new();
    for a in -r..=r {
        for b in -r..=a {
            for c in -r..=b {
                for d in -r..=c {
                    let e = -(a + b + c + d);
                    if e <= d && e >= -r {
                        pts.push(vec![a, b, c, d, e]);
                    }
                }
            }
        }
    }
    pts.sort_by(|x, y| {
        let nx = x.iter().map(|v| v.abs()).max();
        let ny = y.iter().map(|v| v.abs()).max();
        nx.cmp(&ny).then_with(|| y.cmp(x))
    });
    pts
}

#[test]
fn single_monomial_queries_match_brute_force() {
    let pts = chamber_points(30);
    let universe = enumerate_monomials(5, 5).unwrap();
    let cone = NormalizationCone::standard(5);
    for mono in universe.iter() {
        for strict in [false, true] {
            let base = FeasibilityQuery::new(cone.clone()).nontrivial(true);
            let q = if strict {
                base.strict([mono])
            } else {
                base.nonpositive([mono])
            };
            let bound = if strict { -1 } else { 0 };
            let brute = pts
                .iter()
                .find(|w| w.iter().any(|&x| x != 0) && mono.dot(w) <= bound);
            let c = find_weight(&q).unwrap();
            assert!(verify_certificate(&q, &c), "{mono}");
            match brute {
                Some(w) => assert_eq!(&witness(&c), w, "{mono} strict={strict}"),
                None => assert!(!c.is_feasible(), "{mono} strict={strict}"),
            }
        }
    }
}
