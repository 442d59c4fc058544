//! Family enumeration, classification and flags on the quintic threefold
//! and on binary forms.

use std::collections::BTreeSet;

use gitstab_core::{
    enumerate_monomials, mu_support, ExponentVector, NormalizationCone, SupportSet, WeightVector,
};
use gitstab_families::{
    associated_flag, chamber_ray_families, classify_support, family_of, ideal_power_predicate,
    maximal_families, maximal_nonstable_families, topmost_nonstable, verify_classification,
    verify_record, Classification, FamilyError, SearchSpace, Threshold,
};
use gitstab_poset::hasse;
use proptest::prelude::*;

fn ev(e: &[u32]) -> ExponentVector {
    ExponentVector::from_slice(e)
}

fn wv(w: &[i64]) -> WeightVector {
    WeightVector::new(w.to_vec()).unwrap()
}

fn quintic() -> SupportSet {
    enumerate_monomials(5, 5).unwrap()
}

/// The seven families of the classical table: support expression,
/// destabilizer, maximal monomials, flag.
fn table() -> Vec<(&'static str, [i64; 5], Vec<[u32; 5]>, &'static str)> {
    vec![
        (
            "q{3,2}(x0,x1,x2|x3,x4) + q{2,3}(x0,x1,x2|x3,x4) + q{1,4}(x0,x1,x2|x3,x4) + q5(x3,x4)",
            [2, 2, 2, -3, -3],
            vec![[3, 0, 0, 2, 0]],
            "∅ ⊆ (x3=x4=0) ⊆ P^4",
        ),
        (
            "x4*q4(x0,x1,x2,x3,x4)",
            [1, 1, 1, 1, -4],
            vec![[4, 0, 0, 0, 1]],
            "∅ ⊆ (x4=0) ⊆ P^4",
        ),
        (
            "q{2,3}(x0,x1|x2,x3,x4) + q{1,4}(x0,x1|x2,x3,x4) + q5(x2,x3,x4)",
            [3, 3, -2, -2, -2],
            vec![[2, 0, 3, 0, 0]],
            "∅ ⊆ (x2=x3=x4=0) ⊆ P^4",
        ),
        (
            "x0*q4(x1,x2,x3,x4) + q5(x1,x2,x3,x4)",
            [4, -1, -1, -1, -1],
            vec![[1, 4, 0, 0, 0]],
            "∅ ⊆ (x1=x2=x3=x4=0) ⊆ P^4",
        ),
        (
            "x0^2*x4^2*q1(x1,x2,x3,x4) + x0*x4*q3(x1,x2,x3,x4) + q5(x1,x2,x3,x4)",
            [1, 0, 0, 0, -1],
            vec![[0, 5, 0, 0, 0], [1, 3, 0, 0, 1], [2, 1, 0, 0, 2]],
            "∅ ⊆ (x1=x2=x3=x4=0) ⊆ (x4=0) ⊆ P^4",
        ),
        (
            "x4^2*q3(x0,x1) + x4*q{2,2}(x0,x1|x2,x3,x4) + q{1,4}(x0,x1|x2,x3,x4) + q5(x2,x3,x4)",
            [4, 4, -1, -1, -6],
            vec![[1, 0, 4, 0, 0], [3, 0, 0, 0, 2], [2, 0, 2, 0, 1]],
            "∅ ⊆ (x2=x3=x4=0) ⊆ (x4=0) ⊆ P^4",
        ),
        (
            "x0^2*q3(x3,x4) + x0*(q{2,2}(x1,x2|x3,x4) + q{1,3}(x1,x2|x3,x4) + q4(x3,x4)) \
             + q{4,1}(x1,x2|x3,x4) + q{3,2}(x1,x2|x3,x4) + q{2,3}(x1,x2|x3,x4) \
             + q{1,4}(x1,x2|x3,x4) + q5(x3,x4)",
            [6, 1, 1, -4, -4],
            vec![[0, 4, 0, 1, 0], [1, 2, 0, 2, 0], [2, 0, 0, 3, 0]],
            "∅ ⊆ (x1=x2=x3=x4=0) ⊆ (x3=x4=0) ⊆ P^4",
        ),
    ]
}

#[test]
fn family_of_examples() {
    let u = quintic();
    let ss1 = SupportSet::parse(table()[0].0, 5).unwrap();
    assert_eq!(family_of(&wv(&[2, 2, 2, -3, -3]), &u, false).unwrap(), ss1);
    let ss2 = family_of(&wv(&[1, 1, 1, 1, -4]), &u, false).unwrap();
    assert_eq!(ss2.len(), 70);
    assert!(ss2.iter().all(|m| m.get(4) >= 1));
    let strict = family_of(&wv(&[1, 1, 1, 1, -4]), &u, true).unwrap();
    assert_eq!(strict, u.filter(|m| m.get(4) >= 2));
    assert_eq!(
        family_of(&WeightVector::zero(5), &u, false),
        Err(FamilyError::ZeroWeight)
    );
}

#[test]
fn table_families_are_realized_by_their_destabilizers() {
    let u = quintic();
    let cone = NormalizationCone::standard(5);
    for (expr, w, _, flag) in table() {
        let support = SupportSet::parse(expr, 5).unwrap();
        let w = wv(&w);
        assert_eq!(family_of(&w, &u, false).unwrap(), support, "{expr}");
        assert!(cone.contains(w.weights()));
        assert_eq!(associated_flag(&w).unwrap().to_string(), flag);
    }
}

#[test]
fn quintic_enumeration_contains_the_table_exactly() {
    let u = quintic();
    let cone = NormalizationCone::standard(5);
    let records = maximal_nonstable_families(&u, &cone).unwrap();
    let space = SearchSpace::new(&u, &cone);
    // Antichain under inclusion.
    for a in &records {
        for b in &records {
            assert!(a.support == b.support || !a.support.is_subset(&b.support));
        }
    }
    for r in &records {
        assert!(verify_record(&space, r), "{}", r.support);
        assert_eq!(r.flag, associated_flag(&r.destabilizer).unwrap());
    }
    for (expr, w, tops, _) in table() {
        let support = SupportSet::parse(expr, 5).unwrap();
        let rec = records
            .iter()
            .find(|r| r.support == support)
            .unwrap_or_else(|| panic!("missing family {expr}"));
        assert_eq!(rec.destabilizer, wv(&w));
        let expected: BTreeSet<ExponentVector> = tops.iter().map(|t| ev(t)).collect();
        let found: BTreeSet<ExponentVector> = rec.maximal_monomials.iter().cloned().collect();
        assert_eq!(found, expected);
    }
    // The complete enumeration finds more than the classical seven.
    assert_eq!(records.len(), 38);
}

#[test]
fn chamber_ray_search_reproduces_the_table() {
    let u = quintic();
    let cone = NormalizationCone::standard(5);
    let found = chamber_ray_families(&u, &cone).unwrap();
    let expected: BTreeSet<SupportSet> = table()
        .iter()
        .map(|(e, ..)| SupportSet::parse(e, 5).unwrap())
        .collect();
    let got: BTreeSet<SupportSet> = found.iter().map(|c| c.support.clone()).collect();
    assert_eq!(got, expected);
}

#[test]
fn every_random_family_lies_in_a_maximal_one() {
    let u = quintic();
    let cone = NormalizationCone::standard(5);
    let records = maximal_nonstable_families(&u, &cone).unwrap();
    let mut runner = proptest::test_runner::TestRunner::deterministic();
    runner
        .run(&proptest::collection::vec(0i64..6, 4), |gaps| {
            // Partial sums of non-negative gaps, shifted to sum zero, give
            // every integer point of the chamber (up to scale).
            let mut w = [0i64; 5];
            for i in (0..4).rev() {
                w[i] = w[i + 1] + gaps[i];
            }
            let total: i64 = w.iter().sum();
            let w: Vec<i64> = w.iter().map(|x| 5 * x - total).collect();
            prop_assume!(w.iter().any(|&x| x != 0));
            let f = family_of(&wv(&w), &u, false).unwrap();
            prop_assert!(records.iter().any(|r| f.is_subset(&r.support)));
            Ok(())
        })
        .unwrap();
}

#[test]
fn maximal_unstable_families_are_certified() {
    let u = quintic();
    let cone = NormalizationCone::standard(5);
    let space = SearchSpace::new(&u, &cone);
    let records = maximal_families(&space, Threshold::Negative).unwrap();
    assert!(!records.is_empty());
    for r in &records {
        assert!(verify_record(&space, r));
    }
    // x4^2·q3 is the family of ⟨1,1,1,1,−4⟩ in the strict sense.
    let strict_ss2 = u.filter(|m| m.get(4) >= 2);
    assert!(records.iter().any(|r| strict_ss2.is_subset(&r.support)));
}

#[test]
fn topmost_monomials() {
    let poset = hasse(&quintic(), &NormalizationCone::standard(5)).unwrap();
    let tops: BTreeSet<ExponentVector> = topmost_nonstable(&poset).unwrap().into_iter().collect();
    let expected: BTreeSet<ExponentVector> = [
        [3, 0, 0, 2, 0],
        [4, 0, 0, 0, 1],
        [2, 0, 3, 0, 0],
        [1, 4, 0, 0, 0],
    ]
    .iter()
    .map(|e| ev(e))
    .collect();
    assert_eq!(tops, expected);

    let binary = hasse(&enumerate_monomials(2, 5).unwrap(), &NormalizationCone::standard(2)).unwrap();
    assert_eq!(topmost_nonstable(&binary).unwrap(), vec![ev(&[2, 3])]);
}

#[test]
fn plane_cubic_topmost_match_brute_force() {
    let u = enumerate_monomials(3, 3).unwrap();
    let cone = NormalizationCone::standard(3);
    let poset = hasse(&u, &cone).unwrap();
    let tops: BTreeSet<ExponentVector> = topmost_nonstable(&poset).unwrap().into_iter().collect();
    // Brute force: m admits μ ≤ 0 for some nonzero chamber weight in a box.
    let mut admissible = BTreeSet::new();
    for a in -12i64..=12 {
        for b in -12i64..=12 {
            let w = [a, b, -a - b];
            if w == [0, 0, 0] || !cone.contains(&w) {
                continue;
            }
            for m in u.iter() {
                if m.dot(&w) <= 0 {
                    admissible.insert(m.clone());
                }
            }
        }
    }
    let brute: BTreeSet<ExponentVector> = admissible
        .iter()
        .filter(|m| {
            !admissible
                .iter()
                .any(|o| o != *m && cone.dominates(m, o).unwrap())
        })
        .cloned()
        .collect();
    assert_eq!(tops, brute);
    // μ(x0²x2) = w0 − w1 and μ(x0x1²) = w1 − w2 vanish on the chamber walls.
    assert_eq!(tops, [ev(&[1, 2, 0]), ev(&[2, 0, 1])].into_iter().collect());
}

#[test]
fn ss7_maximal_monomials() {
    let u = quintic();
    let cone = NormalizationCone::standard(5);
    let space = SearchSpace::new(&u, &cone);
    let ss7 = SupportSet::parse(table()[6].0, 5).unwrap();
    let rec = gitstab_families::certify_family(&space, &ss7, Threshold::NonPositive).unwrap();
    assert_eq!(
        rec.maximal_monomials,
        vec![ev(&[0, 4, 0, 1, 0]), ev(&[1, 2, 0, 2, 0]), ev(&[2, 0, 0, 3, 0])]
    );
    assert_eq!(rec.destabilizer, wv(&[6, 1, 1, -4, -4]));
}

#[test]
fn binary_quartic_family() {
    let u = enumerate_monomials(2, 4).unwrap();
    let records = maximal_nonstable_families(&u, &NormalizationCone::standard(2)).unwrap();
    assert_eq!(records.len(), 1);
    assert_eq!(records[0].support, u.filter(|m| m.get(1) >= 2));
    assert_eq!(records[0].destabilizer, wv(&[1, -1]));
}

#[test]
fn record_json_shape() {
    let u = quintic();
    let cone = NormalizationCone::standard(5);
    let space = SearchSpace::new(&u, &cone);
    let ss2 = SupportSet::parse(table()[1].0, 5).unwrap();
    let rec = gitstab_families::certify_family(&space, &ss2, Threshold::NonPositive).unwrap();
    let json = serde_json::to_value(&rec).unwrap();
    let keys: BTreeSet<&str> = json.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(
        keys,
        ["destabilizer", "flag", "label", "maximal_monomials", "support"]
            .into_iter()
            .collect()
    );
    assert_eq!(json["support"].as_array().unwrap().len(), 70);
    let back: gitstab_families::FamilyRecord = serde_json::from_value(json).unwrap();
    assert_eq!(back.support, rec.support);
    assert_eq!(back.destabilizer, rec.destabilizer);
    assert_eq!(back.flag, rec.flag);
}

#[test]
fn classification_examples() {
    let u = quintic();
    let cone = NormalizationCone::standard(5);

    let single = SupportSet::parse("x0^5", 5).unwrap();
    let c = classify_support(&single, &u, &cone).unwrap();
    assert!(matches!(c, Classification::Unstable { .. }), "{c}");
    assert!(verify_classification(&single, &cone, &c));
    let permuted = single.permuted(c.permutation().unwrap());
    assert_eq!(permuted, SupportSet::parse("x4^5", 5).unwrap(), "{c}");
    assert_eq!(mu_support(&permuted, &wv(&[1, 1, 1, 1, -4])).unwrap(), -20);

    let fermat = SupportSet::parse("x0^5+x1^5+x2^5+x3^5+x4^5", 5).unwrap();
    let c = classify_support(&fermat, &u, &cone).unwrap();
    let Classification::Stable { refutations } = &c else {
        panic!("Fermat quintic classified as {c}");
    };
    assert_eq!(refutations.len(), 1);
    assert!(verify_classification(&fermat, &cone, &c));

    // A binomial in three variables is a cone over a curve: unstable, with
    // the optimal weight balancing x0 and x1 against the unused x2, x3.
    let binomial = SupportSet::parse("x4*x0^4 + x4*x1^4", 5).unwrap();
    let c = classify_support(&binomial, &u, &cone).unwrap();
    assert!(matches!(c, Classification::Unstable { .. }), "{c}");
    assert_eq!(c.weight().unwrap(), &wv(&[1, 1, 0, -1, -1]));
    assert!(verify_classification(&binomial, &cone, &c));

    let ss2 = SupportSet::parse("x4*q4(x0,x1,x2,x3,x4)", 5).unwrap();
    let c = classify_support(&ss2, &u, &cone).unwrap();
    assert!(matches!(c, Classification::NonStable { .. }), "{c}");
    assert!(c.permutation().unwrap().is_identity());
    assert_eq!(c.weight().unwrap(), &wv(&[1, 1, 1, 1, -4]));
    assert!(verify_classification(&ss2, &cone, &c));

    let foreign = SupportSet::parse("x0^4", 5).unwrap();
    assert!(matches!(
        classify_support(&foreign, &u, &cone),
        Err(FamilyError::NotInUniverse(_))
    ));
}

#[test]
fn witnesses_survive_restriction_to_mu_maximal_subsets() {
    let u = quintic();
    let cone = NormalizationCone::standard(5);
    let s = SupportSet::parse("x0^4*x4 + x0*x1*x4^3 + x2^2*x3^2*x4 + x1^3*x4^2", 5).unwrap();
    let c = classify_support(&s, &u, &cone).unwrap();
    let (Some(p), Some(w)) = (c.permutation(), c.weight()) else {
        panic!("expected a destabilizer, got {c}");
    };
    let t = s.permuted(p);
    let top = mu_support(&t, w).unwrap();
    // Every subset keeping a μ-maximal monomial keeps the verdict.
    let members: Vec<ExponentVector> = t.iter().cloned().collect();
    for mask in 1u32..(1 << members.len()) {
        let sub: Vec<ExponentVector> = (0..members.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| members[i].clone())
            .collect();
        let sub = SupportSet::from_monomials(sub).unwrap();
        if mu_support(&sub, w).unwrap() == top {
            let back = sub.permuted(&p.inverse());
            let v = classify_support(&back, &u, &cone).unwrap();
            assert!(!matches!(v, Classification::Stable { .. }));
        }
    }
}

#[test]
fn ideal_powers_of_the_table() {
    let t = table();
    let ss1 = SupportSet::parse(t[0].0, 5).unwrap();
    let ss3 = SupportSet::parse(t[2].0, 5).unwrap();
    let ss4 = SupportSet::parse(t[3].0, 5).unwrap();
    assert!(ideal_power_predicate(&ss1, &[3, 4], 2));
    assert!(ideal_power_predicate(&ss3, &[2, 3, 4], 3));
    assert!(ideal_power_predicate(&ss4, &[1, 2, 3, 4], 4));
    assert!(!ideal_power_predicate(&ss1, &[3, 4], 3));
    assert!(!ideal_power_predicate(&quintic(), &[4], 1));
}

/// Brute-force verdict for binary forms: scan every integer weight
/// `(a, −a)` with `0 < |a| ≤ 3d` (no chamber restriction, so permutations
/// are covered by the sign of `a`).
fn binary_oracle(s: &SupportSet, d: i64) -> &'static str {
    let mut verdict = "Stable";
    for a in (-3 * d..=3 * d).filter(|&a| a != 0) {
        let w = [a, -a];
        let max = s.iter().map(|m| m.dot(&w)).max().unwrap();
        if max < 0 {
            return "Unstable";
        }
        if max == 0 {
            verdict = "NonStable";
        }
    }
    verdict
}

#[test]
fn binary_forms_agree_with_brute_force() {
    for d in 4u32..=6 {
        let u = enumerate_monomials(2, d).unwrap();
        let cone = NormalizationCone::standard(2);
        let ms: Vec<&ExponentVector> = u.iter().collect();
        let mut checked = 0;
        for size in 1..=3usize {
            for combo in combinations(ms.len(), size) {
                let s = SupportSet::from_monomials(combo.iter().map(|&i| ms[i].clone())).unwrap();
                let c = classify_support(&s, &u, &cone).unwrap();
                assert_eq!(c.verdict(), binary_oracle(&s, i64::from(d)), "{s}");
                assert!(verify_classification(&s, &cone, &c));
                checked += 1;
            }
        }
        assert!(checked > 0);
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn families_are_downward_closed(gaps in proptest::collection::vec(0i64..5, 3)) {
        let u = enumerate_monomials(4, 4).unwrap();
        let cone = NormalizationCone::standard(4);
        let mut w = [0i64; 4];
        for i in (0..3).rev() {
            w[i] = w[i + 1] + gaps[i];
        }
        let total: i64 = w.iter().sum();
        let w: Vec<i64> = w.iter().map(|x| 4 * x - total).collect();
        prop_assume!(w.iter().any(|&x| x != 0));
        let f = family_of(&wv(&w), &u, false).unwrap();
        for m in f.iter() {
            for o in u.iter() {
                if cone.dominates(o, m).unwrap() {
                    prop_assert!(f.contains(o));
                }
            }
        }
    }

    #[test]
    fn flags_ignore_positive_scale(v in proptest::collection::vec(-6i64..6, 5), k in 1i64..5) {
        let total: i64 = v.iter().sum();
        let w: Vec<i64> = v.iter().map(|x| 5 * x - total).collect();
        prop_assume!(w.iter().any(|&x| x != 0));
        let a = associated_flag(&WeightVector::new(w.clone()).unwrap()).unwrap();
        let scaled: Vec<i64> = w.iter().map(|x| x * k).collect();
        let b = associated_flag(&WeightVector::new(scaled).unwrap()).unwrap();
        prop_assert_eq!(a, b);
    }
}
