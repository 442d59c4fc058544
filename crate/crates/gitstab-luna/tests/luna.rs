use gitstab_core::{all_permutations, stabilizer_lattice, SupportSet, WeightVector};
use gitstab_luna::{
    centralizer_context, context_for_support, limit_support, luna_classify, luna_report,
    sublevel_families, verify_verdict, witnesses_family, LunaError, LunaVerdict,
};
use proptest::prelude::*;

fn parse(s: &str) -> SupportSet {
    SupportSet::parse(s, 5).unwrap()
}

fn w(v: &[i64]) -> WeightVector {
    WeightVector::new(v.to_vec()).unwrap()
}

fn equivalent(a: &SupportSet, b: &SupportSet) -> bool {
    all_permutations(a.n_vars()).iter().any(|p| a.permuted(p) == *b)
}

const MO_A: &str = "q{2,3}(x0,x1|x2,x3,x4)";
const MO_B: &str = "q5(x1,x2,x3) + x0*x4*q3(x1,x2,x3) + x0^2*x4^2*q1(x1,x2,x3)";
const MO_C: &str = "q{1,4}(x0,x1|x2,x3) + x4*q{2,2}(x0,x1|x2,x3) + x4^2*q3(x0,x1)";
const MO_D: &str = "x0*q4(x1,x2,x3,x4)";
const SS1_A: &str = "x0^2*(q3(x3,x4) + q1(x2,x3)*x4^2 + x4^3) \
    + x0*x1*(q3(x3,x4) + x2*x3*x4 + q1(x2,x3)*x4^2 + x3*x4^2 + x3^2*x4 + x4^3) \
    + x1^2*(x2*q2(x3,x4) + q3(x3,x4))";
const MO2_I: &str = "x0^2*x2*x4^2 + x0*x1*x2*x3*x4 + x1^2*x2*x3^2";
const MO2_IV: &str = "x0*x4*x1*q2(x2,x3)";

#[test]
fn table_contexts() {
    let a = centralizer_context(&w(&[3, 3, -2, -2, -2]), 5).unwrap();
    assert_eq!(a.invariant_universe.len(), 30);
    assert_eq!(a.invariant_universe, parse(MO_A));
    assert_eq!(a.blocks.blocks(), &[vec![0, 1], vec![2, 3, 4]]);

    let d = centralizer_context(&w(&[4, -1, -1, -1, -1]), 5).unwrap();
    assert_eq!(d.invariant_universe.len(), 35);
    assert_eq!(d.invariant_universe, parse(MO_D));

    let b = centralizer_context(&w(&[1, 0, 0, 0, -1]), 5).unwrap();
    assert_eq!(b.invariant_universe, parse(MO_B));
    assert_eq!(b.blocks.blocks(), &[vec![0], vec![1, 2, 3], vec![4]]);

    let c = centralizer_context(&w(&[4, 4, -1, -1, -6]), 5).unwrap();
    assert_eq!(c.invariant_universe, parse(MO_C));

    for ctx in [&a, &b, &c, &d] {
        assert!(ctx.lattice.contains(ctx.h.weights()));
        assert!(ctx
            .invariant_universe
            .iter()
            .all(|m| m.dot(ctx.h.weights()) == 0));
    }
}

#[test]
fn context_errors() {
    assert!(matches!(
        centralizer_context(&WeightVector::zero(5), 5),
        Err(LunaError::ZeroWeight)
    ));
    assert!(matches!(
        centralizer_context(&w(&[1, 1, 1, 1, -4]), 4),
        Err(LunaError::EmptyInvariants { .. })
    ));
    let ctx = centralizer_context(&w(&[4, -1, -1, -1, -1]), 5).unwrap();
    assert!(matches!(
        luna_classify(&parse("x1^5"), &ctx),
        Err(LunaError::NotInvariant(_))
    ));
}

#[test]
fn limits_of_table_families() {
    let ss1 = parse(
        "q{3,2}(x0,x1,x2|x3,x4) + q{2,3}(x0,x1,x2|x3,x4) + q{1,4}(x0,x1,x2|x3,x4) + q5(x3,x4)",
    );
    let limit = limit_support(&ss1, &w(&[2, 2, 2, -3, -3])).unwrap();
    assert_eq!(limit, parse("q{3,2}(x0,x1,x2|x3,x4)"));
    assert!(equivalent(&limit, &parse(MO_A)));

    let ss2 = parse("x4*q4(x0,x1,x2,x3,x4) + x4^2*q3(x0,x1,x2,x3,x4) + x4^3*q2(x0,x1,x2,x3,x4) + x4^4*q1(x0,x1,x2,x3,x4) + x4^5");
    let limit = limit_support(&ss2, &w(&[1, 1, 1, 1, -4])).unwrap();
    assert_eq!(limit, parse("x4*q4(x0,x1,x2,x3)"));
    assert!(equivalent(&limit, &parse(MO_D)));

    let mo_a = parse(MO_A);
    assert_eq!(limit_support(&mo_a, &w(&[3, 3, -2, -2, -2])).unwrap(), mo_a);

    assert!(matches!(
        limit_support(&parse("x4^5"), &w(&[1, 1, 1, 1, -4])),
        Err(LunaError::UnstableLimit(-20))
    ));
    assert!(matches!(
        limit_support(&parse("x0^5"), &w(&[1, 1, 1, 1, -4])),
        Err(LunaError::NoLimit(5))
    ));
}

#[test]
fn normal_crossings_point_is_closed() {
    let s = parse("x0*x1*x2*x3*x4");
    let ctx = context_for_support(&s).unwrap();
    assert_eq!(ctx.lattice.rank(), 4);
    let v = luna_classify(&s, &ctx).unwrap();
    assert!(matches!(v, LunaVerdict::ClosedOrbit { .. }), "{v:?}");
    assert!(verify_verdict(&s, &ctx, &v));
}

#[test]
fn ss1_a_degenerates_to_mo2_i() {
    let ctx = centralizer_context(&w(&[3, 3, -2, -2, -2]), 5).unwrap();
    let s = parse(SS1_A);
    assert!(witnesses_family(&w(&[1, -1, 4, -1, -3]), &s));
    let v = luna_classify(&s, &ctx).unwrap();
    assert!(verify_verdict(&s, &ctx, &v));
    let LunaVerdict::Degenerates { limit, .. } = &v else {
        panic!("expected a degeneration, got {v:?}");
    };
    assert!(equivalent(limit, &parse(MO2_I)), "limit {limit}");
    // The printed witness leads to the same limit.
    let printed = limit_support(&s, &w(&[1, -1, 4, -1, -3])).unwrap();
    assert!(equivalent(&printed, &parse(MO2_I)));
}

#[test]
fn us1_iv_is_unstable_in_mo2_iv() {
    let ctx = context_for_support(&parse(MO2_IV)).unwrap();
    assert_eq!(ctx.invariant_universe, parse(MO2_IV));
    let s = parse("x0*x4*x1*x3^2");
    let v = luna_classify(&s, &ctx).unwrap();
    assert!(matches!(v, LunaVerdict::UnstablePoint { .. }), "{v:?}");
    assert!(verify_verdict(&s, &ctx, &v));
    // The whole family is not unstable.
    let v = luna_classify(&parse(MO2_IV), &ctx).unwrap();
    assert!(!matches!(v, LunaVerdict::UnstablePoint { .. }));
}

#[test]
fn tampered_verdicts_fail_verification() {
    let ctx = centralizer_context(&w(&[3, 3, -2, -2, -2]), 5).unwrap();
    let s = parse(SS1_A);
    let v = luna_classify(&s, &ctx).unwrap();
    let LunaVerdict::Degenerates { permutation, limit, .. } = v else {
        panic!()
    };
    let bad = LunaVerdict::Degenerates {
        permutation,
        weight: w(&[0, 0, 1, 0, -1]),
        limit,
    };
    assert!(!verify_verdict(&s, &ctx, &bad));
    let closed = LunaVerdict::ClosedOrbit { refutations: vec![] };
    assert!(!verify_verdict(&s, &ctx, &closed));
}

#[test]
fn sublevel_families_cover_printed_ones() {
    let ctx = centralizer_context(&w(&[1, 0, 0, 0, -1]), 5).unwrap();
    let fams = sublevel_families(&ctx).unwrap();
    assert!(!fams.semistable.is_empty());
    assert!(!fams.unstable.is_empty());
    for f in fams.unstable.iter() {
        let v = luna_classify(&f.support, &ctx).unwrap();
        assert!(matches!(v, LunaVerdict::UnstablePoint { .. }));
    }
    let c = centralizer_context(&w(&[4, 4, -1, -1, -6]), 5).unwrap();
    let fams = sublevel_families(&c).unwrap();
    let printed = w(&[1, -1, 1, -1, 0]);
    let ss1_c = c.invariant_universe.filter(|m| m.dot(printed.weights()) <= 0);
    assert_eq!(ss1_c.len(), 13);
    // The printed family is non-stable but not maximal: two certified
    // maximal families strictly contain it.
    let above: Vec<_> = fams
        .semistable
        .iter()
        .filter(|f| ss1_c.is_subset(&f.support))
        .collect();
    assert_eq!(above.len(), 2);
    assert!(above.iter().all(|f| f.support.len() > ss1_c.len()));
}

#[test]
fn rank_grows_along_degenerations() {
    for h in [
        [3, 3, -2, -2, -2],
        [1, 0, 0, 0, -1],
        [4, 4, -1, -1, -6],
        [4, -1, -1, -1, -1],
    ] {
        let ctx = centralizer_context(&w(&h), 5).unwrap();
        let report = luna_report(&ctx).unwrap();
        let base = ctx.lattice.rank();
        for (row, fam) in report.verdicts.iter().zip(&report.semistable) {
            if let Some(limit) = &row.limit {
                let limit = SupportSet::new(5, 5, limit.clone()).unwrap();
                let r = stabilizer_lattice(&limit).unwrap().rank();
                let own = stabilizer_lattice(&fam.support).unwrap().rank();
                assert!(r > own && r > base, "{h:?}: {r} vs {own}");
            }
        }
    }
}

#[test]
fn report_json_shape() {
    let ctx = centralizer_context(&w(&[4, 4, -1, -1, -6]), 5).unwrap();
    let report = luna_report(&ctx).unwrap();
    let json = serde_json::to_value(&report).unwrap();
    let keys: Vec<&str> = json.as_object().unwrap().keys().map(String::as_str).collect();
    for k in ["h", "blocks", "universe_size", "semistable", "unstable", "verdicts"] {
        assert!(keys.contains(&k), "missing {k}");
    }
    assert_eq!(json["universe_size"], 2 * 5 + 3 * 3 + 4);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn verdicts_on_random_invariant_subsets(mask in proptest::collection::vec(any::<bool>(), 35)) {
        let ctx = centralizer_context(&w(&[4, -1, -1, -1, -1]), 5).unwrap();
        let chosen: Vec<_> = ctx.invariant_universe.iter().zip(&mask)
            .filter(|(_, &b)| b).map(|(m, _)| m.clone()).collect();
        prop_assume!(!chosen.is_empty());
        let s = SupportSet::new(5, 5, chosen).unwrap();
        let v = luna_classify(&s, &ctx).unwrap();
        prop_assert!(verify_verdict(&s, &ctx, &v));
        if let LunaVerdict::Degenerates { permutation, weight, limit } = &v {
            let t = s.permuted(permutation);
            prop_assert_eq!(&limit_support(&t, weight).unwrap(), limit);
            prop_assert!(limit.len() < t.len());
            let lat = stabilizer_lattice(limit).unwrap();
            prop_assert!(lat.contains(weight.weights()));
            prop_assert!(lat.rank() > stabilizer_lattice(&t).unwrap().rank());
        }
    }
}
