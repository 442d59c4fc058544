use gitstab_core::{all_permutations, Permutation, SupportSet};
use gitstab_strata::{
    audit, build_stratification, canonical_support, canonicalize, quintic_catalogue,
    quintic_seeds, replay_edge, torus_polystable, Edge, StrataError, StratGraph,
};
use proptest::prelude::*;
use std::sync::OnceLock;

fn parse(s: &str) -> SupportSet {
    SupportSet::parse(s, 5).unwrap()
}

fn graph() -> &'static StratGraph {
    static G: OnceLock<StratGraph> = OnceLock::new();
    G.get_or_init(|| {
        let seeds: Vec<SupportSet> = quintic_seeds().unwrap().into_iter().map(|(_, s)| s).collect();
        build_stratification(&seeds, &quintic_catalogue().unwrap()).unwrap()
    })
}

fn id(name: &str) -> usize {
    graph().find(name).unwrap_or_else(|| panic!("{name} missing")).id
}

#[test]
fn canonical_forms() {
    let a = canonicalize(&parse("q{3,2}(x0,x1,x2|x3,x4)")).unwrap();
    let b = canonicalize(&parse("q{2,3}(x0,x1|x2,x3,x4)")).unwrap();
    assert_eq!(a.canonical_support, b.canonical_support);
    let again = canonicalize(&a.canonical_support).unwrap();
    assert_eq!(again.canonical_support, a.canonical_support);
    assert!(again.witnesses[0].is_identity());
    // 2!·3! symmetries of the bidegree pattern.
    assert_eq!(again.witnesses.len(), 12);
    let powers: Vec<SupportSet> = (0..5).map(|i| parse(&format!("x{i}^5"))).collect();
    let c0 = canonical_support(&powers[0]).unwrap();
    assert!(powers.iter().all(|p| canonical_support(p).unwrap() == c0));
    assert_eq!(c0, parse("x4^5"));
    assert!(matches!(
        canonicalize(&SupportSet::empty(5, 5)),
        Err(StrataError::EmptySupport)
    ));
}

#[test]
fn catalogue_merges_equivalent_families() {
    let c = quintic_catalogue().unwrap();
    assert_eq!(c.entries().len(), 13);
    let merged: Vec<_> = c.entries().iter().filter(|(_, n)| n.len() > 1).collect();
    assert_eq!(merged.len(), 1);
    assert_eq!(merged[0].1, vec!["MO2-I".to_string(), "MO2-VII".to_string()]);
    // The printed MO2-VI support is not closed under its stabilizer.
    assert_eq!(c.support_of("MO2-VI").unwrap().len(), 6);
}

#[test]
fn polystability() {
    assert!(torus_polystable(&parse("x0*x1*x2*x3*x4")).unwrap());
    assert!(torus_polystable(&parse("x0^5+x1^5+x2^5+x3^5+x4^5")).unwrap());
    assert!(!torus_polystable(&parse("x0^5")).unwrap());
    assert!(!torus_polystable(&parse("x0^5 + x0*x1*x2*x3*x4")).unwrap());
}

#[test]
fn published_edges_are_present() {
    let g = graph();
    let expected = [
        ("MO-A", ["MO2-I", "MO2-II", "MO2-III", "MO2-IV"].as_slice()),
        ("MO-B", &["MO2-IV", "MO2-V", "MO2-VI"]),
        ("MO-C", &["MO2-VII"]),
        ("MO-D", &["MO2-VIII", "MO2-IX", "MO2-X"]),
    ];
    for (from, tos) in expected {
        for to in tos {
            assert!(g.has_edge(id(from), id(to)), "{from} -> {to}");
        }
    }
    let sink = id("MO2-V");
    for (name, _) in gitstab_strata::SECOND_LEVEL {
        assert!(g.reaches(id(name), sink), "{name}");
    }
}

#[test]
fn graph_shape_and_audit() {
    let g = graph();
    let a = audit(g).unwrap();
    assert!(a.passed(), "{a:?}");
    let sink = &g.nodes[a.sinks[0]];
    assert_eq!(sink.support, parse("x0*x1*x2*x3*x4"));
    assert!(sink.closed && !sink.mixed);
    assert_eq!(sink.stabilizer_rank, 4);
    assert_eq!(g.nodes.len(), 52);
    assert_eq!(g.edges.len(), 212);
    assert_eq!(g.nodes.iter().filter(|n| n.label.is_some()).count(), 13);
    // MO2-IV: closed generic member with degenerating special members.
    let iv = g.find("MO2-IV").unwrap();
    assert!(iv.closed && iv.mixed);
    for name in ["MO2-II", "MO2-VI"] {
        assert!(!g.find(name).unwrap().closed, "{name}");
    }
}

#[test]
fn tampered_edges_fail_replay() {
    let g = graph();
    let e = &g.edges[0];
    assert!(replay_edge(g, e).unwrap());
    let other = g.edges.iter().find(|f| f.from == e.from && f.to != e.to).unwrap();
    let swapped = Edge { from: e.from, to: other.to, witness: e.witness.clone() };
    assert!(!replay_edge(g, &swapped).unwrap());
}

#[test]
fn deterministic_and_serializable() {
    let seeds: Vec<SupportSet> = quintic_seeds().unwrap().into_iter().map(|(_, s)| s).collect();
    let again = build_stratification(&seeds, &quintic_catalogue().unwrap()).unwrap();
    assert_eq!(&again, graph());
    let a = serde_json::to_string(graph()).unwrap();
    let b = serde_json::to_string(&again).unwrap();
    assert_eq!(a, b);
    let dot = graph().to_dot();
    assert!(dot.starts_with("digraph"));
    assert!(dot.contains("MO2-V (1)"));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]
    #[test]
    fn canonical_form_is_permutation_invariant(
        mask in proptest::collection::vec(any::<bool>(), 126),
        k in 0usize..120,
    ) {
        let all = gitstab_core::enumerate_monomials(5, 5).unwrap();
        let chosen: Vec<_> = all.iter().zip(&mask).filter(|(_, &b)| b).map(|(m, _)| m.clone()).collect();
        prop_assume!(!chosen.is_empty());
        let s = SupportSet::new(5, 5, chosen).unwrap();
        let p: Permutation = all_permutations(5)[k].clone();
        let c = canonicalize(&s).unwrap();
        prop_assert_eq!(&canonical_support(&s.permuted(&p)).unwrap(), &c.canonical_support);
        prop_assert!(c.witnesses.iter().all(|w| s.permuted(w) == c.canonical_support));
        prop_assert!(c.canonical_support <= s);
    }
}
