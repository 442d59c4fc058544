use std::process::{Command, Output};

use gitstab_cli::commands::{cmd_classify, cmd_luna, cmd_nonstable, cmd_poset, ClassifyReport, PosetReport, Status};
use gitstab_cli::config::{Format, Profile, RunConfig};
use gitstab_cli::reference::NONSTABLE;
use gitstab_core::SupportSet;
use gitstab_families::{classify_support, verify_classification};
use proptest::prelude::*;

fn gitstab(args: &[&str], profile: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_gitstab"));
    cmd.args(args);
    match profile {
        Some(p) => cmd.env("GITSTAB_PROFILE", p),
        None => cmd.env_remove("GITSTAB_PROFILE"),
    };
    cmd.output().expect("run gitstab")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn quintic(format: Format) -> RunConfig {
    RunConfig::resolve(None, None, None, format).unwrap()
}

#[test]
fn config_precedence() {
    let c = RunConfig::resolve(None, None, None, Format::Text).unwrap();
    assert_eq!(c.profile, Profile::QUINTIC);
    let c = RunConfig::resolve(None, None, Some("2,4"), Format::Text).unwrap();
    assert_eq!((c.profile.n_vars, c.profile.degree), (2, 4));
    let c = RunConfig::resolve(Some(3), None, Some("2,4"), Format::Text).unwrap();
    assert_eq!((c.profile.n_vars, c.profile.degree), (3, 4));
    assert!(RunConfig::resolve(None, None, Some("5"), Format::Text).is_err());
    assert!(RunConfig::resolve(Some(0), None, None, Format::Text).is_err());
    assert!(RunConfig::resolve(None, None, Some("0,5"), Format::Text).is_err());
}

#[test]
fn poset_outputs() {
    let o = gitstab(&["poset", "--n", "5", "--d", "5", "--format", "dot"], None);
    assert_eq!(o.status.code(), Some(0));
    let dot = stdout(&o);
    let nodes = dot.lines().filter(|l| l.trim_start().starts_with('"') && !l.contains("->")).count();
    assert_eq!(nodes, 126);

    let o = gitstab(&["poset", "--n", "2", "--d", "5", "--format", "text"], None);
    let text = stdout(&o);
    assert!(text.starts_with("6 monomials, 5 covering pairs"));
    for (a, b) in [("[5,0]", "[4,1]"), ("[4,1]", "[3,2]"), ("[1,4]", "[0,5]")] {
        assert!(text.contains(&format!("{a} > {b}")));
    }

    // The environment profile applies when no flags are given.
    let o = gitstab(&["poset", "--format", "json"], Some("2,5"));
    let r: PosetReport = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(r.nodes.len(), 6);
    let o = gitstab(&["poset", "--n", "3", "--format", "json"], Some("2,5"));
    let r: PosetReport = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!((r.n_vars, r.nodes.len()), (3, 21));
}

#[test]
fn downset_is_the_first_family() {
    let out = cmd_poset(&quintic(Format::Json), &["3,0,0,2,0".to_string()]).unwrap();
    let r: PosetReport = serde_json::from_str(&out.text).unwrap();
    let ss1 = NONSTABLE[0].support().unwrap();
    let nodes: Vec<Vec<u32>> = ss1.iter().map(|m| m.exponents().to_vec()).collect();
    assert_eq!(r.nodes, nodes);
    assert_eq!(r.maxima, vec![vec![3, 0, 0, 2, 0]]);
}

#[test]
fn nonstable_table() {
    let out = cmd_nonstable(&quintic(Format::Json), true, true).unwrap();
    let v: serde_json::Value = serde_json::from_str(&out.text).unwrap();
    let rows = v["families"].as_array().unwrap();
    assert_eq!(rows.len(), 38);
    let expected = [
        ("SS1", "MO-A"),
        ("SS2", "MO-D"),
        ("SS3", "MO-A"),
        ("SS4", "MO-D"),
        ("SS5", "MO-B"),
        ("SS6", "MO-C"),
        ("SS7", "MO-C"),
    ];
    for (label, target) in expected {
        let row = rows.iter().find(|r| r["label"] == label).unwrap();
        assert_eq!(row["degeneration"], target, "{label}");
        assert!(row["flag"].as_str().unwrap().ends_with("⊆ P^4"));
    }
    // Criteria 4 and 5 hold; criterion 3 does not (38 families).
    let verification = v["verification"].as_array().unwrap();
    assert_eq!(verification.len(), 3);
    assert_eq!(verification[0]["passed"], false);
    assert_eq!(verification[1]["passed"], true);
    assert_eq!(verification[2]["passed"], true);
    assert_eq!(out.status, Status::VerificationFailed);
}

#[test]
fn luna_commands() {
    let o = gitstab(&["luna", "MO2-V"], None);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("closed orbit; no destabilizing 1-PS"));

    let o = gitstab(&["luna", "MO-A", "--verify-paper"], None);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for l in ["SS1-A", "SS2-A", "SS3-A", "SS4-A", "SS5-A"] {
        assert!(text.lines().any(|x| x.starts_with(&format!("verify {l} ")) && x.contains("PASS")), "{l}");
    }
    assert!(text.contains("⟨1,-1,4,-1,-3⟩ witnesses the printed family"));

    let out = cmd_luna(&quintic(Format::Json), "MO-C", true).unwrap();
    let v: serde_json::Value = serde_json::from_str(&out.text).unwrap();
    assert_eq!(v["report"]["universe_size"], 23);
    assert_eq!(v["report"]["semistable"].as_array().unwrap().len(), 9);
    assert_eq!(v["verification"][0][0], "SS1-C");
    assert_eq!(v["verification"][0][1], true);

    // The printed symbolic destabilizers of MO2-X cannot be realized.
    let o = gitstab(&["luna", "MO2-X", "--verify-paper"], None);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn strata_command() {
    let o = gitstab(&["strata", "--audit", "--sink-check", "--format", "json"], None);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["sink_check"], true);
    let labels: Vec<&str> = v["graph"]["nodes"]
        .as_array()
        .unwrap()
        .iter()
        .filter_map(|n| n["label"].as_str())
        .collect();
    let split: Vec<&str> = labels.iter().flat_map(|l| l.split('≡')).collect();
    assert_eq!(split.len(), 14);
    let o = gitstab(&["strata", "--format", "dot"], None);
    assert!(stdout(&o).starts_with("digraph"));
}

#[test]
fn classify_examples() {
    let c = quintic(Format::Text);
    let out = cmd_classify(&c, "x0^5+x1^5+x2^5+x3^5+x4^5").unwrap();
    assert!(out.text.starts_with("Stable"));
    let out = cmd_classify(&c, "x0^5").unwrap();
    assert!(out.text.starts_with("Unstable (witness ⟨1,1,1,1,-4⟩"));
    // A cone over a plane curve: unstable, not merely non-stable.
    let out = cmd_classify(&c, "x4*x0^4 + x4*x1^4").unwrap();
    assert!(out.text.starts_with("Unstable"));
    let out = cmd_classify(&c, "x4*q4(x0,x1,x2,x3,x4)").unwrap();
    assert!(out.text.starts_with("NonStable (witness ⟨1,1,1,1,-4⟩"));
    assert!(out.text.contains("family SS2"));
}

#[test]
fn classify_json_round_trip() {
    let c = quintic(Format::Json);
    let out = cmd_classify(&c, "x0^3*x3^2 + x1^5").unwrap();
    let r: ClassifyReport = serde_json::from_str(&out.text).unwrap();
    let again = cmd_classify(&c, &serde_json::to_string(&r.support).unwrap()).unwrap();
    assert_eq!(out.text, again.text);
    let s = SupportSet::new(5, 5, r.support.iter().map(|m| gitstab_core::ExponentVector::from_slice(m))).unwrap();
    assert!(verify_classification(&s, &gitstab_core::NormalizationCone::standard(5), &r.classification));
}

#[test]
fn usage_errors_exit_with_one() {
    for args in [
        vec!["luna", "MO-Z"],
        vec!["classify", "x0^4"],
        vec!["classify", "x0^5 +"],
        vec!["classify", "[[1,2,3]]"],
        vec!["frobnicate"],
        vec!["poset", "--format", "yaml"],
        vec![],
    ] {
        let o = gitstab(&args, None);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
    }
    let o = gitstab(&["poset", "--n", "2", "--d", "2"], Some("nonsense"));
    assert_eq!(o.status.code(), Some(1));
    let o = gitstab(&["--help"], None);
    assert_eq!(o.status.code(), Some(0));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn classify_agrees_with_library(picks in proptest::collection::btree_set(0usize..10, 1..4)) {
        let config = RunConfig::resolve(Some(3), Some(2), None, Format::Json).unwrap();
        let universe = gitstab_core::enumerate_monomials(3, 2).unwrap();
        let ms: Vec<_> = picks.iter().map(|&i| universe.as_slice()[i % universe.len()].clone()).collect();
        let s = SupportSet::new(3, 2, ms).unwrap();
        let input = serde_json::to_string(&s.iter().map(|m| m.exponents().to_vec()).collect::<Vec<_>>()).unwrap();
        let out = cmd_classify(&config, &input).unwrap();
        let r: ClassifyReport = serde_json::from_str(&out.text).unwrap();
        let direct = classify_support(&s, &universe, &gitstab_core::NormalizationCone::standard(3)).unwrap();
        prop_assert_eq!(r.verdict, direct.verdict());
        prop_assert_eq!(r.classification, direct);
    }
}
