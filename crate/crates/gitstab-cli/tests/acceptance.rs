//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Criteria that hold are asserted to hold. Criteria on which the published
//! data and the computation disagree are reported as FAIL, and the test
//! pins the exact measured disagreement instead, so that any change in the
//! engine or the transcriptions is noticed.

use std::collections::BTreeSet;
use std::process::Command;

use gitstab_cli::audit::{run_audit, Criterion, PaperAudit};
use gitstab_cli::session::Session;
use serde_json::Value;

/// Criteria that fail against the published data, with the reason.
const KNOWN_DIVERGENCES: [(u32, &str); 4] = [
    (3, "the complete enumeration finds 38 maximal families; the 7 published ones are among them"),
    (6, "the printed 1-PS of MO2-IV also lies outside its lattice (weights sum to -1)"),
    (7, "the complete sub-family enumeration gives 7/8/9/5 families, not 5/4/1/4"),
    (8, "US17-A, US4-III, US1-X and US2-X contain the barycenter in their exponent hull"),
];

fn line(id: u32, passed: bool, summary: &str) {
    println!(
        "criterion {id:>2}: {} — {summary}",
        if passed { "PASS" } else { "FAIL" }
    );
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array()
        .expect("array")
        .iter()
        .map(|x| x.as_str().expect("string").to_string())
        .collect()
}

fn pin_criterion_3(c: &Criterion) {
    let d = &c.details;
    assert_eq!(d["families"], 38);
    assert!(d["unverified"].as_array().unwrap().is_empty());
    let rows = d["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 7);
    for r in rows {
        assert!(r["family"].is_u64(), "{} not found", r["label"]);
        assert_eq!(r["destabilizer_matches"], true, "{}", r["label"]);
    }
}

fn pin_criterion_6(c: &Criterion) {
    let d = &c.details;
    assert_eq!(strings(&d["flagged"]), ["MO2-I", "MO2-IV", "MO2-V"]);
    for r in d["rows"].as_array().unwrap() {
        let label = r["label"].as_str().unwrap();
        if !label.starts_with("MO2") {
            assert_eq!(r["in_lattice"], true, "{label}");
        }
        if r["in_lattice"] == false {
            assert!(r["replacement"].is_array(), "{label} has no replacement");
        }
    }
    let iv = d["rows"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["label"] == "MO2-IV")
        .unwrap();
    assert_eq!(iv["sum"], -1);
    assert_eq!(iv["projectively_in_lattice"], true);
}

fn pin_criterion_7(c: &Criterion) {
    let counts: Vec<(String, u64, u64)> = c.details["counts"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| {
            (
                x["context"].as_str().unwrap().to_string(),
                x["computed"].as_u64().unwrap(),
                x["printed"].as_u64().unwrap(),
            )
        })
        .collect();
    assert_eq!(
        counts,
        [
            ("MO-A".to_string(), 7, 5),
            ("MO-B".to_string(), 8, 4),
            ("MO-C".to_string(), 9, 1),
            ("MO-D".to_string(), 5, 4)
        ]
    );
    let witnesses = c.details["witnesses"].as_array().unwrap();
    let checked: Vec<&Value> = witnesses.iter().filter(|w| !w["verdict"].is_null()).collect();
    assert_eq!(checked.len(), 46);
    assert!(checked.iter().all(|w| w["verdict"] == true));
}

fn pin_criterion_8(c: &Criterion) {
    let rows = c.details.as_array().unwrap();
    let failed: BTreeSet<&str> = rows
        .iter()
        .filter(|r| r["verified"] == false)
        .map(|r| r["label"].as_str().unwrap())
        .collect();
    assert_eq!(failed, BTreeSet::from(["US17-A", "US4-III", "US1-X", "US2-X"]));
    for r in rows.iter().filter(|r| r["verified"] == false) {
        assert_eq!(r["barycenter_in_hull"], true, "{}", r["label"]);
    }
    assert_eq!(rows.len() - failed.len(), 58);
}

fn run_binary() -> (Option<i32>, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_gitstab"))
        .args(["--verify-paper", "--format", "json"])
        .env_remove("GITSTAB_PROFILE")
        .output()
        .expect("run gitstab");
    (out.status.code(), out.stdout)
}

#[test]
fn acceptance() {
    let session = Session::quintic().expect("session");
    let audit: PaperAudit = run_audit(&session).expect("audit");
    assert_eq!(audit.criteria.len(), 10);

    let mut unexpected = Vec::new();
    for c in &audit.criteria {
        line(c.id, c.passed, &c.summary);
        match KNOWN_DIVERGENCES.iter().find(|(id, _)| *id == c.id) {
            Some((_, why)) => {
                println!("             known divergence: {why}");
                match c.id {
                    3 => pin_criterion_3(c),
                    6 => pin_criterion_6(c),
                    7 => pin_criterion_7(c),
                    8 => pin_criterion_8(c),
                    _ => unreachable!(),
                }
            }
            None if !c.passed => unexpected.push(c.id),
            None => {}
        }
    }

    let (code_a, first) = run_binary();
    let (code_b, second) = run_binary();
    let in_process = serde_json::to_string_pretty(&audit).unwrap() + "\n";
    let identical = !first.is_empty() && first == second && first == in_process.as_bytes();
    line(
        11,
        identical,
        &format!(
            "two --verify-paper runs: {} and {} bytes, identical: {identical}; exit codes {:?}/{:?}",
            first.len(),
            second.len(),
            code_a,
            code_b
        ),
    );
    if !identical {
        unexpected.push(11);
    }
    // Known divergences make the full verification report a failure.
    assert_eq!(code_a, Some(2));
    assert_eq!(code_b, Some(2));

    assert!(unexpected.is_empty(), "criteria failed unexpectedly: {unexpected:?}");
}
