//! The subcommands. Each builds one serializable report and renders it in
//! the requested format, so text and JSON always come from the same record.

use std::fmt::Write as _;

use anyhow::{bail, Context, Result};
use gitstab_core::{all_permutations, enumerate_monomials, ExponentVector, NormalizationCone, SupportSet};
use gitstab_families::{classify_support, maximal_nonstable_families, Classification, FamilyRecord};
use gitstab_luna::{limit_support, luna_classify, luna_report, LunaReport, LunaVerdict};
use gitstab_poset::{hasse, MonomialPoset};
use gitstab_strata::{audit, canonical_support, Audit, StratGraph};
use serde::{Deserialize, Serialize};

use crate::audit::{named_context, run_audit, verify_context_paper, Criterion, PaperAudit};
use crate::config::{Format, Profile, RunConfig};
use crate::reference::{MINIMAL_ORBITS, NONSTABLE, SECOND_LEVEL};
use crate::session::Session;

/// How a command ended.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    /// Everything requested succeeded.
    Success,
    /// A requested verification failed.
    VerificationFailed,
}

impl Status {
    /// The process exit code: 0 on success, 2 on failed verification.
    pub fn code(self) -> i32 {
        match self {
            Status::Success => 0,
            Status::VerificationFailed => 2,
        }
    }

    fn from_ok(ok: bool) -> Self {
        if ok {
            Status::Success
        } else {
            Status::VerificationFailed
        }
    }
}

/// Rendered command output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    /// What to print on standard output.
    pub text: String,
    /// The exit status.
    pub status: Status,
}

impl Output {
    fn ok(text: String) -> Self {
        Output {
            text,
            status: Status::Success,
        }
    }
}

fn json<T: Serialize>(v: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn no_dot(cmd: &str) -> Result<Output> {
    bail!("`{cmd}` has no DOT output; use --format text or json")
}

fn render_criteria(criteria: &[Criterion]) -> String {
    let mut out = String::new();
    for c in criteria {
        let _ = writeln!(
            out,
            "criterion {:>2} {} {}: {}",
            c.id,
            if c.passed { "PASS" } else { "FAIL" },
            c.title,
            c.summary
        );
    }
    out
}

/// Parses a monomial given as comma-separated exponents, e.g. `3,0,0,2,0`.
pub fn parse_exponents(text: &str) -> Result<ExponentVector> {
    let exps = text
        .trim()
        .trim_start_matches('[')
        .trim_end_matches(']')
        .split(',')
        .map(|x| x.trim().parse::<u32>().with_context(|| format!("bad exponent {x:?} in {text:?}")))
        .collect::<Result<Vec<_>>>()?;
    Ok(ExponentVector::new(exps)?)
}

// ---------------------------------------------------------------- poset

/// JSON form of a (sub-)poset: monomials and covering pairs by index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetReport {
    /// Number of variables.
    pub n_vars: usize,
    /// Degree.
    pub degree: u32,
    /// Monomials in lexicographic order.
    pub nodes: Vec<Vec<u32>>,
    /// Covering pairs `(parent, child)` as indices into `nodes`.
    pub covers: Vec<(usize, usize)>,
    /// Maximal monomials.
    pub maxima: Vec<Vec<u32>>,
    /// Minimal monomials.
    pub minima: Vec<Vec<u32>>,
}

impl PosetReport {
    fn new(p: &MonomialPoset) -> Self {
        let u = p.universe();
        let index = |m: &ExponentVector| u.as_slice().binary_search(m).expect("universe member");
        let rows = |ms: Vec<&ExponentVector>| ms.into_iter().map(|m| m.exponents().to_vec()).collect();
        PosetReport {
            n_vars: u.n_vars(),
            degree: u.degree(),
            nodes: u.iter().map(|m| m.exponents().to_vec()).collect(),
            covers: p.covers().into_iter().map(|(a, b)| (index(a), index(b))).collect(),
            maxima: rows(p.maxima()),
            minima: rows(p.minima()),
        }
    }
}

/// `poset`: the dominance order of the profile's monomials, optionally
/// restricted to the downset of some tops.
pub fn cmd_poset(config: &RunConfig, downset: &[String]) -> Result<Output> {
    let Profile { n_vars, degree } = config.profile;
    let universe = enumerate_monomials(n_vars, degree)?;
    let mut poset = hasse(&universe, &NormalizationCone::standard(n_vars))?;
    if !downset.is_empty() {
        let tops = downset.iter().map(|t| parse_exponents(t)).collect::<Result<Vec<_>>>()?;
        let below = poset.downset(tops.iter())?;
        poset = poset.restrict(&below)?;
    }
    let text = match config.format {
        Format::Dot => poset.to_dot(),
        Format::Json => json(&PosetReport::new(&poset))?,
        Format::Text => {
            let r = PosetReport::new(&poset);
            let show = |m: &Vec<u32>| ExponentVector::from_slice(m).to_string();
            let mut out = format!(
                "{} monomials, {} covering pairs\nmaximal: {}\nminimal: {}\n",
                r.nodes.len(),
                r.covers.len(),
                r.maxima.iter().map(show).collect::<Vec<_>>().join(" "),
                r.minima.iter().map(show).collect::<Vec<_>>().join(" "),
            );
            for (p, c) in &r.covers {
                let _ = writeln!(out, "{} > {}", show(&r.nodes[*p]), show(&r.nodes[*c]));
            }
            out
        }
    };
    Ok(Output::ok(text))
}


// ---------------------------------------------------------------- nonstable

/// One row of the non-stable family table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonstableRow {
    /// Position in the computed list.
    pub index: usize,
    /// The published label, when the support equals a published family.
    pub label: Option<String>,
    /// Destabilizing 1-PS.
    pub destabilizer: String,
    /// Maximal monomials of the family.
    pub maximal_monomials: Vec<String>,
    /// Number of monomials.
    pub size: usize,
    /// The support as a polynomial pattern.
    pub support: String,
    /// Label (or canonical support) of the limit along the destabilizer.
    pub degeneration: String,
    /// Destabilizing flag, with `--flags`.
    pub flag: Option<String>,
}

fn degeneration_name(session: Option<&Session>, s: &SupportSet, r: &FamilyRecord) -> Result<String> {
    let limit = limit_support(s, &r.destabilizer)?;
    let canonical = canonical_support(&limit)?;
    Ok(session
        .and_then(|x| x.catalogue().label(&canonical))
        .unwrap_or_else(|| canonical.to_text()))
}

/// `nonstable`: all maximal non-stable families of the profile.
pub fn cmd_nonstable(config: &RunConfig, flags: bool, verify_paper: bool) -> Result<Output> {
    let Profile { n_vars, degree } = config.profile;
    let session = if config.profile.is_quintic() {
        Some(Session::quintic()?)
    } else {
        None
    };
    let universe = enumerate_monomials(n_vars, degree)?;
    let records = match &session {
        Some(s) => s.nonstable()?.to_vec(),
        None => maximal_nonstable_families(&universe, &NormalizationCone::standard(n_vars))?,
    };
    let mut rows = Vec::new();
    for (index, r) in records.iter().enumerate() {
        let label = if session.is_some() {
            NONSTABLE
                .iter()
                .find(|t| t.support().is_ok_and(|s| s == r.support))
                .map(|t| t.label.to_string())
        } else {
            None
        };
        rows.push(NonstableRow {
            index,
            label,
            destabilizer: r.destabilizer.to_angle_string(),
            maximal_monomials: r.maximal_monomials.iter().map(ToString::to_string).collect(),
            size: r.support.len(),
            support: r.support.to_text(),
            degeneration: degeneration_name(session.as_ref(), &r.support, r)?,
            flag: flags.then(|| r.flag.to_string()),
        });
    }
    let criteria = match (&session, verify_paper) {
        (Some(s), true) => vec![
            crate::audit::criterion_3(s)?,
            crate::audit::criterion_4(s)?,
            crate::audit::criterion_5(s)?,
        ],
        (None, true) => bail!("--verify-paper applies to the quintic profile (5,5) only"),
        _ => Vec::new(),
    };
    let status = Status::from_ok(criteria.iter().all(|c| c.passed));
    let text = match config.format {
        Format::Dot => return no_dot("nonstable"),
        Format::Json => json(&serde_json::json!({ "families": rows, "verification": criteria }))?,
        Format::Text => {
            let mut out = format!("{} maximal non-stable families\n", rows.len());
            for r in &rows {
                let _ = write!(
                    out,
                    "{:>3} {:<4} {:<20} {:>3} monomials  max {:<40} → {}",
                    r.index,
                    r.label.as_deref().unwrap_or("-"),
                    r.destabilizer,
                    r.size,
                    r.maximal_monomials.join(" "),
                    r.degeneration
                );
                if let Some(f) = &r.flag {
                    let _ = write!(out, "  flag {f}");
                }
                out.push('\n');
            }
            out + &render_criteria(&criteria)
        }
    };
    Ok(Output { text, status })
}

// ---------------------------------------------------------------- luna

/// The `luna` report: the context, its sub-families and verdicts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LunaCommandReport {
    /// The family label.
    pub label: String,
    /// The verdict on the generic member of the whole family.
    pub generic_verdict: String,
    /// Sub-families and their verdicts.
    pub report: LunaReport,
    /// `--verify-paper` lines: printed label, verified, explanation.
    pub verification: Vec<(String, bool, String)>,
}

/// All family labels accepted by `luna`.
pub fn family_labels() -> Vec<&'static str> {
    MINIMAL_ORBITS.iter().chain(SECOND_LEVEL.iter()).map(|r| r.label).collect()
}

/// `luna LABEL`: the Luna recursion inside one minimal-orbit family.
pub fn cmd_luna(config: &RunConfig, label: &str, verify_paper: bool) -> Result<Output> {
    if !family_labels().contains(&label) {
        bail!("unknown family {label:?}; expected one of {}", family_labels().join(", "));
    }
    if !config.profile.is_quintic() {
        bail!("`luna` works on the quintic profile (5,5) only");
    }
    let ctx = named_context(label)?;
    let generic = luna_classify(&ctx.invariant_universe, &ctx)?;
    let report = luna_report(&ctx)?;
    let verification = if verify_paper {
        verify_context_paper(label, &ctx, &report.semistable)?
    } else {
        Vec::new()
    };
    let status = Status::from_ok(verification.iter().all(|(_, ok, _)| *ok));
    let r = LunaCommandReport {
        label: label.to_string(),
        generic_verdict: generic.name().to_string(),
        report,
        verification,
    };
    let text = match config.format {
        Format::Dot => return no_dot("luna"),
        Format::Json => json(&r)?,
        Format::Text => render_luna(&r, &generic),
    };
    Ok(Output { text, status })
}

fn render_luna(r: &LunaCommandReport, generic: &LunaVerdict) -> String {
    let rep = &r.report;
    let mut out = format!(
        "{}: H = {}, centralizer blocks {:?}, |V^H| = {}\n",
        r.label,
        rep.h.to_angle_string(),
        rep.blocks,
        rep.universe_size
    );
    let generic_text = match generic {
        LunaVerdict::ClosedOrbit { .. } if rep.semistable.is_empty() => {
            "closed orbit; no destabilizing 1-PS".to_string()
        }
        LunaVerdict::ClosedOrbit { .. } => "closed orbit".to_string(),
        LunaVerdict::Degenerates { weight, limit, .. } => {
            format!("degenerates along {} to {}", weight.to_angle_string(), limit.to_text())
        }
        LunaVerdict::UnstablePoint { weight, .. } => format!("unstable ({})", weight.to_angle_string()),
    };
    let _ = writeln!(out, "generic member: {generic_text}");
    let _ = writeln!(out, "semistable sub-families: {}", rep.semistable.len());
    for (f, v) in rep.semistable.iter().zip(&rep.verdicts) {
        let _ = writeln!(
            out,
            "  #{:<2} {:<22} {:>2} monomials  {}{}",
            v.family,
            f.destabilizer.to_angle_string(),
            f.support.len(),
            v.verdict,
            v.weight
                .as_ref()
                .map_or(String::new(), |w| format!(" along {}", w.to_angle_string()))
        );
        let _ = writeln!(out, "      {}", f.support.to_text());
    }
    let _ = writeln!(out, "unstable sub-families: {}", rep.unstable.len());
    for f in &rep.unstable {
        let _ = writeln!(
            out,
            "  {:<22} {:>2} monomials  {}",
            f.destabilizer.to_angle_string(),
            f.support.len(),
            f.support.to_text()
        );
    }
    for (label, ok, text) in &r.verification {
        let _ = writeln!(out, "verify {:<8} {} {}", label, if *ok { "PASS" } else { "FAIL" }, text);
    }
    out
}

// ---------------------------------------------------------------- strata

/// The `strata` JSON report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrataReport {
    /// The graph.
    pub graph: StratGraph,
    /// Structural audit, with `--audit`.
    pub audit: Option<Audit>,
    /// Whether the unique sink is `x0x1x2x3x4`, with `--sink-check`.
    pub sink_check: Option<bool>,
}

/// Whether the graph has exactly one sink and it is the normal-crossings
/// family `{x0⋯x4}`.
pub fn sink_is_normal_crossings(g: &StratGraph, a: &Audit) -> Result<bool> {
    let nc = canonical_support(&SupportSet::parse("x0*x1*x2*x3*x4", 5)?)?;
    Ok(a.sinks.len() == 1 && g.nodes[a.sinks[0]].support == nc)
}

/// `strata`: the boundary stratification graph.
pub fn cmd_strata(config: &RunConfig, run_audit_flag: bool, sink_check: bool, verify_paper: bool) -> Result<Output> {
    if !config.profile.is_quintic() {
        bail!("`strata` works on the quintic profile (5,5) only");
    }
    let session = Session::quintic()?;
    let g = session.graph()?.clone();
    let a = if run_audit_flag || sink_check {
        Some(audit(&g)?)
    } else {
        None
    };
    let sink = match (&a, sink_check) {
        (Some(a), true) => Some(sink_is_normal_crossings(&g, a)?),
        _ => None,
    };
    let criteria = if verify_paper {
        let mut findings = Vec::new();
        vec![crate::audit::criterion_9(&session, &mut findings)?]
    } else {
        Vec::new()
    };
    let ok = a.as_ref().map_or(true, |a| !run_audit_flag || a.passed())
        && sink.unwrap_or(true)
        && criteria.iter().all(|c| c.passed);
    let report = StrataReport {
        graph: g,
        audit: a,
        sink_check: sink,
    };
    let text = match config.format {
        Format::Dot => report.graph.to_dot(),
        Format::Json => json(&report)?,
        Format::Text => {
            let g = &report.graph;
            let mut out = format!("{} nodes, {} edges\n", g.nodes.len(), g.edges.len());
            for n in &g.nodes {
                let _ = writeln!(
                    out,
                    "node {:<3} {:<18} rank {} {}{} {}",
                    n.id,
                    n.name(),
                    n.stabilizer_rank,
                    if n.closed { "closed" } else { "open" },
                    if n.mixed { " mixed" } else { "" },
                    n.support.to_text()
                );
            }
            for e in &g.edges {
                let _ = writeln!(
                    out,
                    "edge {} -> {} along {}",
                    g.nodes[e.from].name(),
                    g.nodes[e.to].name(),
                    e.witness.to_angle_string()
                );
            }
            if let Some(a) = &report.audit {
                let _ = writeln!(
                    out,
                    "audit: {} (acyclic {}, sinks {}, replay failures {}, rank violations {}, stuck nodes {})",
                    if a.passed() { "PASS" } else { "FAIL" },
                    a.acyclic,
                    a.sinks.len(),
                    a.replay_failures.len(),
                    a.rank_violations.len(),
                    a.stuck_nodes.len()
                );
            }
            if let Some(s) = report.sink_check {
                let _ = writeln!(out, "sink check: {}", if s { "PASS" } else { "FAIL" });
            }
            out + &render_criteria(&criteria)
        }
    };
    Ok(Output {
        text,
        status: Status::from_ok(ok),
    })
}

// ---------------------------------------------------------------- classify

/// The `classify` report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    /// The support as parsed.
    pub support: Vec<Vec<u32>>,
    /// `Stable`, `NonStable` or `Unstable`.
    pub verdict: String,
    /// The containing maximal non-stable family (non-stable verdicts).
    pub family: Option<String>,
    /// The full certificate.
    pub classification: Classification,
}

/// Parses a support from monomial text or a JSON list of exponent lists,
/// checking it against the profile.
pub fn parse_support_input(input: &str, config: &RunConfig) -> Result<SupportSet> {
    let Profile { n_vars, degree } = config.profile;
    let s = if input.trim_start().starts_with('[') {
        let rows: Vec<Vec<u32>> = serde_json::from_str(input).context("invalid JSON exponent lists")?;
        let ms = rows
            .into_iter()
            .map(|r| {
                if r.len() != n_vars {
                    bail!("monomial {r:?} has {} exponents, expected {n_vars}", r.len());
                }
                Ok(ExponentVector::new(r)?)
            })
            .collect::<Result<Vec<_>>>()?;
        SupportSet::new(n_vars, degree, ms)?
    } else {
        SupportSet::parse(input, n_vars)?
    };
    if s.is_empty() {
        bail!("empty support");
    }
    if s.degree() != degree {
        bail!("the input has degree {}, but the profile degree is {degree}", s.degree());
    }
    Ok(s)
}

/// Finds a maximal non-stable family containing some permutation of `s`,
/// preferring published families.
fn containing_family(s: &SupportSet, c: &Classification, records: &[FamilyRecord], quintic: bool) -> Option<String> {
    let mut perms = Vec::new();
    perms.extend(c.permutation().cloned());
    perms.extend(all_permutations(s.n_vars()));
    let named = |r: &FamilyRecord| {
        if quintic {
            NONSTABLE
                .iter()
                .find(|t| t.support().is_ok_and(|x| x == r.support))
                .map(|t| t.label.to_string())
        } else {
            None
        }
    };
    let hits: Vec<(usize, Option<String>)> = perms
        .iter()
        .flat_map(|p| {
            let t = s.permuted(p);
            records
                .iter()
                .enumerate()
                .filter(move |(_, r)| t.is_subset(&r.support))
                .map(|(i, r)| (i, named(r)))
                .collect::<Vec<_>>()
        })
        .collect();
    let (i, name) = hits
        .iter()
        .find(|(_, n)| n.is_some())
        .or_else(|| hits.first())?
        .clone();
    Some(name.unwrap_or_else(|| format!("#{i} {}", records[i].destabilizer.to_angle_string())))
}

/// `classify EXPR`: the Hilbert–Mumford verdict for a support.
pub fn cmd_classify(config: &RunConfig, input: &str) -> Result<Output> {
    let s = parse_support_input(input, config)?;
    let Profile { n_vars, degree } = config.profile;
    let universe = enumerate_monomials(n_vars, degree)?;
    let cone = NormalizationCone::standard(n_vars);
    let c = classify_support(&s, &universe, &cone)?;
    let family = if matches!(c, Classification::NonStable { .. }) {
        let records = if config.profile.is_quintic() {
            Session::quintic()?.nonstable()?.to_vec()
        } else {
            maximal_nonstable_families(&universe, &cone)?
        };
        containing_family(&s, &c, &records, config.profile.is_quintic())
    } else {
        None
    };
    let report = ClassifyReport {
        support: s.iter().map(|m| m.exponents().to_vec()).collect(),
        verdict: c.verdict().to_string(),
        family,
        classification: c,
    };
    let text = match config.format {
        Format::Dot => return no_dot("classify"),
        Format::Json => json(&report)?,
        Format::Text => {
            let mut out = format!("{}\n", report.classification);
            if let Some(f) = &report.family {
                let _ = writeln!(out, "family {f}");
            }
            out
        }
    };
    Ok(Output::ok(text))
}

// ---------------------------------------------------------------- audit

/// The full paper audit (`--verify-paper` without a subcommand).
pub fn cmd_verify_paper(config: &RunConfig) -> Result<Output> {
    if !config.profile.is_quintic() {
        bail!("--verify-paper applies to the quintic profile (5,5) only");
    }
    let session = Session::quintic()?;
    let a: PaperAudit = run_audit(&session)?;
    let status = Status::from_ok(a.passed());
    let text = match config.format {
        Format::Dot => return no_dot("--verify-paper"),
        Format::Json => json(&a)?,
        Format::Text => {
            let mut out = render_criteria(&a.criteria);
            for f in &a.findings {
                let _ = writeln!(out, "finding {}: {}", f.subject, f.message);
            }
            for f in &a.normalizations {
                let _ = writeln!(out, "reading {}: {}", f.subject, f.message);
            }
            out
        }
    };
    Ok(Output { text, status })
}
