//! The boundary stratification graph: canonical families joined by
//! certified degenerations.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use gitstab_core::{stabilizer_lattice, NormalizationCone, SupportSet, WeightVector};
use gitstab_families::family_of;
use gitstab_lp::{decide, find_weight, verify_certificate, Certificate, FeasibilityQuery};
use gitstab_luna::{context_for_support, limit_support, CentralizerContext};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canonical::{canonical_support, Catalogue};
use crate::error::StrataError;

/// A node: a canonical family equal to its own invariant span.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Node {
    /// Position in [`StratGraph::nodes`].
    pub id: usize,
    /// Catalogue name, if any.
    pub label: Option<String>,
    /// The canonical support.
    pub support: SupportSet,
    /// Rank of the diagonal stabilizer lattice.
    pub stabilizer_rank: usize,
    /// Whether the generic member has a closed torus orbit (the barycenter
    /// lies in the relative interior of the exponent hull).
    pub closed: bool,
    /// Closed generic member, yet special members degenerate further.
    pub mixed: bool,
    /// Number of faces of the centralizer arrangement on which every
    /// monomial is strictly negative: unstable members, outside the graph.
    pub unstable_faces: usize,
}

impl Node {
    /// The label, or a positional name.
    pub fn name(&self) -> String {
        self.label.clone().unwrap_or_else(|| format!("F{}", self.id))
    }
}

/// A certified degeneration `from → to`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    /// Source node id.
    pub from: usize,
    /// Target node id.
    pub to: usize,
    /// A centralizer-chamber weight in the source's canonical coordinates.
    /// The source members supported on `M≤0(witness)` degenerate along it
    /// to a family whose canonical form is the target.
    pub witness: WeightVector,
}

/// The stratification graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratGraph {
    /// Nodes in breadth-first discovery order.
    pub nodes: Vec<Node>,
    /// Edges sorted by `(from, to)`.
    pub edges: Vec<Edge>,
}

struct Expansion {
    closed: bool,
    rank: usize,
    unstable_faces: usize,
    targets: Vec<(SupportSet, WeightVector)>,
}

fn face_query(
    ctx: &CentralizerContext,
    universe: &SupportSet,
    signs: &[i8],
) -> FeasibilityQuery {
    let pick = |s: i8| universe.iter().zip(signs).filter(move |(_, &x)| x == s).map(|(m, _)| m);
    ctx.query().zero(pick(0)).strict(pick(-1)).positive(pick(1))
}

/// Whether the generic member of `s` has a closed orbit under the diagonal
/// torus: for every monomial, "`μ ≤ 0` on `s` and `μ ≤ −1` on it" is
/// infeasible over all sum-zero weights.
pub fn torus_polystable(s: &SupportSet) -> Result<bool, StrataError> {
    let torus = NormalizationCone::torus(s.n_vars());
    for m in s.iter() {
        let q = FeasibilityQuery::new(torus.clone()).nonpositive(s.iter()).strict([m]);
        let c = decide(&q)?;
        if !verify_certificate(&q, &c) {
            return Err(StrataError::Verification(format!("polystability of {s}")));
        }
        if c.is_feasible() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The outgoing degenerations of one canonical node.
///
/// Every face of the arrangement of the node's monomial hyperplanes in its
/// centralizer chamber (modulo its stabilizer) with a non-empty zero set
/// `Z` gives a degeneration of the sub-family `M≤0` to `Z`. One face per
/// canonical target is kept (the first in sign-vector order) and its
/// witness is the canonical LP weight of that face.
fn expand(s: &SupportSet) -> Result<Expansion, StrataError> {
    let ctx = context_for_support(s)?;
    if ctx.invariant_universe != *s {
        return Err(StrataError::NotInvariantClosed(s.to_text()));
    }
    let closed = torus_polystable(s)?;
    let rank = ctx.lattice.rank();
    if rank + 1 >= s.n_vars() {
        return Ok(Expansion { closed, rank, unstable_faces: 0, targets: Vec::new() });
    }
    let arrangement = ctx.space().arrangement()?;
    let mut unstable_faces = 0;
    let mut chosen: BTreeMap<SupportSet, Vec<i8>> = BTreeMap::new();
    for face in arrangement.faces() {
        let zero = s.filter({
            let mut it = face.signs.iter();
            move |_| *it.next().expect("one sign per monomial") == 0
        });
        if zero.is_empty() {
            unstable_faces += 1;
            continue;
        }
        if zero == *s {
            continue;
        }
        chosen.entry(canonical_support(&zero)?).or_insert(face.signs);
    }
    let targets = chosen
        .into_iter()
        .map(|(target, signs)| {
            let q = face_query(&ctx, s, &signs);
            match find_weight(&q)? {
                Certificate::Feasible { weight } => Ok((target, weight)),
                Certificate::Infeasible { .. } => Err(StrataError::Verification(format!(
                    "face of {s} has no interior weight"
                ))),
            }
        })
        .collect::<Result<Vec<_>, StrataError>>()?;
    Ok(Expansion { closed, rank, unstable_faces, targets })
}

/// Breadth-first closure of the seeds under certified degeneration.
///
/// Seeds are canonicalized; every node must equal its own invariant span
/// (true of every `V^H` and of every degeneration limit). A frontier is
/// expanded in parallel and merged sequentially in canonical order, so the
/// result is deterministic.
pub fn build_stratification(
    seeds: &[SupportSet],
    catalogue: &Catalogue,
) -> Result<StratGraph, StrataError> {
    let mut index: BTreeMap<SupportSet, usize> = BTreeMap::new();
    let mut nodes: Vec<Node> = Vec::new();
    let mut edges: BTreeSet<(usize, usize, WeightVector)> = BTreeSet::new();
    let mut frontier: VecDeque<usize> = VecDeque::new();
    let mut add = |s: SupportSet, nodes: &mut Vec<Node>, frontier: &mut VecDeque<usize>| {
        *index.entry(s.clone()).or_insert_with(|| {
            let id = nodes.len();
            nodes.push(Node {
                id,
                label: catalogue.label(&s),
                support: s,
                stabilizer_rank: 0,
                closed: false,
                mixed: false,
                unstable_faces: 0,
            });
            frontier.push_back(id);
            id
        })
    };
    for s in seeds {
        add(canonical_support(s)?, &mut nodes, &mut frontier);
    }
    while !frontier.is_empty() {
        let level: Vec<usize> = frontier.drain(..).collect();
        let expansions = level
            .par_iter()
            .map(|&id| expand(&nodes[id].support))
            .collect::<Result<Vec<_>, _>>()?;
        for (id, e) in level.into_iter().zip(expansions) {
            nodes[id].closed = e.closed;
            nodes[id].stabilizer_rank = e.rank;
            nodes[id].unstable_faces = e.unstable_faces;
            nodes[id].mixed = e.closed && !e.targets.is_empty();
            for (target, witness) in e.targets {
                let to = add(target, &mut nodes, &mut frontier);
                edges.insert((id, to, witness));
            }
        }
    }
    let edges = edges
        .into_iter()
        .map(|(from, to, witness)| Edge { from, to, witness })
        .collect();
    Ok(StratGraph { nodes, edges })
}

/// The outcome of [`audit`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Audit {
    /// No directed cycles.
    pub acyclic: bool,
    /// Nodes without outgoing edges.
    pub sinks: Vec<usize>,
    /// Edges whose witness does not replay to the target.
    pub replay_failures: Vec<(usize, usize)>,
    /// Edges along which the stabilizer rank does not increase.
    pub rank_violations: Vec<(usize, usize)>,
    /// Non-closed nodes without outgoing edges.
    pub stuck_nodes: Vec<usize>,
}

impl Audit {
    /// Every check passed and the sink is unique.
    pub fn passed(&self) -> bool {
        self.acyclic
            && self.sinks.len() == 1
            && self.replay_failures.is_empty()
            && self.rank_violations.is_empty()
            && self.stuck_nodes.is_empty()
    }
}

/// Replays one edge: the witness must lie in the source's centralizer
/// chamber modulo its stabilizer, have `μ ≤ 0` with some zero on a
/// sub-family, and the limit of that sub-family must canonicalize to the
/// target.
pub fn replay_edge(graph: &StratGraph, edge: &Edge) -> Result<bool, StrataError> {
    let source = &graph.nodes[edge.from].support;
    let ctx = context_for_support(source)?;
    let w = &edge.witness;
    if !ctx.blocks.contains(w.weights()) || ctx.lattice.basis().iter().any(|b| {
        b.iter().zip(w.weights()).map(|(x, y)| x * y).sum::<i64>() != 0
    }) {
        return Ok(false);
    }
    let family = family_of(w, source, false)?;
    if family.is_empty() {
        return Ok(false);
    }
    let limit = match limit_support(&family, w) {
        Ok(l) if !l.is_empty() => l,
        _ => return Ok(false),
    };
    Ok(canonical_support(&limit)? == graph.nodes[edge.to].support)
}

/// Checks acyclicity, sinks, edge replay and stabilizer-rank growth.
pub fn audit(graph: &StratGraph) -> Result<Audit, StrataError> {
    let n = graph.nodes.len();
    let mut out = vec![Vec::new(); n];
    let mut indegree = vec![0usize; n];
    for e in &graph.edges {
        out[e.from].push(e.to);
        indegree[e.to] += 1;
    }
    let mut queue: VecDeque<usize> = (0..n).filter(|&i| indegree[i] == 0).collect();
    let mut visited = 0;
    while let Some(i) = queue.pop_front() {
        visited += 1;
        for &j in &out[i] {
            indegree[j] -= 1;
            if indegree[j] == 0 {
                queue.push_back(j);
            }
        }
    }
    let replays = graph
        .edges
        .par_iter()
        .map(|e| replay_edge(graph, e))
        .collect::<Result<Vec<_>, _>>()?;
    let ranks = graph
        .nodes
        .iter()
        .map(|node| stabilizer_lattice(&node.support).map(|l| l.rank()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Audit {
        acyclic: visited == n,
        sinks: (0..n).filter(|&i| out[i].is_empty()).collect(),
        replay_failures: graph
            .edges
            .iter()
            .zip(replays)
            .filter(|(_, ok)| !ok)
            .map(|(e, _)| (e.from, e.to))
            .collect(),
        rank_violations: graph
            .edges
            .iter()
            .filter(|e| ranks[e.to] <= ranks[e.from])
            .map(|e| (e.from, e.to))
            .collect(),
        stuck_nodes: (0..n)
            .filter(|&i| !graph.nodes[i].closed && out[i].is_empty())
            .collect(),
    })
}

impl StratGraph {
    /// The node with a given label (exact name or one of its `≡` parts).
    pub fn find(&self, name: &str) -> Option<&Node> {
        self.nodes.iter().find(|n| {
            n.label
                .as_deref()
                .is_some_and(|l| l == name || l.split('≡').any(|p| p == name))
        })
    }

    /// The node with a given canonical support.
    pub fn node_of(&self, canonical: &SupportSet) -> Option<&Node> {
        self.nodes.iter().find(|n| n.support == *canonical)
    }

    /// Whether there is an edge `from → to`.
    pub fn has_edge(&self, from: usize, to: usize) -> bool {
        self.edges.iter().any(|e| e.from == from && e.to == to)
    }

    /// Whether `to` is reachable from `from` (including `from == to`).
    pub fn reaches(&self, from: usize, to: usize) -> bool {
        let mut seen = vec![false; self.nodes.len()];
        let mut stack = vec![from];
        while let Some(i) = stack.pop() {
            if i == to {
                return true;
            }
            if std::mem::replace(&mut seen[i], true) {
                continue;
            }
            stack.extend(self.edges.iter().filter(|e| e.from == i).map(|e| e.to));
        }
        false
    }

    /// The graph restricted to labelled nodes: `a → b` when `b` is reachable
    /// from `a` through unlabelled nodes only.
    pub fn labelled_edges(&self) -> Vec<(usize, usize)> {
        let mut out = BTreeSet::new();
        for a in self.nodes.iter().filter(|n| n.label.is_some()) {
            let mut seen = BTreeSet::new();
            let mut stack = vec![a.id];
            while let Some(i) = stack.pop() {
                for e in self.edges.iter().filter(|e| e.from == i) {
                    if !seen.insert(e.to) {
                        continue;
                    }
                    if self.nodes[e.to].label.is_some() {
                        out.insert((a.id, e.to));
                    } else {
                        stack.push(e.to);
                    }
                }
            }
        }
        out.into_iter().collect()
    }

    /// Graphviz rendering: labelled nodes by name, others by position and
    /// size; closed nodes double-circled, mixed nodes dashed.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph stratification {\n  rankdir=TB;\n");
        for n in &self.nodes {
            let shape = if n.closed { "doublecircle" } else { "circle" };
            let style = if n.mixed { ", style=dashed" } else { "" };
            let _ = writeln!(
                s,
                "  n{} [label=\"{} ({})\", shape={shape}{style}];",
                n.id,
                n.name(),
                n.support.len()
            );
        }
        for e in &self.edges {
            let _ = writeln!(
                s,
                "  n{} -> n{} [label=\"{}\"];",
                e.from,
                e.to,
                e.witness.to_angle_string()
            );
        }
        s.push_str("}\n");
        s
    }
}
