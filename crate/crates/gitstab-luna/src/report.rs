//! Maximal sub-families of a context and the per-context report.

use gitstab_core::{ExponentVector, Permutation, SupportSet, WeightVector};
use gitstab_families::{maximal_families, FamilyRecord, Threshold};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::context::CentralizerContext;
use crate::error::LunaError;
use crate::verdict::{luna_classify, LunaVerdict};

/// The maximal sublevel families of a context.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SublevelFamilies {
    /// Inclusion-maximal `M_{≤0}` families of `V^H` over the centralizer
    /// chamber (modulo the stabilizer).
    pub semistable: Vec<FamilyRecord>,
    /// Inclusion-maximal `M_{<0}` families.
    pub unstable: Vec<FamilyRecord>,
}

/// Runs the complete maximal-family enumeration inside the context, for
/// both thresholds.
pub fn sublevel_families(ctx: &CentralizerContext) -> Result<SublevelFamilies, LunaError> {
    let space = ctx.space();
    let (semistable, unstable) = rayon::join(
        || maximal_families(&space, Threshold::NonPositive),
        || maximal_families(&space, Threshold::Negative),
    );
    Ok(SublevelFamilies {
        semistable: semistable?,
        unstable: unstable?,
    })
}

/// One line of the verdict table: the verdict on the generic member of a
/// semistable sub-family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRow {
    /// Index into the report's `semistable` list.
    pub family: usize,
    /// `ClosedOrbit`, `Degenerates` or `UnstablePoint`.
    pub verdict: String,
    /// The block permutation the witness refers to.
    pub permutation: Option<Permutation>,
    /// The witness weight.
    pub weight: Option<WeightVector>,
    /// The limit support, for degenerations.
    pub limit: Option<Vec<ExponentVector>>,
}

impl VerdictRow {
    fn new(family: usize, v: &LunaVerdict) -> Self {
        let (permutation, weight, limit) = match v {
            LunaVerdict::ClosedOrbit { .. } => (None, None, None),
            LunaVerdict::UnstablePoint { permutation, weight } => {
                (Some(permutation.clone()), Some(weight.clone()), None)
            }
            LunaVerdict::Degenerates {
                permutation,
                weight,
                limit,
            } => (
                Some(permutation.clone()),
                Some(weight.clone()),
                Some(limit.as_slice().to_vec()),
            ),
        };
        VerdictRow {
            family,
            verdict: v.name().to_string(),
            permutation,
            weight,
            limit,
        }
    }
}

/// The JSON report of one context.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LunaReport {
    /// The invariant 1-PS.
    pub h: WeightVector,
    /// The centralizer blocks.
    pub blocks: Vec<Vec<usize>>,
    /// `|V^H|`.
    pub universe_size: usize,
    /// Maximal non-positive sub-families.
    pub semistable: Vec<FamilyRecord>,
    /// Maximal negative sub-families.
    pub unstable: Vec<FamilyRecord>,
    /// Verdicts on the semistable sub-families, in order.
    pub verdicts: Vec<VerdictRow>,
}

/// Builds the report of a context: sub-families and the verdict on each
/// semistable one.
pub fn luna_report(ctx: &CentralizerContext) -> Result<LunaReport, LunaError> {
    let families = sublevel_families(ctx)?;
    let verdicts = families
        .semistable
        .par_iter()
        .enumerate()
        .map(|(i, f)| luna_classify(&f.support, ctx).map(|v| VerdictRow::new(i, &v)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(LunaReport {
        h: ctx.h.clone(),
        blocks: ctx.blocks.blocks().to_vec(),
        universe_size: ctx.invariant_universe.len(),
        semistable: families.semistable,
        unstable: families.unstable,
        verdicts,
    })
}

/// Whether a printed destabilizer witnesses a printed sub-family: `μ ≤ 0` on
/// every monomial with `μ = 0` attained.
pub fn witnesses_family(w: &WeightVector, family: &SupportSet) -> bool {
    let mus: Vec<i64> = family.iter().map(|m| m.dot(w.weights())).collect();
    !mus.is_empty() && mus.iter().all(|&x| x <= 0) && mus.contains(&0)
}
