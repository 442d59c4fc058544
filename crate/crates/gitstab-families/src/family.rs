//! Families `M_{≤0}(w)` / `M_{<0}(w)` and their complete enumeration.

use std::collections::BTreeSet;

use gitstab_core::{
    ExponentVector, Lattice, NormalizationCone, SupportSet, WeightVector,
};
use gitstab_lp::{decide, find_weight, verify_certificate, Certificate, FeasibilityQuery};
use gitstab_poset::MonomialPoset;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arrangement::Arrangement;
use crate::error::FamilyError;
use crate::flag::{associated_flag, Flag};

/// Which sublevel set of the numerical function is meant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Threshold {
    /// `μ ≤ 0`: non-stable families.
    NonPositive,
    /// `μ < 0` (equivalently `μ ≤ −1`): unstable families.
    Negative,
}

impl Threshold {
    fn admits(self, mu: i64) -> bool {
        match self {
            Threshold::NonPositive => mu <= 0,
            Threshold::Negative => mu < 0,
        }
    }

    fn query<'a>(
        self,
        cone: &NormalizationCone,
        quotient: Option<&Lattice>,
        ms: impl IntoIterator<Item = &'a ExponentVector>,
    ) -> FeasibilityQuery {
        let q = FeasibilityQuery::new(cone.clone()).nontrivial(true);
        let q = match quotient {
            Some(l) => q.modulo(l),
            None => q,
        };
        match self {
            Threshold::NonPositive => q.nonpositive(ms),
            Threshold::Negative => q.strict(ms),
        }
    }
}

/// `{ m ∈ universe : μ(m, w) ≤ 0 }`, or `< 0` when `strict`.
pub fn family_of(w: &WeightVector, universe: &SupportSet, strict: bool) -> Result<SupportSet, FamilyError> {
    if w.is_zero() {
        return Err(FamilyError::ZeroWeight);
    }
    if w.n_vars() != universe.n_vars() {
        return Err(gitstab_core::CoreError::LengthMismatch {
            expected: universe.n_vars(),
            found: w.n_vars(),
        }
        .into());
    }
    let threshold = if strict { Threshold::Negative } else { Threshold::NonPositive };
    Ok(universe.filter(|m| threshold.admits(m.dot(w.weights()))))
}

/// Proof that a family cannot be enlarged by one monomial: the query
/// "family ∪ {m} all below the threshold" is infeasible.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Exclusion {
    /// The monomial that cannot be added.
    pub monomial: ExponentVector,
    /// The infeasibility certificate.
    pub certificate: Certificate,
}

/// A maximal family with its destabilizing weight and certificates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyRecord {
    /// Optional name (assigned by callers that match reference tables).
    pub label: Option<String>,
    /// The canonical witness: smallest max-norm, lexicographically greatest.
    pub destabilizer: WeightVector,
    /// Members not dominated by any other member.
    pub maximal_monomials: Vec<ExponentVector>,
    /// All members.
    #[serde(with = "support_list")]
    pub support: SupportSet,
    /// The flag of the destabilizer.
    pub flag: Flag,
    /// The threshold the family is maximal for.
    #[serde(skip, default = "default_threshold")]
    pub threshold: Threshold,
    /// One infeasibility certificate per universe monomial outside the
    /// family (kept in memory, not serialized).
    #[serde(skip)]
    pub maximality: Vec<Exclusion>,
}

fn default_threshold() -> Threshold {
    Threshold::NonPositive
}

/// Serializes a support as a plain list of exponent vectors.
mod support_list {
    use gitstab_core::{ExponentVector, SupportSet};
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(s: &SupportSet, ser: S) -> Result<S::Ok, S::Error> {
        s.as_slice().serialize(ser)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<SupportSet, D::Error> {
        let ms = Vec::<ExponentVector>::deserialize(d)?;
        SupportSet::from_monomials(ms).map_err(serde::de::Error::custom)
    }
}

/// Members of `s` not dominated by another member in the cone order.
pub fn maximal_elements(s: &SupportSet, cone: &NormalizationCone) -> Vec<ExponentVector> {
    s.iter()
        .filter(|m| {
            !s.iter()
                .any(|o| o != *m && cone.dominates(m, o).unwrap_or(false))
        })
        .cloned()
        .collect()
}

/// Where a family search takes place: a universe of monomials, a cone, and
/// optionally a lattice of weights acting trivially.
#[derive(Clone, Copy, Debug)]
pub struct SearchSpace<'a> {
    /// The monomials considered.
    pub universe: &'a SupportSet,
    /// The admissible weights.
    pub cone: &'a NormalizationCone,
    /// Weights are taken orthogonal to this lattice.
    pub quotient: Option<&'a Lattice>,
}

impl<'a> SearchSpace<'a> {
    /// A search without quotient.
    pub fn new(universe: &'a SupportSet, cone: &'a NormalizationCone) -> Self {
        SearchSpace {
            universe,
            cone,
            quotient: None,
        }
    }

    /// The same search modulo `lattice`.
    pub fn modulo(self, lattice: &'a Lattice) -> Self {
        SearchSpace {
            quotient: Some(lattice),
            ..self
        }
    }

    /// The feasibility query "all of `ms` below `threshold`, w ≠ 0".
    pub fn query<'b>(
        &self,
        threshold: Threshold,
        ms: impl IntoIterator<Item = &'b ExponentVector>,
    ) -> FeasibilityQuery {
        threshold.query(self.cone, self.quotient, ms)
    }

    /// The hyperplane arrangement of this search space.
    pub fn arrangement(&self) -> Result<Arrangement, FamilyError> {
        Arrangement::new(self.universe, self.cone, self.quotient)
    }
}

/// Builds the certified record of a candidate maximal family.
pub fn certify_family(
    space: &SearchSpace<'_>,
    support: &SupportSet,
    threshold: Threshold,
) -> Result<FamilyRecord, FamilyError> {
    let q = space.query(threshold, support.iter());
    let cert = find_weight(&q)?;
    if !verify_certificate(&q, &cert) {
        return Err(FamilyError::Verification(format!(
            "destabilizer of {support}"
        )));
    }
    let Certificate::Feasible { weight } = cert else {
        return Err(FamilyError::Verification(format!(
            "no destabilizer for candidate family {support}"
        )));
    };
    let realized = family_of(&weight, space.universe, threshold == Threshold::Negative)?;
    if realized != *support {
        return Err(FamilyError::Verification(format!(
            "{weight} realizes a different family than {support}"
        )));
    }
    let mut maximality = Vec::new();
    for m in space.universe.iter().filter(|m| !support.contains(m)) {
        let q = space.query(threshold, support.iter().chain([m]));
        let c = decide(&q)?;
        if c.is_feasible() || !verify_certificate(&q, &c) {
            return Err(FamilyError::Verification(format!(
                "family {support} is not maximal: {m} can be added"
            )));
        }
        maximality.push(Exclusion {
            monomial: m.clone(),
            certificate: c,
        });
    }
    Ok(FamilyRecord {
        label: None,
        flag: associated_flag(&weight)?,
        destabilizer: weight,
        maximal_monomials: maximal_elements(support, space.cone),
        support: support.clone(),
        threshold,
        maximality,
    })
}

/// Re-checks a record: destabilizer, realized family and every exclusion.
pub fn verify_record(space: &SearchSpace<'_>, record: &FamilyRecord) -> bool {
    let threshold = record.threshold;
    let q = space.query(threshold, record.support.iter());
    let feasible = Certificate::Feasible {
        weight: record.destabilizer.clone(),
    };
    if !verify_certificate(&q, &feasible) {
        return false;
    }
    match family_of(&record.destabilizer, space.universe, threshold == Threshold::Negative) {
        Ok(f) if f == record.support => {}
        _ => return false,
    }
    let outside: Vec<&ExponentVector> = space
        .universe
        .iter()
        .filter(|m| !record.support.contains(m))
        .collect();
    outside.len() == record.maximality.len()
        && outside.iter().zip(&record.maximality).all(|(m, ex)| {
            *m == &ex.monomial
                && !ex.certificate.is_feasible()
                && verify_certificate(
                    &space.query(threshold, record.support.iter().chain([*m])),
                    &ex.certificate,
                )
        })
}

fn inclusion_maximal(families: BTreeSet<SupportSet>) -> Vec<SupportSet> {
    let all: Vec<SupportSet> = families.into_iter().filter(|f| !f.is_empty()).collect();
    all.iter()
        .filter(|f| !all.iter().any(|g| g != *f && f.is_subset(g)))
        .cloned()
        .collect()
}

/// All inclusion-maximal families for `threshold`, each certified.
///
/// The enumeration is complete: non-positive families are read off the rays
/// of the arrangement, negative families off its faces (see
/// [`crate::arrangement`]). Records are sorted by support.
pub fn maximal_families(
    space: &SearchSpace<'_>,
    threshold: Threshold,
) -> Result<Vec<FamilyRecord>, FamilyError> {
    let arr = space.arrangement()?;
    let candidates: BTreeSet<SupportSet> = match threshold {
        Threshold::NonPositive => arr
            .rays()
            .iter()
            .map(|r| family_of(r, space.universe, false))
            .collect::<Result<_, _>>()?,
        Threshold::Negative => arr
            .faces()
            .iter()
            .map(|f| {
                space.universe.filter(|m| {
                    let i = space
                        .universe
                        .as_slice()
                        .binary_search(m)
                        .expect("universe member");
                    f.signs[i] < 0
                })
            })
            .collect(),
    };
    let maximal = inclusion_maximal(candidates);
    let mut records: Vec<FamilyRecord> = maximal
        .par_iter()
        .map(|s| certify_family(space, s, threshold))
        .collect::<Result<_, _>>()?;
    records.sort_by(|a, b| a.support.cmp(&b.support));
    Ok(records)
}

/// All maximal non-stable families `M_{≤0}(w)` of `universe` over `cone`.
pub fn maximal_nonstable_families(
    universe: &SupportSet,
    cone: &NormalizationCone,
) -> Result<Vec<FamilyRecord>, FamilyError> {
    maximal_families(&SearchSpace::new(universe, cone), Threshold::NonPositive)
}

/// The highest monomials admitting a nonzero cone weight with `μ ≤ 0`.
///
/// Admissibility is downward closed, so these are the maximal admissible
/// elements: every strictly larger monomial admits no such weight.
pub fn topmost_nonstable(poset: &MonomialPoset) -> Result<Vec<ExponentVector>, FamilyError> {
    let cone = poset.cone();
    let admissible: Vec<ExponentVector> = poset
        .universe()
        .iter()
        .map(|m| {
            let q = FeasibilityQuery::new(cone.clone())
                .nonpositive([m])
                .nontrivial(true);
            match decide(&q) {
                Ok(c) if verify_certificate(&q, &c) => Ok((m, c.is_feasible())),
                Ok(_) => Err(FamilyError::Verification(format!("query for {m}"))),
                Err(e) => Err(e.into()),
            }
        })
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .filter(|(_, ok)| *ok)
        .map(|(m, _)| m.clone())
        .collect();
    let set = SupportSet::new(
        poset.universe().n_vars(),
        poset.universe().degree(),
        admissible,
    )?;
    Ok(maximal_elements(&set, cone))
}

/// A family obtained from a structured candidate weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateFamily {
    /// The candidate weight.
    pub weight: WeightVector,
    /// Its non-positive family.
    #[serde(with = "support_list")]
    pub support: SupportSet,
}

/// Diagnostic enumeration from the cone's own extremal rays only: the
/// candidates are the rays and all sums of two distinct rays; their
/// inclusion-maximal non-positive families are returned with the first
/// candidate (in sorted order) producing each.
///
/// This is a restricted search — it can miss maximal families that
/// [`maximal_nonstable_families`] finds — and is provided to compare
/// against tables obtained by such structured searches.
pub fn chamber_ray_families(
    universe: &SupportSet,
    cone: &NormalizationCone,
) -> Result<Vec<CandidateFamily>, FamilyError> {
    let empty = SupportSet::empty(universe.n_vars(), universe.degree());
    let arr = Arrangement::new(&empty, cone, None)?;
    let rays = arr.rays();
    let mut candidates: BTreeSet<WeightVector> = rays.iter().cloned().collect();
    for (i, a) in rays.iter().enumerate() {
        for b in &rays[i + 1..] {
            let sum: Vec<i64> = a
                .weights()
                .iter()
                .zip(b.weights())
                .map(|(x, y)| x + y)
                .collect();
            candidates.insert(WeightVector::new(sum)?);
        }
    }
    let mut by_family: Vec<(SupportSet, WeightVector)> = Vec::new();
    for w in candidates {
        let f = family_of(&w, universe, false)?;
        if !by_family.iter().any(|(g, _)| *g == f) {
            by_family.push((f, w));
        }
    }
    let maximal = inclusion_maximal(by_family.iter().map(|(f, _)| f.clone()).collect());
    let mut out: Vec<CandidateFamily> = by_family
        .into_iter()
        .filter(|(f, _)| maximal.contains(f))
        .map(|(support, weight)| CandidateFamily { weight, support })
        .collect();
    out.sort_by(|a, b| a.support.cmp(&b.support));
    Ok(out)
}
