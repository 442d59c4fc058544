//! Hilbert–Mumford verdicts for a single support, up to coordinate
//! permutation.

use std::collections::BTreeSet;
use std::fmt;

use gitstab_core::{all_permutations, NormalizationCone, Permutation, SupportSet, WeightVector};
use gitstab_lp::{decide, find_weight, verify_certificate, Certificate, FeasibilityQuery};
use serde::{Deserialize, Serialize};

use crate::error::FamilyError;
use crate::kempf::{optimal_destabilizer, sorting_permutation};

/// The outcome of [`classify_support`].
///
/// Witnesses are given for the permuted support `σ(S)`: the weight `w`
/// lies in the cone and destabilizes `σ(S)`; equivalently `σ⁻¹(w)`
/// destabilizes `S` itself.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Classification {
    /// Some permutation admits a cone weight with `μ ≤ −1` on every monomial.
    Unstable {
        /// The coordinate permutation applied to the support.
        permutation: Permutation,
        /// The destabilizing weight for the permuted support.
        weight: WeightVector,
    },
    /// Not unstable, but some permutation admits `μ ≤ 0` with `w ≠ 0`.
    NonStable {
        /// The coordinate permutation applied to the support.
        permutation: Permutation,
        /// The destabilizing weight for the permuted support.
        weight: WeightVector,
    },
    /// No diagonal destabilizer exists for any coordinate permutation.
    ///
    /// This is a torus-diagonal certificate: one Farkas certificate of
    /// infeasibility of "`μ ≤ 0` on `σ(S)`, `w ≠ 0`" per distinct permuted
    /// support. It is not a stability claim for changes of coordinates
    /// beyond permutations.
    Stable {
        /// One refutation per distinct permuted support.
        refutations: Vec<(Permutation, Certificate)>,
    },
}

impl Classification {
    /// The destabilizing weight, if any.
    pub fn weight(&self) -> Option<&WeightVector> {
        match self {
            Classification::Unstable { weight, .. } | Classification::NonStable { weight, .. } => {
                Some(weight)
            }
            Classification::Stable { .. } => None,
        }
    }

    /// The permutation the witness refers to, if any.
    pub fn permutation(&self) -> Option<&Permutation> {
        match self {
            Classification::Unstable { permutation, .. }
            | Classification::NonStable { permutation, .. } => Some(permutation),
            Classification::Stable { .. } => None,
        }
    }

    /// The verdict name: `Unstable`, `NonStable` or `Stable`.
    pub fn verdict(&self) -> &'static str {
        match self {
            Classification::Unstable { .. } => "Unstable",
            Classification::NonStable { .. } => "NonStable",
            Classification::Stable { .. } => "Stable",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Unstable { permutation, weight }
            | Classification::NonStable { permutation, weight } => write!(
                f,
                "{} (witness {} after permutation {:?})",
                self.verdict(),
                weight.to_angle_string(),
                permutation.images()
            ),
            Classification::Stable { refutations } => write!(
                f,
                "Stable (torus-diagonal certificate: {} permuted supports refuted)",
                refutations.len()
            ),
        }
    }
}

fn query(cone: &NormalizationCone, s: &SupportSet, strict: bool) -> FeasibilityQuery {
    let q = FeasibilityQuery::new(cone.clone()).nontrivial(true);
    if strict {
        q.strict(s.iter())
    } else {
        q.nonpositive(s.iter())
    }
}

/// Classifies `s` by searching all coordinate permutations for a diagonal
/// destabilizer in `cone`.
///
/// Instability over the whole torus does not depend on the permutation, so
/// it is decided first: the witness is the optimal destabilizer of
/// [`optimal_destabilizer`], moved into the standard chamber by a sorting
/// permutation. When `cone` does not contain it (block cones), the strict
/// pass falls back to the permutation search. Then the non-strict pass
/// runs over every distinct permuted support (identity first, then
/// lexicographic); the first feasible one provides the witness, computed
/// canonically by [`find_weight`].
pub fn classify_support(
    s: &SupportSet,
    universe: &SupportSet,
    cone: &NormalizationCone,
) -> Result<Classification, FamilyError> {
    if let Some(m) = s.iter().find(|m| !universe.contains(m)) {
        return Err(FamilyError::NotInUniverse(m.to_text()));
    }
    if let Some(w) = optimal_destabilizer(s) {
        let permutation = sorting_permutation(&w);
        let weight = WeightVector::new(permutation.apply(w.weights()))?;
        let q = query(cone, &s.permuted(&permutation), true);
        let witness = Certificate::Feasible {
            weight: weight.clone(),
        };
        if verify_certificate(&q, &witness) {
            return Ok(Classification::Unstable { permutation, weight });
        }
    }
    let mut seen = BTreeSet::new();
    let perms: Vec<(Permutation, SupportSet)> = all_permutations(s.n_vars())
        .into_iter()
        .filter_map(|p| {
            let t = s.permuted(&p);
            seen.insert(t.clone()).then_some((p, t))
        })
        .collect();
    for strict in [true, false] {
        for (p, t) in &perms {
            let q = query(cone, t, strict);
            let c = decide(&q)?;
            if !verify_certificate(&q, &c) {
                return Err(FamilyError::Verification(format!("classification query for {t}")));
            }
            if c.is_feasible() {
                let c = find_weight(&q)?;
                let Certificate::Feasible { weight } = c else {
                    return Err(FamilyError::Verification(format!("witness search for {t}")));
                };
                let permutation = p.clone();
                return Ok(if strict {
                    Classification::Unstable { permutation, weight }
                } else {
                    Classification::NonStable { permutation, weight }
                });
            }
        }
    }
    let refutations = perms
        .into_iter()
        .map(|(p, t)| decide(&query(cone, &t, false)).map(|c| (p, c)))
        .collect::<Result<_, _>>()?;
    Ok(Classification::Stable { refutations })
}

/// Re-checks every certificate inside a classification.
pub fn verify_classification(s: &SupportSet, cone: &NormalizationCone, c: &Classification) -> bool {
    match c {
        Classification::Unstable { permutation, weight }
        | Classification::NonStable { permutation, weight } => {
            let strict = matches!(c, Classification::Unstable { .. });
            let q = query(cone, &s.permuted(permutation), strict);
            verify_certificate(
                &q,
                &Certificate::Feasible {
                    weight: weight.clone(),
                },
            )
        }
        Classification::Stable { refutations } => {
            let distinct: BTreeSet<SupportSet> = all_permutations(s.n_vars())
                .iter()
                .map(|p| s.permuted(p))
                .collect();
            let covered: BTreeSet<SupportSet> =
                refutations.iter().map(|(p, _)| s.permuted(p)).collect();
            covered == distinct
                && refutations.iter().all(|(p, cert)| {
                    !cert.is_feasible()
                        && verify_certificate(&query(cone, &s.permuted(p), false), cert)
                })
        }
    }
}

/// Whether every monomial of `s` has total exponent at least `p` on the
/// coordinates `coords`, i.e. whether `s` lies in the ideal
/// `⟨x_i : i ∈ coords⟩^p`.
pub fn ideal_power_predicate(s: &SupportSet, coords: &[usize], p: u32) -> bool {
    s.iter()
        .all(|m| coords.iter().map(|&k| m.get(k)).sum::<u32>() >= p)
}
