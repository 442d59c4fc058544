//! Luna verdicts: closed orbit, degeneration to a smaller family, or
//! instability, each backed by certificates.

use std::collections::BTreeSet;

use gitstab_core::{block_permutations, ExponentVector, Permutation, SupportSet, WeightVector};
use gitstab_lp::{decide, find_weight, verify_certificate, Certificate, FeasibilityQuery};
use serde::{Deserialize, Serialize};

use crate::context::{limit_support, CentralizerContext};
use crate::error::LunaError;

/// Why one permuted support has no degenerating weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Refutation {
    /// No nonzero chamber weight has `μ ≤ 0` on the support.
    NoDestabilizer {
        /// Infeasibility of the non-positive query.
        certificate: Certificate,
    },
    /// Every chamber weight with `μ ≤ 0` has `μ = 0` on every monomial:
    /// for each monomial, "`μ ≤ 0` on the support and `μ ≤ −1` on it" is
    /// infeasible.
    AllForcedZero {
        /// One infeasibility certificate per monomial.
        certificates: Vec<(ExponentVector, Certificate)>,
    },
}

/// The outcome of [`luna_classify`].
///
/// Witnesses refer to the block-permuted support `σ(S)` and lie in the
/// centralizer chamber, orthogonal to the stabilizer lattice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum LunaVerdict {
    /// The generic member has a closed orbit: no chamber weight moves it.
    ClosedOrbit {
        /// One refutation per distinct block-permuted support.
        refutations: Vec<(Permutation, Refutation)>,
    },
    /// The generic member degenerates along `weight` to the family `limit`.
    Degenerates {
        /// Block permutation applied to the support.
        permutation: Permutation,
        /// A weight with `μ < 0` off the limit and `μ = 0` on it.
        weight: WeightVector,
        /// The limit support, inside `σ(S)`.
        limit: SupportSet,
    },
    /// The generic member is unstable: `μ ≤ −1` on every monomial.
    UnstablePoint {
        /// Block permutation applied to the support.
        permutation: Permutation,
        /// The destabilizing weight.
        weight: WeightVector,
    },
}

impl LunaVerdict {
    /// `ClosedOrbit`, `Degenerates` or `UnstablePoint`.
    pub fn name(&self) -> &'static str {
        match self {
            LunaVerdict::ClosedOrbit { .. } => "ClosedOrbit",
            LunaVerdict::Degenerates { .. } => "Degenerates",
            LunaVerdict::UnstablePoint { .. } => "UnstablePoint",
        }
    }

    /// The witness weight, if any.
    pub fn weight(&self) -> Option<&WeightVector> {
        match self {
            LunaVerdict::Degenerates { weight, .. } | LunaVerdict::UnstablePoint { weight, .. } => {
                Some(weight)
            }
            LunaVerdict::ClosedOrbit { .. } => None,
        }
    }
}

fn checked(q: &FeasibilityQuery) -> Result<Certificate, LunaError> {
    let c = decide(q)?;
    if verify_certificate(q, &c) {
        Ok(c)
    } else {
        Err(LunaError::Verification("Luna query".into()))
    }
}

fn canonical_witness(q: &FeasibilityQuery) -> Result<WeightVector, LunaError> {
    match find_weight(q)? {
        Certificate::Feasible { weight } => Ok(weight),
        Certificate::Infeasible { .. } => Err(LunaError::Verification(
            "witness search disagrees with feasibility".into(),
        )),
    }
}

/// Distinct images of `s` under the block permutations of the context,
/// identity first.
pub fn block_images(s: &SupportSet, ctx: &CentralizerContext) -> Vec<(Permutation, SupportSet)> {
    let mut seen = BTreeSet::new();
    block_permutations(ctx.n_vars(), ctx.blocks.blocks())
        .into_iter()
        .filter_map(|p| {
            let t = s.permuted(&p);
            seen.insert(t.clone()).then_some((p, t))
        })
        .collect()
}

/// The monomials of `t` on which every chamber weight with `μ ≤ 0` on `t`
/// vanishes, with a certificate for each.
pub fn forced_zero(
    t: &SupportSet,
    ctx: &CentralizerContext,
) -> Result<(SupportSet, Vec<(ExponentVector, Certificate)>), LunaError> {
    let mut forced = Vec::new();
    let mut certs = Vec::new();
    for m in t.iter() {
        let q = ctx.query().nonpositive(t.iter()).strict([m]);
        let c = checked(&q)?;
        if !c.is_feasible() {
            forced.push(m.clone());
            certs.push((m.clone(), c));
        }
    }
    Ok((SupportSet::new(t.n_vars(), t.degree(), forced)?, certs))
}

/// Applies the Hilbert–Mumford criterion for the centralizer to the generic
/// member of `s ⊆ V^H`.
///
/// First every distinct block-permuted support is tested for a strict
/// destabilizer (`UnstablePoint`). Otherwise the first permuted support
/// admitting a nonzero `μ ≤ 0` weight that is not identically zero on it
/// degenerates: the monomials forced to `μ = 0` form the limit, and the
/// witness is the canonical weight that is zero on the limit and strictly
/// negative elsewhere (a relative-interior point of the destabilizing
/// cone). If no permuted support degenerates, the orbit is closed.
pub fn luna_classify(s: &SupportSet, ctx: &CentralizerContext) -> Result<LunaVerdict, LunaError> {
    ctx.check_member(s)?;
    if s.is_empty() {
        return Err(gitstab_core::CoreError::EmptySupport.into());
    }
    let images = block_images(s, ctx);
    for (p, t) in &images {
        let q = ctx.query().nontrivial(true).strict(t.iter());
        if checked(&q)?.is_feasible() {
            return Ok(LunaVerdict::UnstablePoint {
                permutation: p.clone(),
                weight: canonical_witness(&q)?,
            });
        }
    }
    let mut refutations = Vec::new();
    for (p, t) in &images {
        let q = ctx.query().nontrivial(true).nonpositive(t.iter());
        let c = checked(&q)?;
        if !c.is_feasible() {
            refutations.push((p.clone(), Refutation::NoDestabilizer { certificate: c }));
            continue;
        }
        let (zero, certificates) = forced_zero(t, ctx)?;
        if zero == *t {
            refutations.push((p.clone(), Refutation::AllForcedZero { certificates }));
            continue;
        }
        let moving = t.difference(&zero)?;
        let q = ctx
            .query()
            .nontrivial(true)
            .zero(zero.iter())
            .strict(moving.iter());
        let weight = canonical_witness(&q)?;
        let limit = limit_support(t, &weight)?;
        if limit != zero {
            return Err(LunaError::Verification(format!(
                "limit of {t} along {weight} is not the forced-zero set"
            )));
        }
        return Ok(LunaVerdict::Degenerates {
            permutation: p.clone(),
            weight,
            limit,
        });
    }
    Ok(LunaVerdict::ClosedOrbit { refutations })
}

/// Re-checks every certificate of a verdict for `s` in `ctx`.
pub fn verify_verdict(s: &SupportSet, ctx: &CentralizerContext, v: &LunaVerdict) -> bool {
    let feasible = |q: &FeasibilityQuery, w: &WeightVector| {
        verify_certificate(q, &Certificate::Feasible { weight: w.clone() })
    };
    match v {
        LunaVerdict::UnstablePoint { permutation, weight } => {
            let t = s.permuted(permutation);
            feasible(&ctx.query().nontrivial(true).strict(t.iter()), weight)
        }
        LunaVerdict::Degenerates {
            permutation,
            weight,
            limit,
        } => {
            let t = s.permuted(permutation);
            let moving = match t.difference(limit) {
                Ok(m) => m,
                Err(_) => return false,
            };
            !moving.is_empty()
                && limit.is_subset(&t)
                && !limit.is_empty()
                && feasible(
                    &ctx.query()
                        .nontrivial(true)
                        .zero(limit.iter())
                        .strict(moving.iter()),
                    weight,
                )
        }
        LunaVerdict::ClosedOrbit { refutations } => {
            let images = block_images(s, ctx);
            images.len() == refutations.len()
                && images.iter().zip(refutations).all(|((p, t), (q, r))| {
                    p == q
                        && match r {
                            Refutation::NoDestabilizer { certificate } => {
                                !certificate.is_feasible()
                                    && verify_certificate(
                                        &ctx.query().nontrivial(true).nonpositive(t.iter()),
                                        certificate,
                                    )
                            }
                            Refutation::AllForcedZero { certificates } => {
                                certificates.len() == t.len()
                                    && t.iter().zip(certificates).all(|(m, (m2, c))| {
                                        m == m2
                                            && !c.is_feasible()
                                            && verify_certificate(
                                                &ctx.query().nonpositive(t.iter()).strict([m]),
                                                c,
                                            )
                                    })
                            }
                        }
                })
        }
    }
}
