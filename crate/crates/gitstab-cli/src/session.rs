//! Lazily computed, shared inputs of the published-data audit and the commands.

use std::sync::OnceLock;

use anyhow::Result;
use gitstab_core::{enumerate_monomials, NormalizationCone, SupportSet};
use gitstab_families::{maximal_nonstable_families, FamilyRecord};
use gitstab_strata::{build_stratification, quintic_catalogue, quintic_seeds, Catalogue, StratGraph};

/// The quintic universe, its standard chamber and the expensive derived
/// objects, each computed at most once.
pub struct Session {
    universe: SupportSet,
    cone: NormalizationCone,
    catalogue: Catalogue,
    nonstable: OnceLock<Vec<FamilyRecord>>,
    graph: OnceLock<StratGraph>,
}

impl Session {
    /// A session for quintic threefolds.
    pub fn quintic() -> Result<Self> {
        Ok(Session {
            universe: enumerate_monomials(5, 5)?,
            cone: NormalizationCone::standard(5),
            catalogue: quintic_catalogue()?,
            nonstable: OnceLock::new(),
            graph: OnceLock::new(),
        })
    }

    /// All 126 quintic monomials.
    pub fn universe(&self) -> &SupportSet {
        &self.universe
    }

    /// The standard chamber of `SL(5)`.
    pub fn standard_cone(&self) -> &NormalizationCone {
        &self.cone
    }

    /// The named boundary families.
    pub fn catalogue(&self) -> &Catalogue {
        &self.catalogue
    }

    /// The certified maximal non-stable families, sorted by support.
    pub fn nonstable(&self) -> Result<&[FamilyRecord]> {
        if let Some(r) = self.nonstable.get() {
            return Ok(r);
        }
        let r = maximal_nonstable_families(&self.universe, &self.cone)?;
        Ok(self.nonstable.get_or_init(|| r))
    }

    /// The stratification graph grown from the first-level families.
    pub fn graph(&self) -> Result<&StratGraph> {
        if let Some(g) = self.graph.get() {
            return Ok(g);
        }
        let seeds: Vec<SupportSet> = quintic_seeds()?.into_iter().map(|(_, s)| s).collect();
        let g = build_stratification(&seeds, &self.catalogue)?;
        Ok(self.graph.get_or_init(|| g))
    }
}
