//! Families up to coordinate permutation.

use gitstab_core::{all_permutations, Permutation, SupportSet};
use serde::{Deserialize, Serialize};

use crate::error::StrataError;

/// The permutation-minimal representative of a support.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CanonicalFamily {
    /// The lexicographically least image `σ(S)` over all coordinate
    /// permutations (monomials sorted, compared as sequences).
    pub canonical_support: SupportSet,
    /// Every permutation `σ` with `σ(S)` equal to the canonical support, in
    /// lexicographic order.
    pub witnesses: Vec<Permutation>,
    /// The catalogue name of the family, if it has one.
    pub label: Option<String>,
}

/// The canonical form of a non-empty support under all `n!` coordinate
/// permutations.
pub fn canonicalize(s: &SupportSet) -> Result<CanonicalFamily, StrataError> {
    if s.is_empty() {
        return Err(StrataError::EmptySupport);
    }
    let mut best: Option<SupportSet> = None;
    let mut witnesses = Vec::new();
    for p in all_permutations(s.n_vars()) {
        let t = s.permuted(&p);
        match best.as_ref().map(|b| t.cmp(b)) {
            Some(std::cmp::Ordering::Greater) => {}
            Some(std::cmp::Ordering::Equal) => witnesses.push(p),
            _ => {
                best = Some(t);
                witnesses = vec![p];
            }
        }
    }
    Ok(CanonicalFamily {
        canonical_support: best.expect("non-empty permutation group"),
        witnesses,
        label: None,
    })
}

/// The canonical support alone.
pub fn canonical_support(s: &SupportSet) -> Result<SupportSet, StrataError> {
    canonicalize(s).map(|c| c.canonical_support)
}

/// A table of named families, matched up to coordinate permutation.
///
/// Several names may share one canonical form; they are then joined with
/// `≡` in that order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Catalogue {
    entries: Vec<(SupportSet, Vec<String>)>,
}

impl Catalogue {
    /// An empty catalogue.
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a named family.
    pub fn insert(&mut self, name: impl Into<String>, s: &SupportSet) -> Result<(), StrataError> {
        let c = canonical_support(s)?;
        let name = name.into();
        match self.entries.iter_mut().find(|(k, _)| *k == c) {
            Some((_, names)) => names.push(name),
            None => self.entries.push((c, vec![name])),
        }
        Ok(())
    }

    /// The (joined) label of a canonical support.
    pub fn label(&self, canonical: &SupportSet) -> Option<String> {
        self.entries
            .iter()
            .find(|(k, _)| k == canonical)
            .map(|(_, names)| names.join("≡"))
    }

    /// The canonical support carrying a given name.
    pub fn support_of(&self, name: &str) -> Option<&SupportSet> {
        self.entries
            .iter()
            .find(|(_, names)| names.iter().any(|n| n == name))
            .map(|(k, _)| k)
    }

    /// Canonical supports with their names, in insertion order.
    pub fn entries(&self) -> &[(SupportSet, Vec<String>)] {
        &self.entries
    }

    /// Canonicalizes `s` and attaches its label.
    pub fn canonicalize(&self, s: &SupportSet) -> Result<CanonicalFamily, StrataError> {
        let mut c = canonicalize(s)?;
        c.label = self.label(&c.canonical_support);
        Ok(c)
    }
}
