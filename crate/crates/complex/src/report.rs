//! Whole-permutation component reports: one census per orbit representative,
//! scaled by orbit size.

use perm_core::{canonical_word, Permutation, ReducedWord};
use quat_clifford::{QuatMonomial, TranslateOrbits};
use serde::Serialize;

use crate::census::{CellCensus, ComponentCensus, Enumeration};

/// Census data for one orbit of translates. All members of an orbit have
/// diffeomorphic strata, so one representative is measured and multiplied
/// out by the orbit size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitReport {
    /// Canonical left-multiplier label of the orbit.
    pub label: String,
    /// Number of translates in the orbit.
    pub size: u64,
    /// Serialized representative translate.
    pub representative: String,
    /// Cell counts per dimension at the representative.
    pub per_dim: Vec<u64>,
    /// Component censuses at the representative, largest first.
    pub components: Vec<ComponentCensus>,
    /// How many of those components are isolated thin vertices.
    pub thin_components: u64,
}

impl OrbitReport {
    /// Components contributed by the whole orbit.
    pub fn total_components(&self) -> u64 {
        self.size * self.components.len() as u64
    }
}

/// The word-independent census payload of a permutation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SigmaCensus {
    pub orbits: Vec<OrbitReport>,
    /// Components summed over every translate.
    pub total_components: u64,
    /// Isolated thin vertices summed over every translate.
    pub total_thin_components: u64,
}

/// A full report: the permutation, the word used, and the census.
#[derive(Debug, Clone, Serialize)]
pub struct ComponentReport {
    /// One-line form, e.g. "563412".
    pub sigma: String,
    /// Letters of the reduced word used.
    pub word: Vec<u8>,
    /// Word-independent payload; equal across reduced words of sigma.
    pub census: SigmaCensus,
}

/// Report for the canonical reduced word of a permutation.
pub fn component_report(sigma: &Permutation) -> ComponentReport {
    component_report_for_word(&canonical_word(sigma))
}

/// Report for an explicit reduced word.
pub fn component_report_for_word(word: &ReducedWord) -> ComponentReport {
    let sigma = word.permutation();
    let orbits = TranslateOrbits::build(&sigma);
    let enumeration = Enumeration::new(word);

    let mut reports = Vec::with_capacity(orbits.orbits().len());
    let mut total_components = 0;
    let mut total_thin = 0;
    for orbit in orbits.orbits() {
        let rep = orbit.members.iter().min().expect("orbits are nonempty");
        let m = QuatMonomial::all(word.n())
            .into_iter()
            .find(|&m| orbits.translate(m) == rep)
            .expect("representative is a translate");
        let census = enumeration.census(&orbits, m);
        let report = OrbitReport {
            label: orbit.label.to_string(),
            size: orbit.size() as u64,
            representative: rep.to_string(),
            per_dim: census.per_dim(),
            components: census.components().to_vec(),
            thin_components: census.thin_components(),
        };
        total_components += report.total_components();
        total_thin += report.size * report.thin_components;
        reports.push(report);
    }

    let oneline: String = sigma.oneline().iter().map(|v| v.to_string()).collect();
    ComponentReport {
        sigma: oneline,
        word: word.letters().to_vec(),
        census: SigmaCensus {
            orbits: reports,
            total_components,
            total_thin_components: total_thin,
        },
    }
}

/// Census of every translate, not just orbit representatives. Used by
/// verification suites that need per-translate data.
pub fn censuses_for_all_translates(word: &ReducedWord) -> Vec<CellCensus> {
    let sigma = word.permutation();
    let orbits = TranslateOrbits::build(&sigma);
    let enumeration = Enumeration::new(word);
    QuatMonomial::all(word.n())
        .into_iter()
        .map(|m| enumeration.census(&orbits, m))
        .collect()
}
