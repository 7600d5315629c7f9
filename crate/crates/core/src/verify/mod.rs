//! Exhaustive and sampled verification of the library's invariants over a
//! corpus of small lattices.

pub mod checks;
pub mod corpus;

use std::fmt::Write as _;

use serde::Serialize;

pub use checks::{CheckId, LatticeCase, Sampling};
pub use corpus::{generate_corpus, lattices_of_size, Corpus, CorpusEntry, Provenance, MAX_CORPUS_ELEMENTS};

use crate::error::Result;
use crate::lattice::FiniteLattice;

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub checks: Vec<CheckId>,
    pub sampling: Sampling,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { checks: CheckId::ALL.to_vec(), sampling: Sampling::default() }
    }
}

/// Outcome of one check on one lattice.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckEntry {
    pub lattice: String,
    pub size: usize,
    pub provenance: Provenance,
    pub check: String,
    pub passed: bool,
    pub instances: usize,
    pub failures: usize,
    /// First failing tolerance, as a list of pairs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckSummary {
    pub check: String,
    pub description: String,
    pub lattices: usize,
    pub instances: usize,
    pub failures: usize,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConfigEcho {
    pub seed: u64,
    pub exhaustive_max_n: usize,
    pub sample_triples: usize,
    pub random_relations: usize,
    pub checks: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub config: ConfigEcho,
    pub lattices: usize,
    pub entries: Vec<CheckEntry>,
    pub summary: Vec<CheckSummary>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn failed_entries(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| !e.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Fixed-width summary table followed by one line per failure.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let width = self.summary.iter().map(|s| s.check.len()).max().unwrap_or(5).max(5);
        let _ = writeln!(out, "{:<width$}  {:>8}  {:>10}  {:>8}  status", "check", "lattices", "instances", "failures");
        for s in &self.summary {
            let status = if s.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{:<width$}  {:>8}  {:>10}  {:>8}  {status}", s.check, s.lattices, s.instances, s.failures);
        }
        for e in self.failed_entries() {
            let _ = write!(out, "FAIL {} on {}", e.check, e.lattice);
            if let Some(t) = &e.tolerance {
                let _ = write!(out, " T = {t}");
            }
            let _ = writeln!(out, ": {}", e.witness.as_deref().unwrap_or(""));
        }
        let verdict = if self.passed() { "all checks passed" } else { "some checks failed" };
        let _ = writeln!(out, "{} lattices, {} checks: {verdict}", self.lattices, self.summary.len());
        out
    }
}

fn run_lattice(lat: &FiniteLattice, provenance: Provenance, salt: u64, config: &SuiteConfig) -> Result<Vec<CheckEntry>> {
    let case = LatticeCase::new(lat, &config.sampling, salt)?;
    Ok(config
        .checks
        .iter()
        .map(|&check| {
            let outcome = case.run(check);
            let first = outcome.failures.first();
            CheckEntry {
                lattice: lat.name().to_string(),
                size: lat.n(),
                provenance,
                check: check.as_str().to_string(),
                passed: outcome.failures.is_empty(),
                instances: outcome.instances,
                failures: outcome.failures.len(),
                tolerance: first.and_then(|(t, _)| t.map(|i| case.tolerances[i].format_pairs(lat))),
                witness: first.map(|(_, w)| w.clone()),
            }
        })
        .collect())
}

/// Runs every configured check on every corpus lattice. Results are in
/// corpus order, then check order, and do not depend on thread scheduling.
pub fn run_theorem_suite(corpus: &Corpus, config: &SuiteConfig) -> Result<VerificationReport> {
    let job = |(i, e): (usize, &CorpusEntry)| run_lattice(&e.lattice, e.provenance, i as u64, config);
    #[cfg(feature = "parallel")]
    let per_lattice: Vec<Result<Vec<CheckEntry>>> = {
        use rayon::prelude::*;
        corpus.entries.par_iter().enumerate().map(job).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let per_lattice: Vec<Result<Vec<CheckEntry>>> = corpus.entries.iter().enumerate().map(job).collect();

    let mut entries = Vec::new();
    for r in per_lattice {
        entries.extend(r?);
    }
    let summary = config
        .checks
        .iter()
        .map(|&check| {
            let mine: Vec<&CheckEntry> = entries.iter().filter(|e| e.check == check.as_str()).collect();
            let failures = mine.iter().map(|e| e.failures).sum();
            CheckSummary {
                check: check.as_str().to_string(),
                description: check.description().to_string(),
                lattices: mine.len(),
                instances: mine.iter().map(|e| e.instances).sum(),
                failures,
                passed: mine.iter().all(|e| e.passed),
            }
        })
        .collect();
    Ok(VerificationReport {
        config: ConfigEcho {
            seed: config.sampling.seed,
            exhaustive_max_n: config.sampling.exhaustive_max_n,
            sample_triples: config.sampling.sample_triples,
            random_relations: config.sampling.random_relations,
            checks: config.checks.iter().map(|c| c.as_str().to_string()).collect(),
        },
        lattices: corpus.len(),
        entries,
        summary,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn registry_is_complete() {
        assert_eq!(CheckId::ALL.len(), 34);
        let mut ids: Vec<&str> = CheckId::ALL.iter().map(|c| c.as_str()).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), 34);
    }

    #[test]
    fn named_lattices_pass_everything() {
        let mut corpus = Corpus::default();
        for lat in [named::chain(3), named::boolean(2), named::n5(), named::m3()] {
            corpus.push(lat, Provenance::Named);
        }
        let report = run_theorem_suite(&corpus, &SuiteConfig::default()).unwrap();
        assert!(report.passed(), "{}", report.to_text());
        assert_eq!(report.entries.len(), 4 * 34);
        assert!(report.summary.iter().all(|s| s.instances > 0), "{}", report.to_text());
    }

    #[test]
    fn report_is_deterministic() {
        let corpus = generate_corpus(4).unwrap();
        let config = SuiteConfig { checks: vec![CheckId::CharacterizationAgreement, CheckId::Distributivity], ..Default::default() };
        let a = run_theorem_suite(&corpus, &config).unwrap();
        let b = run_theorem_suite(&corpus, &config).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        assert!(a.to_text().contains("characterization-agreement"));
    }
}
