use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::format::format_number;

/// Failure and note records kept per claim; counts stay exact beyond this.
const MAX_RECORDS_PER_CLAIM: usize = 25;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Fail,
    Note,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckRecord {
    pub outcome: Outcome,
    pub model: String,
    pub instance: String,
    pub expected: String,
    pub actual: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub deviation: Option<f64>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct ClaimResult {
    pub checked: u64,
    pub failed: u64,
    pub notes: u64,
    pub max_deviation: f64,
    pub records: Vec<CheckRecord>,
}

impl ClaimResult {
    fn push(&mut self, record: CheckRecord) {
        if self.records.len() < MAX_RECORDS_PER_CLAIM {
            self.records.push(record);
        }
    }
}

/// Results of a check suite, keyed by claim id.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub suite: String,
    pub seed: u64,
    pub models: u64,
    pub claims: BTreeMap<String, ClaimResult>,
    #[serde(skip)]
    context: String,
}

impl CheckReport {
    pub fn new(suite: &str, seed: u64, context: impl Into<String>) -> Self {
        CheckReport {
            suite: suite.to_string(),
            seed,
            models: 1,
            claims: BTreeMap::new(),
            context: context.into(),
        }
    }

    fn claim(&mut self, id: &str) -> &mut ClaimResult {
        if !self.claims.contains_key(id) {
            self.claims.insert(id.to_string(), ClaimResult::default());
        }
        self.claims.get_mut(id).expect("inserted above")
    }

    /// Records a boolean check. `detail` yields `(instance, expected, actual)`
    /// and is only evaluated on failure.
    pub fn check<F>(&mut self, id: &str, ok: bool, detail: F)
    where
        F: FnOnce() -> (String, String, String),
    {
        let context = self.context.clone();
        let claim = self.claim(id);
        claim.checked += 1;
        if !ok {
            claim.failed += 1;
            let (instance, expected, actual) = detail();
            claim.push(CheckRecord {
                outcome: Outcome::Fail,
                model: context,
                instance,
                expected,
                actual,
                deviation: None,
            });
        }
    }

    /// Records `|expected − actual| ≤ tolerance`.
    pub fn check_close<F>(&mut self, id: &str, expected: f64, actual: f64, tolerance: f64, instance: F)
    where
        F: FnOnce() -> String,
    {
        let deviation = (expected - actual).abs();
        let ok = deviation <= tolerance;
        let context = self.context.clone();
        let claim = self.claim(id);
        claim.checked += 1;
        if deviation > claim.max_deviation || deviation.is_nan() {
            claim.max_deviation = deviation;
        }
        if !ok {
            claim.failed += 1;
            claim.push(CheckRecord {
                outcome: Outcome::Fail,
                model: context,
                instance: instance(),
                expected: format_number(expected),
                actual: format_number(actual),
                deviation: Some(deviation),
            });
        }
    }

    /// Records an observation that is not a failure.
    pub fn note(&mut self, id: &str, instance: String, message: String) {
        let context = self.context.clone();
        let claim = self.claim(id);
        claim.notes += 1;
        claim.push(CheckRecord {
            outcome: Outcome::Note,
            model: context,
            instance,
            expected: String::new(),
            actual: message,
            deviation: None,
        });
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.models += other.models;
        for (id, theirs) in other.claims {
            let ours = self.claim(&id);
            ours.checked += theirs.checked;
            ours.failed += theirs.failed;
            ours.notes += theirs.notes;
            ours.max_deviation = ours.max_deviation.max(theirs.max_deviation);
            for r in theirs.records {
                ours.push(r);
            }
        }
    }

    /// Merges a list of reports in order under a new suite name.
    pub fn combine(suite: &str, seed: u64, reports: impl IntoIterator<Item = CheckReport>) -> Self {
        let mut out = CheckReport::new(suite, seed, "");
        out.models = 0;
        for r in reports {
            out.merge(r);
        }
        out
    }

    pub fn checked(&self) -> u64 {
        self.claims.values().map(|c| c.checked).sum()
    }

    pub fn failed(&self) -> u64 {
        self.claims.values().map(|c| c.failed).sum()
    }

    pub fn passed(&self) -> bool {
        self.failed() == 0
    }

    /// Counts over the claims whose id starts with one of `prefixes`.
    pub fn summary_for(&self, prefixes: &[&str]) -> (u64, u64, f64) {
        self.claims
            .iter()
            .filter(|(id, _)| prefixes.iter().any(|p| id.starts_with(p)))
            .fold((0, 0, 0.0), |(c, f, d), (_, r)| (c + r.checked, f + r.failed, d.max(r.max_deviation)))
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "suite {} (seed {}, {} model(s))", self.suite, self.seed, self.models);
        let width = self.claims.keys().map(String::len).max().unwrap_or(0);
        for (id, c) in &self.claims {
            let _ = write!(out, "  {id:<width$}  checked {:>9}  failed {:>6}", c.checked, c.failed);
            if c.max_deviation > 0.0 {
                let _ = write!(out, "  max_dev {:.3e}", c.max_deviation);
            }
            if c.notes > 0 {
                let _ = write!(out, "  notes {}", c.notes);
            }
            out.push('\n');
            for r in &c.records {
                let tag = match r.outcome {
                    Outcome::Fail => "FAIL",
                    Outcome::Note => "note",
                };
                let _ = write!(out, "    {tag} [{}] {}", r.model, r.instance);
                if r.outcome == Outcome::Fail {
                    let _ = write!(out, ": expected {}, got {}", r.expected, r.actual);
                } else {
                    let _ = write!(out, ": {}", r.actual);
                }
                out.push('\n');
            }
        }
        let _ = writeln!(
            out,
            "result: {} ({} checks, {} failures)",
            if self.passed() { "PASS" } else { "FAIL" },
            self.checked(),
            self.failed()
        );
        out
    }
}
