//! Selection functions and generalized imaging.
//!
//! Imaging by `A` moves the whole mass of each source world `v` onto the
//! selected set `f(v, A)`, split in proportion to the model weights of the
//! recipients.

use std::collections::HashMap;

use crate::cpm::{CpmModel, WorldDistribution};
use crate::error::{Error, Result};
use crate::logic::{parse_formula, Formula, Vocabulary, World, WorldSet};

/// Tolerance for the imaging/revision agreement check.
pub const AGREEMENT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub enum SelectionPolicy {
    /// `f(v, A) = Pl(A)` for every `v`.
    PlUniform,
    /// `f(v, A) = {v}` when `v` is a possible `A`-world, otherwise `Pl(A)`.
    Centered,
    Explicit(SelectionTable),
}

impl SelectionPolicy {
    pub fn name(&self) -> &'static str {
        match self {
            SelectionPolicy::PlUniform => "pl_uniform",
            SelectionPolicy::Centered => "centered",
            SelectionPolicy::Explicit(_) => "explicit",
        }
    }

    pub fn select(&self, model: &CpmModel, v: World, a: &Formula) -> Result<WorldSet> {
        self.select_with(model, v, a, &model.models(a))
    }

    /// `a_models` must be the model set of `a`.
    fn select_with(&self, model: &CpmModel, v: World, a: &Formula, a_models: &WorldSet) -> Result<WorldSet> {
        if a_models.is_empty() {
            return Err(Error::EmptySelection);
        }
        let base = model.base();
        match self {
            SelectionPolicy::PlUniform => Ok(base.pl_set(a_models)),
            SelectionPolicy::Centered => {
                if a_models.contains(v) && base.possible_worlds().contains(v) {
                    Ok(WorldSet::from_worlds(a_models.universe(), [v]))
                } else {
                    Ok(base.pl_set(a_models))
                }
            }
            SelectionPolicy::Explicit(table) => {
                let vocab = model.vocab();
                let key = a.to_text(vocab);
                let selected = table.get(v, &key).ok_or_else(|| Error::NoSelectionEntry {
                    world: vocab.world_label(v),
                    condition: key.clone(),
                })?;
                if !selected.is_subset(a_models) {
                    return Err(Error::SelectionOutsideCondition { condition: key });
                }
                if selected.is_empty() {
                    return Err(Error::EmptySelection);
                }
                Ok(selected.clone())
            }
        }
    }
}

/// A user-supplied selection function, keyed by world and by the canonical
/// printed form of the condition.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct SelectionTable {
    entries: HashMap<(World, String), WorldSet>,
}

impl SelectionTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, v: World, condition: &Formula, vocab: &Vocabulary, selected: WorldSet) {
        self.entries.insert((v, condition.to_text(vocab)), selected);
    }

    pub fn get(&self, v: World, condition_key: &str) -> Option<&WorldSet> {
        self.entries.get(&(v, condition_key.to_string()))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Reads lines of the form
    /// `select <world> | <formula> -> <world>[, <world>]*`, where a world is
    /// one signed literal per atom. Blank lines and `#` comments are skipped.
    pub fn parse(text: &str, vocab: &Vocabulary) -> Result<Self> {
        let mut table = SelectionTable::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let parse_err = |reason: String| Error::Parse {
                line: line_no,
                reason,
            };
            let rest = line
                .strip_prefix("select")
                .filter(|r| r.starts_with(char::is_whitespace))
                .ok_or_else(|| parse_err("expected `select`".into()))?;
            let (source, rest) = rest
                .split_once('|')
                .ok_or_else(|| parse_err("expected `|` after the source world".into()))?;
            // The formula may itself contain `->`, so split on the last one.
            let (condition, targets) = rest
                .rsplit_once("->")
                .ok_or_else(|| parse_err("expected `->` before the selected worlds".into()))?;
            let v = vocab.parse_world(source).map_err(|e| parse_err(e.to_string()))?;
            let condition = parse_formula(condition.trim(), vocab).map_err(|e| parse_err(e.to_string()))?;
            let mut selected = vocab.no_worlds();
            for t in targets.split(',') {
                selected.insert(vocab.parse_world(t).map_err(|e| parse_err(e.to_string()))?);
            }
            let key = (v, condition.to_text(vocab));
            if table.entries.contains_key(&key) {
                return Err(Error::Validation {
                    line: line_no,
                    reason: format!("duplicate selection for `{}` and `{}`", vocab.world_label(v), key.1),
                });
            }
            table.entries.insert(key, selected);
        }
        Ok(table)
    }
}

/// Images `dist` on `a` under `policy`, with recipient shares taken from the
/// model weights. Total mass is conserved.
pub fn image(dist: &WorldDistribution, policy: &SelectionPolicy, model: &CpmModel, a: &Formula) -> Result<WorldDistribution> {
    let a_models = model.models(a);
    let mut out = vec![0.0; dist.masses().len()];
    for (v, mass) in dist.entries() {
        let selected = policy.select_with(model, v, a, &a_models)?;
        let denom = model.weight_of(&selected);
        if !(denom > 0.0) {
            return Err(Error::ZeroShareDenominator);
        }
        for w in &selected {
            out[w.index()] += mass * model.weight(w) / denom;
        }
    }
    WorldDistribution::new(dist.vocab().clone(), out)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ImagingAgreement {
    pub imaged: WorldDistribution,
    pub revised: WorldDistribution,
    pub max_deviation: f64,
    pub pass: bool,
}

/// Compares imaging of the factual distribution with counterfactual
/// revision, world by world after normalization.
pub fn check_imaging_agreement(model: &CpmModel, a: &Formula, policy: &SelectionPolicy) -> Result<ImagingAgreement> {
    let revised = model.revise(a)?;
    let imaged = image(&model.factual_distribution(), policy, model, a)?;
    let max_deviation = imaged.max_deviation(&revised);
    Ok(ImagingAgreement {
        pass: max_deviation <= AGREEMENT_TOLERANCE,
        imaged,
        revised,
        max_deviation,
    })
}
