//! Counterfactual probability models: a possibility model plus a strictly
//! positive weight on every possible world.
//!
//! Weights are never normalized globally. Every probability is a ratio of
//! weight sums taken inside one rank, so only relative weights within a rank
//! matter.

use crate::error::{Error, Result, Undefined};
use crate::logic::{Formula, Vocabulary, World, WorldSet};
use crate::possibility::PossibilityModel;

/// Nonnegative mass over worlds with positive total. Queries normalize by
/// the total.
#[derive(Debug, Clone, PartialEq)]
pub struct WorldDistribution {
    vocab: Vocabulary,
    mass: Vec<f64>,
    total: f64,
}

impl WorldDistribution {
    pub fn new(vocab: Vocabulary, mass: Vec<f64>) -> Result<Self> {
        if mass.len() != vocab.world_count() {
            return Err(Error::InvalidDistribution(format!(
                "expected {} entries, got {}",
                vocab.world_count(),
                mass.len()
            )));
        }
        if let Some(bad) = mass.iter().find(|m| !(m.is_finite() && **m >= 0.0)) {
            return Err(Error::InvalidDistribution(format!("mass {bad} is not a nonnegative number")));
        }
        let total = mass.iter().sum::<f64>();
        if !(total > 0.0) {
            return Err(Error::InvalidDistribution("total mass is zero".into()));
        }
        Ok(WorldDistribution { vocab, mass, total })
    }

    /// `weights` restricted to `support`.
    pub fn restricted(vocab: &Vocabulary, weights: &[f64], support: &WorldSet) -> Result<Self> {
        let mut mass = vec![0.0; weights.len()];
        for w in support {
            mass[w.index()] = weights[w.index()];
        }
        Self::new(vocab.clone(), mass)
    }

    /// A unit mass on `w`.
    pub fn point(vocab: &Vocabulary, w: World) -> Self {
        let mut mass = vec![0.0; vocab.world_count()];
        mass[w.index()] = 1.0;
        WorldDistribution {
            vocab: vocab.clone(),
            mass,
            total: 1.0,
        }
    }

    pub fn vocab(&self) -> &Vocabulary {
        &self.vocab
    }

    pub fn mass(&self, w: World) -> f64 {
        self.mass[w.index()]
    }

    pub fn masses(&self) -> &[f64] {
        &self.mass
    }

    pub fn total(&self) -> f64 {
        self.total
    }

    pub fn support(&self) -> WorldSet {
        WorldSet::from_worlds(
            self.mass.len(),
            self.entries().map(|(w, _)| w),
        )
    }

    /// Worlds with positive mass, in index order.
    pub fn entries(&self) -> impl Iterator<Item = (World, f64)> + '_ {
        self.mass
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0.0)
            .map(|(i, &m)| (World::from_index(i), m))
    }

    pub fn mass_of(&self, set: &WorldSet) -> f64 {
        set.iter().map(|w| self.mass[w.index()]).sum()
    }

    pub fn probability(&self, f: &Formula) -> f64 {
        self.probability_set(&f.models(&self.vocab))
    }

    pub fn probability_set(&self, set: &WorldSet) -> f64 {
        self.mass_of(set) / self.total
    }

    /// `P(B | A)` under this distribution; `None` when `A` has no mass.
    pub fn conditional_set(&self, b: &WorldSet, a: &WorldSet) -> Option<f64> {
        let denom = self.mass_of(a);
        (denom > 0.0).then(|| self.mass_of(&a.and(b)) / denom)
    }

    pub fn normalized(&self) -> Vec<f64> {
        self.mass.iter().map(|m| m / self.total).collect()
    }

    /// Largest per-world difference after normalizing both sides.
    pub fn max_deviation(&self, other: &WorldDistribution) -> f64 {
        self.normalized()
            .iter()
            .zip(other.normalized())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CpmModel {
    base: PossibilityModel,
    /// Indexed by world; zero exactly outside `W`.
    weights: Vec<f64>,
}

impl CpmModel {
    pub const DEFAULT_DEMOTION: f64 = 0.5;

    /// `weights` is indexed by world and must be positive on `W` and zero elsewhere.
    pub fn new(base: PossibilityModel, weights: Vec<f64>) -> Result<Self> {
        let vocab = base.vocab();
        if weights.len() != vocab.world_count() {
            return Err(Error::InvalidModel(format!(
                "expected {} weights, got {}",
                vocab.world_count(),
                weights.len()
            )));
        }
        for w in vocab.worlds() {
            let p = weights[w.index()];
            let possible = base.possible_worlds().contains(w);
            if possible && !(p.is_finite() && p > 0.0) {
                return Err(Error::InvalidModel(format!(
                    "world `{}` is possible but has weight {p}",
                    vocab.world_label(w)
                )));
            }
            if !possible && p != 0.0 {
                return Err(Error::InvalidModel(format!(
                    "world `{}` is impossible but has weight {p}",
                    vocab.world_label(w)
                )));
            }
        }
        Ok(CpmModel { base, weights })
    }

    /// Builds a model from `(world, degree, weight)` records for the possible
    /// worlds; unlisted worlds are impossible.
    pub fn from_entries<I>(vocab: Vocabulary, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (World, f64, f64)>,
    {
        let entries: Vec<_> = entries.into_iter().collect();
        let base = PossibilityModel::from_entries(vocab.clone(), entries.iter().map(|&(w, d, _)| (w, d)))?;
        let mut weights = vec![0.0; vocab.world_count()];
        for &(w, _, p) in &entries {
            weights[w.index()] = p;
        }
        Self::new(base, weights)
    }

    pub fn base(&self) -> &PossibilityModel {
        &self.base
    }

    pub fn vocab(&self) -> &Vocabulary {
        self.base.vocab()
    }

    pub fn weight(&self, w: World) -> f64 {
        self.weights[w.index()]
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn weight_of(&self, set: &WorldSet) -> f64 {
        set.iter().map(|w| self.weights[w.index()]).sum()
    }

    pub fn models(&self, f: &Formula) -> WorldSet {
        f.models(self.vocab())
    }

    /// `P(B ↑ A)`: relative weight of `B`-worlds among the most possible
    /// `A`-worlds. Undefined iff `Π(A) = 0`.
    pub fn counterfactual_prob(&self, b: &Formula, a: &Formula) -> Result<f64> {
        self.counterfactual_set(&self.models(b), &self.models(a))
    }

    pub fn counterfactual_set(&self, b: &WorldSet, a: &WorldSet) -> Result<f64> {
        let rank = self.base.rank_of(a).ok_or_else(Error::impossible)?;
        let selected = rank.worlds.and(a);
        Ok(self.weight_of(&selected.and(b)) / self.weight_of(&selected))
    }

    /// The factual probability `P(A) = P(A ↑ ⊤)`.
    pub fn factual_prob(&self, a: &Formula) -> f64 {
        self.factual_set(&self.models(a))
    }

    pub fn factual_set(&self, a: &WorldSet) -> f64 {
        let top = self.base.belief_worlds();
        self.weight_of(&top.and(a)) / self.weight_of(top)
    }

    pub fn factual_distribution(&self) -> WorldDistribution {
        WorldDistribution::restricted(self.vocab(), &self.weights, self.base.belief_worlds())
            .expect("the top rank carries positive weight")
    }

    /// Bayesian `P(B | A)`; undefined when `P(A) = 0`.
    pub fn conditional_prob(&self, b: &Formula, a: &Formula) -> Result<f64> {
        self.conditional_prob_set(&self.models(b), &self.models(a))
    }

    pub fn conditional_prob_set(&self, b: &WorldSet, a: &WorldSet) -> Result<f64> {
        let pa = self.factual_set(a);
        if pa > 0.0 {
            Ok(self.factual_set(&a.and(b)) / pa)
        } else {
            Err(Error::Undefined(Undefined::ZeroProbabilityCondition))
        }
    }

    /// The revised factual distribution `P*_A`: the model weights restricted
    /// to the most possible `A`-worlds.
    pub fn revise(&self, a: &Formula) -> Result<WorldDistribution> {
        self.revise_set(&self.models(a))
    }

    pub fn revise_set(&self, a: &WorldSet) -> Result<WorldDistribution> {
        let rank = self.base.rank_of(a).ok_or_else(Error::impossible)?;
        WorldDistribution::restricted(self.vocab(), &self.weights, &rank.worlds.and(a))
    }

    /// Promotes the most possible `A`-worlds to degree 1 and scales every
    /// other degree by `demotion`, keeping weights. Returns a fresh model.
    pub fn natural_revision(&self, a: &Formula, demotion: f64) -> Result<CpmModel> {
        self.natural_revision_set(&self.models(a), demotion)
    }

    pub fn natural_revision_set(&self, a: &WorldSet, demotion: f64) -> Result<CpmModel> {
        if !(demotion > 0.0 && demotion < 1.0) {
            return Err(Error::InvalidModel(format!(
                "demotion factor {demotion} is outside (0, 1)"
            )));
        }
        let rank = self.base.rank_of(a).ok_or_else(Error::impossible)?;
        let promoted = rank.worlds.and(a);
        let degrees = self
            .base
            .degrees()
            .iter()
            .enumerate()
            .map(|(i, &d)| {
                if promoted.contains(World::from_index(i)) {
                    1.0
                } else {
                    d * demotion
                }
            })
            .collect();
        let base = PossibilityModel::new(self.vocab().clone(), degrees)?;
        CpmModel::new(base, self.weights.clone())
    }
}
