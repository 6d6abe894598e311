//! Possibility models: a degree in `[0, 1]` for every world, the belief set
//! they induce, the possibility and necessity measures, the `⇒` conditional
//! and the AGM revision of the belief set.
//!
//! Degrees are grouped into ranks by exact equality. Worlds with degree 0
//! form the impossible region; `W` is everything else.
//!
//! Every query comes in two forms: one taking a [`Formula`] and one, suffixed
//! `_set`, taking the formula's model set directly. The checker uses the
//! latter to avoid recomputing model sets.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::logic::{Formula, Vocabulary, World, WorldSet};

/// The worlds sharing one positive possibility degree.
#[derive(Debug, Clone, PartialEq)]
pub struct Rank {
    pub degree: f64,
    pub worlds: WorldSet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EpistemicStatus {
    Accepted,
    Rejected,
    Indeterminate,
}

impl fmt::Display for EpistemicStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EpistemicStatus::Accepted => "accepted",
            EpistemicStatus::Rejected => "rejected",
            EpistemicStatus::Indeterminate => "indeterminate",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PossibilityModel {
    vocab: Vocabulary,
    degrees: Vec<f64>,
    /// Positive ranks, highest degree first. The first rank has degree 1.
    ranks: Vec<Rank>,
    possible: WorldSet,
    impossible: WorldSet,
}

impl PossibilityModel {
    /// Builds a model from one degree per world, indexed by world.
    pub fn new(vocab: Vocabulary, degrees: Vec<f64>) -> Result<Self> {
        if degrees.len() != vocab.world_count() {
            return Err(Error::InvalidModel(format!(
                "expected {} degrees, got {}",
                vocab.world_count(),
                degrees.len()
            )));
        }
        for (i, &d) in degrees.iter().enumerate() {
            if !(0.0..=1.0).contains(&d) {
                return Err(Error::InvalidModel(format!(
                    "degree {d} of world `{}` is outside [0, 1]",
                    vocab.world_label(World::from_index(i))
                )));
            }
        }

        let mut levels: Vec<f64> = degrees.iter().copied().filter(|&d| d > 0.0).collect();
        levels.sort_by(|a, b| b.total_cmp(a));
        levels.dedup();
        if levels.first() != Some(&1.0) {
            return Err(Error::InvalidModel("no world with pi=1".into()));
        }

        let n = vocab.world_count();
        let ranks = levels
            .into_iter()
            .map(|degree| Rank {
                degree,
                worlds: WorldSet::from_worlds(
                    n,
                    vocab.worlds().filter(|w| degrees[w.index()] == degree),
                ),
            })
            .collect();
        let impossible = WorldSet::from_worlds(n, vocab.worlds().filter(|w| degrees[w.index()] == 0.0));
        Ok(PossibilityModel {
            possible: impossible.complement(),
            impossible,
            vocab,
            degrees,
            ranks,
        })
    }

    /// Builds a model from listed worlds; unlisted worlds get degree 0.
    pub fn from_entries<I>(vocab: Vocabulary, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (World, f64)>,
    {
        let mut degrees = vec![0.0; vocab.world_count()];
        let mut seen = vocab.no_worlds();
        for (w, d) in entries {
            if seen.contains(w) {
                return Err(Error::InvalidModel(format!(
                    "world `{}` listed twice",
                    vocab.world_label(w)
                )));
            }
            seen.insert(w);
            degrees[w.index()] = d;
        }
        Self::new(vocab, degrees)
    }

    pub fn vocab(&self) -> &Vocabulary {
        &self.vocab
    }

    pub fn degree(&self, w: World) -> f64 {
        self.degrees[w.index()]
    }

    pub fn degrees(&self) -> &[f64] {
        &self.degrees
    }

    pub fn ranks(&self) -> &[Rank] {
        &self.ranks
    }

    /// `W`, the worlds with positive degree.
    pub fn possible_worlds(&self) -> &WorldSet {
        &self.possible
    }

    pub fn impossible_worlds(&self) -> &WorldSet {
        &self.impossible
    }

    /// Every world is possible (`V = W`).
    pub fn is_complete(&self) -> bool {
        self.impossible.is_empty()
    }

    /// `‖K‖`: the worlds of degree 1.
    pub fn belief_worlds(&self) -> &WorldSet {
        &self.ranks[0].worlds
    }

    pub fn models(&self, f: &Formula) -> WorldSet {
        f.models(&self.vocab)
    }

    pub fn believes(&self, a: &Formula) -> bool {
        self.believes_set(&self.models(a))
    }

    pub fn believes_set(&self, a: &WorldSet) -> bool {
        self.belief_worlds().is_subset(a)
    }

    /// The most possible `A`-worlds, taken over all of `V`. When `A` has no
    /// possible world this is the set of its degree-0 worlds.
    pub fn pl(&self, a: &Formula) -> WorldSet {
        self.pl_set(&self.models(a))
    }

    pub fn pl_set(&self, a: &WorldSet) -> WorldSet {
        self.rank_of(a)
            .map(|r| r.worlds.and(a))
            .unwrap_or_else(|| self.impossible.and(a))
    }

    /// The highest rank meeting `a`, if any possible world satisfies it.
    pub fn rank_of(&self, a: &WorldSet) -> Option<&Rank> {
        self.ranks.iter().find(|r| r.worlds.intersects(a))
    }

    /// `Π(A)`: the largest degree among `A`-worlds, 0 if there is none.
    pub fn pi_measure(&self, a: &Formula) -> f64 {
        self.pi_set(&self.models(a))
    }

    pub fn pi_set(&self, a: &WorldSet) -> f64 {
        self.rank_of(a).map_or(0.0, |r| r.degree)
    }

    /// `N(A) = 1 − Π(¬A)`.
    pub fn necessity(&self, a: &Formula) -> f64 {
        self.necessity_set(&self.models(a))
    }

    pub fn necessity_set(&self, a: &WorldSet) -> f64 {
        1.0 - self.pi_set(&a.complement())
    }

    /// `A ⇒ B`: every revised `A`-world satisfies `B`. Vacuously true when
    /// `Π(A) = 0`.
    pub fn conditional(&self, a: &Formula, b: &Formula) -> bool {
        self.conditional_set(&self.models(a), &self.models(b))
    }

    pub fn conditional_set(&self, a: &WorldSet, b: &WorldSet) -> bool {
        self.revised_set(a).is_subset(b)
    }

    /// `‖K*_A‖`. Empty (the inconsistent belief set) when `Π(A) = 0`;
    /// see [`PossibilityModel::is_below_possible`] for the case where `A` still has models.
    pub fn revised_belief_worlds(&self, a: &Formula) -> WorldSet {
        self.revised_set(&self.models(a))
    }

    pub fn revised_set(&self, a: &WorldSet) -> WorldSet {
        match self.rank_of(a) {
            Some(r) => r.worlds.and(a),
            None => self.vocab.no_worlds(),
        }
    }

    /// `A` is satisfiable but every `A`-world has degree 0.
    pub fn is_below_possible(&self, a: &Formula) -> bool {
        self.is_below_possible_set(&self.models(a))
    }

    pub fn is_below_possible_set(&self, a: &WorldSet) -> bool {
        !a.is_empty() && self.rank_of(a).is_none()
    }

    pub fn status(&self, a: &Formula) -> EpistemicStatus {
        self.status_set(&self.models(a))
    }

    pub fn status_set(&self, a: &WorldSet) -> EpistemicStatus {
        if self.believes_set(a) {
            EpistemicStatus::Accepted
        } else if !self.belief_worlds().intersects(a) {
            EpistemicStatus::Rejected
        } else {
            EpistemicStatus::Indeterminate
        }
    }
}
