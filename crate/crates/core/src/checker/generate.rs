use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cpm::CpmModel;
use crate::logic::{Formula, Vocabulary, WorldSet};
use crate::possibility::PossibilityModel;

pub const MAX_RANDOM_ATOMS: usize = 10;
pub const MAX_RANDOM_RANKS: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomModelSpec {
    pub seed: u64,
    pub atoms: usize,
    pub ranks: usize,
    /// No impossible worlds.
    pub complete: bool,
}

impl RandomModelSpec {
    /// Shape of battery model `seed`: 2–6 atoms, 1–5 ranks, alternating
    /// completeness.
    pub fn battery(seed: u64) -> Self {
        RandomModelSpec {
            seed,
            atoms: 2 + (seed % 5) as usize,
            ranks: 1 + ((seed / 5) % 5) as usize,
            complete: seed % 2 == 0,
        }
    }

    pub fn label(&self) -> String {
        format!(
            "seed={} atoms={} ranks={} {}",
            self.seed,
            self.atoms,
            self.ranks,
            if self.complete { "complete" } else { "incomplete" }
        )
    }
}

pub(crate) fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn atom_names(n: usize) -> Vec<String> {
    (0..n).map(|i| ((b'A' + i as u8) as char).to_string()).collect()
}

/// A seeded random model. Rank degrees are 1 followed by strictly
/// decreasing multiples of 0.001; every world gets a rank (or degree 0 when
/// incomplete) and weights are multiples of 1e-6 in (0, 1].
pub fn random_cpm(spec: RandomModelSpec) -> CpmModel {
    let atoms = spec.atoms.clamp(1, MAX_RANDOM_ATOMS);
    let ranks = spec.ranks.clamp(1, MAX_RANDOM_RANKS);
    let mut rng = rng(spec.seed);
    let vocab = Vocabulary::new(atom_names(atoms)).expect("generated names are valid");

    let mut levels: Vec<u32> = (1..1000).collect::<Vec<_>>();
    levels.shuffle(&mut rng);
    let mut lower: Vec<f64> = levels[..ranks - 1].iter().map(|&k| f64::from(k) / 1000.0).collect();
    lower.sort_by(|a, b| b.total_cmp(a));
    let mut degrees_by_rank = vec![1.0];
    degrees_by_rank.extend(lower);

    let n = vocab.world_count();
    let slots = if spec.complete { ranks } else { ranks + 1 };
    let mut degrees: Vec<f64> = (0..n)
        .map(|_| degrees_by_rank.get(rng.gen_range(0..slots)).copied().unwrap_or(0.0))
        .collect();
    let anchor = rng.gen_range(0..n);
    degrees[anchor] = 1.0;

    let weights = degrees
        .iter()
        .map(|&d| {
            let u: f64 = 1.0 - rng.gen::<f64>();
            if d > 0.0 {
                ((u * 1e6).round() / 1e6).max(1e-6)
            } else {
                0.0
            }
        })
        .collect();
    let base = PossibilityModel::new(vocab, degrees).expect("generated degrees are valid");
    CpmModel::new(base, weights).expect("generated weights are valid")
}

/// A seeded random formula of depth at most `depth`.
pub fn random_formula<R: Rng>(rng: &mut R, atoms: usize, depth: usize) -> Formula {
    if depth == 0 || rng.gen_bool(0.25) {
        let i = rng.gen_range(0..atoms);
        return Formula::literal(i, rng.gen_bool(0.5));
    }
    let child = |rng: &mut R| random_formula(rng, atoms, depth - 1);
    match rng.gen_range(0..5) {
        0 => Formula::not(child(rng)),
        1 => Formula::and(child(rng), child(rng)),
        2 => Formula::or(child(rng), child(rng)),
        3 => Formula::implies(child(rng), child(rng)),
        _ => Formula::iff(child(rng), child(rng)),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PoolEntry {
    pub formula: Formula,
    pub models: WorldSet,
}

/// A finite stand-in for "all sentences", deduplicated by model set.
#[derive(Debug, Clone, PartialEq)]
pub struct FormulaPool {
    vocab: Vocabulary,
    entries: Vec<PoolEntry>,
}

impl FormulaPool {
    pub const DEFAULT_RANDOM: usize = 16;
    pub const MAX_DEPTH: usize = 4;

    /// `true`, `false` and every literal; from depth 2 on, every pairwise
    /// conjunction and disjunction of literals; then `random` seeded formulas
    /// of depth at most `depth`. The first formula with a given model set
    /// wins.
    pub fn new(vocab: &Vocabulary, depth: usize, seed: u64, random: usize) -> Self {
        let depth = depth.clamp(1, Self::MAX_DEPTH);
        let n = vocab.len();
        let mut candidates = vec![Formula::True, Formula::False];
        let literals: Vec<Formula> = (0..n)
            .flat_map(|i| [Formula::literal(i, true), Formula::literal(i, false)])
            .collect();
        candidates.extend(literals.iter().cloned());
        if depth >= 2 {
            for (i, l) in literals.iter().enumerate() {
                for r in &literals[i + 1..] {
                    candidates.push(Formula::and(l.clone(), r.clone()));
                    candidates.push(Formula::or(l.clone(), r.clone()));
                }
            }
        }
        let mut rng = rng(seed);
        candidates.extend((0..random).map(|_| random_formula(&mut rng, n, depth)));

        let mut entries: Vec<PoolEntry> = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for formula in candidates {
            let models = formula.models(vocab);
            if seen.insert(models.clone()) {
                entries.push(PoolEntry { formula, models });
            }
        }
        FormulaPool {
            vocab: vocab.clone(),
            entries,
        }
    }

    pub fn vocab(&self) -> &Vocabulary {
        &self.vocab
    }

    pub fn entries(&self) -> &[PoolEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn text(&self, i: usize) -> String {
        self.entries[i].formula.to_text(&self.vocab)
    }
}

/// Convenience wrapper with the default number of random formulas.
pub fn formula_pool(vocab: &Vocabulary, depth: usize, seed: u64) -> FormulaPool {
    FormulaPool::new(vocab, depth, seed, FormulaPool::DEFAULT_RANDOM)
}
