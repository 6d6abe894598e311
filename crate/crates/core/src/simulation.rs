//! Counterfactual revision reproduced with ordinary conditioning.
//!
//! Two encodings of a model's ranks:
//!
//! * an [`AdmissibleSequence`]: one distribution per rank, with pairwise
//!   disjoint supports. Revising by `A` conditions the highest distribution
//!   that gives `A` positive mass.
//! * a [`CharacterizingFamily`]: one sentence per rank whose models are
//!   exactly that rank, plus a single distribution over all of `W`. Revising
//!   by `A` conditions the single distribution on `A ∧ α`, where `α` is the
//!   highest-rank sentence consistent with `A`.

use crate::cpm::{CpmModel, WorldDistribution};
use crate::error::{Error, Result};
use crate::logic::{dnf_of_worlds, Formula, Vocabulary, WorldSet};

#[derive(Debug, Clone, PartialEq)]
pub struct SequenceEntry {
    pub rank: f64,
    pub dist: WorldDistribution,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AdmissibleSequence {
    vocab: Vocabulary,
    entries: Vec<SequenceEntry>,
}

impl AdmissibleSequence {
    /// One entry per positive rank, highest first, holding the model weights
    /// restricted to that rank.
    pub fn build(model: &CpmModel) -> Self {
        let entries = model
            .base()
            .ranks()
            .iter()
            .map(|r| SequenceEntry {
                rank: r.degree,
                dist: WorldDistribution::restricted(model.vocab(), model.weights(), &r.worlds)
                    .expect("ranks carry positive weight"),
            })
            .collect();
        AdmissibleSequence {
            vocab: model.vocab().clone(),
            entries,
        }
    }

    pub fn entries(&self) -> &[SequenceEntry] {
        &self.entries
    }

    /// No world carries positive mass in two entries.
    pub fn is_admissible(&self) -> bool {
        let mut seen = self.vocab.no_worlds();
        for e in &self.entries {
            let support = e.dist.support();
            if support.intersects(&seen) {
                return false;
            }
            seen = seen.or(&support);
        }
        true
    }

    /// Union of all supports.
    pub fn support(&self) -> WorldSet {
        self.entries
            .iter()
            .fold(self.vocab.no_worlds(), |acc, e| acc.or(&e.dist.support()))
    }

    /// Rank of the highest entry giving `a` positive mass.
    pub fn most_possible_function(&self, a: &Formula) -> Option<f64> {
        self.select(&a.models(&self.vocab)).map(|e| e.rank)
    }

    fn select(&self, a: &WorldSet) -> Option<&SequenceEntry> {
        self.entries.iter().find(|e| e.dist.mass_of(a) > 0.0)
    }

    pub fn revise(&self, a: &Formula, b: &Formula) -> Result<f64> {
        self.revise_set(&a.models(&self.vocab), &b.models(&self.vocab))
    }

    pub fn revise_set(&self, a: &WorldSet, b: &WorldSet) -> Result<f64> {
        let entry = self.select(a).ok_or_else(Error::impossible)?;
        entry.dist.conditional_set(b, a).ok_or_else(Error::impossible)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FamilyEntry {
    pub rank: f64,
    pub alpha: Formula,
    alpha_models: WorldSet,
}

impl FamilyEntry {
    pub fn alpha_models(&self) -> &WorldSet {
        &self.alpha_models
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CharacterizingFamily {
    vocab: Vocabulary,
    entries: Vec<FamilyEntry>,
    single: WorldDistribution,
}

impl CharacterizingFamily {
    /// One canonical-DNF sentence per positive rank; the single distribution
    /// is the unscaled model weight over `W`.
    pub fn build(model: &CpmModel) -> Self {
        let vocab = model.vocab();
        let entries = model
            .base()
            .ranks()
            .iter()
            .map(|r| {
                let alpha = dnf_of_worlds(&r.worlds, vocab);
                FamilyEntry {
                    rank: r.degree,
                    alpha_models: alpha.models(vocab),
                    alpha,
                }
            })
            .collect();
        let single = WorldDistribution::new(vocab.clone(), model.weights().to_vec())
            .expect("the top rank carries positive weight");
        CharacterizingFamily {
            vocab: vocab.clone(),
            entries,
            single,
        }
    }

    pub fn entries(&self) -> &[FamilyEntry] {
        &self.entries
    }

    pub fn single_dist(&self) -> &WorldDistribution {
        &self.single
    }

    /// `α_j ⊢ ¬α_k` for every pair of distinct entries.
    pub fn is_disjoint(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, e)| {
            self.entries[i + 1..]
                .iter()
                .all(|o| !e.alpha_models.intersects(&o.alpha_models))
        })
    }

    /// The highest-rank sentence consistent with `a`.
    pub fn alpha_for(&self, a: &Formula) -> Option<&Formula> {
        self.entry_for(&a.models(&self.vocab)).map(|e| &e.alpha)
    }

    fn entry_for(&self, a: &WorldSet) -> Option<&FamilyEntry> {
        self.entries.iter().find(|e| e.alpha_models.intersects(a))
    }

    pub fn revise(&self, a: &Formula, b: &Formula) -> Result<f64> {
        self.revise_set(&a.models(&self.vocab), &b.models(&self.vocab))
    }

    /// `P(B | A ∧ α_A)` under the single distribution.
    pub fn revise_set(&self, a: &WorldSet, b: &WorldSet) -> Result<f64> {
        let entry = self.entry_for(a).ok_or_else(Error::impossible)?;
        self.single
            .conditional_set(b, &a.and(&entry.alpha_models))
            .ok_or_else(Error::impossible)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::fig1;
    use crate::logic::parse_formula;
    use crate::possibility::PossibilityModel;

    const EPS: f64 = 1e-9;

    fn f(v: &Vocabulary, s: &str) -> Formula {
        parse_formula(s, v).unwrap()
    }

    #[test]
    fn sequence_for_reference_model() {
        let m = fig1();
        let v = m.vocab().clone();
        let seq = AdmissibleSequence::build(&m);
        let shape: Vec<(f64, Vec<(String, f64)>)> = seq
            .entries()
            .iter()
            .map(|e| {
                (
                    e.rank,
                    e.dist.entries().map(|(w, p)| (v.world_label(w), p)).collect(),
                )
            })
            .collect();
        let expect = |r: f64, ws: &[(&str, f64)]| {
            (r, ws.iter().map(|(w, p)| (w.to_string(), *p)).collect::<Vec<_>>())
        };
        assert_eq!(
            shape,
            vec![
                expect(1.0, &[("~A B ~C", 0.3), ("~A B C", 0.5)]),
                expect(0.6, &[("A B ~C", 0.04), ("A B C", 0.08)]),
                expect(0.4, &[("~A ~B C", 0.03), ("A ~B C", 0.05)]),
            ]
        );
        assert!(seq.is_admissible());
        assert_eq!(&seq.support(), m.base().possible_worlds());
    }

    #[test]
    fn sequence_queries() {
        let m = fig1();
        let v = m.vocab().clone();
        let seq = AdmissibleSequence::build(&m);
        assert_eq!(seq.most_possible_function(&f(&v, "A")), Some(0.6));
        assert_eq!(seq.most_possible_function(&f(&v, "true")), Some(1.0));
        assert_eq!(seq.most_possible_function(&f(&v, "~B & ~C")), None);
        assert!((seq.revise(&f(&v, "A"), &f(&v, "C")).unwrap() - 2.0 / 3.0).abs() < EPS);
        assert!((seq.revise(&f(&v, "true"), &f(&v, "C")).unwrap() - 0.625).abs() < EPS);
        assert!(seq.revise(&f(&v, "~B&~C"), &f(&v, "A")).unwrap_err().is_undefined());
    }

    #[test]
    fn single_rank_model() {
        let v = Vocabulary::new(["A", "B"]).unwrap();
        let base = PossibilityModel::new(v.clone(), vec![1.0; 4]).unwrap();
        let m = CpmModel::new(base, vec![0.1, 0.2, 0.3, 0.4]).unwrap();
        assert_eq!(AdmissibleSequence::build(&m).entries().len(), 1);
        let fam = CharacterizingFamily::build(&m);
        assert_eq!(fam.entries().len(), 1);
        assert_eq!(fam.entries()[0].alpha.models(&v), v.all_worlds());
    }

    #[test]
    fn family_for_reference_model() {
        let m = fig1();
        let v = m.vocab().clone();
        let fam = CharacterizingFamily::build(&m);
        let alphas: Vec<(f64, WorldSet)> = fam
            .entries()
            .iter()
            .map(|e| (e.rank, e.alpha.models(&v)))
            .collect();
        assert_eq!(
            alphas,
            vec![
                (1.0, f(&v, "~A & B").models(&v)),
                (0.6, f(&v, "A & B").models(&v)),
                (0.4, f(&v, "~B & C").models(&v)),
            ]
        );
        assert!(fam.is_disjoint());
        let (a1, a6) = (&fam.entries()[0].alpha, &fam.entries()[1].alpha);
        assert!(crate::logic::entails(&a1.models(&v), &Formula::not(a6.clone()), &v));
    }

    #[test]
    fn family_queries() {
        let m = fig1();
        let v = m.vocab().clone();
        let fam = CharacterizingFamily::build(&m);
        assert_eq!(fam.alpha_for(&f(&v, "A")), Some(&fam.entries()[1].alpha));
        assert_eq!(fam.alpha_for(&f(&v, "C")), Some(&fam.entries()[0].alpha));
        assert_eq!(fam.alpha_for(&f(&v, "~B & ~C")), None);
        assert!((fam.revise(&f(&v, "A"), &f(&v, "C")).unwrap() - 0.08 / 0.12).abs() < EPS);
        assert!((fam.revise(&f(&v, "true"), &f(&v, "C")).unwrap() - 0.625).abs() < EPS);
        assert!(fam.revise(&f(&v, "false"), &f(&v, "C")).unwrap_err().is_undefined());
    }

    #[test]
    fn single_distribution_alone_misreads_beliefs() {
        let m = fig1();
        let v = m.vocab().clone();
        let fam = CharacterizingFamily::build(&m);
        let b = f(&v, "B");
        assert!(m.base().believes(&b));
        assert!(fam.single_dist().probability(&b) < 1.0);
        assert_eq!(fam.revise(&f(&v, "true"), &b).unwrap(), 1.0);
    }
}
