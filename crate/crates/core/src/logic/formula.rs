use std::fmt;

use super::{Vocabulary, World, WorldSet};

/// A propositional formula. Atoms are indices into a [`Vocabulary`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Atom(usize),
    True,
    False,
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn atom(index: usize) -> Formula {
        Formula::Atom(index)
    }

    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn and(l: Formula, r: Formula) -> Formula {
        Formula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Formula, r: Formula) -> Formula {
        Formula::Or(Box::new(l), Box::new(r))
    }

    pub fn implies(l: Formula, r: Formula) -> Formula {
        Formula::Implies(Box::new(l), Box::new(r))
    }

    pub fn iff(l: Formula, r: Formula) -> Formula {
        Formula::Iff(Box::new(l), Box::new(r))
    }

    /// A signed literal for atom `index`.
    pub fn literal(index: usize, positive: bool) -> Formula {
        if positive {
            Formula::Atom(index)
        } else {
            Formula::not(Formula::Atom(index))
        }
    }

    /// Left-nested conjunction; `true` for an empty iterator.
    pub fn conjunction<I: IntoIterator<Item = Formula>>(items: I) -> Formula {
        items
            .into_iter()
            .reduce(Formula::and)
            .unwrap_or(Formula::True)
    }

    /// Left-nested disjunction; `false` for an empty iterator.
    pub fn disjunction<I: IntoIterator<Item = Formula>>(items: I) -> Formula {
        items
            .into_iter()
            .reduce(Formula::or)
            .unwrap_or(Formula::False)
    }

    /// Classical truth value at `w`.
    pub fn eval(&self, w: World) -> bool {
        match self {
            Formula::Atom(i) => w.value(*i),
            Formula::True => true,
            Formula::False => false,
            Formula::Not(f) => !f.eval(w),
            Formula::And(l, r) => l.eval(w) && r.eval(w),
            Formula::Or(l, r) => l.eval(w) || r.eval(w),
            Formula::Implies(l, r) => !l.eval(w) || r.eval(w),
            Formula::Iff(l, r) => l.eval(w) == r.eval(w),
        }
    }

    /// The set of worlds satisfying the formula, `‖A‖`.
    pub fn models(&self, vocab: &Vocabulary) -> WorldSet {
        match self {
            Formula::Atom(i) => vocab.atom_worlds(*i),
            Formula::True => vocab.all_worlds(),
            Formula::False => vocab.no_worlds(),
            Formula::Not(f) => f.models(vocab).complement(),
            Formula::And(l, r) => l.models(vocab).and(&r.models(vocab)),
            Formula::Or(l, r) => l.models(vocab).or(&r.models(vocab)),
            Formula::Implies(l, r) => l.models(vocab).complement().or(&r.models(vocab)),
            Formula::Iff(l, r) => {
                let (a, b) = (l.models(vocab), r.models(vocab));
                a.and(&b).or(&a.complement().and(&b.complement()))
            }
        }
    }

    /// Largest atom index referenced, if any.
    pub fn max_atom(&self) -> Option<usize> {
        match self {
            Formula::Atom(i) => Some(*i),
            Formula::True | Formula::False => None,
            Formula::Not(f) => f.max_atom(),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) | Formula::Iff(l, r) => {
                l.max_atom().max(r.max_atom())
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Formula::Atom(_) | Formula::True | Formula::False => 0,
            Formula::Not(f) => 1 + f.depth(),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) | Formula::Iff(l, r) => {
                1 + l.depth().max(r.depth())
            }
        }
    }

    /// Canonical printed form under `vocab`; [`super::parse_formula`] reads it back.
    pub fn display<'a>(&'a self, vocab: &'a Vocabulary) -> Display<'a> {
        Display {
            formula: self,
            vocab,
        }
    }

    pub fn to_text(&self, vocab: &Vocabulary) -> String {
        self.display(vocab).to_string()
    }

    fn level(&self) -> u8 {
        match self {
            Formula::Iff(..) => 1,
            Formula::Implies(..) => 2,
            Formula::Or(..) => 3,
            Formula::And(..) => 4,
            _ => 5,
        }
    }
}

pub struct Display<'a> {
    formula: &'a Formula,
    vocab: &'a Vocabulary,
}

impl fmt::Display for Display<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_formula(f, self.formula, self.vocab, 0)
    }
}

fn write_formula(
    out: &mut fmt::Formatter<'_>,
    formula: &Formula,
    vocab: &Vocabulary,
    min_level: u8,
) -> fmt::Result {
    let level = formula.level();
    let parens = level < min_level;
    if parens {
        out.write_str("(")?;
    }
    match formula {
        Formula::Atom(i) => out.write_str(vocab.atom(*i))?,
        Formula::True => out.write_str("true")?,
        Formula::False => out.write_str("false")?,
        Formula::Not(inner) => {
            out.write_str("~")?;
            write_formula(out, inner, vocab, 5)?;
        }
        Formula::And(l, r) | Formula::Or(l, r) | Formula::Iff(l, r) => {
            let op = match formula {
                Formula::And(..) => " & ",
                Formula::Or(..) => " | ",
                _ => " <-> ",
            };
            write_formula(out, l, vocab, level)?;
            out.write_str(op)?;
            write_formula(out, r, vocab, level + 1)?;
        }
        Formula::Implies(l, r) => {
            write_formula(out, l, vocab, level + 1)?;
            out.write_str(" -> ")?;
            write_formula(out, r, vocab, level)?;
        }
    }
    if parens {
        out.write_str(")")?;
    }
    Ok(())
}

/// True iff every world in `worlds` satisfies `f`; vacuously true for the empty set.
pub fn entails(worlds: &WorldSet, f: &Formula, vocab: &Vocabulary) -> bool {
    worlds.is_subset(&f.models(vocab))
}

/// Canonical DNF whose models are exactly `worlds`: one full conjunction of
/// literals per world, worlds in index order, `false` for the empty set.
pub fn dnf_of_worlds(worlds: &WorldSet, vocab: &Vocabulary) -> Formula {
    Formula::disjunction(worlds.iter().map(|w| {
        Formula::conjunction((0..vocab.len()).map(|i| Formula::literal(i, w.value(i))))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::parse_formula;

    fn abc() -> Vocabulary {
        Vocabulary::new(["A", "B", "C"]).unwrap()
    }

    fn world(v: &Vocabulary, s: &str) -> World {
        v.parse_world(s).unwrap()
    }

    fn f(v: &Vocabulary, s: &str) -> Formula {
        parse_formula(s, v).unwrap()
    }

    #[test]
    fn eval_truth_table_cases() {
        let v = abc();
        assert!(f(&v, "~A & B").eval(world(&v, "~A B C")));
        assert!(f(&v, "true").eval(world(&v, "A ~B ~C")));
        assert!(!f(&v, "A -> B").eval(world(&v, "A ~B ~C")));
        assert!(f(&v, "A <-> B").eval(world(&v, "~A ~B C")));
    }

    #[test]
    fn models_cases() {
        let v = abc();
        let m = f(&v, "~A & B").models(&v);
        let expected = WorldSet::from_worlds(8, [world(&v, "~A B C"), world(&v, "~A B ~C")]);
        assert_eq!(m, expected);
        assert!(f(&v, "false").models(&v).is_empty());
        assert_eq!(f(&v, "A | ~A").models(&v).count(), 8);
    }

    #[test]
    fn models_agree_with_eval() {
        let v = abc();
        for text in ["A -> B -> C", "(A <-> ~B) | C", "~(A & B) -> C", "A <-> B <-> C"] {
            let phi = f(&v, text);
            let m = phi.models(&v);
            for w in v.worlds() {
                assert_eq!(m.contains(w), phi.eval(w), "{text} at {}", w.index());
            }
        }
    }

    #[test]
    fn entailment_cases() {
        let v = abc();
        let ws = WorldSet::from_worlds(8, [world(&v, "~A B C"), world(&v, "~A B ~C")]);
        assert!(entails(&ws, &f(&v, "B"), &v));
        assert!(entails(&v.no_worlds(), &f(&v, "false"), &v));
        assert!(!entails(&ws, &f(&v, "C"), &v));
    }

    #[test]
    fn dnf_cases() {
        let v = abc();
        let ws = WorldSet::from_worlds(8, [world(&v, "~A B C"), world(&v, "~A B ~C")]);
        let dnf = dnf_of_worlds(&ws, &v);
        assert_eq!(dnf.models(&v), ws);
        assert_eq!(dnf.to_text(&v), "~A & B & ~C | ~A & B & C");
        assert_eq!(dnf_of_worlds(&v.no_worlds(), &v), Formula::False);
        assert_eq!(dnf_of_worlds(&v.all_worlds(), &v).models(&v), v.all_worlds());
    }

    #[test]
    fn printer_parenthesizes_minimally() {
        let v = abc();
        let cases = [
            ("A -> B -> C", "A -> B -> C"),
            ("(A -> B) -> C", "(A -> B) -> C"),
            ("A & (B | C)", "A & (B | C)"),
            ("(A & B) | C", "A & B | C"),
            ("~(A & B)", "~(A & B)"),
            ("~~A", "~~A"),
            ("A | (B | C)", "A | (B | C)"),
            ("((A))", "A"),
        ];
        for (input, printed) in cases {
            assert_eq!(f(&v, input).to_text(&v), printed);
        }
    }
}
