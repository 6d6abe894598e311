//! The three-atom reference model used throughout the tests and the README.

use crate::cpm::CpmModel;
use crate::logic::Vocabulary;

/// Model-file text for the reference model.
pub const FIG1_MODEL: &str = "\
atoms A B C
world ~A  B  C  pi=1.0 p=0.5
world ~A  B ~C  pi=1.0 p=0.3
world  A  B  C  pi=0.6 p=0.08
world  A  B ~C  pi=0.6 p=0.04
world  A ~B  C  pi=0.4 p=0.05
world ~A ~B  C  pi=0.4 p=0.03
# unlisted worlds have pi=0 (impossible)
";

/// Beliefs `¬A, B`; `A`-worlds at 0.6, `¬B ∧ C`-worlds at 0.4, `¬B ∧ ¬C` impossible.
pub fn fig1() -> CpmModel {
    let vocab = Vocabulary::new(["A", "B", "C"]).expect("valid vocabulary");
    let records = [
        ("~A B C", 1.0, 0.5),
        ("~A B ~C", 1.0, 0.3),
        ("A B C", 0.6, 0.08),
        ("A B ~C", 0.6, 0.04),
        ("A ~B C", 0.4, 0.05),
        ("~A ~B C", 0.4, 0.03),
    ];
    let entries = records
        .iter()
        .map(|&(w, d, p)| (vocab.parse_world(w).expect("valid world"), d, p))
        .collect::<Vec<_>>();
    CpmModel::from_entries(vocab, entries).expect("valid model")
}
