use std::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Why a probabilistic query has no value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Undefined {
    /// The condition has possibility 0.
    ImpossibleCondition,
    /// The condition has factual probability 0.
    ZeroProbabilityCondition,
}

impl fmt::Display for Undefined {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Undefined::ImpossibleCondition => f.write_str("condition is impossible"),
            Undefined::ZeroProbabilityCondition => f.write_str("condition has probability zero"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("syntax error at position {position}: expected {expected}")]
    Syntax { position: usize, expected: String },

    #[error("unknown atom `{0}`")]
    UnknownAtom(String),

    #[error("invalid atom name `{0}`")]
    InvalidAtomName(String),

    #[error("duplicate atom `{0}`")]
    DuplicateAtom(String),

    #[error("vocabulary has no atoms")]
    EmptyVocabulary,

    #[error("vocabulary of {size} atoms exceeds the limit of {limit}")]
    VocabularyTooLarge { size: usize, limit: usize },

    #[error("invalid model: {0}")]
    InvalidModel(String),

    #[error("undefined: {0}")]
    Undefined(Undefined),

    #[error("selection is empty: the condition has no models")]
    EmptySelection,

    #[error("selected worlds carry zero total weight")]
    ZeroShareDenominator,

    #[error("no selection entry for world `{world}` and condition `{condition}`")]
    NoSelectionEntry { world: String, condition: String },

    #[error("selection for condition `{condition}` contains a world that does not satisfy it")]
    SelectionOutsideCondition { condition: String },

    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),

    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("line {line}: {reason}")]
    Validation { line: usize, reason: String },
}

impl Error {
    pub fn impossible() -> Self {
        Error::Undefined(Undefined::ImpossibleCondition)
    }

    pub fn is_undefined(&self) -> bool {
        matches!(self, Error::Undefined(_))
    }
}
