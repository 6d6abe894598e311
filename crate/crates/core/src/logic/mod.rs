//! The propositional object language: atom vocabularies, worlds, world sets,
//! formulas and their parser.
//!
//! Worlds are numbered `0..2^n` under the vocabulary's declared atom order,
//! with bit `i` of the index giving the truth value of atom `i`. Every world
//! set in the crate is a bitset over that numbering, so iteration order is
//! deterministic everywhere downstream.

mod formula;
mod parser;
mod worldset;

use std::fmt;
use std::sync::Arc;

pub use formula::{dnf_of_worlds, entails, Formula};
pub use parser::parse_formula;
pub use worldset::{WorldSet, WorldSetIter};

use crate::error::{Error, Result};

/// An ordered list of distinct atom names.
///
/// Cloning is cheap; the names are shared.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vocabulary {
    atoms: Arc<[String]>,
}

impl Vocabulary {
    pub const DEFAULT_LIMIT: usize = 20;
    /// Hard ceiling for [`Vocabulary::with_limit`]; world sets are dense bitsets.
    pub const MAX_LIMIT: usize = 30;

    pub fn new<I, S>(atoms: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self::with_limit(atoms, Self::DEFAULT_LIMIT)
    }

    pub fn with_limit<I, S>(atoms: I, limit: usize) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let limit = limit.min(Self::MAX_LIMIT);
        let atoms: Vec<String> = atoms.into_iter().map(Into::into).collect();
        if atoms.is_empty() {
            return Err(Error::EmptyVocabulary);
        }
        if atoms.len() > limit {
            return Err(Error::VocabularyTooLarge {
                size: atoms.len(),
                limit,
            });
        }
        for (i, name) in atoms.iter().enumerate() {
            if !is_atom_name(name) {
                return Err(Error::InvalidAtomName(name.clone()));
            }
            if atoms[..i].contains(name) {
                return Err(Error::DuplicateAtom(name.clone()));
            }
        }
        Ok(Vocabulary {
            atoms: atoms.into(),
        })
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    pub fn atom(&self, index: usize) -> &str {
        &self.atoms[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.atoms.iter().position(|a| a == name)
    }

    /// Number of worlds, `2^n`.
    pub fn world_count(&self) -> usize {
        1usize << self.atoms.len()
    }

    pub fn worlds(&self) -> impl Iterator<Item = World> {
        (0..self.world_count() as u32).map(World)
    }

    /// The set of all worlds, `V`.
    pub fn all_worlds(&self) -> WorldSet {
        WorldSet::full(self.world_count())
    }

    pub fn no_worlds(&self) -> WorldSet {
        WorldSet::empty(self.world_count())
    }

    /// Worlds in which atom `index` is true.
    pub fn atom_worlds(&self, index: usize) -> WorldSet {
        WorldSet::atom(self.world_count(), index)
    }

    /// Builds a world from `(atom, value)` pairs. Each atom must appear exactly once.
    pub fn world_from_literals<'a, I>(&self, literals: I) -> Result<World>
    where
        I: IntoIterator<Item = (&'a str, bool)>,
    {
        let mut seen = vec![false; self.len()];
        let mut index = 0u32;
        for (name, value) in literals {
            let i = self
                .index_of(name)
                .ok_or_else(|| Error::UnknownAtom(name.to_string()))?;
            if seen[i] {
                return Err(Error::DuplicateAtom(name.to_string()));
            }
            seen[i] = true;
            if value {
                index |= 1 << i;
            }
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidModel(format!(
                "world pattern is missing atom `{}`",
                self.atom(missing)
            )));
        }
        Ok(World(index))
    }

    /// Parses a whitespace-separated world pattern such as `~A B C`.
    pub fn parse_world(&self, text: &str) -> Result<World> {
        let literals = text
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|tok| {
                if let Some(rest) = tok.strip_prefix('~').or_else(|| tok.strip_prefix('¬')) {
                    (rest, false)
                } else if let Some(rest) = tok.strip_prefix('!') {
                    (rest, false)
                } else {
                    (tok, true)
                }
            });
        self.world_from_literals(literals)
    }

    /// Prints a world as one signed literal per atom, e.g. `~A B C`.
    pub fn world_label(&self, world: World) -> String {
        self.atoms
            .iter()
            .enumerate()
            .map(|(i, a)| {
                if world.value(i) {
                    a.clone()
                } else {
                    format!("~{a}")
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Debug for Vocabulary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.atoms.iter()).finish()
    }
}

fn is_atom_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    if !chars.all(|c| c.is_ascii_alphanumeric() || c == '_') {
        return false;
    }
    !matches!(name, "true" | "false")
}

/// A total truth assignment, stored as its index under the vocabulary order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct World(pub(crate) u32);

impl World {
    pub fn from_index(index: usize) -> Self {
        World(index as u32)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// Truth value of atom `atom`.
    pub fn value(self, atom: usize) -> bool {
        (self.0 >> atom) & 1 == 1
    }
}
