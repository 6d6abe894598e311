//! Counterfactual probability models.
//!
//! A model ranks every world of a finite propositional language by a degree
//! of possibility and puts a positive weight on every possible world. The
//! top rank is the agent's belief set; the weights inside it give degrees of
//! belief. Revising by a sentence `A` moves to the most possible `A`-worlds
//! and renormalizes their weights, which stays meaningful when `A` has
//! probability zero and coincides with Bayesian conditioning when it does
//! not.
//!
//! * [`logic`]: formulas, worlds, world sets and the formula parser.
//! * [`possibility`]: possibility models, `Π`, `N`, the `⇒` conditional and
//!   AGM revision of belief sets.
//! * [`cpm`]: counterfactual, factual and conditional probability, revision
//!   and natural revision.
//! * [`simulation`]: the same revision computed with ordinary conditioning.
//! * [`imaging`]: selection functions and generalized imaging.
//! * [`checker`]: random models, formula pools and the verification suites.
//! * [`format`]: the model file format.

pub mod checker;
pub mod cpm;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod imaging;
pub mod logic;
pub mod possibility;
pub mod simulation;

pub use cpm::{CpmModel, WorldDistribution};
pub use error::{Error, Result, Undefined};
pub use logic::{parse_formula, Formula, Vocabulary, World, WorldSet};
pub use possibility::{EpistemicStatus, PossibilityModel};
