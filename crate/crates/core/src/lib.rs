//! Exact-arithmetic verification engine for decision theory with incomplete
//! preferences.
//!
//! The engine models finite-support lotteries over vectors of exact rationals,
//! compares outcomes under pluggable preorders (the Pareto box order, the
//! two-line family, declared qualitative orders), decides coupling-based
//! stochastic dominance by exact flow computations, materializes finite
//! preference relations as reflexive-transitive closures of generator rules,
//! checks a catalog of axioms over those relations with three-valued verdicts,
//! replays a library of impossibility and consistency scenarios, and runs a
//! bounded, seeded evidence search for a handful of open questions.
//!
//! Everything is exact: there is no floating point anywhere in the crate, and
//! every interchange format carries rationals as `"p/q"` strings.

pub mod axioms;
pub mod dominance;
mod error;
pub mod json;
pub mod lottery;
pub mod order;
pub mod prng;
pub mod qualitative;
pub mod rational;
pub mod region;
pub mod relation;
pub mod scenarios;
pub mod search;
pub mod utility;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;
