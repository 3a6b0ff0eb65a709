//! Brute-force ground truth over complete submodule lattices, and the
//! verification suites built on it.
//!
//! The oracle recomputes uniformity, associated primes and decompositions
//! from their definitions on the lattice and never calls the decomposition
//! constructions it is checking.

pub mod brute;
pub mod corpus;
pub mod defs;
mod poly;
pub mod report;
pub mod suites;

pub use brute::{brute_force_decompositions, BruteKind};
pub use corpus::{generate_corpus, CorpusLimits, Instance};
pub use defs::{LatticeOracle, OracleCaps};
pub use suites::{verify_suite, Counterexample, Suite, SuiteReport, Verdict};
