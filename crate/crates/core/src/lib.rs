//! Shortest primary and uniform decompositions of submodules of
//! finite-length modules over finite-dimensional algebras given by matrix
//! actions over prime fields, with an exhaustive lattice oracle.

pub mod cli;
pub mod decomp;
pub mod error;
pub mod modcore;
pub mod oracle;

pub use error::{Error, Result};

/// Resource bounds for exhaustive routines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Upper bound on `p^dim` for anything that scans the whole space or
    /// enumerates the submodule lattice.
    pub vectors: u64,
    /// Upper bound on combinatorial search steps (tuples, subsets, products).
    pub search: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            vectors: modcore::DEFAULT_VECTOR_CAP,
            search: 1 << 22,
        }
    }
}
