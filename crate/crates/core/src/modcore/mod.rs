//! Exact linear algebra over prime fields and the submodule calculus built
//! on it: closures, sums, intersections, quotients, hom spaces and complete
//! lattice enumeration.

pub mod fixtures;
mod hom;
mod lattice;
pub mod matrix;
mod module;
mod subspace;

pub use hom::{find_isomorphism, hom_space, is_isomorphic_simple, is_simple};
pub use lattice::{enumerate_submodules, SubmoduleLattice, DEFAULT_VECTOR_CAP};
pub use matrix::{Matrix, Vector};
pub use module::{quotient, ModulePresentation, QuotientPresentation, Submodule};
pub use subspace::{rref_canonicalize, Subspace};

/// Canonicalises `vectors` and closes them under the action of `m`.
pub fn closure(m: &ModulePresentation, seed: &[Vector]) -> crate::Result<Submodule> {
    m.closure(seed)
}
