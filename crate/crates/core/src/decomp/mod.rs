//! Essentiality, uniform dimension, left primes, complements, and the
//! construction and enumeration of shortest primary and uniform
//! decompositions.

mod check;
mod complement;
mod construct;
mod primes;
mod socle;
mod workspace;

pub use check::{check_decomposition, cofactors, CheckReport};
pub use complement::{complement, enumerate_complements};
pub use construct::{
    construction_paths, enumerate_maximal_shortest_primary, enumerate_maximal_shortest_uniform,
    enumerate_shortest_primary, enumerate_shortest_uniform, maximal_shortest_primary, maximal_shortest_uniform,
    refine_to_uniform, Decomposition, DecompositionFlags, Kind, Refinement,
};
pub use primes::{is_irreducible, AssociatedPrimes, LeftPrime, PrimeContext};
pub use socle::{
    is_essential, is_uniform, minimal_submodules, socle, socle_decomposition, socle_decompositions,
    uniform_dimension,
};
