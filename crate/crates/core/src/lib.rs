//! Simplicial complexes, cyclic polytopes and extremal problems for complexes that avoid a
//! fixed family of forbidden minors or subcomplexes.
//!
//! Vertices are `0..64` internally and printed 1-based.

pub mod combinatorics;
pub mod commands;
pub mod complex;
pub mod cyclic;
pub mod embedding;
pub mod error;
pub mod extremal;
pub mod forbidden;
pub mod hypergraph;
pub mod minor;
pub mod report;
pub mod scx;
pub mod shifted;
pub mod simplex;
pub mod verify;

pub use complex::{FVector, SimplicialComplex};
pub use cyclic::CyclicSpec;
pub use error::{Error, Result};
pub use hypergraph::UniformHypergraph;
pub use simplex::Simplex;
