//! Exact combinatorics for vertex Folkman numbers `F_v(a_1, .., a_r; q)`.
//!
//! The crate computes clique, independence and chromatic numbers exactly,
//! decides vertex and edge arrowing with checkable certificates, builds the
//! join-based witness graphs, mines `(p,3)`-graphs by tabu search,
//! enumerates small `K_q`-free graphs up to isomorphism and tabulates the
//! known lower and upper bounds.

pub mod arrowing;
pub mod bitset;
pub mod bounds;
pub mod canon;
pub mod catalog;
pub mod clique;
pub mod coloring;
pub mod constructions;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod miner;

pub use bitset::{VertexSet, CAPACITY};
pub use coloring::VertexColoring;
pub use error::{Error, Result};
pub use graph::{Graph, Separation};
pub use graph6::{from_graph6, to_graph6};
