//! Exact, allocation-only algorithms for Neumaier graphs: edge-regular graphs
//! with a regular clique.
//!
//! Graphs have at most 128 vertices and are stored as bitset adjacency rows.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod automorphism;
pub mod bits;
pub mod catalog;
pub mod cayley;
pub mod circulant;
pub mod clique;
pub mod graph;
pub mod group;
pub mod neumaier;
pub mod params;
pub mod spectrum;

pub use automorphism::{
    are_isomorphic, automorphism_group, is_vertex_transitive, AutReport, Isomorphism, VertexTransitivity,
};
pub use bits::VertexSet;
pub use cayley::{cayley_graph, ConnectionSet};
pub use graph::{EdgeRegularParams, Graph, GraphError, SrgParams};
pub use group::{FiniteGroup, GroupSpec};
pub use neumaier::{classify, equitable_partition, Classification, FourPartPartition, Verdict};
pub use params::{feasibility, srg_feasibility, NeumaierParams, SrgNeumaierParams};
pub use spectrum::{char_poly, integer_spectrum, CharPoly, Polynomial, SpectrumReport};
