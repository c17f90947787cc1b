//! Generalized 3-connectivity κ₃ of graphs.
//!
//! For a vertex triple `S`, κ(S) is the largest number of edge-disjoint
//! trees containing `S` whose pairwise vertex intersections are exactly
//! `S`; κ₃(G) is the minimum of κ(S) over all triples. The crate provides
//! vertex connectivity, a constructive packing of `3k + ⌈r/2⌉` trees for
//! `κ = 4k + r`, an exact search for small graphs, and a decision
//! procedure for planar graphs.

pub mod connectivity;
pub mod corpus;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod packing;
pub mod path_transform;
pub mod planar;
pub mod planarity;

pub use error::{Error, Result};
pub use graph::{Graph, PathSeq, VertexId};
