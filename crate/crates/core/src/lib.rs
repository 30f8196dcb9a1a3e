//! Exact connected and weakly convex domination on small graphs.
//!
//! Graphs are bit-mask adjacency structures of at most 64 vertices. On top of
//! them sit exact solvers, class recognizers, generators for the standard
//! constructions, spanning-tree and edge-removal experiments, and a harness that
//! checks the known theorems over corpora.

pub mod domination;
pub mod error;
pub mod gadgets;
pub mod graph;
pub mod harness;
pub mod recognizers;
pub mod spanning;

pub use error::{DomError, Result};
pub use graph::{Graph, VertexSet};
