//! Exact spanning tree counting for simple graphs.
//!
//! Alongside the general Matrix-Tree and brute-force methods, the crate
//! recognizes threshold, Ferrers and special 2-threshold graphs and counts
//! their spanning trees through triangular rank-one perturbations of the
//! Laplacian and the closed forms they yield, both plainly and as weighted
//! enumerator polynomials.

pub mod cli;
pub mod count;
pub mod error;
pub mod generate;
pub mod graph;
pub mod linalg;
pub mod recognition;
pub mod weighted;

pub use error::{Error, Result};
pub use graph::{FerrersGraph, Graph, InducedSubgraph, PartitionShape, Vertex};
