//! Deciding, constructing and verifying partitions of a graph into a
//! P3-free part (blue, a disjoint union of cliques) and a triangle-free part
//! (red).

pub mod construct;
pub mod gadgets;
pub mod graph;
pub mod reduction;
pub mod solver;
pub mod structure;

pub use graph::{Edge, Graph, GraphError};
