//! Structural analysis: induced patterns, cycles, connectivity, planarity
//! and class membership.

mod classes;
mod connectivity;
mod cycles;
pub mod enumerate;
mod induced;
mod planarity;

pub use classes::{
    check_class, check_class_with, CheckOptions, ClassSpec, CycleWindow, NamedPattern, StructureReport, Violation,
    Witness,
};
pub use connectivity::{biconnected_components, cut_vertices};
pub use cycles::{find_induced_cycle, girth, is_induced_cycle, Parity, DEFAULT_MAX_CYCLE_LEN};
pub use induced::{
    are_isomorphic, contains_induced, contains_induced_bounded, is_induced_embedding, isomorphism,
    DEFAULT_PATTERN_BOUND,
};
pub use planarity::{
    is_planar, planar_verdict, Embedding, KuratowskiKind, KuratowskiWitness, PlanarityReport, PlanarityWitness,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("pattern has {size} vertices, exhaustive search is limited to {bound}")]
    PatternTooLarge { size: usize, bound: usize },
    #[error("cycle window up to length {max} exceeds the search bound {bound}")]
    WindowTooLarge { max: usize, bound: usize },
    #[error("invalid class specification: {0}")]
    InvalidSpec(String),
}
