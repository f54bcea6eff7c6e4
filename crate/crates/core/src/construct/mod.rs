//! Polynomial-time partitions for restricted graph classes. Every result is
//! re-validated before it is returned.

mod cliques;
mod degree;
mod edges;
mod polynomial;

pub use cliques::{big_cliques, partition_diamond_house_net_free};
pub use degree::{
    exact_3coloring, exact_defective_coloring, find_ab_coloring, partition_from_deg_coloring,
    partition_from_proper_3coloring, partition_max_degree_3, partition_via_100_coloring, AbColoring,
};
pub use edges::{edge_partition_deg42, edge_partition_planar_girth11};
pub use polynomial::{
    complete_multipartite_parts, independent_set, multipartite_partitionable, partition_kkbar_free, partition_paw_free,
    ramsey_k3,
};

use crate::graph::{Edge, Graph};
use crate::solver::{
    is_valid_partition, solve_edge_partition, solve_partition, EdgePartition, Partition, SolverError,
    DEFAULT_STATE_BUDGET,
};
use crate::structure::{check_class, ClassSpec, StructureError, Violation};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConstructError {
    #[error("vertex {vertex} has degree {degree}, above the cap {cap}")]
    Degree { vertex: usize, degree: usize, cap: usize },
    #[error("vertex {vertex} has neighbors {neighbors:?} in its own class {class} (cap {cap})")]
    ClassCap {
        class: usize,
        vertex: usize,
        neighbors: Vec<usize>,
        cap: usize,
    },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("coloring is not proper on edge {0}")]
    ImproperEdge(Edge),
    #[error("search budget of {budget} nodes exhausted")]
    Budget { budget: u64 },
    #[error("graph is outside the class: {0}")]
    Class(Violation),
    #[error(transparent)]
    Structure(StructureError),
    #[error("graph contains an induced {pattern} on {vertices:?}")]
    Pattern { pattern: String, vertices: Vec<usize> },
    #[error("graph has the independent set {0:?}")]
    IndependentSet(Vec<usize>),
    #[error("no Ramsey number R({0},3) available")]
    UnknownRamsey(usize),
    #[error("edge {0} does not join a 4-vertex and a 2-vertex")]
    DegreePattern(Edge),
    #[error(transparent)]
    Solver(SolverError),
    #[error("internal error: {0}")]
    Internal(String),
}

/// Passes `p` through if it is a valid partition of `g`.
pub(crate) fn certify(g: &Graph, p: Partition) -> Result<Partition, ConstructError> {
    match is_valid_partition(g, &p) {
        Ok(None) => Ok(p),
        Ok(Some(v)) => Err(ConstructError::Internal(format!(
            "constructed partition is invalid: {v}"
        ))),
        Err(e) => Err(ConstructError::Solver(e)),
    }
}

/// Membership test against a named class; the first violation is the error.
pub(crate) fn require_class(g: &Graph, name: &str) -> Result<(), ConstructError> {
    let spec = ClassSpec::preset(name, 0).map_err(ConstructError::Structure)?;
    let report = check_class(g, &spec).map_err(ConstructError::Structure)?;
    match report.violations.into_iter().next() {
        Some(v) => Err(ConstructError::Class(v)),
        None => Ok(()),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Auto,
    /// Exact (1,0,0)-coloring.
    P1,
    /// Exact proper 3-coloring.
    P2,
    /// Big cliques of a (diamond, house, net)-free graph.
    P3,
    /// Eulerian orientation, edge version.
    P42,
    /// Reductions for planar girth-11 hosts, edge version.
    P5,
    /// (1,1)-coloring for maximum degree 3.
    P6,
    PawFree,
    KkbarFree,
    Exact,
}

impl Method {
    pub const ALL: [Method; 10] = [
        Method::Auto,
        Method::P1,
        Method::P2,
        Method::P3,
        Method::P42,
        Method::P5,
        Method::P6,
        Method::PawFree,
        Method::KkbarFree,
        Method::Exact,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Auto => "auto",
            Method::P1 => "p1",
            Method::P2 => "p2",
            Method::P3 => "p3",
            Method::P42 => "p42",
            Method::P5 => "p5",
            Method::P6 => "p6",
            Method::PawFree => "pawfree",
            Method::KkbarFree => "kkbar",
            Method::Exact => "exact",
        }
    }

    /// Whether the method colors edges rather than vertices.
    pub fn is_edge_method(self) -> bool {
        matches!(self, Method::P42 | Method::P5)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Method::ALL.into_iter().find(|m| m.as_str() == s).ok_or_else(|| {
            let names: Vec<&str> = Method::ALL.iter().map(|m| m.as_str()).collect();
            format!("unknown method {s:?}, expected one of {}", names.join(", "))
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Vertex(Partition),
    Edge(EdgePartition),
    /// The method decides the question and the answer is no.
    NotPartitionable,
    /// The method found nothing but does not rule a partition out.
    Inconclusive(String),
}

#[derive(Clone, Copy, Debug)]
pub struct ConstructOptions {
    /// Independence bound for `kkbar`.
    pub k: usize,
    /// Node budget for the backtracking colorings.
    pub budget: u64,
}

impl Default for ConstructOptions {
    fn default() -> Self {
        ConstructOptions {
            k: 3,
            budget: DEFAULT_STATE_BUDGET,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Construction {
    /// The method that produced the outcome; differs from the request for
    /// `auto`.
    pub method: Method,
    pub outcome: Outcome,
}

/// Runs one constructive method. `auto` picks the first applicable vertex
/// method among p6, pawfree and p3 and falls back to the exact solver.
pub fn construct(g: &Graph, method: Method, opts: ConstructOptions) -> Result<Construction, ConstructError> {
    let done = |method, outcome| Ok(Construction { method, outcome });
    let vertex = |p: Option<Partition>| p.map_or(Outcome::NotPartitionable, Outcome::Vertex);
    match method {
        Method::Auto => {
            if g.max_degree() <= 3 {
                return construct(g, Method::P6, opts);
            }
            match partition_paw_free(g) {
                Ok(p) => return done(Method::PawFree, vertex(p)),
                Err(ConstructError::Pattern { .. }) => {}
                Err(e) => return Err(e),
            }
            match partition_diamond_house_net_free(g) {
                Ok(p) => return done(Method::P3, Outcome::Vertex(p)),
                Err(ConstructError::Class(_)) => {}
                Err(e) => return Err(e),
            }
            construct(g, Method::Exact, opts)
        }
        Method::P1 => match partition_via_100_coloring(g, opts.budget)? {
            Some(p) => done(method, Outcome::Vertex(p)),
            None => done(method, Outcome::Inconclusive("no (1,0,0)-coloring exists".into())),
        },
        Method::P2 => match exact_defective_coloring(g, &[0, 0, 0], opts.budget) {
            (Some(c), _) => done(method, Outcome::Vertex(partition_from_proper_3coloring(g, &c)?)),
            (None, false) => done(method, Outcome::Inconclusive("graph is not 3-colorable".into())),
            (None, true) => Err(ConstructError::Budget { budget: opts.budget }),
        },
        Method::P3 => done(method, Outcome::Vertex(partition_diamond_house_net_free(g)?)),
        Method::P42 => done(method, Outcome::Edge(edge_partition_deg42(g)?)),
        Method::P5 => done(method, Outcome::Edge(edge_partition_planar_girth11(g)?)),
        Method::P6 => done(method, Outcome::Vertex(partition_max_degree_3(g)?.0)),
        Method::PawFree => done(method, vertex(partition_paw_free(g)?)),
        Method::KkbarFree => done(method, vertex(partition_kkbar_free(g, opts.k)?)),
        Method::Exact => done(method, vertex(solve_partition(g).map(|p| certify(g, p)).transpose()?)),
    }
}

/// Exact edge-partition, for comparison with the edge methods.
pub fn exact_edge_outcome(g: &Graph) -> Result<Outcome, ConstructError> {
    Ok(solve_edge_partition(g)
        .map_err(ConstructError::Solver)?
        .map_or(Outcome::NotPartitionable, Outcome::Edge))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;

    #[test]
    fn method_names_round_trip() {
        for m in Method::ALL {
            assert_eq!(m.as_str().parse::<Method>().unwrap(), m);
        }
        assert!("p4".parse::<Method>().is_err());
    }

    #[test]
    fn auto_dispatch() {
        let pet = generate("petersen", &[]).unwrap();
        assert_eq!(
            construct(&pet, Method::Auto, Default::default()).unwrap().method,
            Method::P6
        );
        let j = generate("complete_multipartite", &[1, 2, 2, 2]).unwrap();
        let c = construct(&j, Method::Auto, Default::default()).unwrap();
        assert_eq!(c.outcome, Outcome::NotPartitionable);
        let k5 = generate("complete", &[5]).unwrap();
        let c = construct(&k5, Method::Auto, Default::default()).unwrap();
        assert!(matches!(c.outcome, Outcome::Vertex(_)));
    }

    #[test]
    fn colorings_on_small_graphs() {
        let c5 = generate("cycle", &[5]).unwrap();
        for m in [Method::P1, Method::P2, Method::Exact, Method::KkbarFree] {
            let c = construct(&c5, m, Default::default()).unwrap();
            assert!(matches!(c.outcome, Outcome::Vertex(_)), "{m}");
        }
        let k4 = generate("complete", &[4]).unwrap();
        let c = construct(&k4, Method::P2, Default::default()).unwrap();
        assert!(matches!(c.outcome, Outcome::Inconclusive(_)));
    }
}
