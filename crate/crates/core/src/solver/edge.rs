use super::engine::{ConstraintSystem, Lit};
use super::{Color, SolverError};
use crate::graph::{Edge, Graph};
use std::fmt;

/// Edge coloring of a triangle-free graph, stored in `Graph::edges` order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgePartition {
    edges: Vec<Edge>,
    colors: Vec<Color>,
}

impl EdgePartition {
    /// `colors[i]` colors `g.edges()[i]`.
    pub fn new(g: &Graph, colors: Vec<Color>) -> Self {
        EdgePartition {
            edges: g.edges(),
            colors,
        }
    }

    pub fn from_fn(g: &Graph, mut f: impl FnMut(Edge) -> Color) -> Self {
        let edges = g.edges();
        let colors = edges.iter().map(|&e| f(e)).collect();
        EdgePartition { edges, colors }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn color(&self, e: Edge) -> Option<Color> {
        self.edges.binary_search(&e).ok().map(|i| self.colors[i])
    }

    pub fn count(&self, c: Color) -> usize {
        self.colors.iter().filter(|&&x| x == c).count()
    }

    /// Number of edges of color `c` at `v`.
    pub fn degree(&self, g: &Graph, v: usize, c: Color) -> usize {
        g.neighbors(v)
            .iter()
            .filter(|&&w| self.color(Edge::new(v, w)) == Some(c))
            .count()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EdgeViolation {
    /// Vertices `a b c d` of a path whose three edges are blue.
    BluePath([usize; 4]),
    /// A vertex with three red edges.
    RedOverload { vertex: usize, edges: [Edge; 3] },
}

impl fmt::Display for EdgeViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeViolation::BluePath([a, b, c, d]) => write!(f, "blue path {a}-{b}-{c}-{d}"),
            EdgeViolation::RedOverload { vertex, edges } => {
                write!(
                    f,
                    "vertex {vertex} has red edges {} {} {}",
                    edges[0], edges[1], edges[2]
                )
            }
        }
    }
}

fn require_triangle_free(g: &Graph) -> Result<(), SolverError> {
    match g.find_triangle() {
        Some(t) => Err(SolverError::Triangle(t)),
        None => Ok(()),
    }
}

/// `Ok(None)` when blue edges form a star forest and no vertex has three red
/// edges. In a triangle-free host a blue cycle contains a blue path on four
/// vertices, so paths are the only blue witness needed.
pub fn is_valid_edge_partition(g: &Graph, ep: &EdgePartition) -> Result<Option<EdgeViolation>, SolverError> {
    require_triangle_free(g)?;
    if ep.edges != g.edges() {
        return Err(SolverError::NotTotal {
            expected: g.edge_count(),
            got: ep.len(),
        });
    }
    let col = |u: usize, v: usize| ep.color(Edge::new(u, v)).unwrap();
    for v in g.vertices() {
        let red: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| col(v, w) == Color::Red)
            .collect();
        if red.len() >= 3 {
            return Ok(Some(EdgeViolation::RedOverload {
                vertex: v,
                edges: [Edge::new(v, red[0]), Edge::new(v, red[1]), Edge::new(v, red[2])],
            }));
        }
    }
    for e in g.edges() {
        let (b, c) = e.ends();
        if col(b, c) != Color::Blue {
            continue;
        }
        let a = g.neighbors(b).iter().find(|&&a| a != c && col(a, b) == Color::Blue);
        let d = g.neighbors(c).iter().find(|&&d| d != b && col(c, d) == Color::Blue);
        if let (Some(&a), Some(&d)) = (a, d) {
            return Ok(Some(EdgeViolation::BluePath([a, b, c, d])));
        }
    }
    Ok(None)
}

/// Clauses over edge variables (indexed as in `Graph::edges`): no three red
/// edges at a vertex and no path of three blue edges.
pub fn edge_constraints(g: &Graph) -> Result<ConstraintSystem, SolverError> {
    require_triangle_free(g)?;
    let index = g.edge_index();
    let id = |u: usize, v: usize| index[&Edge::new(u, v)];
    let mut sys = ConstraintSystem::new(g.edge_count());
    for v in g.vertices() {
        let nb = g.neighbors(v);
        for i in 0..nb.len() {
            for j in i + 1..nb.len() {
                for k in j + 1..nb.len() {
                    sys.add_clause(&[
                        Lit::blue(id(v, nb[i])),
                        Lit::blue(id(v, nb[j])),
                        Lit::blue(id(v, nb[k])),
                    ]);
                }
            }
        }
    }
    for e in g.edges() {
        let (b, c) = e.ends();
        for &a in g.neighbors(b) {
            if a == c {
                continue;
            }
            for &d in g.neighbors(c) {
                if d != b {
                    sys.add_clause(&[Lit::red(id(a, b)), Lit::red(id(b, c)), Lit::red(id(c, d))]);
                }
            }
        }
    }
    Ok(sys)
}

pub fn solve_edge_partition(g: &Graph) -> Result<Option<EdgePartition>, SolverError> {
    solve_edge_partition_with(g, &[])
}

pub fn solve_edge_partition_with(g: &Graph, fixed: &[(Edge, Color)]) -> Result<Option<EdgePartition>, SolverError> {
    let sys = edge_constraints(g)?;
    let index = g.edge_index();
    let mut assumptions = Vec::with_capacity(fixed.len());
    for &(e, c) in fixed {
        match index.get(&e) {
            Some(&i) => assumptions.push(Lit::new(i, c)),
            None => return Ok(None),
        }
    }
    Ok(sys.solve_with(&assumptions).map(|colors| EdgePartition::new(g, colors)))
}

/// Valid edge partitions in lexicographic order over `Graph::edges`.
pub fn enumerate_edge_partitions(
    g: &Graph,
    limit: Option<usize>,
    budget: u64,
) -> Result<(Vec<EdgePartition>, bool), SolverError> {
    let e = edge_constraints(g)?.enumerate(limit, budget)?;
    Ok((
        e.solutions.into_iter().map(|c| EdgePartition::new(g, c)).collect(),
        e.truncated,
    ))
}
