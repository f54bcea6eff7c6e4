//! Exact decision, enumeration and validation for vertex partitions and
//! their edge analogue on triangle-free graphs.

mod cnf;
mod edge;
pub mod engine;

pub use cnf::{encode_cnf, CnfEncoding, CnfError, CnfFormula};
pub use edge::{
    edge_constraints, enumerate_edge_partitions, is_valid_edge_partition, solve_edge_partition,
    solve_edge_partition_with, EdgePartition, EdgeViolation,
};
pub use engine::{BudgetExceeded, ConstraintSystem, Lit};

use crate::graph::Graph;
use std::fmt;
use thiserror::Error;

/// Default number of search states an enumeration may visit.
pub const DEFAULT_STATE_BUDGET: u64 = 1 << 22;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u8)]
pub enum Color {
    Red = 0,
    Blue = 1,
}

impl Color {
    pub fn flip(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Color::Red => "red",
            Color::Blue => "blue",
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Color {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "red" | "r" => Ok(Color::Red),
            "blue" | "b" => Ok(Color::Blue),
            _ => Err(format!("unknown color {s:?}")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    colors: Vec<Color>,
}

impl Partition {
    pub fn new(colors: Vec<Color>) -> Self {
        Partition { colors }
    }

    pub fn uniform(n: usize, c: Color) -> Self {
        Partition { colors: vec![c; n] }
    }

    /// Blue on `blue`, red elsewhere.
    pub fn from_blue(n: usize, blue: &[usize]) -> Self {
        let mut colors = vec![Color::Red; n];
        for &v in blue {
            colors[v] = Color::Blue;
        }
        Partition { colors }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, v: usize) -> Color {
        self.colors[v]
    }

    pub fn set(&mut self, v: usize, c: Color) {
        self.colors[v] = c;
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn blue(&self) -> Vec<usize> {
        self.with(Color::Blue)
    }

    pub fn red(&self) -> Vec<usize> {
        self.with(Color::Red)
    }

    fn with(&self, c: Color) -> Vec<usize> {
        (0..self.colors.len()).filter(|&v| self.colors[v] == c).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PartitionViolation {
    /// Induced blue path `a - mid - b`.
    BlueP3([usize; 3]),
    RedTriangle([usize; 3]),
}

impl fmt::Display for PartitionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionViolation::BlueP3([a, m, b]) => write!(f, "blue induced P3 {a}-{m}-{b}"),
            PartitionViolation::RedTriangle([a, b, c]) => write!(f, "red triangle {a},{b},{c}"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error("coloring covers {got} items but the graph has {expected}")]
    NotTotal { expected: usize, got: usize },
    #[error("host graph has a triangle {0:?}")]
    Triangle([usize; 3]),
    #[error("enumeration exceeded the budget of {budget} states")]
    BudgetExceeded { budget: u64 },
}

impl From<BudgetExceeded> for SolverError {
    fn from(b: BudgetExceeded) -> Self {
        SolverError::BudgetExceeded { budget: b.budget }
    }
}

/// `Ok(None)` when `p` is a valid partition of `g`, otherwise a witness.
pub fn is_valid_partition(g: &Graph, p: &Partition) -> Result<Option<PartitionViolation>, SolverError> {
    if p.len() != g.vertex_count() {
        return Err(SolverError::NotTotal {
            expected: g.vertex_count(),
            got: p.len(),
        });
    }
    for mid in g.vertices() {
        let nbrs = g.neighbors(mid);
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                let colors = [p.color(a), p.color(mid), p.color(b)];
                if g.has_edge(a, b) {
                    if mid < a && colors.iter().all(|&c| c == Color::Red) {
                        return Ok(Some(PartitionViolation::RedTriangle([mid, a, b])));
                    }
                } else if colors.iter().all(|&c| c == Color::Blue) {
                    return Ok(Some(PartitionViolation::BlueP3([a, mid, b])));
                }
            }
        }
    }
    Ok(None)
}

/// Convenience wrapper: true iff `p` is total and valid.
pub fn partition_is_valid(g: &Graph, p: &Partition) -> bool {
    matches!(is_valid_partition(g, p), Ok(None))
}

/// Clauses whose models are exactly the valid partitions: every induced P3
/// has a red vertex and every triangle a blue one.
pub fn vertex_constraints(g: &Graph) -> ConstraintSystem {
    let mut sys = ConstraintSystem::new(g.vertex_count());
    for [a, m, b] in g.induced_p3s() {
        sys.add_clause(&[Lit::red(a), Lit::red(m), Lit::red(b)]);
    }
    for [a, b, c] in g.triangles() {
        sys.add_clause(&[Lit::blue(a), Lit::blue(b), Lit::blue(c)]);
    }
    sys
}

pub fn solve_partition(g: &Graph) -> Option<Partition> {
    solve_partition_with(g, &[])
}

/// Valid partition agreeing with the `fixed` colors, solved component by
/// component.
pub fn solve_partition_with(g: &Graph, fixed: &[(usize, Color)]) -> Option<Partition> {
    let mut colors = vec![Color::Red; g.vertex_count()];
    for comp in g.components() {
        let (sub, map) = g.induced_subgraph(&comp);
        let mut local = vec![usize::MAX; g.vertex_count()];
        for (i, &v) in map.iter().enumerate() {
            local[v] = i;
        }
        let assumptions: Vec<Lit> = fixed
            .iter()
            .filter(|(v, _)| local[*v] != usize::MAX)
            .map(|&(v, c)| Lit::new(local[v], c))
            .collect();
        let model = if sub.vertex_count() == 1 {
            match assumptions.first() {
                Some(l) if assumptions.iter().any(|m| m.color() != l.color()) => return None,
                Some(l) => vec![l.color()],
                None => vec![Color::Red],
            }
        } else {
            vertex_constraints(&sub).solve_with(&assumptions)?
        };
        for (i, c) in model.into_iter().enumerate() {
            colors[map[i]] = c;
        }
    }
    let p = Partition::new(colors);
    debug_assert!(partition_is_valid(g, &p));
    Some(p)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionEnumeration {
    pub partitions: Vec<Partition>,
    pub truncated: bool,
    pub states: u64,
}

/// Every valid partition in lexicographic order (vertex 0 most significant,
/// red before blue). With `limit`, stops after that many and flags
/// truncation; exceeding `budget` search states is an error.
pub fn enumerate_partitions(g: &Graph, limit: Option<usize>, budget: u64) -> Result<PartitionEnumeration, SolverError> {
    let e = vertex_constraints(g).enumerate(limit, budget)?;
    Ok(PartitionEnumeration {
        partitions: e.solutions.into_iter().map(Partition::new).collect(),
        truncated: e.truncated,
        states: e.states,
    })
}

/// Reference decision by trying all 2^n colorings.
pub fn brute_force_partition(g: &Graph) -> Option<Partition> {
    let n = g.vertex_count();
    assert!(n < 31, "brute force limited to 30 vertices");
    (0u32..1 << n)
        .map(|mask| {
            Partition::new(
                (0..n)
                    .map(|v| if mask >> v & 1 == 1 { Color::Blue } else { Color::Red })
                    .collect(),
            )
        })
        .find(|p| partition_is_valid(g, p))
}
