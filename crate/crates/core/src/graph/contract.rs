use super::{Edge, Graph};
use std::collections::HashSet;

/// One edge of a contracted multigraph together with the path of original
/// vertices it replaces (both ends included).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractedEdge {
    /// Endpoints as indices into [`Contraction::kept`].
    pub ends: (usize, usize),
    pub path: Vec<usize>,
}

impl ContractedEdge {
    pub fn is_loop(&self) -> bool {
        self.ends.0 == self.ends.1
    }

    /// Number of original edges this multi-edge stands for.
    pub fn length(&self) -> usize {
        self.path.len() - 1
    }
}

/// The multigraph obtained by contracting every 2-vertex.
///
/// Loops appear when a chain of 2-vertices leaves and re-enters the same
/// kept vertex. Components made only of 2-vertices have no kept vertex at
/// all and are listed in `closed_cycles`.
#[derive(Clone, Debug, Default)]
pub struct Contraction {
    /// Original indices of the vertices whose degree is not 2, ascending.
    pub kept: Vec<usize>,
    pub edges: Vec<ContractedEdge>,
    pub closed_cycles: Vec<Vec<usize>>,
}

impl Contraction {
    /// Degree of kept vertex `i` in the multigraph (loops count twice).
    pub fn degree(&self, i: usize) -> usize {
        self.edges
            .iter()
            .map(|e| usize::from(e.ends.0 == i) + usize::from(e.ends.1 == i))
            .sum()
    }

    /// The contracted multigraph as a simple graph, if it has neither loops
    /// nor parallel edges.
    pub fn to_simple(&self) -> Option<Graph> {
        let mut g = Graph::new(self.kept.len());
        for e in &self.edges {
            if e.is_loop() || !g.add_edge(e.ends.0, e.ends.1).ok()? {
                return None;
            }
        }
        Some(g)
    }
}

pub fn contract_two_vertices(g: &Graph) -> Contraction {
    let n = g.vertex_count();
    let kept: Vec<usize> = g.vertices().filter(|&v| g.degree(v) != 2).collect();
    let mut kept_pos = vec![usize::MAX; n];
    for (i, &v) in kept.iter().enumerate() {
        kept_pos[v] = i;
    }
    let mut used: HashSet<Edge> = HashSet::new();
    let mut on_path = vec![false; n];
    let mut edges = Vec::new();

    for (i, &start) in kept.iter().enumerate() {
        for &first in g.neighbors(start) {
            if used.contains(&Edge::new(start, first)) {
                continue;
            }
            let mut path = vec![start];
            let (mut prev, mut cur) = (start, first);
            used.insert(Edge::new(prev, cur));
            while kept_pos[cur] == usize::MAX {
                on_path[cur] = true;
                path.push(cur);
                let nbrs = g.neighbors(cur);
                let next = if nbrs[0] == prev { nbrs[1] } else { nbrs[0] };
                prev = cur;
                cur = next;
                used.insert(Edge::new(prev, cur));
            }
            path.push(cur);
            edges.push(ContractedEdge {
                ends: (i, kept_pos[cur]),
                path,
            });
        }
    }

    let mut closed_cycles = Vec::new();
    for s in 0..n {
        if kept_pos[s] != usize::MAX || on_path[s] {
            continue;
        }
        let mut cycle = vec![s];
        on_path[s] = true;
        let (mut prev, mut cur) = (s, g.neighbors(s)[0]);
        while cur != s {
            on_path[cur] = true;
            cycle.push(cur);
            let nbrs = g.neighbors(cur);
            let next = if nbrs[0] == prev { nbrs[1] } else { nbrs[0] };
            prev = cur;
            cur = next;
        }
        closed_cycles.push(cycle);
    }

    Contraction {
        kept,
        edges,
        closed_cycles,
    }
}
