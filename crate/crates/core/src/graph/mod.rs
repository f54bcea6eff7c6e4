//! Simple undirected graphs with dense vertex indices and per-vertex
//! string annotations.
//!
//! Every transformation returns a new [`Graph`]; composite operations that
//! renumber vertices also return an explicit map from old to new indices so
//! callers can trace vertices through merges.

mod contract;
mod generate;
mod io;

pub use contract::{contract_two_vertices, ContractedEdge, Contraction};
pub use generate::{four_regular_with_girth, generate, pattern, Generator, PatternName};
pub use io::{parse_edge_list, to_dot, to_edge_list};

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range (graph has {count} vertices)")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("edge {0} is not present")]
    MissingEdge(Edge),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("generator: {0}")]
    Generator(String),
}

/// An undirected edge stored with its smaller endpoint first.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge(usize, usize);

impl Edge {
    pub fn new(u: usize, v: usize) -> Self {
        if u <= v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }

    pub fn ends(self) -> (usize, usize) {
        (self.0, self.1)
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 == v || self.1 == v
    }

    /// The endpoint that is not `v`. Panics if `v` is not an endpoint.
    pub fn other(self, v: usize) -> usize {
        if self.0 == v {
            self.1
        } else {
            assert_eq!(self.1, v, "{v} is not an endpoint of {self}");
            self.0
        }
    }

    pub fn shares_endpoint(self, other: Edge) -> bool {
        self.contains(other.0) || self.contains(other.1)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

pub type Annotations = BTreeMap<String, String>;

/// A finite simple undirected graph on vertices `0..vertex_count()`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    annotations: BTreeMap<usize, Annotations>,
}

impl Graph {
    pub fn new(vertex_count: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); vertex_count],
            annotations: BTreeMap::new(),
        }
    }

    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(vertex_count);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.adj.len() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                count: self.adj.len(),
            })
        }
    }

    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    /// Adds `uv`; returns `false` if it was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Ok(false),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                Ok(true)
            }
        }
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let e = Edge::new(u, v);
        if u >= self.adj.len() || v >= self.adj.len() {
            return Err(GraphError::MissingEdge(e));
        }
        match (self.adj[u].binary_search(&v), self.adj[v].binary_search(&u)) {
            (Ok(i), Ok(j)) => {
                self.adj[u].remove(i);
                self.adj[v].remove(j);
                Ok(())
            }
            _ => Err(GraphError::MissingEdge(e)),
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Sorted neighbor list.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// All edges in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nbrs) in self.adj.iter().enumerate() {
            for &v in nbrs {
                if u < v {
                    out.push(Edge(u, v));
                }
            }
        }
        out
    }

    pub fn edge_index(&self) -> HashMap<Edge, usize> {
        self.edges().into_iter().enumerate().map(|(i, e)| (e, i)).collect()
    }

    pub fn annotate(&mut self, v: usize, key: impl Into<String>, value: impl Into<String>) {
        assert!(v < self.adj.len(), "annotating missing vertex {v}");
        self.annotations.entry(v).or_default().insert(key.into(), value.into());
    }

    pub fn annotation(&self, v: usize, key: &str) -> Option<&str> {
        self.annotations.get(&v).and_then(|a| a.get(key)).map(String::as_str)
    }

    pub fn annotations(&self) -> &BTreeMap<usize, Annotations> {
        &self.annotations
    }

    /// Vertices whose annotation `key` equals `value`, ascending.
    pub fn vertices_with(&self, key: &str, value: &str) -> Vec<usize> {
        self.annotations
            .iter()
            .filter(|(_, a)| a.get(key).map(String::as_str) == Some(value))
            .map(|(&v, _)| v)
            .collect()
    }

    pub fn clear_annotations(&mut self) {
        self.annotations.clear();
    }

    /// Subgraph induced by `vertices` (in the given order); the returned
    /// vector maps new indices back to old ones.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut pos = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let mut g = Graph::new(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = pos[w];
                if j != usize::MAX && i < j {
                    g.add_edge(i, j).expect("induced edge");
                }
            }
            if let Some(a) = self.annotations.get(&v) {
                g.annotations.insert(i, a.clone());
            }
        }
        (g, vertices.to_vec())
    }

    pub fn complement(&self) -> Graph {
        let n = self.vertex_count();
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v).expect("complement edge");
                }
            }
        }
        g.annotations = self.annotations.clone();
        g
    }

    /// Disjoint union; vertices of `other` are shifted by `self.vertex_count()`,
    /// which is returned as the offset.
    pub fn disjoint_union(&self, other: &Graph) -> (Graph, usize) {
        let offset = self.vertex_count();
        let mut g = self.clone();
        for _ in 0..other.vertex_count() {
            g.add_vertex();
        }
        for e in other.edges() {
            g.add_edge(e.0 + offset, e.1 + offset).expect("union edge");
        }
        for (&v, a) in &other.annotations {
            g.annotations.insert(v + offset, a.clone());
        }
        (g, offset)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_triangle_free(&self) -> bool {
        self.find_triangle().is_none()
    }

    pub fn find_triangle(&self) -> Option<[usize; 3]> {
        for u in self.vertices() {
            for &v in self.adj[u].iter().filter(|&&v| v > u) {
                for &w in self.adj[v].iter().filter(|&&w| w > v) {
                    if self.has_edge(u, w) {
                        return Some([u, v, w]);
                    }
                }
            }
        }
        None
    }

    /// All triangles `[u, v, w]` with `u < v < w`.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for u in self.vertices() {
            for &v in self.adj[u].iter().filter(|&&v| v > u) {
                for &w in self.adj[v].iter().filter(|&&w| w > v) {
                    if self.has_edge(u, w) {
                        out.push([u, v, w]);
                    }
                }
            }
        }
        out
    }

    /// All induced paths `[a, mid, b]` with `a < b` and `ab` not an edge.
    pub fn induced_p3s(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for mid in self.vertices() {
            let nbrs = &self.adj[mid];
            for (i, &a) in nbrs.iter().enumerate() {
                for &b in &nbrs[i + 1..] {
                    if !self.has_edge(a, b) {
                        out.push([a, mid, b]);
                    }
                }
            }
        }
        out
    }

    /// Line graph; vertex `i` of the result is `edges()[i]`.
    pub fn line_graph(&self) -> (Graph, Vec<Edge>) {
        let edges = self.edges();
        let index = self.edge_index();
        let mut lg = Graph::new(edges.len());
        for v in self.vertices() {
            let inc: Vec<usize> = self.adj[v].iter().map(|&w| index[&Edge::new(v, w)]).collect();
            for (i, &a) in inc.iter().enumerate() {
                for &b in &inc[i + 1..] {
                    lg.add_edge(a, b).expect("line graph edge");
                }
            }
        }
        (lg, edges)
    }

    /// Replaces `e` by a path with `times` new internal vertices, appended
    /// after the existing ones.
    pub fn subdivide_edge(&self, e: Edge, times: usize) -> Result<Graph, GraphError> {
        let (u, v) = e.ends();
        if !self.has_edge(u, v) {
            return Err(GraphError::MissingEdge(e));
        }
        let mut g = self.clone();
        g.remove_edge(u, v)?;
        let mut prev = u;
        for _ in 0..times {
            let x = g.add_vertex();
            g.add_edge(prev, x)?;
            prev = x;
        }
        g.add_edge(prev, v)?;
        Ok(g)
    }

    /// Subdivides every edge once. New vertex `n + i` subdivides `edges()[i]`.
    pub fn subdivide_all(&self) -> Graph {
        let n = self.vertex_count();
        let edges = self.edges();
        let mut g = Graph::new(n + edges.len());
        g.annotations = self.annotations.clone();
        for (i, e) in edges.iter().enumerate() {
            g.add_edge(e.0, n + i).expect("subdivision edge");
            g.add_edge(n + i, e.1).expect("subdivision edge");
        }
        g
    }

    /// Adds a new vertex with neighborhood exactly `N(v)`; returns the graph
    /// and the index of the twin.
    pub fn add_false_twin(&self, v: usize) -> Result<(Graph, usize), GraphError> {
        self.check_vertex(v)?;
        let mut g = self.clone();
        let twin = g.add_vertex();
        for &w in &self.adj[v] {
            g.add_edge(twin, w)?;
        }
        Ok((g, twin))
    }

    /// Adds a pendant vertex adjacent to `v` and returns its index.
    pub fn add_pendant(&mut self, v: usize) -> Result<usize, GraphError> {
        self.check_vertex(v)?;
        let w = self.add_vertex();
        self.add_edge(v, w)?;
        Ok(w)
    }
}

/// Result of gluing two graphs at one vertex each.
#[derive(Clone, Debug)]
pub struct Identification {
    pub graph: Graph,
    /// New index of every vertex of the first input.
    pub left: Vec<usize>,
    /// New index of every vertex of the second input.
    pub right: Vec<usize>,
}

/// Disjoint union of `g1` and `g2` with `v1` and `v2` merged.
///
/// Vertices of `g1` keep their indices; vertices of `g2` other than `v2`
/// follow in order. Annotations of the merged vertex are combined, with
/// `g1`'s values taking precedence.
pub fn identify_vertices(g1: &Graph, v1: usize, g2: &Graph, v2: usize) -> Result<Identification, GraphError> {
    g1.check_vertex(v1)?;
    g2.check_vertex(v2)?;
    let n1 = g1.vertex_count();
    let mut right = Vec::with_capacity(g2.vertex_count());
    let mut next = n1;
    for v in g2.vertices() {
        if v == v2 {
            right.push(v1);
        } else {
            right.push(next);
            next += 1;
        }
    }
    let mut g = g1.clone();
    for _ in n1..next {
        g.add_vertex();
    }
    for e in g2.edges() {
        g.add_edge(right[e.0], right[e.1])?;
    }
    for (&v, a) in &g2.annotations {
        let entry = g.annotations.entry(right[v]).or_default();
        for (k, val) in a {
            entry.entry(k.clone()).or_insert_with(|| val.clone());
        }
    }
    Ok(Identification {
        graph: g,
        left: (0..n1).collect(),
        right,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn add_edge_rejects_loops_and_range() {
        let mut g = Graph::new(2);
        assert_eq!(g.add_edge(1, 1), Err(GraphError::SelfLoop(1)));
        assert!(matches!(
            g.add_edge(0, 2),
            Err(GraphError::VertexOutOfRange { vertex: 2, .. })
        ));
        assert_eq!(g.add_edge(0, 1), Ok(true));
        assert_eq!(g.add_edge(1, 0), Ok(false));
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn line_graph_examples() {
        let (lg, _) = path(4).line_graph();
        assert_eq!((lg.vertex_count(), lg.edge_count()), (3, 2));
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let (lg, _) = star.line_graph();
        assert_eq!((lg.vertex_count(), lg.edge_count()), (3, 3));
        let c5 = Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        let (lg, map) = c5.line_graph();
        assert_eq!((lg.vertex_count(), lg.edge_count()), (5, 5));
        assert!(lg.vertices().all(|v| lg.degree(v) == 2));
        assert!(lg.is_connected());
        assert_eq!(map, c5.edges());
    }

    #[test]
    fn subdivide_examples() {
        let k2 = path(2);
        let p3 = k2.subdivide_edge(Edge::new(0, 1), 1).unwrap();
        assert_eq!(p3.edges(), vec![Edge::new(0, 2), Edge::new(1, 2)]);
        let c3 = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let c4 = c3.subdivide_edge(Edge::new(0, 2), 1).unwrap();
        assert_eq!(c4.edge_count(), 4);
        assert!(c4.vertices().all(|v| c4.degree(v) == 2));
        assert!(c4.is_triangle_free());
        assert_eq!(k2.subdivide_edge(Edge::new(0, 1), 3).unwrap().edge_count(), 4);
        assert!(matches!(
            path(3).subdivide_edge(Edge::new(0, 2), 1),
            Err(GraphError::MissingEdge(_))
        ));
    }

    #[test]
    fn subdivided_k5_is_bipartite_4_2() {
        let k5 = Graph::from_edges(5, (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v)))).unwrap();
        let s = k5.subdivide_all();
        assert_eq!((s.vertex_count(), s.edge_count()), (15, 20));
        for e in s.edges() {
            let mut d = [s.degree(e.0), s.degree(e.1)];
            d.sort();
            assert_eq!(d, [2, 4]);
        }
    }

    #[test]
    fn false_twin_examples() {
        let (g, t) = path(2).add_false_twin(0).unwrap();
        assert_eq!(t, 2);
        assert_eq!(g.neighbors(1), &[0, 2]);
        assert!(!g.has_edge(0, 2));
        let (g, _) = Graph::new(1).add_false_twin(0).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (2, 0));
        assert!(Graph::new(1).add_false_twin(3).is_err());
    }

    #[test]
    fn identify_examples() {
        let k2 = path(2);
        let id = identify_vertices(&k2, 1, &k2, 0).unwrap();
        assert_eq!(id.graph.edges(), vec![Edge::new(0, 1), Edge::new(1, 2)]);
        assert_eq!(id.right, vec![1, 2]);
        let p = path(4);
        let id = identify_vertices(&Graph::new(1), 0, &p, 2).unwrap();
        assert_eq!(id.graph.edge_count(), 3);
        assert_eq!(id.graph.vertex_count(), 4);
        assert!(identify_vertices(&k2, 5, &k2, 0).is_err());
    }

    #[test]
    fn identify_collapses_shared_neighbors() {
        // merge the middles of two P3s that share the other endpoints via a later
        // edge: simple result is still simple.
        let p3 = path(3);
        let id = identify_vertices(&p3, 1, &p3, 1).unwrap();
        assert_eq!(id.graph.vertex_count(), 5);
        assert_eq!(id.graph.degree(1), 4);
    }

    #[test]
    fn triangles_and_p3s_of_diamond() {
        let diamond = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(diamond.triangles().len(), 2);
        assert_eq!(diamond.induced_p3s(), vec![[2, 0, 3], [2, 1, 3]]);
    }
}
