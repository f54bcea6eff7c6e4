use super::{Counterexample, GadgetError, Verdict};
use crate::graph::{four_regular_with_girth, identify_vertices, Edge, Graph};
use crate::solver::{solve_edge_partition_with, Color};

/// A triangle-free graph with a specified edge claimed to take the same
/// color in every valid edge partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeForcer {
    pub graph: Graph,
    pub edge: Edge,
    pub claimed: Color,
}

impl EdgeForcer {
    pub fn new(graph: Graph, edge: Edge, claimed: Color) -> Result<Self, GadgetError> {
        let (u, v) = edge.ends();
        if u >= graph.vertex_count() || v >= graph.vertex_count() || !graph.has_edge(u, v) {
            return Err(GadgetError::Invalid(format!("{edge} is not an edge")));
        }
        if let Some(t) = graph.find_triangle() {
            return Err(GadgetError::Triangle(t));
        }
        Ok(EdgeForcer { graph, edge, claimed })
    }

    /// The specified edge joins the two vertices annotated `role e`; the
    /// claim is read from `claim` on either of them.
    pub fn from_annotated(graph: Graph, default_claim: Color) -> Result<Self, GadgetError> {
        let ends = graph.vertices_with("role", "e");
        let [u, v] = ends[..] else {
            return Err(GadgetError::Invalid(format!(
                "expected exactly two vertices annotated `role e`, found {}",
                ends.len()
            )));
        };
        let claim = graph.annotation(u, "claim").or(graph.annotation(v, "claim"));
        let claimed = match claim {
            Some(s) => s.parse().map_err(GadgetError::Invalid)?,
            None => default_claim,
        };
        EdgeForcer::new(graph, Edge::new(u, v), claimed)
    }

    pub fn to_annotated(&self) -> Graph {
        let mut g = self.graph.clone();
        let (u, v) = self.edge.ends();
        for w in [u, v] {
            g.annotate(w, "role", "e");
        }
        g.annotate(u, "claim", self.claimed.as_str());
        g
    }

    /// The degree-1 end of the specified edge, if any.
    pub fn pendant_end(&self) -> Option<usize> {
        let (u, v) = self.edge.ends();
        [v, u].into_iter().find(|&w| self.graph.degree(w) == 1)
    }
}

/// Passes iff the host is edge-partitionable and the specified edge has the
/// claimed color in every valid edge partition. Decided by two
/// satisfiability queries; `enumerate_edge_partitions` gives the same answer
/// on small hosts.
pub fn verify_edge_forcer(f: &EdgeForcer) -> Result<Verdict, GadgetError> {
    if solve_edge_partition_with(&f.graph, &[])?.is_none() {
        return Ok(Verdict::fail("graph is not edge-partitionable", None, None));
    }
    if let Some(p) = solve_edge_partition_with(&f.graph, &[(f.edge, f.claimed.flip())])? {
        return Ok(Verdict::fail(
            format!("{} is not {} in some edge partition", f.edge, f.claimed),
            Some(Counterexample::EdgePartition(p)),
            None,
        ));
    }
    Ok(Verdict::pass(None))
}

/// A 4-regular graph of girth at least `ceil((t+1)/2)`, every edge
/// subdivided once, plus a pendant edge at the first subdivision vertex.
/// The pendant edge is claimed red.
pub fn build_h9_red_edge_forcer(t: usize) -> Result<EdgeForcer, GadgetError> {
    let girth = (t + 1).div_ceil(2);
    let base = four_regular_with_girth(girth, None, 0).map_err(|e| GadgetError::NoBaseGraph {
        girth,
        reason: e.to_string(),
    })?;
    let mut g = base.subdivide_all();
    let x = g
        .vertices()
        .find(|&v| g.degree(v) == 2)
        .ok_or_else(|| GadgetError::Invalid("subdivision produced no 2-vertex".into()))?;
    let p = g.add_pendant(x)?;
    EdgeForcer::new(g, Edge::new(x, p), Color::Red)
}

/// Two copies of a verified red edge forcer with their pendant ends merged,
/// plus a new pendant edge at the merged vertex. That vertex already carries
/// two red edges, so the new edge is claimed blue.
pub fn build_blue_edge_forcer(red: &EdgeForcer) -> Result<EdgeForcer, GadgetError> {
    let v = verify_edge_forcer(red)?;
    if !v.pass || red.claimed != Color::Red {
        return Err(GadgetError::NotRedForcer(
            v.failed.unwrap_or_else(|| "claim is not red".into()),
        ));
    }
    let x = red
        .pendant_end()
        .ok_or_else(|| GadgetError::Invalid("the specified edge has no degree-1 end".into()))?;
    let mut g = identify_vertices(&red.graph, x, &red.graph, x)?.graph;
    let p = g.add_pendant(x)?;
    EdgeForcer::new(g, Edge::new(x, p), Color::Blue)
}

/// Checks a clause gadget for the edge version: for each of the 8 colorings
/// of the literal edges, an extension exists iff some literal edge is blue,
/// and no valid edge partition has a blue literal edge next to another blue
/// edge.
pub fn verify_clause_edge_gadget(g: &Graph, literal_edges: &[Edge; 3]) -> Result<Verdict, GadgetError> {
    if let Some(t) = g.find_triangle() {
        return Err(GadgetError::Triangle(t));
    }
    for e in literal_edges {
        let (u, v) = e.ends();
        if !g.has_edge(u, v) {
            return Err(GadgetError::Invalid(format!("literal edge {e} is not an edge")));
        }
    }
    for mask in 0..8u8 {
        let fixed: Vec<(Edge, Color)> = (0..3)
            .map(|i| {
                let c = if mask >> i & 1 == 1 { Color::Blue } else { Color::Red };
                (literal_edges[i], c)
            })
            .collect();
        let extends = solve_edge_partition_with(g, &fixed)?.is_some();
        if extends != (mask != 0) {
            let why = if extends {
                "the all-red literal pattern extends"
            } else {
                "a literal pattern with a blue edge does not extend"
            };
            return Ok(Verdict::fail(why, Some(Counterexample::LiteralPattern(fixed)), None));
        }
    }
    for &e in literal_edges {
        for f in g.edges() {
            if f == e || !f.shares_endpoint(e) {
                continue;
            }
            if solve_edge_partition_with(g, &[(e, Color::Blue), (f, Color::Blue)])?.is_some() {
                return Ok(Verdict::fail(
                    format!("literal edge {e} can be blue next to the blue edge {f}"),
                    Some(Counterexample::BlueAdjacency(e, f)),
                    None,
                ));
            }
        }
    }
    Ok(Verdict::pass(None))
}
