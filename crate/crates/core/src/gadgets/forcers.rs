use super::{Counterexample, GadgetError, Verdict};
use crate::graph::{generate, identify_vertices, Graph};
use crate::solver::{enumerate_partitions, Color};

/// A graph with a specified vertex `q` claimed to take the same color in
/// every valid partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Forcer {
    pub graph: Graph,
    pub q: usize,
    pub claimed: Color,
}

impl Forcer {
    pub fn new(graph: Graph, q: usize, claimed: Color) -> Result<Self, GadgetError> {
        if q >= graph.vertex_count() {
            return Err(GadgetError::Invalid(format!("q = {q} is not a vertex")));
        }
        Ok(Forcer { graph, q, claimed })
    }

    /// Reads `q` from the annotation `role q` and the claim from `claim`
    /// on the same vertex, defaulting to `default_claim`.
    pub fn from_annotated(graph: Graph, default_claim: Color) -> Result<Self, GadgetError> {
        let qs = graph.vertices_with("role", "q");
        let [q] = qs[..] else {
            return Err(GadgetError::Invalid(format!(
                "expected exactly one vertex annotated `role q`, found {}",
                qs.len()
            )));
        };
        let claimed = match graph.annotation(q, "claim") {
            Some(s) => s.parse().map_err(GadgetError::Invalid)?,
            None => default_claim,
        };
        Forcer::new(graph, q, claimed)
    }

    /// The graph with `q` and its claim written as annotations.
    pub fn to_annotated(&self) -> Graph {
        let mut g = self.graph.clone();
        g.annotate(self.q, "role", "q");
        g.annotate(self.q, "claim", self.claimed.as_str());
        g
    }
}

/// Passes iff the graph is partitionable and `q` is red in every valid
/// partition.
pub fn verify_red_forcer(f: &Forcer, budget: u64) -> Result<Verdict, GadgetError> {
    let all = enumerate_partitions(&f.graph, None, budget)?.partitions;
    let count = Some(all.len());
    if all.is_empty() {
        return Ok(Verdict::fail("graph is not partitionable", None, count));
    }
    if let Some(p) = all.iter().find(|p| p.color(f.q) == Color::Blue) {
        return Ok(Verdict::fail(
            "q is blue in some partition",
            Some(Counterexample::Partition(p.clone())),
            count,
        ));
    }
    Ok(Verdict::pass(count))
}

/// Passes iff the graph is partitionable, `q` is blue in every valid
/// partition and some valid partition colors every neighbor of `q` red.
pub fn verify_blue_forcer(f: &Forcer, budget: u64) -> Result<Verdict, GadgetError> {
    let all = enumerate_partitions(&f.graph, None, budget)?.partitions;
    let count = Some(all.len());
    if all.is_empty() {
        return Ok(Verdict::fail("graph is not partitionable", None, count));
    }
    if let Some(p) = all.iter().find(|p| p.color(f.q) == Color::Red) {
        return Ok(Verdict::fail(
            "q is red in some partition",
            Some(Counterexample::Partition(p.clone())),
            count,
        ));
    }
    let nq = f.graph.neighbors(f.q);
    if !all.iter().any(|p| nq.iter().all(|&w| p.color(w) == Color::Red)) {
        return Ok(Verdict::fail(
            "no partition colors every neighbor of q red",
            None,
            count,
        ));
    }
    Ok(Verdict::pass(count))
}

/// The complement of C7 with false twins of v3, v4 and v6, and a diamond
/// glued to v0 by one of its degree-2 vertices. `q` is the other degree-2
/// vertex of the diamond.
pub fn build_h4_blue_forcer() -> Forcer {
    let mut g = generate("complement_of_cycle", &[7]).expect("fixed generator");
    for v in [3, 4, 6] {
        g = g.add_false_twin(v).expect("vertex exists").0;
    }
    // diamond a-c-d-b with chord c-d; a is v0
    let c = g.add_vertex();
    let d = g.add_vertex();
    let q = g.add_vertex();
    for (u, v) in [(0, c), (0, d), (c, d), (q, c), (q, d)] {
        g.add_edge(u, v).expect("fresh edge");
    }
    Forcer {
        graph: g,
        q,
        claimed: Color::Blue,
    }
}

/// A 7-vertex red forcer: two disjoint edges joined completely to a third
/// edge, with `q` adjacent to one vertex of each side. Found by exhaustive
/// search over 7-vertex graphs.
pub fn build_red_forcer() -> Forcer {
    let mut g = Graph::new(7);
    let q = 2;
    for (u, v) in [(0, 3), (1, 4), (5, 6), (q, 4), (q, 6)] {
        g.add_edge(u, v).expect("fresh edge");
    }
    for u in [0, 1, 3, 4] {
        for v in [5, 6] {
            g.add_edge(u, v).expect("fresh edge");
        }
    }
    Forcer {
        graph: g,
        q,
        claimed: Color::Red,
    }
}

/// Two red forcers with their `q` vertices joined, plus a new vertex `q*`
/// adjacent to both: a red `q*` would complete a red triangle.
pub fn compose_red_to_blue(r1: &Forcer, r2: &Forcer, budget: u64) -> Result<Forcer, GadgetError> {
    for (name, r) in [("first", r1), ("second", r2)] {
        let v = verify_red_forcer(r, budget)?;
        if !v.pass {
            return Err(GadgetError::NotRedForcer(format!(
                "{name} input: {}",
                v.failed.unwrap_or_default()
            )));
        }
    }
    let (mut g, off) = r1.graph.disjoint_union(&r2.graph);
    let (q1, q2) = (r1.q, r2.q + off);
    g.add_edge(q1, q2)?;
    let q = g.add_vertex();
    g.add_edge(q, q1)?;
    g.add_edge(q, q2)?;
    Forcer::new(g, q, Color::Blue)
}

/// The forcer glued onto `host` by identifying its `q` with `at`. Forcer
/// vertices other than `q` follow the host's vertices.
pub fn glue_at_q(host: &Graph, at: usize, f: &Forcer) -> Result<Graph, GadgetError> {
    Ok(identify_vertices(host, at, &f.graph, f.q)?.graph)
}
