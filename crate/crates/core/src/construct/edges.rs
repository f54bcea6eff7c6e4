use super::{require_class, ConstructError};
use crate::graph::{contract_two_vertices, Edge, Graph};
use crate::solver::{is_valid_edge_partition, Color, EdgePartition};
use std::collections::{BTreeSet, HashMap};

fn certify_edges(g: &Graph, ep: EdgePartition) -> Result<EdgePartition, ConstructError> {
    match is_valid_edge_partition(g, &ep) {
        Ok(None) => Ok(ep),
        Ok(Some(v)) => Err(ConstructError::Internal(format!(
            "constructed edge partition is invalid: {v}"
        ))),
        Err(e) => Err(ConstructError::Solver(e)),
    }
}

/// Edge partition of a graph in which every edge joins a 4-vertex and a
/// 2-vertex.
///
/// Contracting the 2-vertices gives a 4-regular multigraph. Walking an
/// Eulerian circuit of each component orients it with every out-degree 2.
/// An original edge is red when its 4-vertex end is the tail of the
/// oriented multi-edge and blue when it is the head.
pub fn edge_partition_deg42(g: &Graph) -> Result<EdgePartition, ConstructError> {
    for e in g.edges() {
        let (u, v) = e.ends();
        let mut d = [g.degree(u), g.degree(v)];
        d.sort_unstable();
        if d != [2, 4] {
            return Err(ConstructError::DegreePattern(e));
        }
    }
    let c = contract_two_vertices(g);
    if !c.closed_cycles.is_empty() {
        return Err(ConstructError::Internal("2-vertex cycle in a (4,2) graph".into()));
    }
    let k = c.kept.len();
    // incidence lists of the multigraph: (edge index, other end)
    let mut inc: Vec<Vec<(usize, usize)>> = vec![Vec::new(); k];
    for (i, e) in c.edges.iter().enumerate() {
        inc[e.ends.0].push((i, e.ends.1));
        if !e.is_loop() {
            inc[e.ends.1].push((i, e.ends.0));
        } else {
            inc[e.ends.0].push((i, e.ends.0));
        }
    }
    let mut used = vec![false; c.edges.len()];
    let mut ptr = vec![0usize; k];
    // oriented[i] = kept index of the tail of multi-edge i
    let mut tail = vec![usize::MAX; c.edges.len()];
    for start in 0..k {
        // Hierholzer: stack of (vertex, edge used to arrive)
        let mut stack: Vec<(usize, Option<(usize, usize)>)> = vec![(start, None)];
        while let Some(&(v, _)) = stack.last() {
            while ptr[v] < inc[v].len() && used[inc[v][ptr[v]].0] {
                ptr[v] += 1;
            }
            if ptr[v] == inc[v].len() {
                let (_, arrived) = stack.pop().unwrap();
                if let Some((ei, from)) = arrived {
                    tail[ei] = from;
                }
            } else {
                let (ei, w) = inc[v][ptr[v]];
                used[ei] = true;
                stack.push((w, Some((ei, v))));
            }
        }
    }
    let mut colors: HashMap<Edge, Color> = HashMap::new();
    for (i, e) in c.edges.iter().enumerate() {
        // path = [kept a, x, kept b]; decide which end is the tail
        let p = &e.path;
        let (a, b) = (c.kept[e.ends.0], c.kept[e.ends.1]);
        let from_a = if e.is_loop() { true } else { c.kept[tail[i]] == a };
        let (t, h) = if from_a {
            (p[0], p[p.len() - 1])
        } else {
            (p[p.len() - 1], p[0])
        };
        debug_assert!([a, b].contains(&t) && [a, b].contains(&h));
        let x = p[1];
        colors.insert(Edge::new(t, x), Color::Red);
        colors.insert(Edge::new(x, h), Color::Blue);
    }
    let ep = EdgePartition::from_fn(g, |e| colors[&e]);
    let ep = certify_edges(g, ep)?;
    for v in g.vertices() {
        let want = if g.degree(v) == 4 { 2 } else { 1 };
        if ep.degree(g, v, Color::Blue) != want {
            return Err(ConstructError::Internal(format!(
                "vertex {v} has the wrong blue degree"
            )));
        }
    }
    Ok(ep)
}

enum Step {
    Pendant { v: usize, w: usize },
    TwoPendants { v: usize, w1: usize, w2: usize },
    Chain { x: usize, y: usize },
}

/// Edge partition of a planar graph with girth at least 11, maximum degree
/// at most 4 and no edge between two 4-vertices, by peeling reducible
/// configurations and extending the partition back in reverse order.
pub fn edge_partition_planar_girth11(g: &Graph) -> Result<EdgePartition, ConstructError> {
    require_class(g, "p5'")?;
    let n = g.vertex_count();
    let mut adj: Vec<BTreeSet<usize>> = g.vertices().map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut steps = Vec::new();
    let mut remaining = g.edge_count();
    while remaining > 0 {
        let deg = |adj: &Vec<BTreeSet<usize>>, v: usize| adj[v].len();
        let pendant_of = |adj: &Vec<BTreeSet<usize>>, v: usize| -> Vec<usize> {
            adj[v].iter().copied().filter(|&w| adj[w].len() == 1).collect()
        };
        let step = (0..n)
            .find_map(|v| {
                let d = deg(&adj, v);
                if d == 0 || d > 3 {
                    return None;
                }
                pendant_of(&adj, v).first().map(|&w| Step::Pendant { v, w })
            })
            .or_else(|| {
                (0..n).find_map(|v| {
                    if deg(&adj, v) != 4 {
                        return None;
                    }
                    let p = pendant_of(&adj, v);
                    (p.len() >= 2).then(|| Step::TwoPendants { v, w1: p[0], w2: p[1] })
                })
            })
            .or_else(|| {
                // with pendants stripped, look for two adjacent 2-vertices
                (0..n).find_map(|x| {
                    if deg(&adj, x) != 2 {
                        return None;
                    }
                    adj[x]
                        .iter()
                        .copied()
                        .find(|&y| deg(&adj, y) == 2)
                        .map(|y| Step::Chain { x, y })
                })
            });
        let Some(step) = step else {
            return Err(ConstructError::Internal(
                "no reducible configuration found in a class member".into(),
            ));
        };
        match step {
            Step::Pendant { v, w } => {
                adj[v].remove(&w);
                adj[w].remove(&v);
                remaining -= 1;
            }
            Step::TwoPendants { v, w1, w2 } => {
                for w in [w1, w2] {
                    adj[v].remove(&w);
                    adj[w].remove(&v);
                }
                remaining -= 2;
            }
            Step::Chain { x, y } => {
                adj[x].remove(&y);
                adj[y].remove(&x);
                remaining -= 1;
            }
        }
        steps.push(step);
    }

    // extend back; `adj` grows again as edges are restored
    let mut color: HashMap<Edge, Color> = HashMap::new();
    let red_at = |adj: &Vec<BTreeSet<usize>>, color: &HashMap<Edge, Color>, v: usize| {
        adj[v]
            .iter()
            .filter(|&&w| color[&Edge::new(v, w)] == Color::Red)
            .count()
    };
    for step in steps.into_iter().rev() {
        match step {
            Step::Pendant { v, w } => {
                let c = if red_at(&adj, &color, v) >= 2 {
                    Color::Blue
                } else {
                    Color::Red
                };
                adj[v].insert(w);
                adj[w].insert(v);
                color.insert(Edge::new(v, w), c);
            }
            Step::TwoPendants { v, w1, w2 } => {
                let others: Vec<usize> = adj[v].iter().copied().collect();
                if others.len() != 2 {
                    return Err(ConstructError::Internal(format!("4-vertex {v} lost its other edges")));
                }
                let (c3, c4) = (color[&Edge::new(v, others[0])], color[&Edge::new(v, others[1])]);
                if c3 == c4 {
                    color.insert(Edge::new(v, w1), Color::Blue);
                    color.insert(Edge::new(v, w2), Color::Blue);
                } else {
                    let wb = if c3 == Color::Blue { others[0] } else { others[1] };
                    let wb_other_blue = adj[wb]
                        .iter()
                        .any(|&u| u != v && color[&Edge::new(wb, u)] == Color::Blue);
                    if wb_other_blue {
                        color.insert(Edge::new(v, wb), Color::Red);
                        color.insert(Edge::new(v, w1), Color::Blue);
                        color.insert(Edge::new(v, w2), Color::Blue);
                    } else {
                        color.insert(Edge::new(v, w1), Color::Blue);
                        color.insert(Edge::new(v, w2), Color::Red);
                    }
                }
                for w in [w1, w2] {
                    adj[v].insert(w);
                    adj[w].insert(v);
                }
            }
            Step::Chain { x, y } => {
                adj[x].insert(y);
                adj[y].insert(x);
                color.insert(Edge::new(x, y), Color::Red);
            }
        }
    }
    certify_edges(g, EdgePartition::from_fn(g, |e| color[&e]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;

    #[test]
    fn deg42_examples() {
        let k5 = generate("complete", &[5]).unwrap().subdivide_all();
        let ep = edge_partition_deg42(&k5).unwrap();
        assert_eq!((ep.count(Color::Blue), ep.count(Color::Red)), (10, 10));
        let k44 = generate("complete_multipartite", &[4, 4]).unwrap().subdivide_all();
        let ep = edge_partition_deg42(&k44).unwrap();
        assert_eq!((ep.count(Color::Blue), ep.count(Color::Red)), (16, 16));
        let p3 = generate("path", &[3]).unwrap();
        assert!(matches!(
            edge_partition_deg42(&p3),
            Err(ConstructError::DegreePattern(_))
        ));
    }

    #[test]
    fn deg42_with_parallel_paths() {
        // two 4-vertices joined by four subdivided edges
        let mut g = Graph::new(6);
        for x in 2..6 {
            g.add_edge(0, x).unwrap();
            g.add_edge(1, x).unwrap();
        }
        assert!(edge_partition_deg42(&g).is_ok());
    }

    #[test]
    fn girth11_examples() {
        let c11 = generate("cycle", &[11]).unwrap();
        let ep = edge_partition_planar_girth11(&c11).unwrap();
        assert_eq!(ep.count(Color::Red), 11);
        let mut pend = c11.clone();
        pend.add_pendant(0).unwrap();
        assert!(edge_partition_planar_girth11(&pend).is_ok());
        // two 11-cycles sharing a path of length 2
        let mut two = c11.clone();
        let mut prev = 0;
        for _ in 0..8 {
            let v = two.add_vertex();
            two.add_edge(prev, v).unwrap();
            prev = v;
        }
        two.add_edge(prev, 2).unwrap();
        assert!(edge_partition_planar_girth11(&two).is_ok());
        let c5 = generate("cycle", &[5]).unwrap();
        assert!(matches!(
            edge_partition_planar_girth11(&c5),
            Err(ConstructError::Class(_))
        ));
    }
}
