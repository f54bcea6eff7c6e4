//! Isomorphism-free generation of small graphs.
//!
//! Graphs on `n` vertices are produced by adding one vertex, with every
//! possible neighborhood, to each representative on `n - 1` vertices.
//! Candidates are bucketed by a vertex-invariant fingerprint and compared
//! with an exact isomorphism test inside each bucket. The `keep` predicate
//! must be hereditary (closed under vertex deletion) for the output to be
//! complete.

use super::induced::are_isomorphic;
use crate::graph::Graph;
use std::collections::HashMap;

/// One representative of every isomorphism class on exactly `n` vertices
/// that satisfies `keep`.
pub fn nonisomorphic_graphs<F>(n: usize, keep: F) -> Vec<Graph>
where
    F: Fn(&Graph) -> bool,
{
    graphs_up_to(n, keep).pop().unwrap_or_default()
}

/// Representatives for every order `0..=n`; entry `k` holds order `k`.
pub fn graphs_up_to<F>(n: usize, keep: F) -> Vec<Vec<Graph>>
where
    F: Fn(&Graph) -> bool,
{
    let mut levels: Vec<Vec<Graph>> = vec![vec![Graph::new(0)]];
    for order in 1..=n {
        let prev = levels.last().unwrap();
        let mut buckets: HashMap<Vec<u64>, Vec<Graph>> = HashMap::new();
        let mut next = Vec::new();
        let new_v = order - 1;
        for base in prev {
            for mask in 0u32..(1u32 << new_v) {
                let mut g = base.clone();
                g.add_vertex();
                for u in 0..new_v {
                    if mask & (1 << u) != 0 {
                        g.add_edge(u, new_v).expect("fresh edge");
                    }
                }
                if !keep(&g) {
                    continue;
                }
                let bucket = buckets.entry(fingerprint(&g)).or_default();
                if bucket.iter().any(|h| are_isomorphic(h, &g)) {
                    continue;
                }
                bucket.push(g.clone());
                next.push(g);
            }
        }
        levels.push(next);
    }
    levels
}

fn fingerprint(g: &Graph) -> Vec<u64> {
    let mut per_vertex: Vec<u64> = g
        .vertices()
        .map(|v| {
            let mut nd: Vec<u64> = g.neighbors(v).iter().map(|&w| g.degree(w) as u64).collect();
            nd.sort_unstable();
            let tri = g
                .neighbors(v)
                .iter()
                .enumerate()
                .flat_map(|(i, &a)| g.neighbors(v)[i + 1..].iter().map(move |&b| (a, b)))
                .filter(|&(a, b)| g.has_edge(a, b))
                .count() as u64;
            let mut h = (g.degree(v) as u64) << 48 | tri << 32;
            for d in nd {
                h = h.wrapping_mul(1_000_003).wrapping_add(d + 1);
            }
            h
        })
        .collect();
    per_vertex.sort_unstable();
    per_vertex.push(g.edge_count() as u64);
    per_vertex
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_known_sequence() {
        // number of graphs on n unlabeled vertices
        let counts: Vec<usize> = graphs_up_to(6, |_| true).iter().map(Vec::len).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn triangle_free_counts() {
        let counts: Vec<usize> = graphs_up_to(7, Graph::is_triangle_free).iter().map(Vec::len).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 7, 14, 38, 107]);
    }
}
