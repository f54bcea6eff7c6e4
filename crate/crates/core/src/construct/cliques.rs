use super::{certify, require_class, ConstructError};
use crate::graph::Graph;
use crate::solver::Partition;
use std::collections::BTreeSet;

/// Maximal cliques with at least three vertices of a diamond-free graph.
/// There every edge lies in exactly one maximal clique, namely its ends
/// plus their common neighbors.
pub fn big_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let mut out: BTreeSet<Vec<usize>> = BTreeSet::new();
    for e in g.edges() {
        let (u, v) = e.ends();
        let mut clique: Vec<usize> = g.neighbors(u).iter().copied().filter(|&w| g.has_edge(v, w)).collect();
        if clique.is_empty() {
            continue;
        }
        clique.push(u);
        clique.push(v);
        clique.sort_unstable();
        out.insert(clique);
    }
    out.into_iter().collect()
}

/// For (diamond, house, net)-free graphs: blue = vertices of a big clique
/// with no neighbor outside it, red = everything else.
pub fn partition_diamond_house_net_free(g: &Graph) -> Result<Partition, ConstructError> {
    require_class(g, "p3")?;
    let n = g.vertex_count();
    let mut blue = Vec::new();
    for clique in big_cliques(g) {
        for &v in &clique {
            if g.degree(v) == clique.len() - 1 {
                blue.push(v);
            }
        }
    }
    certify(g, Partition::from_blue(n, &blue))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, pattern, PatternName};

    #[test]
    fn examples() {
        let k3 = generate("complete", &[3]).unwrap();
        assert_eq!(partition_diamond_house_net_free(&k3).unwrap().blue(), vec![0, 1, 2]);
        // triangles a,b,c and d,e,f joined by c-d
        let two = Graph::from_edges(6, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5)]).unwrap();
        let p = partition_diamond_house_net_free(&two).unwrap();
        assert_eq!(p.blue(), vec![0, 1, 4, 5]);
        assert_eq!(p.red(), vec![2, 3]);
        let c6 = generate("cycle", &[6]).unwrap();
        assert!(partition_diamond_house_net_free(&c6).unwrap().blue().is_empty());
        assert!(matches!(
            partition_diamond_house_net_free(&pattern(PatternName::Net)),
            Err(ConstructError::Class(_))
        ));
    }
}
