use super::{certify, ConstructError};
use crate::graph::{pattern, Graph, PatternName};
use crate::solver::Partition;
use crate::structure::contains_induced;

/// Sizes of the parts if `g` is complete multipartite (its complement is a
/// disjoint union of cliques), with the parts themselves.
pub fn complete_multipartite_parts(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let co = g.complement();
    if !co.induced_p3s().is_empty() {
        return None;
    }
    Some(co.components())
}

/// Whether the complete multipartite graph with these part sizes is
/// partitionable: at most three parts, or at most two parts of size two or
/// more.
pub fn multipartite_partitionable(sizes: &[usize]) -> bool {
    sizes.len() <= 3 || sizes.iter().filter(|&&s| s >= 2).count() <= 2
}

/// For a complete multipartite graph: the singleton parts blue (a clique)
/// and the at most two large parts red, or else with three large parts the
/// first one blue and the other two red.
fn multipartite_partition(parts: &[Vec<usize>]) -> Option<Vec<usize>> {
    let sizes: Vec<usize> = parts.iter().map(Vec::len).collect();
    if !multipartite_partitionable(&sizes) {
        return None;
    }
    if sizes.iter().filter(|&&s| s >= 2).count() <= 2 {
        return Some(parts.iter().filter(|p| p.len() == 1).map(|p| p[0]).collect());
    }
    Some(parts[0].clone())
}

/// Paw-free graphs: each component is triangle-free (all red) or complete
/// multipartite (closed form above). `Ok(None)` when some component is not
/// partitionable.
pub fn partition_paw_free(g: &Graph) -> Result<Option<Partition>, ConstructError> {
    if let Some(map) = contains_induced(&pattern(PatternName::Paw), g).map_err(ConstructError::Structure)? {
        return Err(ConstructError::Pattern {
            pattern: "paw".into(),
            vertices: map,
        });
    }
    let mut blue = Vec::new();
    for comp in g.components() {
        let (sub, map) = g.induced_subgraph(&comp);
        if sub.is_triangle_free() {
            continue;
        }
        let Some(parts) = complete_multipartite_parts(&sub) else {
            return Err(ConstructError::Internal(format!(
                "paw-free component containing {} is neither triangle-free nor complete multipartite",
                map[0]
            )));
        };
        match multipartite_partition(&parts) {
            Some(b) => blue.extend(b.into_iter().map(|v| map[v])),
            None => return Ok(None),
        }
    }
    certify(g, Partition::from_blue(g.vertex_count(), &blue)).map(Some)
}

/// `R(k,3)`: every graph on this many vertices has an independent k-set or
/// a triangle. `R(3,3)` is re-derived in the tests; the others are the
/// standard values.
pub fn ramsey_k3(k: usize) -> Option<usize> {
    match k {
        1 => Some(1),
        2 => Some(3),
        3 => Some(6),
        4 => Some(9),
        5 => Some(14),
        _ => None,
    }
}

/// An independent set of size `k`, if one exists.
pub fn independent_set(g: &Graph, k: usize) -> Option<Vec<usize>> {
    fn grow(g: &Graph, k: usize, from: usize, chosen: &mut Vec<usize>) -> bool {
        if chosen.len() == k {
            return true;
        }
        for v in from..g.vertex_count() {
            if g.vertex_count() - v < k - chosen.len() {
                break;
            }
            if chosen.iter().all(|&u| !g.has_edge(u, v)) {
                chosen.push(v);
                if grow(g, k, v + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let mut chosen = Vec::new();
    grow(g, k, 0, &mut chosen).then_some(chosen)
}

/// Graphs without an independent k-set: the red part is triangle-free, so it
/// has fewer than `R(k,3)` vertices. Candidate red sets are tried from the
/// largest size down, in lexicographic order within a size.
pub fn partition_kkbar_free(g: &Graph, k: usize) -> Result<Option<Partition>, ConstructError> {
    let r = ramsey_k3(k).ok_or(ConstructError::UnknownRamsey(k))?;
    if let Some(s) = independent_set(g, k) {
        return Err(ConstructError::IndependentSet(s));
    }
    let n = g.vertex_count();
    let max = n.min(r - 1);
    for size in (0..=max).rev() {
        let mut found = None;
        for_each_subset(n, size, &mut |red: &[usize]| {
            let (sub_red, _) = g.induced_subgraph(red);
            if !sub_red.is_triangle_free() {
                return false;
            }
            let mut in_red = vec![false; n];
            for &v in red {
                in_red[v] = true;
            }
            let blue: Vec<usize> = (0..n).filter(|&v| !in_red[v]).collect();
            let (sub_blue, _) = g.induced_subgraph(&blue);
            if sub_blue.induced_p3s().is_empty() {
                found = Some(blue);
                return true;
            }
            false
        });
        if let Some(blue) = found {
            return certify(g, Partition::from_blue(n, &blue)).map(Some);
        }
    }
    Ok(None)
}

/// Calls `f` on every `size`-subset of `0..n` in lexicographic order until it
/// returns true.
fn for_each_subset(n: usize, size: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn rec(n: usize, size: usize, from: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if cur.len() == size {
            return f(cur);
        }
        for v in from..n {
            if n - v < size - cur.len() {
                break;
            }
            cur.push(v);
            if rec(n, size, v + 1, cur, f) {
                return true;
            }
            cur.pop();
        }
        false
    }
    rec(n, size, 0, &mut Vec::with_capacity(size), f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;
    use crate::solver::{partition_is_valid, solve_partition};

    #[test]
    fn paw_free_examples() {
        let (g, off) = generate("cycle", &[5])
            .unwrap()
            .disjoint_union(&generate("complete", &[3]).unwrap());
        let p = partition_paw_free(&g).unwrap().unwrap();
        assert_eq!(p.blue(), vec![off, off + 1, off + 2]);
        let oct = generate("complete_multipartite", &[2, 2, 2]).unwrap();
        assert_eq!(
            partition_paw_free(&oct).unwrap().is_some(),
            solve_partition(&oct).is_some()
        );
        assert!(matches!(
            partition_paw_free(&pattern(PatternName::Paw)),
            Err(ConstructError::Pattern { .. })
        ));
        let j = generate("complete_multipartite", &[1, 2, 2, 2]).unwrap();
        assert!(partition_paw_free(&j).unwrap().is_none());
    }

    #[test]
    fn multipartite_closed_form_matches_solver() {
        fn profiles(left: usize, max_part: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if !cur.is_empty() {
                out.push(cur.clone());
            }
            for s in (1..=max_part.min(left)).rev() {
                cur.push(s);
                profiles(left - s, s, cur, out);
                cur.pop();
            }
        }
        let mut all = Vec::new();
        profiles(10, 10, &mut Vec::new(), &mut all);
        // integer partitions of 1..=10
        assert_eq!(all.len(), 138);
        for sizes in all {
            let params: Vec<u64> = sizes.iter().map(|&s| s as u64).collect();
            let g = generate("complete_multipartite", &params).unwrap();
            let exact = solve_partition(&g).is_some();
            assert_eq!(multipartite_partitionable(&sizes), exact, "{sizes:?}");
            if let Some(p) = partition_paw_free(&g).unwrap() {
                assert!(partition_is_valid(&g, &p));
            }
        }
    }

    #[test]
    fn kkbar_examples() {
        let k5 = generate("complete", &[5]).unwrap();
        assert!(partition_kkbar_free(&k5, 3).unwrap().is_some());
        let c5 = generate("cycle", &[5]).unwrap();
        let p = partition_kkbar_free(&c5, 3).unwrap().unwrap();
        assert_eq!(p.red().len(), 5);
        let c7 = generate("cycle", &[7]).unwrap();
        assert!(matches!(
            partition_kkbar_free(&c7, 3),
            Err(ConstructError::IndependentSet(_))
        ));
        assert!(matches!(
            partition_kkbar_free(&c7, 9),
            Err(ConstructError::UnknownRamsey(9))
        ));
    }
}
