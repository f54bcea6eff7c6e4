use super::StructureError;
use crate::graph::Graph;

/// Largest pattern [`contains_induced`] accepts by default.
pub const DEFAULT_PATTERN_BOUND: usize = 8;

/// Finds an induced copy of `pattern` in `host`.
///
/// On success the returned vector maps each pattern vertex to a distinct
/// host vertex such that adjacency is preserved in both directions.
pub fn contains_induced(pattern: &Graph, host: &Graph) -> Result<Option<Vec<usize>>, StructureError> {
    contains_induced_bounded(pattern, host, DEFAULT_PATTERN_BOUND)
}

pub fn contains_induced_bounded(
    pattern: &Graph,
    host: &Graph,
    bound: usize,
) -> Result<Option<Vec<usize>>, StructureError> {
    if pattern.vertex_count() > bound {
        return Err(StructureError::PatternTooLarge {
            size: pattern.vertex_count(),
            bound,
        });
    }
    Ok(Matcher::new(pattern, host, false).find())
}

/// Exact isomorphism test; returns a vertex bijection `a -> b`.
pub fn isomorphism(a: &Graph, b: &Graph) -> Option<Vec<usize>> {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return None;
    }
    let mut da: Vec<usize> = a.vertices().map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = b.vertices().map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return None;
    }
    Matcher::new(a, b, true).find()
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    isomorphism(a, b).is_some()
}

/// Checks that `map` realizes an induced copy of `pattern` in `host`.
pub fn is_induced_embedding(pattern: &Graph, host: &Graph, map: &[usize]) -> bool {
    if map.len() != pattern.vertex_count() || map.iter().any(|&h| h >= host.vertex_count()) {
        return false;
    }
    for i in 0..map.len() {
        for j in i + 1..map.len() {
            if map[i] == map[j] || pattern.has_edge(i, j) != host.has_edge(map[i], map[j]) {
                return false;
            }
        }
    }
    true
}

struct Matcher<'a> {
    pattern: &'a Graph,
    host: &'a Graph,
    exact_degree: bool,
    order: Vec<usize>,
    /// For each position in `order`, an earlier-mapped neighbor if any.
    anchor: Vec<Option<usize>>,
    map: Vec<usize>,
    used: Vec<bool>,
}

impl<'a> Matcher<'a> {
    fn new(pattern: &'a Graph, host: &'a Graph, exact_degree: bool) -> Self {
        let n = pattern.vertex_count();
        let mut order = Vec::with_capacity(n);
        let mut placed = vec![false; n];
        while order.len() < n {
            // start each component at its highest-degree vertex
            let root = (0..n)
                .filter(|&v| !placed[v])
                .max_by_key(|&v| (pattern.degree(v), std::cmp::Reverse(v)))
                .unwrap();
            placed[root] = true;
            order.push(root);
            let mut head = order.len() - 1;
            while head < order.len() {
                let u = order[head];
                head += 1;
                let mut nbrs: Vec<usize> = pattern.neighbors(u).iter().copied().filter(|&w| !placed[w]).collect();
                nbrs.sort_by_key(|&w| std::cmp::Reverse(pattern.degree(w)));
                for w in nbrs {
                    placed[w] = true;
                    order.push(w);
                }
            }
        }
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let anchor = order
            .iter()
            .enumerate()
            .map(|(i, &v)| pattern.neighbors(v).iter().copied().find(|&w| pos[w] < i))
            .collect();
        Matcher {
            pattern,
            host,
            exact_degree,
            order,
            anchor,
            map: vec![usize::MAX; n],
            used: vec![false; host.vertex_count()],
        }
    }

    fn find(mut self) -> Option<Vec<usize>> {
        if self.pattern.vertex_count() > self.host.vertex_count() {
            return None;
        }
        if self.extend(0) {
            Some(self.map)
        } else {
            None
        }
    }

    fn compatible(&self, p: usize, h: usize, depth: usize) -> bool {
        if self.used[h] {
            return false;
        }
        let (dp, dh) = (self.pattern.degree(p), self.host.degree(h));
        if (self.exact_degree && dp != dh) || dh < dp {
            return false;
        }
        self.order[..depth]
            .iter()
            .all(|&q| self.pattern.has_edge(p, q) == self.host.has_edge(h, self.map[q]))
    }

    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let p = self.order[depth];
        let candidates: Vec<usize> = match self.anchor[depth] {
            Some(q) => self.host.neighbors(self.map[q]).to_vec(),
            None => self.host.vertices().collect(),
        };
        for h in candidates {
            if !self.compatible(p, h, depth) {
                continue;
            }
            self.map[p] = h;
            self.used[h] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[h] = false;
            self.map[p] = usize::MAX;
        }
        false
    }
}
