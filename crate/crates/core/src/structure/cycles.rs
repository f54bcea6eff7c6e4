use super::StructureError;
use crate::graph::Graph;
use std::collections::VecDeque;

/// Default upper bound on induced-cycle search windows.
pub const DEFAULT_MAX_CYCLE_LEN: usize = 16;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Any,
    Odd,
    Even,
}

impl Parity {
    pub fn admits(self, len: usize) -> bool {
        match self {
            Parity::Any => true,
            Parity::Odd => len % 2 == 1,
            Parity::Even => len.is_multiple_of(2),
        }
    }
}

/// Length of a shortest cycle, `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        parent[root] = usize::MAX;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            if let Some(b) = best {
                if 2 * dist[u] + 1 >= b {
                    break;
                }
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// Searches for a chordless cycle whose length lies in `min_len..=max_len`
/// and has the requested parity. The vertices are returned in cyclic order.
///
/// The search is exhaustive within the window; windows longer than `bound`
/// are refused.
pub fn find_induced_cycle(
    g: &Graph,
    min_len: usize,
    max_len: usize,
    parity: Parity,
    bound: usize,
) -> Result<Option<Vec<usize>>, StructureError> {
    if max_len > bound {
        return Err(StructureError::WindowTooLarge { max: max_len, bound });
    }
    let min_len = min_len.max(3);
    if min_len > max_len {
        return Ok(None);
    }
    let mut search = CycleSearch {
        g,
        min_len,
        max_len,
        parity,
        path: Vec::new(),
        in_path: vec![false; g.vertex_count()],
        blocked: vec![0; g.vertex_count()],
    };
    for s in g.vertices() {
        if let Some(c) = search.rooted_at(s) {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

/// Checks that `cycle` is a chordless cycle of `g` in the given order.
pub fn is_induced_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 3 {
        return false;
    }
    let mut seen = std::collections::HashSet::new();
    if !cycle.iter().all(|&v| v < g.vertex_count() && seen.insert(v)) {
        return false;
    }
    for i in 0..k {
        for j in i + 1..k {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if g.has_edge(cycle[i], cycle[j]) != consecutive {
                return false;
            }
        }
    }
    true
}

struct CycleSearch<'a> {
    g: &'a Graph,
    min_len: usize,
    max_len: usize,
    parity: Parity,
    path: Vec<usize>,
    in_path: Vec<bool>,
    /// Number of interior path vertices adjacent to each vertex.
    blocked: Vec<u32>,
}

impl CycleSearch<'_> {
    /// Cycles whose smallest vertex is `s`.
    fn rooted_at(&mut self, s: usize) -> Option<Vec<usize>> {
        self.path.clear();
        self.path.push(s);
        self.in_path[s] = true;
        let mut found = None;
        for &p1 in self.g.neighbors(s) {
            if p1 <= s {
                continue;
            }
            self.push(p1, false);
            found = self.extend(s);
            self.pop(false);
            if found.is_some() {
                break;
            }
        }
        self.in_path[s] = false;
        found
    }

    fn push(&mut self, v: usize, interior_prev: bool) {
        if interior_prev {
            let prev = *self.path.last().unwrap();
            for &w in self.g.neighbors(prev) {
                self.blocked[w] += 1;
            }
        }
        self.path.push(v);
        self.in_path[v] = true;
    }

    fn pop(&mut self, interior_prev: bool) {
        let v = self.path.pop().unwrap();
        self.in_path[v] = false;
        if interior_prev {
            let prev = *self.path.last().unwrap();
            for &w in self.g.neighbors(prev) {
                self.blocked[w] -= 1;
            }
        }
    }

    fn extend(&mut self, s: usize) -> Option<Vec<usize>> {
        let last = *self.path.last().unwrap();
        let k = self.path.len();
        let p1 = self.path[1];
        for &x in self.g.neighbors(last) {
            if x <= s || self.in_path[x] || self.blocked[x] > 0 {
                continue;
            }
            // x must not see interior vertices other than `last`; `blocked`
            // counts neighbors among path[1..k-1].
            let closes = self.g.has_edge(x, s);
            if closes {
                let len = k + 1;
                if x > p1 && len >= self.min_len && len <= self.max_len && self.parity.admits(len) {
                    let mut c = self.path.clone();
                    c.push(x);
                    return Some(c);
                }
                continue;
            }
            if k + 2 > self.max_len {
                continue;
            }
            // `last` becomes interior once x is appended (unless it is p1,
            // whose neighborhood is handled by the `closes` test on s).
            let interior = k >= 2;
            self.push(x, interior);
            let found = self.extend(s);
            self.pop(interior);
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;

    #[test]
    fn girth_examples() {
        assert_eq!(girth(&generate("cycle", &[7]).unwrap()), Some(7));
        assert_eq!(girth(&generate("path", &[6]).unwrap()), None);
        assert_eq!(girth(&generate("star", &[4]).unwrap()), None);
        assert_eq!(girth(&generate("petersen", &[]).unwrap()), Some(5));
        assert_eq!(girth(&generate("complete", &[4]).unwrap()), Some(3));
        assert_eq!(girth(&generate("complete_multipartite", &[3, 3]).unwrap()), Some(4));
    }

    #[test]
    fn c5_is_an_odd_hole() {
        let c5 = generate("cycle", &[5]).unwrap();
        let c = find_induced_cycle(&c5, 5, 5, Parity::Odd, 16).unwrap().unwrap();
        assert_eq!(c.len(), 5);
        assert!(is_induced_cycle(&c5, &c));
    }

    #[test]
    fn complement_of_c7_has_no_chordless_7_cycle() {
        let g = generate("complement_of_cycle", &[7]).unwrap();
        assert_eq!(find_induced_cycle(&g, 7, 7, Parity::Odd, 16).unwrap(), None);
        assert_eq!(find_induced_cycle(&g, 5, 7, Parity::Odd, 16).unwrap(), None);
        // it does have induced C4s
        assert!(find_induced_cycle(&g, 4, 4, Parity::Any, 16).unwrap().is_some());
    }

    #[test]
    fn complete_graphs_are_chordal() {
        let k4 = generate("complete", &[4]).unwrap();
        assert_eq!(find_induced_cycle(&k4, 4, 10, Parity::Any, 16).unwrap(), None);
    }

    #[test]
    fn window_refusal() {
        let c5 = generate("cycle", &[5]).unwrap();
        assert!(matches!(
            find_induced_cycle(&c5, 5, 20, Parity::Odd, 16),
            Err(StructureError::WindowTooLarge { max: 20, bound: 16 })
        ));
    }

    #[test]
    fn petersen_induced_cycles() {
        let p = generate("petersen", &[]).unwrap();
        for len in [5, 6] {
            let c = find_induced_cycle(&p, len, len, Parity::Any, 16).unwrap().unwrap();
            assert!(is_induced_cycle(&p, &c));
            assert_eq!(c.len(), len);
        }
        // longer cycles all have chords
        assert_eq!(find_induced_cycle(&p, 7, 10, Parity::Any, 16).unwrap(), None);
    }
}
