//! Partitions from defective colorings: (a,b)-colorings by local search and
//! exact small colorings by backtracking.

use super::{certify, ConstructError};
use crate::graph::Graph;
use crate::solver::Partition;

/// Split `(first, second)` whose induced maximum degrees are at most `a`
/// and `b`, with the local-search trace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbColoring {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
    pub moves: usize,
    pub initial_potential: usize,
    /// Potential before each move and after the last one.
    pub potentials: Vec<usize>,
}

/// Local search for an (a,b)-coloring of a graph with maximum degree at most
/// `a + b + 1`.
///
/// Starts with every vertex on the first side and repeatedly moves the
/// lowest-index vertex that exceeds its side's cap. The potential
/// `(b+1)·e(first) + (a+1)·e(second)` drops by at least one per move.
pub fn find_ab_coloring(g: &Graph, a: usize, b: usize) -> Result<AbColoring, ConstructError> {
    if let Some(v) = g.vertices().find(|&v| g.degree(v) > a + b + 1) {
        return Err(ConstructError::Degree {
            vertex: v,
            degree: g.degree(v),
            cap: a + b + 1,
        });
    }
    let n = g.vertex_count();
    let mut side = vec![0u8; n];
    let caps = [a, b];
    // same_side[v] = neighbors of v on v's side
    let mut same: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut mono = [g.edge_count(), 0usize];
    let potential = |m: &[usize; 2]| (b + 1) * m[0] + (a + 1) * m[1];
    let initial = potential(&mono);
    let mut potentials = vec![initial];
    let mut moves = 0;
    // vertices possibly violating their cap
    let mut pending: std::collections::BTreeSet<usize> = g.vertices().filter(|&v| same[v] > a).collect();
    while let Some(v) = pending.pop_first() {
        let s = side[v] as usize;
        if same[v] <= caps[s] {
            continue;
        }
        let before = potential(&mono);
        let stay = same[v];
        let cross = g.degree(v) - stay;
        mono[s] -= stay;
        mono[1 - s] += cross;
        side[v] = 1 - side[v];
        same[v] = cross;
        for &w in g.neighbors(v) {
            if side[w] as usize == s {
                same[w] -= 1;
            } else {
                same[w] += 1;
                if same[w] > caps[side[w] as usize] {
                    pending.insert(w);
                }
            }
        }
        if same[v] > caps[1 - s] {
            pending.insert(v);
        }
        let after = potential(&mono);
        if after >= before {
            return Err(ConstructError::Internal(format!(
                "potential did not decrease when moving {v}: {before} -> {after}"
            )));
        }
        potentials.push(after);
        moves += 1;
    }
    let first: Vec<usize> = g.vertices().filter(|&v| side[v] == 0).collect();
    let second: Vec<usize> = g.vertices().filter(|&v| side[v] == 1).collect();
    for (set, cap) in [(&first, a), (&second, b)] {
        let (sub, map) = g.induced_subgraph(set);
        if let Some(v) = sub.vertices().find(|&v| sub.degree(v) > cap) {
            return Err(ConstructError::Internal(format!(
                "vertex {} exceeds cap {cap} after local search",
                map[v]
            )));
        }
    }
    Ok(AbColoring {
        first,
        second,
        moves,
        initial_potential: initial,
        potentials,
    })
}

/// Blue = the side of maximum degree 1, red = the other side of maximum
/// degree 1.
pub fn partition_max_degree_3(g: &Graph) -> Result<(Partition, AbColoring), ConstructError> {
    let split = find_ab_coloring(g, 1, 1)?;
    let p = Partition::from_blue(g.vertex_count(), &split.first);
    certify(g, p).map(|p| (p, split))
}

/// Blue = class 0 (maximum degree 1), red = classes 1 and 2 (independent
/// sets, so the red part is bipartite).
pub fn partition_from_deg_coloring(g: &Graph, classes: [&[usize]; 3]) -> Result<Partition, ConstructError> {
    let n = g.vertex_count();
    let mut class_of = vec![usize::MAX; n];
    for (c, set) in classes.iter().enumerate() {
        for &v in *set {
            if v >= n {
                return Err(ConstructError::Precondition(format!("vertex {v} out of range")));
            }
            if class_of[v] != usize::MAX {
                return Err(ConstructError::Precondition(format!("vertex {v} is in two classes")));
            }
            class_of[v] = c;
        }
    }
    if let Some(v) = class_of.iter().position(|&c| c == usize::MAX) {
        return Err(ConstructError::Precondition(format!("vertex {v} is in no class")));
    }
    for v in g.vertices() {
        let cap = if class_of[v] == 0 { 1 } else { 0 };
        let inside: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| class_of[w] == class_of[v])
            .collect();
        if inside.len() > cap {
            return Err(ConstructError::ClassCap {
                class: class_of[v],
                vertex: v,
                neighbors: inside,
                cap,
            });
        }
    }
    certify(g, Partition::from_blue(n, classes[0]))
}

/// Blue = color class 0 (independent), red = classes 1 and 2.
pub fn partition_from_proper_3coloring(g: &Graph, coloring: &[usize]) -> Result<Partition, ConstructError> {
    if coloring.len() != g.vertex_count() {
        return Err(ConstructError::Precondition(format!(
            "coloring has {} entries for {} vertices",
            coloring.len(),
            g.vertex_count()
        )));
    }
    if let Some(v) = coloring.iter().position(|&c| c > 2) {
        return Err(ConstructError::Precondition(format!(
            "vertex {v} has color {}",
            coloring[v]
        )));
    }
    if let Some(e) = g.edges().into_iter().find(|e| {
        let (u, v) = e.ends();
        coloring[u] == coloring[v]
    }) {
        return Err(ConstructError::ImproperEdge(e));
    }
    let blue: Vec<usize> = g.vertices().filter(|&v| coloring[v] == 0).collect();
    certify(g, Partition::from_blue(g.vertex_count(), &blue))
}

/// Assignment of each vertex to a class `0..caps.len()` such that a vertex in
/// class `c` has at most `caps[c]` neighbors in its own class, by
/// backtracking in vertex order. `None` when none exists or the node budget
/// runs out (the flag tells which).
pub fn exact_defective_coloring(g: &Graph, caps: &[usize], budget: u64) -> (Option<Vec<usize>>, bool) {
    struct Search<'a> {
        g: &'a Graph,
        caps: &'a [usize],
        class: Vec<usize>,
        inside: Vec<usize>,
        nodes: u64,
        budget: u64,
    }
    impl Search<'_> {
        fn fits(&self, v: usize, c: usize) -> bool {
            let mut count = 0;
            for &w in self.g.neighbors(v) {
                if self.class[w] == c {
                    count += 1;
                    if self.inside[w] + 1 > self.caps[c] {
                        return false;
                    }
                }
            }
            count <= self.caps[c]
        }
        fn place(&mut self, v: usize, c: usize, delta: isize) {
            let mut count = 0;
            for &w in self.g.neighbors(v) {
                if self.class[w] == c {
                    count += 1;
                    self.inside[w] = (self.inside[w] as isize + delta) as usize;
                }
            }
            self.inside[v] = if delta > 0 { count } else { 0 };
        }
        fn run(&mut self, v: usize) -> Option<bool> {
            if v == self.class.len() {
                return Some(true);
            }
            for c in 0..self.caps.len() {
                self.nodes += 1;
                if self.nodes > self.budget {
                    return None;
                }
                if !self.fits(v, c) {
                    continue;
                }
                self.class[v] = c;
                self.place(v, c, 1);
                if self.run(v + 1)? {
                    return Some(true);
                }
                self.place(v, c, -1);
                self.class[v] = usize::MAX;
            }
            Some(false)
        }
    }
    let n = g.vertex_count();
    let mut s = Search {
        g,
        caps,
        class: vec![usize::MAX; n],
        inside: vec![0; n],
        nodes: 0,
        budget,
    };
    match s.run(0) {
        Some(true) => (Some(s.class), false),
        Some(false) => (None, false),
        None => (None, true),
    }
}

pub fn exact_3coloring(g: &Graph) -> Option<Vec<usize>> {
    exact_defective_coloring(g, &[0, 0, 0], u64::MAX).0
}

/// Partition via an exact (1,0,0)-coloring.
pub fn partition_via_100_coloring(g: &Graph, budget: u64) -> Result<Option<Partition>, ConstructError> {
    match exact_defective_coloring(g, &[1, 0, 0], budget) {
        (Some(class), _) => {
            let sets: Vec<Vec<usize>> = (0..3)
                .map(|c| g.vertices().filter(|&v| class[v] == c).collect())
                .collect();
            partition_from_deg_coloring(g, [&sets[0], &sets[1], &sets[2]]).map(Some)
        }
        (None, false) => Ok(None),
        (None, true) => Err(ConstructError::Budget { budget }),
    }
}
