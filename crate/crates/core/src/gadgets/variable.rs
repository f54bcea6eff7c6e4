use super::{Counterexample, GadgetError, Verdict};
use crate::graph::Graph;
use crate::solver::{vertex_constraints, Color, Lit, Partition};
use std::collections::{BTreeMap, HashMap};

/// A gadget carrying one boolean variable. `positive` and `negative` are the
/// vertex sets standing for the two literals; a literal is true when one of
/// its vertices has the color `true_color`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariableGadget {
    pub graph: Graph,
    pub positive: Vec<usize>,
    pub negative: Vec<usize>,
    /// Vertices offered for identification with clause vertices.
    pub slots: Vec<usize>,
    /// Optional parity labels (1 or 2) on slots.
    pub parity: BTreeMap<usize, u8>,
    pub true_color: Color,
}

impl VariableGadget {
    pub fn check(&self) -> Result<(), GadgetError> {
        let n = self.graph.vertex_count();
        if let Some(&v) = self
            .positive
            .iter()
            .chain(&self.negative)
            .chain(&self.slots)
            .find(|&&v| v >= n)
        {
            return Err(GadgetError::Invalid(format!("vertex {v} out of range")));
        }
        if let Some(v) = self.positive.iter().find(|v| self.negative.contains(v)) {
            return Err(GadgetError::Invalid(format!("vertex {v} is on both sides")));
        }
        if let Some(v) = self
            .slots
            .iter()
            .find(|v| !self.positive.contains(v) && !self.negative.contains(v))
        {
            return Err(GadgetError::Invalid(format!("slot {v} belongs to neither side")));
        }
        if let Some((v, p)) = self.parity.iter().find(|(_, &p)| p != 1 && p != 2) {
            return Err(GadgetError::Invalid(format!("vertex {v} has parity label {p}")));
        }
        Ok(())
    }

    /// Reads sides from `side x` / `side xbar`, slots from `slot yes`,
    /// parity from `parity 1|2` and the convention from `true red|blue` on
    /// any vertex.
    pub fn from_annotated(graph: Graph) -> Result<Self, GadgetError> {
        let positive = graph.vertices_with("side", "x");
        let negative = graph.vertices_with("side", "xbar");
        let slots = graph.vertices_with("slot", "yes");
        let mut parity = BTreeMap::new();
        let mut true_color = None;
        for v in graph.vertices() {
            if let Some(p) = graph.annotation(v, "parity") {
                let p: u8 = p
                    .parse()
                    .map_err(|_| GadgetError::Invalid(format!("vertex {v}: bad parity {p:?}")))?;
                parity.insert(v, p);
            }
            if let Some(c) = graph.annotation(v, "true") {
                true_color = Some(c.parse::<Color>().map_err(GadgetError::Invalid)?);
            }
        }
        let vg = VariableGadget {
            graph,
            positive,
            negative,
            slots,
            parity,
            true_color: true_color.unwrap_or(Color::Red),
        };
        vg.check()?;
        Ok(vg)
    }

    pub fn to_annotated(&self) -> Graph {
        let mut g = self.graph.clone();
        for &v in &self.positive {
            g.annotate(v, "side", "x");
        }
        for &v in &self.negative {
            g.annotate(v, "side", "xbar");
        }
        for &v in &self.slots {
            g.annotate(v, "slot", "yes");
        }
        for (&v, &p) in &self.parity {
            g.annotate(v, "parity", p.to_string());
        }
        if let Some(&v) = self.positive.first() {
            g.annotate(v, "true", self.true_color.as_str());
        }
        g
    }
}

fn is_swap_involution(g: &Graph, positive: &[usize], negative: &[usize], map: &[usize]) -> bool {
    let n = g.vertex_count();
    if map.len() != n || map.iter().any(|&w| w >= n) {
        return false;
    }
    if (0..n).any(|v| map[map[v]] != v) {
        return false;
    }
    if positive.iter().any(|&v| !negative.contains(&map[v])) || negative.iter().any(|&v| !positive.contains(&map[v])) {
        return false;
    }
    g.edges().into_iter().all(|e| {
        let (u, v) = e.ends();
        g.has_edge(map[u], map[v])
    })
}

/// Color refinement started from "is on a side"; any automorphism swapping
/// the sides preserves the resulting classes.
fn refined_classes(g: &Graph, on_side: &[bool]) -> Vec<usize> {
    let mut class: Vec<usize> = on_side.iter().map(|&s| s as usize).collect();
    let mut count = 0;
    loop {
        let mut ids: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
        let next: Vec<usize> = g
            .vertices()
            .map(|v| {
                let mut around: Vec<usize> = g.neighbors(v).iter().map(|&w| class[w]).collect();
                around.sort_unstable();
                let key = (class[v], around);
                let fresh = ids.len();
                *ids.entry(key).or_insert(fresh)
            })
            .collect();
        if ids.len() == count {
            return next;
        }
        count = ids.len();
        class = next;
    }
}

/// Searches for an involutive automorphism mapping `positive` onto
/// `negative` and back. `Ok(None)` when none exists.
pub fn find_swap_involution(
    g: &Graph,
    positive: &[usize],
    negative: &[usize],
    budget: u64,
) -> Result<Option<Vec<usize>>, GadgetError> {
    let n = g.vertex_count();
    if positive.len() != negative.len() {
        return Ok(None);
    }
    let mut side = vec![0u8; n];
    for &v in positive {
        side[v] = 1;
    }
    for &v in negative {
        side[v] = 2;
    }
    let class = refined_classes(g, &side.iter().map(|&s| s != 0).collect::<Vec<_>>());
    // breadth-first order so each vertex meets already mapped neighbors
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for start in positive.iter().copied().chain(0..n) {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut i = order.len();
        order.push(start);
        while i < order.len() {
            let v = order[i];
            i += 1;
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
    }

    struct Search<'a> {
        g: &'a Graph,
        side: Vec<u8>,
        class: Vec<usize>,
        order: Vec<usize>,
        map: Vec<usize>,
        mapped: Vec<usize>,
        nodes: u64,
        budget: u64,
    }
    impl Search<'_> {
        fn consistent(&self, v: usize, w: usize) -> bool {
            self.mapped
                .iter()
                .all(|&u| self.g.has_edge(v, u) == self.g.has_edge(w, self.map[u]))
        }
        fn run(&mut self, i: usize) -> Result<bool, GadgetError> {
            if i == self.order.len() {
                return Ok(true);
            }
            let v = self.order[i];
            if self.map[v] != usize::MAX {
                return self.run(i + 1);
            }
            let want = match self.side[v] {
                1 => 2,
                2 => 1,
                _ => 0,
            };
            for w in 0..self.g.vertex_count() {
                if self.class[w] != self.class[v] || self.side[w] != want {
                    continue;
                }
                if w != v && self.map[w] != usize::MAX {
                    continue;
                }
                self.nodes += 1;
                if self.nodes > self.budget {
                    return Err(GadgetError::Budget { budget: self.budget });
                }
                if !self.consistent(v, w) {
                    continue;
                }
                self.map[v] = w;
                self.mapped.push(v);
                if w != v {
                    if !self.consistent(w, v) || self.g.has_edge(v, w) != self.g.has_edge(w, v) {
                        self.map[v] = usize::MAX;
                        self.mapped.pop();
                        continue;
                    }
                    self.map[w] = v;
                    self.mapped.push(w);
                }
                if self.run(i + 1)? {
                    return Ok(true);
                }
                if w != v {
                    self.map[w] = usize::MAX;
                    self.mapped.pop();
                }
                self.map[v] = usize::MAX;
                self.mapped.pop();
            }
            Ok(false)
        }
    }
    let mut s = Search {
        g,
        side,
        class,
        order,
        map: vec![usize::MAX; n],
        mapped: Vec::with_capacity(n),
        nodes: 0,
        budget,
    };
    if s.run(0)? {
        debug_assert!(is_swap_involution(g, positive, negative, &s.map));
        Ok(Some(s.map))
    } else {
        Ok(None)
    }
}

/// Checks the three variable-gadget conditions:
///
/// 1. an involutive automorphism swaps the two sides (`swap` is checked if
///    given, searched for otherwise);
/// 2. some valid partition gives every positive vertex the true color while
///    no side vertex that is blue has a blue neighbor;
/// 3. no valid partition gives a positive and a negative vertex the true
///    color at the same time.
pub fn verify_variable_gadget(
    vg: &VariableGadget,
    swap: Option<&[usize]>,
    budget: u64,
) -> Result<Verdict, GadgetError> {
    vg.check()?;
    let g = &vg.graph;
    let has_swap = match swap {
        Some(map) => is_swap_involution(g, &vg.positive, &vg.negative, map),
        None => find_swap_involution(g, &vg.positive, &vg.negative, budget)?.is_some(),
    };
    if !has_swap {
        return Ok(Verdict::fail(
            "no involutive automorphism swaps the two sides",
            None,
            None,
        ));
    }

    let base = vertex_constraints(g);
    let mut sys = base.clone();
    for &s in vg.positive.iter().chain(&vg.negative) {
        for &u in g.neighbors(s) {
            sys.add_clause(&[Lit::red(s), Lit::red(u)]);
        }
    }
    let all_true: Vec<Lit> = vg.positive.iter().map(|&v| Lit::new(v, vg.true_color)).collect();
    if sys.solve_with(&all_true).is_none() {
        return Ok(Verdict::fail(
            "no partition makes the positive side true with isolated blue side vertices",
            None,
            None,
        ));
    }

    for &a in &vg.positive {
        for &b in &vg.negative {
            if let Some(colors) = base.solve_with(&[Lit::new(a, vg.true_color), Lit::new(b, vg.true_color)]) {
                return Ok(Verdict::fail(
                    format!("vertices {a} and {b} are both true in some partition"),
                    Some(Counterexample::Partition(Partition::new(colors))),
                    None,
                ));
            }
        }
    }
    Ok(Verdict::pass(None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;

    fn gadget(graph: Graph, positive: Vec<usize>, negative: Vec<usize>) -> VariableGadget {
        let slots = positive.iter().chain(&negative).copied().collect();
        VariableGadget {
            graph,
            positive,
            negative,
            slots,
            parity: BTreeMap::new(),
            true_color: Color::Red,
        }
    }

    #[test]
    fn single_edge_fails_exclusivity() {
        let vg = gadget(generate("complete", &[2]).unwrap(), vec![0], vec![1]);
        let v = verify_variable_gadget(&vg, None, 1 << 20).unwrap();
        assert!(!v.pass);
        assert!(v.failed.unwrap().contains("both true"));
    }

    #[test]
    fn unequal_sides_fail_symmetry() {
        let vg = gadget(generate("path", &[3]).unwrap(), vec![0], vec![1, 2]);
        let v = verify_variable_gadget(&vg, None, 1 << 20).unwrap();
        assert!(v.failed.unwrap().contains("automorphism"));
    }

    #[test]
    fn involution_search() {
        let c6 = generate("cycle", &[6]).unwrap();
        let map = find_swap_involution(&c6, &[0], &[3], 1 << 20).unwrap().unwrap();
        assert_eq!(map[0], 3);
        assert!(is_swap_involution(&c6, &[0], &[3], &map));
        // in P4 an end cannot swap with an inner vertex
        let p4 = generate("path", &[4]).unwrap();
        assert!(find_swap_involution(&p4, &[0], &[1], 1 << 20).unwrap().is_none());
        assert!(!is_swap_involution(&p4, &[0], &[3], &[3, 2, 1, 1]));
    }

    #[test]
    fn annotation_round_trip() {
        let vg = gadget(generate("cycle", &[4]).unwrap(), vec![0], vec![2]);
        let mut back = VariableGadget::from_annotated(vg.to_annotated()).unwrap();
        back.graph.clear_annotations();
        assert_eq!(back, vg);
    }
}
