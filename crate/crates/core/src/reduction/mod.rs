//! Compiling (3,≤4)-SAT formulas into partition instances and checking the
//! result end to end at small scale.

mod fixtures;

pub use crate::solver::{CnfError, CnfFormula};
pub use fixtures::{fixture_corpus, Fixture};

use crate::gadgets::{ClauseShape, GadgetError, GadgetSet};
use crate::graph::{Edge, Graph};
use crate::solver::{solve_partition, Partition};
use crate::structure::{biconnected_components, find_induced_cycle, planar_verdict, Parity, StructureError};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

/// Default minimum distance between used slots of one variable gadget.
pub const DEFAULT_T: usize = 3;

/// Most variables the brute-force side of `verify_reduction` accepts.
pub const MAX_BRUTE_FORCE_VARS: usize = 24;

#[derive(Debug, Error)]
pub enum ReductionError {
    #[error("formula is not (3,<=4): {}", .0.join("; "))]
    Format(Vec<String>),
    #[error(transparent)]
    Gadget(#[from] GadgetError),
    #[error("no free {polarity} slot{parity} in section {section} of the gadget for x{var}")]
    Slots {
        var: usize,
        section: usize,
        polarity: &'static str,
        parity: String,
    },
    #[error("formula has {vars} variables, brute force is limited to {limit}")]
    TooLarge { vars: usize, limit: usize },
    #[error(transparent)]
    Structure(#[from] StructureError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormatReport {
    pub ok: bool,
    pub violations: Vec<String>,
    /// Planarity of the variable-clause incidence graph, reported only.
    pub incidence_planar: bool,
}

/// Variables `1..=n` followed by one vertex per clause.
pub fn incidence_graph(f: &CnfFormula) -> Graph {
    let n = f.variable_count;
    let mut g = Graph::new(n + f.clauses.len());
    for (ci, c) in f.clauses.iter().enumerate() {
        for &l in c {
            let v = l.unsigned_abs() as usize;
            if (1..=n).contains(&v) {
                g.add_edge(v - 1, n + ci).expect("in range");
            }
        }
    }
    g
}

/// Every clause has exactly three literals on distinct variables and every
/// variable occurs in at most four clauses.
pub fn validate_3le4(f: &CnfFormula) -> FormatReport {
    let mut violations = Vec::new();
    if let Err(e) = f.check() {
        violations.push(e.to_string());
    }
    for (ci, c) in f.clauses.iter().enumerate() {
        let vars: BTreeSet<u32> = c.iter().map(|l| l.unsigned_abs()).collect();
        if c.len() != 3 {
            violations.push(format!("clause {ci} has {} literals", c.len()));
        } else if vars.len() != 3 {
            violations.push(format!("clause {ci} repeats a variable"));
        }
    }
    for (v, &k) in f.occurrences().iter().enumerate().skip(1) {
        if k > 4 {
            violations.push(format!("variable {} occurs in {k} clauses", f.name(v)));
        }
    }
    FormatReport {
        ok: violations.is_empty(),
        violations,
        incidence_planar: planar_verdict(&incidence_graph(f)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClauseGadget {
    pub literals: [i32; 3],
    /// `vertices[i]` carries `literals[i]`.
    pub vertices: [usize; 3],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariableCopy {
    pub var: usize,
    /// The gadget occupies `offset..offset + size`.
    pub offset: usize,
    pub size: usize,
    pub sections: usize,
    pub gap: usize,
    pub positive: Vec<usize>,
    pub negative: Vec<usize>,
    /// `(clause, vertex)` for each occurrence.
    pub used: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Provenance {
    pub clauses: Vec<ClauseGadget>,
    pub variables: Vec<VariableCopy>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionOutput {
    pub graph: Graph,
    pub provenance: Provenance,
    pub parity: BTreeMap<usize, u8>,
    pub t: usize,
    pub gadget_set: String,
    pub true_color: crate::solver::Color,
    pub clause_shape: ClauseShape,
}

/// One ring-shaped variable gadget per variable and one clause gadget per
/// clause whose three vertices are slots of the variable gadgets. The j-th
/// occurrence of a variable uses a slot of the right side in section
/// `j·gap`, where the gap keeps used slots at distance at least `t`.
pub fn compile(f: &CnfFormula, set: &GadgetSet, t: usize) -> Result<ReductionOutput, ReductionError> {
    let report = validate_3le4(f);
    if !report.ok {
        return Err(ReductionError::Format(report.violations));
    }
    set.check()?;
    let labelled = !set.template.parity.is_empty();
    // occurrences[var] = (clause, position) in clause order
    let mut occurrences: Vec<Vec<(usize, usize)>> = vec![Vec::new(); f.variable_count + 1];
    for (ci, c) in f.clauses.iter().enumerate() {
        for (pos, &l) in c.iter().enumerate() {
            occurrences[l.unsigned_abs() as usize].push((ci, pos));
        }
    }
    let mut graph = Graph::new(0);
    let mut variables = Vec::with_capacity(f.variable_count);
    let mut clause_vertices = vec![[usize::MAX; 3]; f.clauses.len()];
    let mut parity = BTreeMap::new();
    for var in 1..=f.variable_count {
        let occ = &occurrences[var];
        let (k, gap) = set.ring_for(occ.len(), t)?;
        let (vg, _) = set.instantiate(k)?;
        let (g, offset) = graph.disjoint_union(&vg.graph);
        graph = g;
        let mut used = Vec::with_capacity(occ.len());
        for (j, &(ci, pos)) in occ.iter().enumerate() {
            let section = j * gap;
            let positive = f.clauses[ci][pos] > 0;
            // the middle of a P3 clause is labelled 2, its ends 1
            let want = (labelled && set.clause == ClauseShape::P3).then_some(if pos == 1 { 2 } else { 1 });
            let side = if positive {
                &set.template.positive
            } else {
                &set.template.negative
            };
            let local = set
                .template
                .slots
                .iter()
                .copied()
                .filter(|u| side.contains(u))
                .find(|u| want.is_none() || set.template.parity.get(u).copied() == want)
                .ok_or_else(|| ReductionError::Slots {
                    var,
                    section,
                    polarity: if positive { "positive" } else { "negative" },
                    parity: want.map(|p| format!(" of parity {p}")).unwrap_or_default(),
                })?;
            let v = offset + section * set.template.size + local;
            clause_vertices[ci][pos] = v;
            used.push((ci, v));
        }
        for (&v, &p) in &vg.parity {
            parity.insert(offset + v, p);
        }
        variables.push(VariableCopy {
            var,
            offset,
            size: vg.graph.vertex_count(),
            sections: k,
            gap,
            positive: vg.positive.iter().map(|&v| offset + v).collect(),
            negative: vg.negative.iter().map(|&v| offset + v).collect(),
            used,
        });
    }
    let mut clauses = Vec::with_capacity(f.clauses.len());
    for (ci, c) in f.clauses.iter().enumerate() {
        let [a, b, d] = clause_vertices[ci];
        graph.add_edge(a, b).map_err(GadgetError::from)?;
        graph.add_edge(b, d).map_err(GadgetError::from)?;
        if set.clause == ClauseShape::K3 {
            graph.add_edge(a, d).map_err(GadgetError::from)?;
        }
        clauses.push(ClauseGadget {
            literals: [c[0], c[1], c[2]],
            vertices: [a, b, d],
        });
    }
    Ok(ReductionOutput {
        graph,
        provenance: Provenance { clauses, variables },
        parity,
        t,
        gadget_set: set.name.clone(),
        true_color: set.true_color,
        clause_shape: set.clause,
    })
}

impl ReductionOutput {
    /// Truth assignment read off a partition: a variable is true when one of
    /// its positive vertices has the true color. Index `k - 1` is variable `k`.
    pub fn decode(&self, p: &Partition) -> Vec<bool> {
        self.provenance
            .variables
            .iter()
            .map(|v| v.positive.iter().any(|&u| p.color(u) == self.true_color))
            .collect()
    }

    /// Inconsistencies between the graph and its provenance.
    pub fn structure_errors(&self, f: &CnfFormula) -> Vec<String> {
        let mut errors = Vec::new();
        let prov = &self.provenance;
        if prov.clauses.len() != f.clauses.len() {
            errors.push(format!(
                "{} clause gadgets for {} clauses",
                prov.clauses.len(),
                f.clauses.len()
            ));
        }
        if prov.variables.len() != f.variable_count {
            errors.push(format!(
                "{} variable gadgets for {} variables",
                prov.variables.len(),
                f.variable_count
            ));
        }
        let mut seen = BTreeSet::new();
        for (ci, cg) in prov.clauses.iter().enumerate() {
            if f.clauses.get(ci).map(|c| c[..] != cg.literals[..]).unwrap_or(true) {
                errors.push(format!("clause {ci}: literals differ from the formula"));
            }
            let [a, b, d] = cg.vertices;
            let mut needed = vec![Edge::new(a, b), Edge::new(b, d)];
            if self.clause_shape == ClauseShape::K3 {
                needed.push(Edge::new(a, d));
            }
            for e in needed {
                let (u, v) = e.ends();
                if u == v || !self.graph.has_edge(u, v) {
                    errors.push(format!("clause {ci}: edge {e} missing"));
                }
            }
            for (i, &v) in cg.vertices.iter().enumerate() {
                if !seen.insert(v) {
                    errors.push(format!("vertex {v} serves two clause positions"));
                }
                let lit = cg.literals[i];
                let Some(copy) = prov.variables.get(lit.unsigned_abs() as usize - 1) else {
                    errors.push(format!("clause {ci}: no gadget for literal {lit}"));
                    continue;
                };
                let side = if lit > 0 { &copy.positive } else { &copy.negative };
                if !side.contains(&v) {
                    errors.push(format!(
                        "clause {ci}: vertex {v} is not on the {lit} side of its gadget"
                    ));
                }
            }
        }
        for copy in &prov.variables {
            let members: Vec<usize> = (copy.offset..copy.offset + copy.size).collect();
            let (inside, _) = self.graph.induced_subgraph(&members);
            // clause edges leave the gadget, so the induced copy is the gadget itself
            for (i, &(_, a)) in copy.used.iter().enumerate() {
                let dist = inside.distances_from(a - copy.offset);
                for &(_, b) in &copy.used[i + 1..] {
                    if let Some(d) = dist[b - copy.offset] {
                        if d < self.t {
                            errors.push(format!(
                                "x{}: used slots {a} and {b} at distance {d} < {}",
                                copy.var, self.t
                            ));
                        }
                    }
                }
            }
        }
        errors
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionCheck {
    pub pass: bool,
    pub satisfiable: bool,
    pub partitionable: bool,
    pub decoded: Option<Vec<bool>>,
    pub decoded_satisfies: Option<bool>,
    pub structure_errors: Vec<String>,
}

/// Satisfiability by brute force against partitionability by the solver,
/// plus decoding of the partition when there is one.
pub fn verify_reduction(f: &CnfFormula, out: &ReductionOutput) -> Result<ReductionCheck, ReductionError> {
    if f.variable_count > MAX_BRUTE_FORCE_VARS {
        return Err(ReductionError::TooLarge {
            vars: f.variable_count,
            limit: MAX_BRUTE_FORCE_VARS,
        });
    }
    let structure_errors = out.structure_errors(f);
    let satisfiable = f.brute_force_model().is_some();
    let partition = solve_partition(&out.graph);
    let decoded = partition.as_ref().map(|p| out.decode(p));
    let decoded_satisfies = decoded.as_ref().map(|a| f.evaluate(a));
    let pass = structure_errors.is_empty() && satisfiable == partition.is_some() && decoded_satisfies.unwrap_or(true);
    Ok(ReductionCheck {
        pass,
        satisfiable,
        partitionable: partition.is_some(),
        decoded,
        decoded_satisfies,
        structure_errors,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityReport {
    pub pass: bool,
    /// A labelled induced P3 whose labels do not alternate.
    pub bad_triple: Option<[usize; 3]>,
    pub odd_hole: Option<Vec<usize>>,
    pub warning: Option<String>,
}

/// Labels alternate on every labelled induced P3, and the largest block
/// containing labelled vertices has no odd hole of length at most `window`.
pub fn validate_parity(out: &ReductionOutput, window: usize) -> Result<ParityReport, ReductionError> {
    if out.parity.is_empty() {
        return Ok(ParityReport {
            pass: true,
            bad_triple: None,
            odd_hole: None,
            warning: Some("no parity labels; the check is vacuous".into()),
        });
    }
    let label = |v: usize| out.parity.get(&v).copied();
    for [a, m, b] in out.graph.induced_p3s() {
        if let (Some(la), Some(lm), Some(lb)) = (label(a), label(m), label(b)) {
            if la == lm || lm == lb {
                return Ok(ParityReport {
                    pass: false,
                    bad_triple: Some([a, m, b]),
                    odd_hole: None,
                    warning: None,
                });
            }
        }
    }
    let block = biconnected_components(&out.graph)
        .into_iter()
        .map(|edges| {
            let mut vs: Vec<usize> = edges.iter().flat_map(|e| [e.ends().0, e.ends().1]).collect();
            vs.sort_unstable();
            vs.dedup();
            vs
        })
        .filter(|vs| vs.iter().any(|v| out.parity.contains_key(v)))
        .max_by_key(Vec::len);
    let mut odd_hole = None;
    if let Some(vs) = block {
        let (sub, map) = out.graph.induced_subgraph(&vs);
        let max = window.min(sub.vertex_count());
        if let Some(c) = find_induced_cycle(&sub, 5, max, Parity::Odd, window)? {
            odd_hole = Some(c.into_iter().map(|v| map[v]).collect());
        }
    }
    Ok(ParityReport {
        pass: odd_hole.is_none(),
        bad_triple: None,
        odd_hole,
        warning: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::default_gadget_set;

    fn cnf(vars: usize, clauses: &[[i32; 3]]) -> CnfFormula {
        CnfFormula::new(vars, clauses.iter().map(|c| c.to_vec()).collect())
    }

    #[test]
    fn format_checks() {
        let ok = cnf(4, &[[1, 2, 3], [-1, 2, 4]]);
        let r = validate_3le4(&ok);
        assert!(r.ok && r.incidence_planar);
        let five = cnf(6, &[[1, 2, 3], [1, 2, 4], [1, 3, 4], [1, 2, 5], [1, 3, 6]]);
        let r = validate_3le4(&five);
        assert!(!r.ok);
        assert!(r.violations.iter().any(|v| v.contains("x1 occurs in 5")));
        let short = CnfFormula::new(2, vec![vec![1, 2]]);
        assert!(!validate_3le4(&short).ok);
        let taut = CnfFormula::new(3, vec![vec![1, -1, 2]]);
        assert!(!validate_3le4(&taut).ok);
    }

    #[test]
    fn compile_arithmetic() {
        let set = default_gadget_set();
        let empty = compile(&CnfFormula::new(0, vec![]), &set, DEFAULT_T).unwrap();
        assert!(empty.graph.is_empty());
        let one = compile(&cnf(3, &[[1, 2, 3]]), &set, DEFAULT_T).unwrap();
        assert_eq!(one.provenance.variables.len(), 3);
        assert_eq!(one.provenance.clauses.len(), 1);
        let [a, b, c] = one.provenance.clauses[0].vertices;
        assert!(one.graph.has_edge(a, b) && one.graph.has_edge(b, c) && !one.graph.has_edge(a, c));
        assert!(one.structure_errors(&cnf(3, &[[1, 2, 3]])).is_empty());
    }

    #[test]
    fn four_occurrences_get_spaced_slots() {
        let f = cnf(9, &[[1, 2, 3], [-1, 4, 5], [1, 6, 7], [-1, 8, 9]]);
        for t in [3, 5, 7] {
            let out = compile(&f, &default_gadget_set(), t).unwrap();
            assert_eq!(out.provenance.variables[0].used.len(), 4);
            assert!(out.structure_errors(&f).is_empty(), "t = {t}");
        }
    }

    #[test]
    fn compile_is_deterministic() {
        let f = cnf(4, &[[1, 2, 3], [-1, -2, 4]]);
        let a = compile(&f, &default_gadget_set(), 3).unwrap();
        let b = compile(&f, &default_gadget_set(), 3).unwrap();
        assert_eq!(
            crate::graph::to_edge_list(&a.graph),
            crate::graph::to_edge_list(&b.graph)
        );
    }

    #[test]
    fn single_clause_round_trip() {
        let f = cnf(3, &[[1, 2, 3]]);
        let out = compile(&f, &default_gadget_set(), DEFAULT_T).unwrap();
        let r = verify_reduction(&f, &out).unwrap();
        assert!(r.pass && r.satisfiable && r.partitionable);
        assert_eq!(r.decoded_satisfies, Some(true));
    }

    #[test]
    fn corrupted_identification_is_caught() {
        let f = cnf(4, &[[1, 2, 3], [-1, 2, 4]]);
        let mut out = compile(&f, &default_gadget_set(), DEFAULT_T).unwrap();
        // move the first clause vertex to the opposite side of its section
        let [a, b, _] = out.provenance.clauses[0].vertices;
        let other = if a % 12 == 3 { a - 1 } else { a + 1 };
        out.graph.remove_edge(a, b).unwrap();
        out.graph.add_edge(other, b).unwrap();
        out.provenance.clauses[0].vertices[0] = other;
        let r = verify_reduction(&f, &out).unwrap();
        assert!(!r.pass);
        assert!(!r.structure_errors.is_empty());
    }

    #[test]
    fn corpus_round_trips() {
        let set = default_gadget_set();
        for fx in fixture_corpus() {
            let out = compile(&fx.formula, &set, DEFAULT_T).unwrap();
            let r = verify_reduction(&fx.formula, &out).unwrap();
            assert!(r.pass, "{}: {r:?}", fx.name);
            assert_eq!(r.satisfiable, fx.satisfiable);
        }
    }

    #[test]
    fn parity_checks() {
        let f = cnf(3, &[[1, 2, 3]]);
        let mut out = compile(&f, &default_gadget_set(), DEFAULT_T).unwrap();
        let r = validate_parity(&out, 8).unwrap();
        assert!(r.pass && r.warning.is_some());
        let [a, b, c] = out.provenance.clauses[0].vertices;
        out.parity = BTreeMap::from([(a, 1), (b, 2), (c, 1)]);
        let r = validate_parity(&out, 8).unwrap();
        assert!(r.bad_triple.is_none());
        out.parity.insert(c, 2);
        let r = validate_parity(&out, 8).unwrap();
        assert_eq!(r.bad_triple, Some([a, b, c]));
    }
}
