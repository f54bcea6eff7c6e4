//! Membership tests for hereditary graph classes described by forbidden
//! induced subgraphs, induced-cycle windows, a degree cap and planarity.

use super::cycles::{find_induced_cycle, is_induced_cycle, Parity, DEFAULT_MAX_CYCLE_LEN};
use super::induced::{contains_induced_bounded, is_induced_embedding, DEFAULT_PATTERN_BOUND};
use super::planarity::{is_planar, KuratowskiWitness, PlanarityWitness};
use super::StructureError;
use crate::graph::{generate, pattern, Edge, Graph, PatternName};

#[derive(Clone, Debug)]
pub struct NamedPattern {
    pub name: String,
    pub graph: Graph,
}

impl NamedPattern {
    fn catalog(p: PatternName) -> Self {
        NamedPattern {
            name: p.as_str().to_string(),
            graph: pattern(p),
        }
    }

    fn generated(name: &str, generator: &str, params: &[u64]) -> Self {
        NamedPattern {
            name: name.to_string(),
            graph: generate(generator, params).expect("built-in generator"),
        }
    }
}

/// Forbidden induced cycles with lengths in `min..=max`; `max = None` means
/// unbounded (odd holes), which is searched up to the configured cycle bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleWindow {
    pub label: String,
    pub min: usize,
    pub max: Option<usize>,
    pub parity: Parity,
}

#[derive(Clone, Debug)]
pub struct ClassSpec {
    pub name: String,
    pub forbidden: Vec<NamedPattern>,
    pub cycles: Vec<CycleWindow>,
    pub max_degree: Option<usize>,
    /// Forbids edges whose two ends both have at least this degree.
    pub no_edge_between_degree: Option<usize>,
    pub require_planar: bool,
    pub t: Option<usize>,
}

#[derive(Copy, Clone, Debug)]
pub struct CheckOptions {
    pub max_cycle_len: usize,
    pub pattern_bound: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            max_cycle_len: DEFAULT_MAX_CYCLE_LEN,
            pattern_bound: DEFAULT_PATTERN_BOUND,
        }
    }
}

#[derive(Clone, Debug)]
pub enum Witness {
    /// `map[i]` is the host vertex playing pattern vertex `i`.
    Induced {
        pattern: String,
        map: Vec<usize>,
    },
    Cycle(Vec<usize>),
    Degree {
        vertex: usize,
        degree: usize,
    },
    HeavyEdge {
        edge: Edge,
        degrees: (usize, usize),
    },
    NonPlanar(KuratowskiWitness),
}

impl Witness {
    pub fn vertices(&self) -> Vec<usize> {
        match self {
            Witness::Induced { map, .. } => map.clone(),
            Witness::Cycle(c) => c.clone(),
            Witness::Degree { vertex, .. } => vec![*vertex],
            Witness::HeavyEdge { edge, .. } => vec![edge.ends().0, edge.ends().1],
            Witness::NonPlanar(k) => k.paths.iter().flatten().copied().collect(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Violation {
    pub constraint: String,
    pub witness: Witness,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} at {:?}", self.constraint, self.witness.vertices())
    }
}

#[derive(Clone, Debug)]
pub struct StructureReport {
    pub class: String,
    pub member: bool,
    pub violations: Vec<Violation>,
    /// Checks that were only carried out up to a length bound.
    pub notes: Vec<String>,
}

fn cycles_from(label: &str, min: usize, t: usize) -> Result<CycleWindow, StructureError> {
    if t < min {
        return Err(StructureError::InvalidSpec(format!(
            "{label} needs t >= {min}, got t = {t}"
        )));
    }
    Ok(CycleWindow {
        label: format!("C{min}..C{t}"),
        min,
        max: Some(t),
        parity: Parity::Any,
    })
}

fn odd_holes(min: usize) -> CycleWindow {
    CycleWindow {
        label: if min == 5 {
            "odd hole".to_string()
        } else {
            format!("odd hole of length >= {min}")
        },
        min,
        max: None,
        parity: Parity::Odd,
    }
}

impl ClassSpec {
    pub const PRESETS: [&'static str; 15] = [
        "h1", "h2", "h3", "h4", "h5", "h6", "h7", "h8", "h9", "p2", "p3", "p4", "p5", "p5'", "p6",
    ];

    /// Named classes; `t` bounds the forbidden cycle windows where the class
    /// has one.
    pub fn preset(name: &str, t: usize) -> Result<ClassSpec, StructureError> {
        use PatternName::*;
        let pat = NamedPattern::catalog;
        let k4 = || NamedPattern::generated("K4", "complete", &[4]);
        let k5 = || NamedPattern::generated("K5", "complete", &[5]);
        let co_c7 = || NamedPattern::generated("co-C7", "complement_of_cycle", &[7]);
        let spec = |forbidden: Vec<NamedPattern>,
                    cycles: Vec<CycleWindow>,
                    max_degree: Option<usize>,
                    planar: bool,
                    uses_t: bool| ClassSpec {
            name: name.to_string(),
            forbidden,
            cycles,
            max_degree,
            no_edge_between_degree: None,
            require_planar: planar,
            t: uses_t.then_some(t),
        };
        let s = match name {
            "h1" => spec(
                vec![pat(Bull), pat(Gem)],
                vec![cycles_from(name, 4, t)?, odd_holes(5)],
                Some(8),
                true,
                true,
            ),
            "h2" => spec(
                vec![k4(), pat(Bull), pat(House)],
                vec![cycles_from(name, 5, t)?],
                None,
                true,
                true,
            ),
            "h3" => spec(
                vec![k4(), pat(Gem), NamedPattern::generated("C4", "cycle", &[4])],
                vec![cycles_from(name, 7, t)?, odd_holes(7)],
                Some(7),
                true,
                true,
            ),
            "h4" => spec(
                vec![k4(), pat(Net)],
                vec![cycles_from(name, 5, t)?, odd_holes(5)],
                Some(8),
                false,
                true,
            ),
            "h5" => spec(
                vec![pat(Diamond), pat(Butterfly)],
                vec![cycles_from(name, 6, t)?],
                Some(4),
                false,
                true,
            ),
            "h6" => spec(
                vec![k4(), pat(Diamond), pat(Butterfly)],
                vec![cycles_from(name, 4, t)?],
                None,
                false,
                true,
            ),
            "h7" => spec(
                vec![pat(Claw), pat(Diamond)],
                vec![cycles_from(name, 4, t)?, odd_holes(5)],
                Some(6),
                true,
                true,
            ),
            "h8" => spec(
                vec![pat(Claw), pat(Diamond)],
                vec![cycles_from(name, 9, t)?, odd_holes(5)],
                Some(5),
                true,
                true,
            ),
            "h9" => spec(
                vec![pat(Claw), pat(Diamond), k5()],
                vec![cycles_from(name, 4, t)?, odd_holes(5)],
                Some(5),
                false,
                true,
            ),
            "p2" => spec(vec![k4(), co_c7()], vec![odd_holes(5)], None, false, false),
            "p3" => spec(vec![pat(Diamond), pat(House), pat(Net)], vec![], None, false, false),
            "p4" => spec(
                vec![pat(Diamond), pat(Claw), k5(), pat(Butterfly)],
                vec![],
                None,
                false,
                false,
            ),
            "p5" => spec(
                vec![pat(Claw), pat(Diamond)],
                vec![cycles_from(name, 4, 10)?],
                Some(5),
                true,
                false,
            ),
            "p5'" | "p5-edge" => {
                // edge version: girth >= 11 means no cycle of length 3..10,
                // and a shortest cycle is always induced
                let mut s = spec(vec![], vec![cycles_from(name, 3, 10)?], Some(4), true, false);
                s.name = "p5'".into();
                s.no_edge_between_degree = Some(4);
                s
            }
            "p6" => spec(vec![], vec![], Some(3), false, false),
            other => return Err(StructureError::InvalidSpec(format!("unknown class {other:?}"))),
        };
        Ok(s)
    }

    pub fn validate(&self) -> Result<(), StructureError> {
        for w in &self.cycles {
            if w.min < 3 || w.max.is_some_and(|m| m < w.min) {
                return Err(StructureError::InvalidSpec(format!(
                    "malformed cycle window {} ({}..{:?})",
                    w.label, w.min, w.max
                )));
            }
        }
        Ok(())
    }
}

pub fn check_class(g: &Graph, spec: &ClassSpec) -> Result<StructureReport, StructureError> {
    check_class_with(g, spec, CheckOptions::default())
}

pub fn check_class_with(g: &Graph, spec: &ClassSpec, opts: CheckOptions) -> Result<StructureReport, StructureError> {
    spec.validate()?;
    let n = g.vertex_count();
    let mut violations = Vec::new();
    let mut notes = Vec::new();

    if let Some(cap) = spec.max_degree {
        if let Some(v) = g.vertices().find(|&v| g.degree(v) > cap) {
            violations.push(Violation {
                constraint: format!("max degree {cap}"),
                witness: Witness::Degree {
                    vertex: v,
                    degree: g.degree(v),
                },
            });
        }
    }
    if let Some(d) = spec.no_edge_between_degree {
        if let Some(e) = g.edges().into_iter().find(|e| {
            let (u, v) = e.ends();
            g.degree(u) >= d && g.degree(v) >= d
        }) {
            let (u, v) = e.ends();
            violations.push(Violation {
                constraint: format!("no edge between two vertices of degree {d}"),
                witness: Witness::HeavyEdge {
                    edge: e,
                    degrees: (g.degree(u), g.degree(v)),
                },
            });
        }
    }
    for p in &spec.forbidden {
        if let Some(map) = contains_induced_bounded(&p.graph, g, opts.pattern_bound)? {
            violations.push(Violation {
                constraint: p.name.clone(),
                witness: Witness::Induced {
                    pattern: p.name.clone(),
                    map,
                },
            });
        }
    }
    for w in &spec.cycles {
        let hi = match w.max {
            Some(m) => {
                let m = m.min(n);
                if m > opts.max_cycle_len {
                    return Err(StructureError::WindowTooLarge {
                        max: m,
                        bound: opts.max_cycle_len,
                    });
                }
                m
            }
            None => {
                if n > opts.max_cycle_len {
                    notes.push(format!("{} checked up to length {}", w.label, opts.max_cycle_len));
                }
                n.min(opts.max_cycle_len)
            }
        };
        if let Some(c) = find_induced_cycle(g, w.min, hi, w.parity, opts.max_cycle_len)? {
            violations.push(Violation {
                constraint: w.label.clone(),
                witness: Witness::Cycle(c),
            });
        }
    }
    if spec.require_planar {
        let report = is_planar(g);
        if let PlanarityWitness::Kuratowski(k) = report.witness {
            violations.push(Violation {
                constraint: "planar".into(),
                witness: Witness::NonPlanar(k),
            });
        }
    }
    Ok(StructureReport {
        class: spec.name.clone(),
        member: violations.is_empty(),
        violations,
        notes,
    })
}

impl Violation {
    /// Re-checks the witness against `g`.
    pub fn validate(&self, g: &Graph, spec: &ClassSpec) -> bool {
        match &self.witness {
            Witness::Degree { vertex, degree } => {
                *vertex < g.vertex_count()
                    && g.degree(*vertex) == *degree
                    && spec.max_degree.is_some_and(|cap| *degree > cap)
            }
            Witness::Induced { pattern, map } => spec
                .forbidden
                .iter()
                .find(|p| &p.name == pattern)
                .is_some_and(|p| is_induced_embedding(&p.graph, g, map)),
            Witness::Cycle(c) => {
                let len = c.len();
                is_induced_cycle(g, c)
                    && spec.cycles.iter().any(|w| {
                        w.label == self.constraint
                            && len >= w.min
                            && w.max.is_none_or(|m| len <= m)
                            && w.parity.admits(len)
                    })
            }
            Witness::HeavyEdge { edge, degrees } => {
                let (u, v) = edge.ends();
                g.has_edge(u, v)
                    && (g.degree(u), g.degree(v)) == *degrees
                    && spec
                        .no_edge_between_degree
                        .is_some_and(|d| degrees.0 >= d && degrees.1 >= d)
            }
            Witness::NonPlanar(k) => spec.require_planar && k.verify(g),
        }
    }
}
