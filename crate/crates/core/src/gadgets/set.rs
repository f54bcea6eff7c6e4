//! Gadget sets for the vertex reduction.
//!
//! A variable gadget is a ring of `k` copies of a section. The text format
//! describes one section:
//!
//! ```text
//! c comment
//! set name <id>
//! set true red|blue
//! set clause p3|k3
//! set min_sections <k>  smallest ring the compiler may build (default 2)
//! section <vertices>
//! e <u> <v>        edge inside a section
//! e <u> <v>+       edge from u to v in the next section
//! side <u> x|xbar
//! slot <u>
//! parity <u> 1|2
//! mirror <u> <v> <s>   section i vertex u maps to section s-i vertex v
//! ```
//!
//! The mirror lines, when complete, give the swap involution explicitly.

use super::{verify_variable_gadget, GadgetError, VariableGadget, Verdict};
use crate::solver::Color;
use std::collections::BTreeMap;
use std::fmt::Write;
use std::str::FromStr;

pub const DEFAULT_GADGET_SET: &str = include_str!("../../gadgets/default.gdt");

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClauseShape {
    /// Path on three vertices; true is red.
    P3,
    /// Triangle; true is blue.
    K3,
}

impl ClauseShape {
    pub fn as_str(self) -> &'static str {
        match self {
            ClauseShape::P3 => "p3",
            ClauseShape::K3 => "k3",
        }
    }

    /// Color the clause shape forbids on all three vertices at once.
    pub fn forbidden_color(self) -> Color {
        match self {
            ClauseShape::P3 => Color::Blue,
            ClauseShape::K3 => Color::Red,
        }
    }
}

impl FromStr for ClauseShape {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "p3" => Ok(ClauseShape::P3),
            "k3" => Ok(ClauseShape::K3),
            _ => Err(format!("unknown clause shape {s:?}")),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SectionTemplate {
    pub size: usize,
    pub inner: Vec<(usize, usize)>,
    /// `(u, v)`: u in section i, v in section i + 1.
    pub forward: Vec<(usize, usize)>,
    pub positive: Vec<usize>,
    pub negative: Vec<usize>,
    pub slots: Vec<usize>,
    pub parity: BTreeMap<usize, u8>,
    /// `mirror[u] = (v, s)`.
    pub mirror: BTreeMap<usize, (usize, i64)>,
}

impl SectionTemplate {
    /// The ring of `k >= 2` sections, with the swap map when the template
    /// declares a mirror for every vertex.
    pub fn instantiate(
        &self,
        k: usize,
        true_color: Color,
    ) -> Result<(VariableGadget, Option<Vec<usize>>), GadgetError> {
        if k < 2 {
            return Err(GadgetError::Invalid(format!(
                "a ring needs at least 2 sections, got {k}"
            )));
        }
        let size = self.size;
        let at = |i: usize, u: usize| i * size + u;
        let mut g = crate::graph::Graph::new(k * size);
        for i in 0..k {
            for &(u, v) in &self.inner {
                g.add_edge(at(i, u), at(i, v))?;
            }
            for &(u, v) in &self.forward {
                g.add_edge(at(i, u), at((i + 1) % k, v))?;
            }
        }
        let all = |set: &[usize]| -> Vec<usize> { (0..k).flat_map(|i| set.iter().map(move |&u| at(i, u))).collect() };
        let mut parity = BTreeMap::new();
        for i in 0..k {
            for (&u, &p) in &self.parity {
                parity.insert(at(i, u), p);
            }
        }
        let vg = VariableGadget {
            graph: g,
            positive: all(&self.positive),
            negative: all(&self.negative),
            slots: all(&self.slots),
            parity,
            true_color,
        };
        let swap = (self.mirror.len() == size).then(|| {
            let mut map = vec![0; k * size];
            for i in 0..k {
                for (&u, &(v, s)) in &self.mirror {
                    let j = (s - i as i64).rem_euclid(k as i64) as usize;
                    map[at(i, u)] = at(j, v);
                }
            }
            map
        });
        Ok((vg, swap))
    }

    /// First slot of the requested side in section `i` of a ring.
    pub fn slot(&self, i: usize, positive: bool) -> Option<usize> {
        let side = if positive { &self.positive } else { &self.negative };
        self.slots.iter().find(|u| side.contains(u)).map(|&u| i * self.size + u)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetSet {
    pub name: String,
    pub true_color: Color,
    pub clause: ClauseShape,
    pub min_sections: usize,
    pub template: SectionTemplate,
}

/// Most sections a ring may get while searching for slot spacing.
const MAX_GAP: usize = 64;

impl GadgetSet {
    pub fn parse(text: &str) -> Result<GadgetSet, GadgetError> {
        let mut name = None;
        let mut true_color = None;
        let mut clause = None;
        let mut min_sections = 2;
        let mut t = SectionTemplate::default();
        let mut sized = false;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let err = |message: String| GadgetError::Syntax { line, message };
            let tokens: Vec<&str> = raw.split_whitespace().collect();
            let Some(&head) = tokens.first() else { continue };
            if head == "c" || head.starts_with('#') {
                continue;
            }
            let vertex = |s: &str| -> Result<usize, GadgetError> {
                let v: usize = s.parse().map_err(|_| err(format!("bad vertex {s:?}")))?;
                if !sized {
                    return Err(err("vertex before the `section` line".into()));
                }
                if v >= t.size {
                    return Err(err(format!("vertex {v} outside a section of {} vertices", t.size)));
                }
                Ok(v)
            };
            let arity = |n: usize| -> Result<(), GadgetError> {
                if tokens.len() != n {
                    return Err(err(format!("`{head}` takes {} arguments", n - 1)));
                }
                Ok(())
            };
            match head {
                "set" => {
                    arity(3)?;
                    match tokens[1] {
                        "name" => name = Some(tokens[2].to_string()),
                        "true" => true_color = Some(tokens[2].parse::<Color>().map_err(err)?),
                        "clause" => clause = Some(tokens[2].parse::<ClauseShape>().map_err(err)?),
                        "min_sections" => {
                            min_sections =
                                tokens[2].parse().ok().filter(|&k| k >= 2).ok_or_else(|| {
                                    err(format!("min_sections must be at least 2, got {:?}", tokens[2]))
                                })?
                        }
                        other => return Err(err(format!("unknown setting {other:?}"))),
                    }
                }
                "section" => {
                    arity(2)?;
                    if sized {
                        return Err(err("duplicate `section` line".into()));
                    }
                    t.size = tokens[1]
                        .parse()
                        .map_err(|_| err(format!("bad size {:?}", tokens[1])))?;
                    sized = true;
                }
                "e" => {
                    arity(3)?;
                    let u = vertex(tokens[1])?;
                    match tokens[2].strip_suffix('+') {
                        Some(v) => t.forward.push((u, vertex(v)?)),
                        None => {
                            let v = vertex(tokens[2])?;
                            if u == v {
                                return Err(err(format!("loop at {u}")));
                            }
                            t.inner.push((u, v));
                        }
                    }
                }
                "side" => {
                    arity(3)?;
                    let u = vertex(tokens[1])?;
                    match tokens[2] {
                        "x" => t.positive.push(u),
                        "xbar" => t.negative.push(u),
                        other => return Err(err(format!("unknown side {other:?}"))),
                    }
                }
                "slot" => {
                    arity(2)?;
                    t.slots.push(vertex(tokens[1])?);
                }
                "parity" => {
                    arity(3)?;
                    let u = vertex(tokens[1])?;
                    let p = match tokens[2] {
                        "1" => 1,
                        "2" => 2,
                        other => return Err(err(format!("parity must be 1 or 2, got {other:?}"))),
                    };
                    t.parity.insert(u, p);
                }
                "mirror" => {
                    arity(4)?;
                    let u = vertex(tokens[1])?;
                    let v = vertex(tokens[2])?;
                    let s: i64 = tokens[3]
                        .parse()
                        .map_err(|_| err(format!("bad shift {:?}", tokens[3])))?;
                    t.mirror.insert(u, (v, s));
                }
                other => return Err(err(format!("unknown directive {other:?}"))),
            }
        }
        let last = text.lines().count();
        let missing = |what: &str| GadgetError::Syntax {
            line: last,
            message: format!("missing {what}"),
        };
        if !sized {
            return Err(missing("`section` line"));
        }
        let set = GadgetSet {
            name: name.ok_or_else(|| missing("`set name`"))?,
            true_color: true_color.ok_or_else(|| missing("`set true`"))?,
            clause: clause.ok_or_else(|| missing("`set clause`"))?,
            min_sections,
            template: t,
        };
        set.check()?;
        Ok(set)
    }

    pub fn check(&self) -> Result<(), GadgetError> {
        if self.clause.forbidden_color() == self.true_color {
            return Err(GadgetError::Invalid(format!(
                "a {} clause needs true = {}",
                self.clause.as_str(),
                self.true_color.flip()
            )));
        }
        let t = &self.template;
        if t.slot(0, true).is_none() || t.slot(0, false).is_none() {
            return Err(GadgetError::Invalid("a section needs a slot on each side".into()));
        }
        Ok(())
    }

    pub fn to_gdt(&self) -> String {
        let t = &self.template;
        let mut s = String::new();
        writeln!(s, "set name {}", self.name).unwrap();
        writeln!(s, "set true {}", self.true_color).unwrap();
        writeln!(s, "set clause {}", self.clause.as_str()).unwrap();
        writeln!(s, "set min_sections {}", self.min_sections).unwrap();
        writeln!(s, "section {}", t.size).unwrap();
        for (u, v) in &t.inner {
            writeln!(s, "e {u} {v}").unwrap();
        }
        for (u, v) in &t.forward {
            writeln!(s, "e {u} {v}+").unwrap();
        }
        for u in &t.positive {
            writeln!(s, "side {u} x").unwrap();
        }
        for u in &t.negative {
            writeln!(s, "side {u} xbar").unwrap();
        }
        for u in &t.slots {
            writeln!(s, "slot {u}").unwrap();
        }
        for (u, p) in &t.parity {
            writeln!(s, "parity {u} {p}").unwrap();
        }
        for (u, (v, sh)) in &t.mirror {
            writeln!(s, "mirror {u} {v} {sh}").unwrap();
        }
        s
    }

    pub fn instantiate(&self, k: usize) -> Result<(VariableGadget, Option<Vec<usize>>), GadgetError> {
        self.template.instantiate(k, self.true_color)
    }

    /// Ring size and section gap for a variable with `occurrences` uses: the
    /// smallest gap such that slots in sections `0, gap, 2·gap, ...` are
    /// pairwise at distance at least `t` inside the ring of
    /// `max(min_sections, occurrences·gap)` sections.
    pub fn ring_for(&self, occurrences: usize, t: usize) -> Result<(usize, usize), GadgetError> {
        if occurrences <= 1 {
            return Ok((self.min_sections, 1));
        }
        for gap in 1..=MAX_GAP {
            let k = (occurrences * gap).max(self.min_sections);
            let (vg, _) = self.instantiate(k)?;
            let candidates: Vec<Vec<usize>> = (0..occurrences)
                .map(|j| {
                    [true, false]
                        .into_iter()
                        .filter_map(|pos| self.template.slot(j * gap, pos))
                        .collect()
                })
                .collect();
            let far = (0..occurrences).all(|a| {
                candidates[a].iter().all(|&s| {
                    let d = vg.graph.distances_from(s);
                    (0..occurrences)
                        .filter(|&b| b != a)
                        .all(|b| candidates[b].iter().all(|&r| d[r].is_none_or(|x| x >= t)))
                })
            });
            if far {
                return Ok((k, gap));
            }
        }
        Err(GadgetError::Invalid(format!(
            "slots stay closer than {t} with up to {MAX_GAP} sections per use"
        )))
    }

    /// Runs the variable-gadget verifier on every ring the compiler can
    /// produce for at most `max_occurrences` uses at distance `t`.
    pub fn verify(&self, max_occurrences: usize, t: usize, budget: u64) -> Result<Vec<(usize, Verdict)>, GadgetError> {
        let mut sizes: Vec<usize> = (0..=max_occurrences)
            .map(|occ| self.ring_for(occ, t).map(|(k, _)| k))
            .collect::<Result<_, _>>()?;
        sizes.sort_unstable();
        sizes.dedup();
        sizes
            .into_iter()
            .map(|k| {
                let (vg, swap) = self.instantiate(k)?;
                Ok((k, verify_variable_gadget(&vg, swap.as_deref(), budget)?))
            })
            .collect()
    }
}

pub fn default_gadget_set() -> GadgetSet {
    GadgetSet::parse(DEFAULT_GADGET_SET).expect("shipped gadget set parses")
}
