use super::{Graph, GraphError};
use crate::structure::girth;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;
use std::str::FromStr;

/// Small named graphs from the standard catalog.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum PatternName {
    Paw,
    Bull,
    Net,
    Butterfly,
    Diamond,
    Gem,
    House,
    Claw,
}

impl PatternName {
    pub const ALL: [PatternName; 8] = [
        PatternName::Paw,
        PatternName::Bull,
        PatternName::Net,
        PatternName::Butterfly,
        PatternName::Diamond,
        PatternName::Gem,
        PatternName::House,
        PatternName::Claw,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PatternName::Paw => "paw",
            PatternName::Bull => "bull",
            PatternName::Net => "net",
            PatternName::Butterfly => "butterfly",
            PatternName::Diamond => "diamond",
            PatternName::Gem => "gem",
            PatternName::House => "house",
            PatternName::Claw => "claw",
        }
    }
}

impl fmt::Display for PatternName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PatternName {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "paw" => PatternName::Paw,
            "bull" => PatternName::Bull,
            "net" => PatternName::Net,
            "butterfly" => PatternName::Butterfly,
            "diamond" | "k4-" | "k4minus" => PatternName::Diamond,
            "gem" => PatternName::Gem,
            "house" => PatternName::House,
            "claw" | "k13" | "k1,3" => PatternName::Claw,
            other => return Err(GraphError::Generator(format!("unknown pattern {other:?}"))),
        })
    }
}

pub fn pattern(name: PatternName) -> Graph {
    let edges: &[(usize, usize)] = match name {
        PatternName::Paw => &[(0, 1), (1, 2), (0, 2), (0, 3)],
        PatternName::Bull => &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)],
        PatternName::Net => &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)],
        PatternName::Butterfly => &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)],
        PatternName::Diamond => &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)],
        PatternName::Gem => &[(1, 2), (2, 3), (3, 4), (0, 1), (0, 2), (0, 3), (0, 4)],
        PatternName::House => &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 4)],
        PatternName::Claw => &[(0, 1), (0, 2), (0, 3)],
    };
    let n = edges.iter().map(|&(u, v)| u.max(v)).max().unwrap() + 1;
    Graph::from_edges(n, edges.iter().copied()).expect("catalog pattern")
}

/// A named graph family with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generator {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteMultipartite(Vec<usize>),
    /// `K_{1,n}`.
    Star(usize),
    ComplementOfCycle(usize),
    Pattern(PatternName),
    Petersen,
    FourRegularGirth {
        girth: usize,
        vertices: Option<usize>,
        seed: u64,
    },
    Random {
        vertices: usize,
        edges: usize,
        seed: u64,
    },
}

impl Generator {
    /// Parses a generator id and its integer parameters, e.g.
    /// `("cycle", [7])` or `("random", [10, 15, 42])`.
    pub fn parse(name: &str, params: &[u64]) -> Result<Self, GraphError> {
        let need = |k: usize| -> Result<(), GraphError> {
            if params.len() == k {
                Ok(())
            } else {
                Err(GraphError::Generator(format!(
                    "{name} takes {k} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        let p = |i: usize| params[i] as usize;
        let name_lc = name.to_ascii_lowercase();
        Ok(match name_lc.as_str() {
            "path" => {
                need(1)?;
                Generator::Path(p(0))
            }
            "cycle" => {
                need(1)?;
                Generator::Cycle(p(0))
            }
            "complete" => {
                need(1)?;
                Generator::Complete(p(0))
            }
            "complete_multipartite" | "multipartite" => {
                Generator::CompleteMultipartite(params.iter().map(|&x| x as usize).collect())
            }
            "star" => {
                need(1)?;
                Generator::Star(p(0))
            }
            "complement_of_cycle" => {
                need(1)?;
                Generator::ComplementOfCycle(p(0))
            }
            "petersen" => {
                need(0)?;
                Generator::Petersen
            }
            "four_regular_girth" => match params.len() {
                1 => Generator::FourRegularGirth {
                    girth: p(0),
                    vertices: None,
                    seed: 0,
                },
                2 => Generator::FourRegularGirth {
                    girth: p(0),
                    vertices: None,
                    seed: params[1],
                },
                3 => Generator::FourRegularGirth {
                    girth: p(0),
                    vertices: Some(p(1)),
                    seed: params[2],
                },
                _ => {
                    return Err(GraphError::Generator(
                        "four_regular_girth takes girth [vertices] [seed]".into(),
                    ))
                }
            },
            "random" => {
                need(3)?;
                Generator::Random {
                    vertices: p(0),
                    edges: p(1),
                    seed: params[2],
                }
            }
            other => match other.strip_prefix("pattern:") {
                Some(pat) => Generator::Pattern(pat.parse()?),
                None => match other.parse::<PatternName>() {
                    Ok(pat) if params.is_empty() => Generator::Pattern(pat),
                    _ => return Err(GraphError::Generator(format!("unknown generator {name:?}"))),
                },
            },
        })
    }

    pub fn build(&self) -> Result<Graph, GraphError> {
        match *self {
            Generator::Path(n) => Graph::from_edges(n, (1..n).map(|i| (i - 1, i))),
            Generator::Cycle(n) => {
                if n < 3 {
                    return Err(GraphError::Generator(format!("cycle needs n >= 3, got {n}")));
                }
                Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
            }
            Generator::Complete(n) => Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))),
            Generator::CompleteMultipartite(ref parts) => Ok(complete_multipartite(parts)),
            Generator::Star(n) => Graph::from_edges(n + 1, (1..=n).map(|i| (0, i))),
            Generator::ComplementOfCycle(n) => {
                if n < 3 {
                    return Err(GraphError::Generator(format!(
                        "complement_of_cycle needs n >= 3, got {n}"
                    )));
                }
                let mut g = Graph::new(n);
                for u in 0..n {
                    for v in u + 1..n {
                        let d = (v - u).min(n - (v - u));
                        if d >= 2 {
                            g.add_edge(u, v)?;
                        }
                    }
                }
                Ok(g)
            }
            Generator::Pattern(p) => Ok(pattern(p)),
            Generator::Petersen => {
                let mut edges = Vec::new();
                for i in 0..5 {
                    edges.push((i, (i + 1) % 5));
                    edges.push((i, i + 5));
                    edges.push((5 + i, 5 + (i + 2) % 5));
                }
                Graph::from_edges(10, edges)
            }
            Generator::FourRegularGirth { girth, vertices, seed } => four_regular_with_girth(girth, vertices, seed),
            Generator::Random { vertices, edges, seed } => random_graph(vertices, edges, seed),
        }
    }
}

pub fn generate(name: &str, params: &[u64]) -> Result<Graph, GraphError> {
    Generator::parse(name, params)?.build()
}

fn complete_multipartite(parts: &[usize]) -> Graph {
    let n: usize = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (i, &s) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, s));
    }
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                g.add_edge(u, v).expect("multipartite edge");
            }
        }
    }
    g
}

fn random_graph(n: usize, m: usize, seed: u64) -> Result<Graph, GraphError> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    if m > pairs.len() {
        return Err(GraphError::Generator(format!(
            "random graph on {n} vertices has at most {} edges, asked for {m}",
            pairs.len()
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let chosen = rand::seq::index::sample(&mut rng, pairs.len(), m);
    Graph::from_edges(n, chosen.into_iter().map(|i| pairs[i]))
}

/// Smallest order of a 4-regular graph with the given girth.
fn moore_bound(girth: usize) -> usize {
    let k = girth / 2;
    let geometric: usize = (0..k).map(|i| 3usize.pow(i as u32)).sum();
    if girth % 2 == 1 {
        1 + 4 * geometric
    } else {
        2 * geometric
    }
}

const RANDOM_ATTEMPTS: usize = 60;
const GROWTH_ROUNDS: usize = 6;

/// A 4-regular graph whose girth is at least `girth`.
///
/// Girths up to 6 come from a fixed table (K5, K4,4, the Robertson graph and
/// the incidence graph of the projective plane of order 3). Larger girths
/// are sampled by a seeded greedy process that only joins vertices at
/// distance at least `girth - 1`; the result is re-checked before it is
/// returned.
pub fn four_regular_with_girth(girth: usize, vertices: Option<usize>, seed: u64) -> Result<Graph, GraphError> {
    if vertices.is_none() {
        if let Some(g) = cage_table(girth) {
            return Ok(g);
        }
    }
    let lower = moore_bound(girth.max(3)).max(5);
    let sizes: Vec<usize> = match vertices {
        Some(n) if n < lower => {
            return Err(GraphError::Generator(format!(
                "no 4-regular graph of girth {girth} on {n} vertices (need at least {lower})"
            )))
        }
        Some(n) => vec![n],
        None => {
            let mut n = 2 * lower;
            (0..GROWTH_ROUNDS)
                .map(|_| {
                    let cur = n;
                    n += n / 2;
                    cur
                })
                .collect()
        }
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for &n in &sizes {
        for _ in 0..RANDOM_ATTEMPTS {
            if let Some(g) = greedy_regular(n, 4, girth, &mut rng) {
                if girth_at_least(&g, girth) {
                    return Ok(g);
                }
            }
        }
    }
    Err(GraphError::Generator(format!(
        "no 4-regular graph of girth >= {girth} found (tried orders {sizes:?})"
    )))
}

fn girth_at_least(g: &Graph, target: usize) -> bool {
    girth(g).is_none_or(|c| c >= target)
}

fn cage_table(girth: usize) -> Option<Graph> {
    match girth {
        0..=3 => Generator::Complete(5).build().ok(),
        4 => Some(complete_multipartite(&[4, 4])),
        5 => {
            const LCF: [usize; 19] = [8, 4, 7, 4, 8, 5, 7, 4, 7, 8, 4, 5, 7, 8, 4, 8, 4, 8, 4];
            let mut g = Graph::new(19);
            for (i, &jump) in LCF.iter().enumerate() {
                g.add_edge(i, (i + 1) % 19).ok()?;
                g.add_edge(i, (i + jump) % 19).ok()?;
            }
            Some(g)
        }
        6 => {
            // points 0..13, lines 13..26; line j = {j, j+1, j+3, j+9} mod 13
            let mut g = Graph::new(26);
            for j in 0..13 {
                for d in [0, 1, 3, 9] {
                    g.add_edge((j + d) % 13, 13 + j).ok()?;
                }
            }
            Some(g)
        }
        _ => None,
    }
}

fn greedy_regular(n: usize, degree: usize, girth: usize, rng: &mut ChaCha8Rng) -> Option<Graph> {
    let mut g = Graph::new(n);
    let mut open: Vec<usize> = (0..n).collect();
    while !open.is_empty() {
        let i = rng.gen_range(0..open.len());
        let u = open[i];
        let dist = g.distances_from(u);
        let mut candidates: Vec<usize> = open
            .iter()
            .copied()
            .filter(|&v| v != u && dist[v].is_none_or(|d| d + 1 >= girth))
            .collect();
        if candidates.is_empty() {
            return None;
        }
        candidates.shuffle(rng);
        let v = candidates[0];
        g.add_edge(u, v).ok()?;
        open.retain(|&w| g.degree(w) < degree);
    }
    Some(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_of_c7() {
        let g = generate("complement_of_cycle", &[7]).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (7, 14));
        assert!(g.vertices().all(|v| g.degree(v) == 4));
        assert!(g.has_edge(0, 2) && g.has_edge(0, 3) && !g.has_edge(0, 1));
    }

    #[test]
    fn pattern_sizes() {
        let sizes: Vec<_> = PatternName::ALL
            .iter()
            .map(|&p| {
                let g = pattern(p);
                (p.as_str(), g.vertex_count(), g.edge_count())
            })
            .collect();
        assert_eq!(
            sizes,
            vec![
                ("paw", 4, 4),
                ("bull", 5, 5),
                ("net", 6, 6),
                ("butterfly", 5, 6),
                ("diamond", 4, 5),
                ("gem", 5, 7),
                ("house", 5, 6),
                ("claw", 4, 3),
            ]
        );
    }

    #[test]
    fn cage_table_is_four_regular_with_girth() {
        for g_target in 3..=6 {
            let g = four_regular_with_girth(g_target, None, 0).unwrap();
            assert!(g.vertices().all(|v| g.degree(v) == 4));
            assert_eq!(girth(&g), Some(g_target));
        }
        assert_eq!(four_regular_with_girth(5, None, 0).unwrap().vertex_count(), 19);
        assert_eq!(four_regular_with_girth(6, None, 0).unwrap().vertex_count(), 26);
    }

    #[test]
    fn random_four_regular_girth_7() {
        let g = four_regular_with_girth(7, None, 3).unwrap();
        assert!(g.vertices().all(|v| g.degree(v) == 4));
        assert!(girth(&g).unwrap() >= 7);
        assert_eq!(g, four_regular_with_girth(7, None, 3).unwrap());
    }

    #[test]
    fn infeasible_four_regular_order() {
        assert!(four_regular_with_girth(5, Some(10), 0).is_err());
    }

    #[test]
    fn random_is_seeded() {
        let a = generate("random", &[10, 20, 7]).unwrap();
        let b = generate("random", &[10, 20, 7]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.edge_count(), 20);
        assert!(generate("random", &[4, 7, 0]).is_err());
    }

    #[test]
    fn parse_errors() {
        assert!(generate("nope", &[]).is_err());
        assert!(generate("cycle", &[]).is_err());
        assert!(generate("cycle", &[2]).is_err());
        assert_eq!(generate("pattern:net", &[]).unwrap().edge_count(), 6);
    }

    #[test]
    fn petersen_shape() {
        let g = generate("petersen", &[]).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (10, 15));
        assert!(g.vertices().all(|v| g.degree(v) == 3));
    }
}
