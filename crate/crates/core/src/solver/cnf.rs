use super::{Color, Partition};
use crate::graph::Graph;
use std::fmt::Write;
use thiserror::Error;

/// Clauses in DIMACS convention: literal `k > 0` is variable `k`, `-k` its
/// negation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CnfFormula {
    pub variable_count: usize,
    pub clauses: Vec<Vec<i32>>,
    /// Optional display names, `names[k - 1]` for variable `k`.
    pub names: Vec<String>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CnfError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("clause {clause}: literal {literal} out of range 1..={vars}")]
    LiteralOutOfRange { clause: usize, literal: i32, vars: usize },
    #[error("clause {clause} contains both {var} and -{var}")]
    Tautology { clause: usize, var: usize },
}

impl CnfFormula {
    pub fn new(variable_count: usize, clauses: Vec<Vec<i32>>) -> Self {
        CnfFormula {
            variable_count,
            clauses,
            names: Vec::new(),
        }
    }

    pub fn name(&self, var: usize) -> String {
        self.names.get(var - 1).cloned().unwrap_or_else(|| format!("x{var}"))
    }

    /// No literal out of range and no clause holding a literal and its
    /// negation.
    pub fn check(&self) -> Result<(), CnfError> {
        for (ci, c) in self.clauses.iter().enumerate() {
            for &l in c {
                if l == 0 || l.unsigned_abs() as usize > self.variable_count {
                    return Err(CnfError::LiteralOutOfRange {
                        clause: ci,
                        literal: l,
                        vars: self.variable_count,
                    });
                }
                if c.contains(&-l) {
                    return Err(CnfError::Tautology {
                        clause: ci,
                        var: l.unsigned_abs() as usize,
                    });
                }
            }
        }
        Ok(())
    }

    /// Number of clauses mentioning each variable, indexed from 1.
    pub fn occurrences(&self) -> Vec<usize> {
        let mut occ = vec![0; self.variable_count + 1];
        for c in &self.clauses {
            let mut vars: Vec<usize> = c.iter().map(|l| l.unsigned_abs() as usize).collect();
            vars.sort_unstable();
            vars.dedup();
            for v in vars {
                if v <= self.variable_count {
                    occ[v] += 1;
                }
            }
        }
        occ
    }

    /// `assignment[k - 1]` is the value of variable `k`.
    pub fn evaluate(&self, assignment: &[bool]) -> bool {
        self.clauses
            .iter()
            .all(|c| c.iter().any(|&l| assignment[l.unsigned_abs() as usize - 1] == (l > 0)))
    }

    /// Lexicographically first model by exhaustive search.
    pub fn brute_force_model(&self) -> Option<Vec<bool>> {
        let n = self.variable_count;
        assert!(n <= 30, "brute force limited to 30 variables");
        (0u64..1 << n)
            .map(|mask| (0..n).map(|i| mask >> (n - 1 - i) & 1 == 1).collect::<Vec<_>>())
            .find(|a| self.evaluate(a))
    }

    pub fn to_dimacs(&self) -> String {
        let mut s = format!("p cnf {} {}\n", self.variable_count, self.clauses.len());
        for c in &self.clauses {
            for l in c {
                write!(s, "{l} ").unwrap();
            }
            s.push_str("0\n");
        }
        s
    }

    pub fn parse_dimacs(text: &str) -> Result<CnfFormula, CnfError> {
        let mut header: Option<(usize, usize)> = None;
        let mut clauses = Vec::new();
        let mut current: Vec<i32> = Vec::new();
        let mut last_line = 0;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            last_line = line;
            let t = raw.trim();
            if t.is_empty() || t.starts_with('c') || t.starts_with('%') {
                continue;
            }
            let syntax = |message: String| CnfError::Syntax { line, message };
            if t.starts_with('p') {
                let parts: Vec<&str> = t.split_whitespace().collect();
                if header.is_some() {
                    return Err(syntax("duplicate header".into()));
                }
                if parts.len() != 4 || parts[1] != "cnf" {
                    return Err(syntax(format!("expected `p cnf <vars> <clauses>`, got {t:?}")));
                }
                let vars = parts[2]
                    .parse()
                    .map_err(|_| syntax(format!("bad variable count {:?}", parts[2])))?;
                let count = parts[3]
                    .parse()
                    .map_err(|_| syntax(format!("bad clause count {:?}", parts[3])))?;
                header = Some((vars, count));
                continue;
            }
            let Some((vars, _)) = header else {
                return Err(syntax("clause before header".into()));
            };
            for tok in t.split_whitespace() {
                let l: i32 = tok.parse().map_err(|_| syntax(format!("bad literal {tok:?}")))?;
                if l == 0 {
                    clauses.push(std::mem::take(&mut current));
                } else if l.unsigned_abs() as usize > vars {
                    return Err(syntax(format!("literal {l} exceeds {vars} variables")));
                } else {
                    current.push(l);
                }
            }
        }
        let Some((vars, count)) = header else {
            return Err(CnfError::Syntax {
                line: last_line,
                message: "missing header".into(),
            });
        };
        if !current.is_empty() {
            return Err(CnfError::Syntax {
                line: last_line,
                message: "last clause is not terminated by 0".into(),
            });
        }
        if clauses.len() != count {
            return Err(CnfError::Syntax {
                line: last_line,
                message: format!("header announces {count} clauses, found {}", clauses.len()),
            });
        }
        Ok(CnfFormula::new(vars, clauses))
    }
}

/// Formula with one variable per vertex (`true` = red), and the map from
/// vertices to variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfEncoding {
    pub formula: CnfFormula,
    pub var_of: Vec<usize>,
}

impl CnfEncoding {
    pub fn to_dimacs(&self) -> String {
        let mut s = String::new();
        for (v, var) in self.var_of.iter().enumerate() {
            writeln!(s, "c v {v} {var}").unwrap();
        }
        s + &self.formula.to_dimacs()
    }

    pub fn decode(&self, model: &[bool]) -> Partition {
        Partition::new(
            self.var_of
                .iter()
                .map(|&var| if model[var - 1] { Color::Red } else { Color::Blue })
                .collect(),
        )
    }
}

/// Induced P3 `{u,v,w}` gives `(r_u | r_v | r_w)`, a triangle gives
/// `(-r_u | -r_v | -r_w)`.
pub fn encode_cnf(g: &Graph) -> CnfEncoding {
    let var = |v: usize| v as i32 + 1;
    let mut clauses = Vec::new();
    for [a, m, b] in g.induced_p3s() {
        clauses.push(vec![var(a), var(m), var(b)]);
    }
    for [a, b, c] in g.triangles() {
        clauses.push(vec![-var(a), -var(b), -var(c)]);
    }
    let mut formula = CnfFormula::new(g.vertex_count(), clauses);
    formula.names = g.vertices().map(|v| format!("r{v}")).collect();
    CnfEncoding {
        formula,
        var_of: g.vertices().map(|v| v + 1).collect(),
    }
}
