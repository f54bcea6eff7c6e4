//! Edge-list text format and DOT export.
//!
//! ```text
//! c optional comment
//! p <vertices> <edges>
//! e <u> <v>
//! a <v> <key> <value>
//! ```
//!
//! Vertices are 0-based. `a` lines carry vertex annotations and may appear
//! anywhere after the header.

use super::{Graph, GraphError};
use std::fmt::Write;

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut graph: Option<Graph> = None;
    let mut declared_edges = 0usize;
    let mut seen_edges = 0usize;
    let err = |line: usize, message: String| GraphError::Parse { line, message };

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let tag = parts.next().unwrap();
        let mut number = |what: &str| -> Result<usize, GraphError> {
            let tok = parts.next().ok_or_else(|| err(line_no, format!("missing {what}")))?;
            tok.parse::<usize>()
                .map_err(|_| err(line_no, format!("invalid {what} {tok:?}")))
        };
        match tag {
            "p" => {
                if graph.is_some() {
                    return Err(err(line_no, "duplicate header".into()));
                }
                let n = number("vertex count")?;
                declared_edges = number("edge count")?;
                graph = Some(Graph::new(n));
            }
            "e" => {
                let g = graph
                    .as_mut()
                    .ok_or_else(|| err(line_no, "edge before header".into()))?;
                let u = number("vertex")?;
                let v = number("vertex")?;
                g.add_edge(u, v).map_err(|e| err(line_no, e.to_string()))?;
                seen_edges += 1;
            }
            "a" => {
                let g = graph
                    .as_mut()
                    .ok_or_else(|| err(line_no, "annotation before header".into()))?;
                let v = number("vertex")?;
                if v >= g.vertex_count() {
                    return Err(err(
                        line_no,
                        format!("vertex {v} out of range (graph has {} vertices)", g.vertex_count()),
                    ));
                }
                let key = parts
                    .next()
                    .ok_or_else(|| err(line_no, "missing annotation key".into()))?;
                let value: Vec<&str> = parts.by_ref().collect();
                if value.is_empty() {
                    return Err(err(line_no, "missing annotation value".into()));
                }
                g.annotate(v, key, value.join(" "));
                continue;
            }
            other => return Err(err(line_no, format!("unknown line type {other:?}"))),
        }
        if parts.next().is_some() {
            return Err(err(line_no, "trailing tokens".into()));
        }
    }
    let graph = graph.ok_or_else(|| err(0, "missing header line \"p <n> <m>\"".into()))?;
    if seen_edges != declared_edges {
        return Err(err(
            0,
            format!("header declares {declared_edges} edge lines, found {seen_edges}"),
        ));
    }
    Ok(graph)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p {} {}", g.vertex_count(), g.edge_count()).unwrap();
    for e in g.edges() {
        let (u, v) = e.ends();
        writeln!(out, "e {u} {v}").unwrap();
    }
    for (v, ann) in g.annotations() {
        for (k, val) in ann {
            writeln!(out, "a {v} {k} {val}").unwrap();
        }
    }
    out
}

/// Graphviz rendering; annotations become node labels.
pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        match g.annotations().get(&v) {
            Some(ann) if !ann.is_empty() => {
                let label: Vec<String> = ann.iter().map(|(k, val)| format!("{k}={val}")).collect();
                let label = format!("{v}\\n{}", label.join("\\n")).replace('"', "\\\"");
                writeln!(out, "  {v} [label=\"{label}\"];").unwrap();
            }
            _ => writeln!(out, "  {v};").unwrap(),
        }
    }
    for e in g.edges() {
        let (u, v) = e.ends();
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}
