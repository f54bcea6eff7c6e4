use crate::report::{usage, Failure, Report};
use crate::{Format, Role, Settings};
use serde_json::{json, Value};
use std::path::Path;

use bluered_core::construct::{construct, ConstructError, ConstructOptions, Method, Outcome};
use bluered_core::gadgets::{
    build_blue_edge_forcer, build_h4_blue_forcer, build_h9_red_edge_forcer, build_red_forcer, compose_red_to_blue,
    default_gadget_set, verify_blue_forcer, verify_clause_edge_gadget, verify_edge_forcer, verify_red_forcer,
    verify_variable_gadget, Counterexample, EdgeForcer, Forcer, GadgetError, GadgetSet, VariableGadget, Verdict,
};
use bluered_core::graph::{parse_edge_list, to_dot, to_edge_list, Generator};
use bluered_core::reduction::{
    compile, validate_parity, verify_reduction, CnfFormula, ReductionError, ReductionOutput,
};
use bluered_core::solver::{
    encode_cnf, enumerate_partitions, is_valid_edge_partition, is_valid_partition, solve_edge_partition,
    solve_partition, Color, EdgePartition, Partition, SolverError,
};
use bluered_core::structure::{
    check_class_with, girth, planar_verdict, CheckOptions, ClassSpec, StructureError, Witness, DEFAULT_PATTERN_BOUND,
};
use bluered_core::{Edge, Graph};

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| usage(format!("cannot write {}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    parse_edge_list(&read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn join(vs: &[usize]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn pair(e: Edge) -> Value {
    let (u, v) = e.ends();
    json!([u, v])
}

fn show_edges(es: &[Edge]) -> String {
    es.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ")
}

/// Re-validates `p` against `g` and renders it.
fn certified_partition(g: &Graph, p: &Partition) -> Result<(Value, Vec<String>), Failure> {
    match is_valid_partition(g, p) {
        Ok(None) => {}
        Ok(Some(v)) => return Err(Failure::Internal(format!("partition failed re-validation: {v}"))),
        Err(e) => return Err(Failure::Internal(e.to_string())),
    }
    let (blue, red) = (p.blue(), p.red());
    let lines = vec![format!("blue: {}", join(&blue)), format!("red: {}", join(&red))];
    Ok((json!({ "blue": blue, "red": red }), lines))
}

fn edges_of(ep: &EdgePartition, c: Color) -> Vec<Edge> {
    ep.edges()
        .iter()
        .zip(ep.colors())
        .filter(|(_, &k)| k == c)
        .map(|(&e, _)| e)
        .collect()
}

fn certified_edge_partition(g: &Graph, ep: &EdgePartition) -> Result<(Value, Vec<String>), Failure> {
    match is_valid_edge_partition(g, ep) {
        Ok(None) => {}
        Ok(Some(v)) => return Err(Failure::Internal(format!("edge partition failed re-validation: {v}"))),
        Err(e) => return Err(Failure::Internal(e.to_string())),
    }
    let (blue, red) = (edges_of(ep, Color::Blue), edges_of(ep, Color::Red));
    let lines = vec![
        format!("blue: {}", show_edges(&blue)),
        format!("red: {}", show_edges(&red)),
    ];
    let w = json!({
        "blue": blue.iter().map(|&e| pair(e)).collect::<Vec<_>>(),
        "red": red.iter().map(|&e| pair(e)).collect::<Vec<_>>(),
    });
    Ok((w, lines))
}

fn with_lines(mut r: Report, lines: Vec<String>) -> Report {
    r.lines.extend(lines);
    r
}

fn solver_failure(e: SolverError) -> Failure {
    match e {
        SolverError::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
        other => usage(other),
    }
}

pub fn solve(path: &Path) -> Result<Report, Failure> {
    let g = read_graph(path)?;
    match solve_partition(&g) {
        Some(p) => {
            let (w, lines) = certified_partition(&g, &p)?;
            Ok(with_lines(Report::new("YES", w), lines))
        }
        None => Ok(Report::new("NO", Value::Null)),
    }
}

pub fn edge_solve(path: &Path) -> Result<Report, Failure> {
    let g = read_graph(path)?;
    match solve_edge_partition(&g).map_err(solver_failure)? {
        Some(ep) => {
            let (w, lines) = certified_edge_partition(&g, &ep)?;
            Ok(with_lines(Report::new("YES", w), lines))
        }
        None => Ok(Report::new("NO", Value::Null)),
    }
}

pub fn encode(path: &Path, out: Option<&Path>) -> Result<Report, Failure> {
    let g = read_graph(path)?;
    let enc = encode_cnf(&g);
    let dimacs = enc.to_dimacs();
    let mut w = json!({
        "variables": enc.formula.variable_count,
        "clauses": enc.formula.clauses.len(),
    });
    let r = match out {
        Some(o) => {
            write(o, &dimacs)?;
            w["out"] = json!(o.display().to_string());
            Report::new("OK", w).line(format!(
                "wrote {} variables and {} clauses to {}",
                enc.formula.variable_count,
                enc.formula.clauses.len(),
                o.display()
            ))
        }
        None => {
            w["dimacs"] = json!(dimacs);
            Report::new("OK", w).line(dimacs).bare()
        }
    };
    Ok(r)
}

fn structure_failure(e: StructureError) -> Failure {
    match e {
        StructureError::WindowTooLarge { .. } | StructureError::PatternTooLarge { .. } => {
            Failure::Budget(e.to_string())
        }
        other => usage(other),
    }
}

/// The class preset at `t`, or at the smallest `t` it accepts.
fn class_spec(class: &str, t: Option<usize>, max_cycle_len: usize) -> Result<ClassSpec, Failure> {
    if let Some(t) = t {
        return ClassSpec::preset(class, t).map_err(usage);
    }
    let mut last = None;
    for t in 3..=max_cycle_len.max(3) {
        match ClassSpec::preset(class, t) {
            Ok(s) => return Ok(s),
            Err(e) => last = Some(e),
        }
    }
    Err(usage(last.expect("at least one t tried")))
}

fn witness_kind(w: &Witness) -> &'static str {
    match w {
        Witness::Induced { .. } => "induced",
        Witness::Cycle(_) => "cycle",
        Witness::Degree { .. } => "degree",
        Witness::HeavyEdge { .. } => "heavy-edge",
        Witness::NonPlanar(_) => "kuratowski",
    }
}

pub fn classify(path: &Path, class: &str, t: Option<usize>, s: Settings) -> Result<Report, Failure> {
    let g = read_graph(path)?;
    let spec = class_spec(class, t, s.max_cycle_len)?;
    let opts = CheckOptions {
        max_cycle_len: s.max_cycle_len,
        pattern_bound: DEFAULT_PATTERN_BOUND,
    };
    let report = check_class_with(&g, &spec, opts).map_err(structure_failure)?;
    let mut violations = Vec::new();
    let mut lines = Vec::new();
    for v in &report.violations {
        if !v.validate(&g, &spec) {
            return Err(Failure::Internal(format!("witness failed re-validation: {v}")));
        }
        violations.push(json!({
            "constraint": v.constraint,
            "kind": witness_kind(&v.witness),
            "vertices": v.witness.vertices(),
        }));
        lines.push(format!("violates {v}"));
    }
    lines.extend(report.notes.iter().map(|n| format!("note: {n}")));
    let verdict = if report.member { "MEMBER" } else { "NON-MEMBER" };
    let w = json!({
        "class": report.class,
        "t": spec.t,
        "violations": violations,
        "notes": report.notes,
    });
    Ok(with_lines(Report::new(verdict, w), lines))
}

fn construct_failure(e: ConstructError) -> Failure {
    match e {
        ConstructError::Budget { .. } | ConstructError::Solver(SolverError::BudgetExceeded { .. }) => {
            Failure::Budget(e.to_string())
        }
        ConstructError::Structure(s) => structure_failure(s),
        ConstructError::Internal(m) => Failure::Internal(m),
        other => usage(format!("method does not apply: {other}")),
    }
}

pub fn partition(path: &Path, method: &str, k: usize, s: Settings) -> Result<Report, Failure> {
    let g = read_graph(path)?;
    let m: Method = method.parse().map_err(usage)?;
    let opts = ConstructOptions {
        k,
        budget: s.max_states,
    };
    let c = construct(&g, m, opts).map_err(construct_failure)?;
    let used = c.method.as_str();
    let report = match &c.outcome {
        Outcome::Vertex(p) => {
            let (mut w, lines) = certified_partition(&g, p)?;
            w["method"] = json!(used);
            with_lines(Report::new("YES", w).line(format!("method: {used}")), lines)
        }
        Outcome::Edge(ep) => {
            let (mut w, lines) = certified_edge_partition(&g, ep)?;
            w["method"] = json!(used);
            with_lines(Report::new("YES", w).line(format!("method: {used}")), lines)
        }
        Outcome::NotPartitionable => Report::new("NO", json!({ "method": used })).line(format!("method: {used}")),
        Outcome::Inconclusive(why) => Report::new("UNKNOWN", json!({ "method": used, "reason": why }))
            .line(format!("method: {used}"))
            .line(format!("reason: {why}")),
    };
    Ok(report)
}

pub fn stats(path: &Path, count: bool, s: Settings) -> Result<Report, Failure> {
    let g = read_graph(path)?;
    let n = g.vertex_count();
    let (min_deg, max_deg) = if n == 0 {
        (0, 0)
    } else {
        (g.min_degree(), g.max_degree())
    };
    let mut w = json!({
        "vertices": n,
        "edges": g.edge_count(),
        "min_degree": min_deg,
        "max_degree": max_deg,
        "components": g.components().len(),
        "girth": girth(&g),
        "triangles": g.triangles().len(),
        "induced_p3s": g.induced_p3s().len(),
        "planar": planar_verdict(&g),
    });
    let mut r = Report::new("OK", Value::Null)
        .line(format!("vertices: {n}"))
        .line(format!("edges: {}", g.edge_count()))
        .line(format!("degree: {min_deg}..{max_deg}"))
        .line(format!("components: {}", w["components"]))
        .line(format!("girth: {}", girth(&g).map_or("none".into(), |x| x.to_string())))
        .line(format!("triangles: {}", w["triangles"]))
        .line(format!("induced P3s: {}", w["induced_p3s"]))
        .line(format!("planar: {}", w["planar"]));
    if count {
        let e = enumerate_partitions(&g, None, s.max_states).map_err(solver_failure)?;
        for p in &e.partitions {
            certified_partition(&g, p)?;
        }
        w["partitions"] = json!(e.partitions.len());
        r = r.line(format!("partitions: {}", e.partitions.len()));
    }
    r.witness = w;
    Ok(r)
}

fn reduction_failure(e: ReductionError) -> Failure {
    match e {
        ReductionError::TooLarge { .. } => Failure::Budget(e.to_string()),
        ReductionError::Gadget(g) => gadget_failure(g),
        ReductionError::Structure(s) => structure_failure(s),
        other => usage(other),
    }
}

fn provenance_json(out: &ReductionOutput) -> Value {
    let clauses: Vec<Value> = out
        .provenance
        .clauses
        .iter()
        .enumerate()
        .map(|(i, c)| json!({ "clause": i, "literals": c.literals, "vertices": c.vertices }))
        .collect();
    let variables: Vec<Value> = out
        .provenance
        .variables
        .iter()
        .map(|v| {
            json!({
                "variable": v.var,
                "offset": v.offset,
                "size": v.size,
                "sections": v.sections,
                "gap": v.gap,
                "positive": v.positive,
                "negative": v.negative,
                "used": v.used.iter().map(|&(c, s)| json!({ "clause": c, "slot": s })).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "gadget_set": out.gadget_set,
        "t": out.t,
        "true_color": out.true_color.as_str(),
        "clause_shape": out.clause_shape.as_str(),
        "clauses": clauses,
        "variables": variables,
        "parity": out.parity.iter().map(|(&v, &p)| json!([v, p])).collect::<Vec<_>>(),
    })
}

fn load_set(path: Option<&Path>) -> Result<GadgetSet, Failure> {
    match path {
        Some(p) => GadgetSet::parse(&read(p)?).map_err(|e| usage(format!("{}: {e}", p.display()))),
        None => Ok(default_gadget_set()),
    }
}

pub fn reduce(
    cnf: &Path,
    gadgets: Option<&Path>,
    t: usize,
    out_path: Option<&Path>,
    provenance: Option<&Path>,
    verify: bool,
    s: Settings,
) -> Result<Report, Failure> {
    let f = CnfFormula::parse_dimacs(&read(cnf)?).map_err(|e| usage(format!("{}: {e}", cnf.display())))?;
    let set = load_set(gadgets)?;
    let out = compile(&f, &set, t).map_err(reduction_failure)?;
    let g = &out.graph;
    let el = to_edge_list(g);
    let prov = provenance_json(&out);
    let planar = planar_verdict(g);
    let mut w = json!({
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "variables": f.variable_count,
        "clauses": f.clauses.len(),
        "t": t,
        "gadget_set": out.gadget_set,
        "planar": planar,
    });
    let mut lines = vec![
        format!(
            "graph: {} vertices, {} edges ({} set, t = {t})",
            g.vertex_count(),
            g.edge_count(),
            out.gadget_set
        ),
        format!("planar: {planar}"),
    ];
    match out_path {
        Some(p) => {
            write(p, &el)?;
            lines.push(format!("wrote graph to {}", p.display()));
        }
        None => w["graph"] = json!(el),
    }
    match provenance {
        Some(p) => {
            let text = serde_json::to_string_pretty(&prov).expect("json values serialize") + "\n";
            write(p, &text)?;
            lines.push(format!("wrote provenance to {}", p.display()));
        }
        None => w["provenance"] = prov,
    }
    let mut verdict = "OK";
    if verify {
        let check = verify_reduction(&f, &out).map_err(reduction_failure)?;
        let parity = validate_parity(&out, s.max_cycle_len).map_err(reduction_failure)?;
        // the decoded assignment is re-evaluated here rather than trusted
        let decoded_ok = check.decoded.as_ref().map(|a| f.evaluate(a));
        let pass = check.pass && parity.pass && decoded_ok.unwrap_or(true);
        verdict = if pass { "PASS" } else { "FAIL" };
        lines.push(format!(
            "satisfiable: {}, partitionable: {}",
            check.satisfiable, check.partitionable
        ));
        if let Some(a) = &check.decoded {
            let lits: Vec<String> = a
                .iter()
                .enumerate()
                .map(|(i, &b)| if b { format!("{}", i + 1) } else { format!("-{}", i + 1) })
                .collect();
            lines.push(format!("decoded: {}", lits.join(" ")));
        }
        lines.extend(check.structure_errors.iter().map(|e| format!("structure: {e}")));
        if let Some(wn) = &parity.warning {
            lines.push(format!("parity: {wn}"));
        }
        w["check"] = json!({
            "satisfiable": check.satisfiable,
            "partitionable": check.partitionable,
            "decoded": check.decoded,
            "decoded_satisfies": decoded_ok,
            "structure_errors": check.structure_errors,
            "parity": {
                "pass": parity.pass,
                "bad_triple": parity.bad_triple,
                "odd_hole": parity.odd_hole,
                "warning": parity.warning,
            },
        });
    }
    let mut r = with_lines(Report::new(verdict, w), lines);
    if out_path.is_none() && !verify {
        // the graph itself is the output
        r = Report {
            lines: vec![el],
            bare: true,
            ..r
        };
    }
    Ok(r)
}

fn gadget_failure(e: GadgetError) -> Failure {
    match e {
        GadgetError::Budget { .. } => Failure::Budget(e.to_string()),
        other => usage(other),
    }
}

/// Renders a verifier verdict, re-checking any counterexample partition.
fn verdict_report(g: &Graph, v: &Verdict) -> Result<Report, Failure> {
    let cx = match &v.counterexample {
        None => Value::Null,
        Some(Counterexample::Partition(p)) => {
            let (mut w, _) = certified_partition(g, p)?;
            w["kind"] = json!("partition");
            w
        }
        Some(Counterexample::EdgePartition(ep)) => {
            let (mut w, _) = certified_edge_partition(g, ep)?;
            w["kind"] = json!("edge-partition");
            w
        }
        Some(Counterexample::LiteralPattern(fixed)) => json!({
            "kind": "literal-pattern",
            "edges": fixed.iter().map(|&(e, c)| {
                let (a, b) = e.ends();
                json!([a, b, c.as_str()])
            }).collect::<Vec<_>>(),
        }),
        Some(Counterexample::BlueAdjacency(e, f)) => json!({
            "kind": "blue-adjacency",
            "edges": [pair(*e), pair(*f)],
        }),
    };
    let mut r = Report::new(
        if v.pass { "PASS" } else { "FAIL" },
        json!({
            "failed": v.failed,
            "partitions": v.partitions,
            "counterexample": cx,
        }),
    );
    if let Some(f) = &v.failed {
        r = r.line(format!("failed: {f}"));
    }
    if let Some(n) = v.partitions {
        r = r.line(format!("partitions inspected: {n}"));
    }
    if !cx.is_null() {
        r = r.line(format!("counterexample: {cx}"));
    }
    Ok(r)
}

/// Literal edges join the two vertices sharing a `lit` annotation value. A
/// vertex on several literal edges lists their names separated by commas.
fn literal_edges(g: &Graph) -> Result<[Edge; 3], Failure> {
    let mut groups: std::collections::BTreeMap<&str, Vec<usize>> = Default::default();
    for v in g.vertices() {
        for l in g.annotation(v, "lit").into_iter().flat_map(|l| l.split(',')) {
            groups.entry(l).or_default().push(v);
        }
    }
    let edges: Vec<Edge> = groups
        .iter()
        .map(|(l, vs)| match vs[..] {
            [a, b] if g.has_edge(a, b) => Ok(Edge::new(a, b)),
            _ => Err(usage(format!("`lit {l}` must mark the two ends of one edge"))),
        })
        .collect::<Result<_, _>>()?;
    edges
        .try_into()
        .map_err(|e: Vec<Edge>| usage(format!("expected 3 literal edges, found {}", e.len())))
}

pub fn verify_gadget(
    role: Option<Role>,
    graph: Option<&Path>,
    gadgets: Option<&Path>,
    t: usize,
    max_occurrences: usize,
    s: Settings,
) -> Result<Report, Failure> {
    let budget = s.max_states;
    if let Some(p) = gadgets {
        if !matches!(role, None | Some(Role::Variable)) || graph.is_some() {
            return Err(usage("--gadgets verifies variable rings and takes no --graph"));
        }
        let set = load_set(Some(p))?;
        let rings = set.verify(max_occurrences, t, budget).map_err(gadget_failure)?;
        let pass = rings.iter().all(|(_, v)| v.pass);
        let mut r = Report::new(
            if pass { "PASS" } else { "FAIL" },
            json!({
                "set": set.name,
                "rings": rings.iter().map(|(k, v)| json!({
                    "sections": k,
                    "pass": v.pass,
                    "failed": v.failed,
                })).collect::<Vec<_>>(),
            }),
        );
        for (k, v) in &rings {
            let status = match &v.failed {
                None => "pass".to_string(),
                Some(f) => format!("fail: {f}"),
            };
            r = r.line(format!("{k} sections: {status}"));
        }
        return Ok(r);
    }
    let (Some(role), Some(path)) = (role, graph) else {
        return Err(usage("verify-gadget needs --role and --graph, or --gadgets"));
    };
    let g = read_graph(path)?;
    let v = match role {
        Role::RedForcer | Role::BlueForcer => {
            let want = if role == Role::RedForcer {
                Color::Red
            } else {
                Color::Blue
            };
            let f = Forcer::from_annotated(g.clone(), want).map_err(gadget_failure)?;
            if f.claimed != want {
                return Err(usage(format!("gadget claims {} but the role is {want}", f.claimed)));
            }
            if want == Color::Red {
                verify_red_forcer(&f, budget)
            } else {
                verify_blue_forcer(&f, budget)
            }
        }
        Role::Variable => {
            let vg = VariableGadget::from_annotated(g.clone()).map_err(gadget_failure)?;
            verify_variable_gadget(&vg, None, budget)
        }
        Role::EdgeForcer => {
            let f = EdgeForcer::from_annotated(g.clone(), Color::Red).map_err(gadget_failure)?;
            verify_edge_forcer(&f)
        }
        Role::ClauseEdge => verify_clause_edge_gadget(&g, &literal_edges(&g)?),
    }
    .map_err(gadget_failure)?;
    verdict_report(&g, &v)
}

fn param(params: &[u64], i: usize, default: u64) -> usize {
    params.get(i).copied().unwrap_or(default) as usize
}

/// Built-in gadgets, annotated so `verify-gadget` can read them back.
fn builtin(name: &str, params: &[u64], s: Settings) -> Option<Result<Graph, Failure>> {
    let g = match name {
        "red-forcer" => Ok(build_red_forcer().to_annotated()),
        "h4-blue-forcer" => Ok(build_h4_blue_forcer().to_annotated()),
        "composed-blue-forcer" => {
            let r = build_red_forcer();
            compose_red_to_blue(&r, &r, s.max_states)
                .map(|f| f.to_annotated())
                .map_err(gadget_failure)
        }
        "h9-edge-forcer" => build_h9_red_edge_forcer(param(params, 0, 5))
            .map(|f| f.to_annotated())
            .map_err(gadget_failure),
        "blue-edge-forcer" => build_h9_red_edge_forcer(param(params, 0, 5))
            .and_then(|r| build_blue_edge_forcer(&r))
            .map(|f| f.to_annotated())
            .map_err(gadget_failure),
        "variable-gadget" => {
            let set = default_gadget_set();
            set.instantiate(param(params, 0, set.min_sections as u64))
                .map(|(vg, _)| vg.to_annotated())
                .map_err(gadget_failure)
        }
        _ => return None,
    };
    Some(g)
}

pub fn gen(name: &str, params: &[u64], out: Option<&Path>, format: Format, s: Settings) -> Result<Report, Failure> {
    let g = match builtin(name, params, s) {
        Some(g) => g?,
        None => {
            // randomized generators take their seed from --seed unless given
            let mut p = params.to_vec();
            let seed = s.seed.unwrap_or(0);
            match (name, p.len()) {
                ("random", 2) | ("four_regular_girth", 1) | ("four_regular_girth", 2) => p.push(seed),
                _ => {}
            }
            Generator::parse(name, &p).and_then(|gen| gen.build()).map_err(usage)?
        }
    };
    let text = match format {
        Format::El => to_edge_list(&g),
        Format::Dot => to_dot(&g),
    };
    let mut w = json!({ "vertices": g.vertex_count(), "edges": g.edge_count() });
    let r = match out {
        Some(p) => {
            write(p, &text)?;
            w["out"] = json!(p.display().to_string());
            Report::new("OK", w).line(format!(
                "wrote {} vertices and {} edges to {}",
                g.vertex_count(),
                g.edge_count(),
                p.display()
            ))
        }
        None => {
            w["graph"] = json!(text);
            Report::new("OK", w).line(text).bare()
        }
    };
    Ok(r)
}
