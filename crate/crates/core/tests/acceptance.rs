//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//! Every oracle here is written independently of the library code it checks.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use bluered_core::construct::{
    edge_partition_deg42, edge_partition_planar_girth11, partition_diamond_house_net_free, partition_kkbar_free,
    partition_max_degree_3, ramsey_k3,
};
use bluered_core::gadgets::{
    build_h4_blue_forcer, build_h9_red_edge_forcer, default_gadget_set, verify_blue_forcer, verify_edge_forcer,
};
use bluered_core::graph::{generate, pattern, PatternName};
use bluered_core::reduction::{compile, fixture_corpus, verify_reduction, DEFAULT_T};
use bluered_core::solver::{
    enumerate_edge_partitions, enumerate_partitions, is_valid_edge_partition, partition_is_valid, solve_edge_partition,
    solve_partition, Color, Partition, DEFAULT_STATE_BUDGET,
};
use bluered_core::structure::enumerate::graphs_up_to;
use bluered_core::structure::{check_class, contains_induced, girth, is_induced_embedding, is_planar, ClassSpec};
use bluered_core::Graph;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("solver agrees with brute force", solver_oracle),
        ("co-C7 has exactly the seven consecutive-triple partitions", co_c7),
        ("h4 blue forcer", h4_forcer),
        ("edge partitions match line-graph partitions", line_graphs),
        ("degree-(4,2) edge partitions", deg42),
        ("max degree 3 graphs are partitionable", max_degree_3),
        ("(diamond, house, net)-free construction", p3_construction),
        ("graphs without independent 3-sets", kkbar_free),
        ("reduction end to end", reduction),
        ("structure analyzers", structure),
        ("h'9 red edge forcer at t = 5", h9_forcer),
        ("planar girth-11 edge partitions", girth11),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {:>2}: PASS  {name}: {detail} ({secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name}: {why} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}

/// Triples of `g` split into triangles and induced P3s.
fn triples(g: &Graph) -> (Vec<[usize; 3]>, Vec<[usize; 3]>) {
    let n = g.vertex_count();
    let (mut tri, mut p3) = (Vec::new(), Vec::new());
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let e = [g.has_edge(a, b), g.has_edge(a, c), g.has_edge(b, c)];
                match e.iter().filter(|&&x| x).count() {
                    3 => tri.push([a, b, c]),
                    2 => p3.push([a, b, c]),
                    _ => {}
                }
            }
        }
    }
    (tri, p3)
}

/// Blue is bit set. No all-red triangle, no all-blue induced P3.
fn mask_ok(mask: u32, tri: &[[usize; 3]], p3: &[[usize; 3]]) -> bool {
    let blue = |v: usize| mask >> v & 1 == 1;
    tri.iter().all(|t| t.iter().any(|&v| blue(v))) && p3.iter().all(|t| !t.iter().all(|&v| blue(v)))
}

fn oracle_partitionable(g: &Graph) -> bool {
    let (tri, p3) = triples(g);
    (0u32..1 << g.vertex_count()).any(|m| mask_ok(m, &tri, &p3))
}

fn oracle_valid(g: &Graph, p: &Partition) -> bool {
    let (tri, p3) = triples(g);
    let mask = (0..g.vertex_count())
        .filter(|&v| p.color(v) == Color::Blue)
        .fold(0u32, |m, v| m | 1 << v);
    mask_ok(mask, &tri, &p3)
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

fn check_solver(g: &Graph) -> Result<bool, String> {
    let got = solve_partition(g);
    let want = oracle_partitionable(g);
    ensure!(
        got.is_some() == want,
        "solver says {} but brute force says {want} on {g:?}",
        got.is_some()
    );
    if let Some(p) = &got {
        ensure!(
            partition_is_valid(g, p) && oracle_valid(g, p),
            "invalid partition on {g:?}"
        );
    }
    Ok(want)
}

fn solver_oracle() -> Outcome {
    let mut count = 0;
    let mut no = 0;
    for level in graphs_up_to(7, |_| true) {
        for g in level {
            count += 1;
            no += !check_solver(&g)? as usize;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..200 {
        let n = rng.gen_range(1..=12);
        let p = rng.gen_range(0.1..0.9);
        no += !check_solver(&random_graph(&mut rng, n, p))? as usize;
    }
    Ok(format!(
        "{count} graphs up to 7 vertices and 200 random graphs, {no} not partitionable"
    ))
}

fn co_c7() -> Outcome {
    let g = generate("complement_of_cycle", &[7]).unwrap();
    let all = enumerate_partitions(&g, None, DEFAULT_STATE_BUDGET).map_err(|e| e.to_string())?;
    ensure!(!all.truncated, "enumeration truncated");
    ensure!(all.partitions.len() == 7, "{} partitions", all.partitions.len());
    let mut starts = Vec::new();
    for p in &all.partitions {
        let blue = p.blue();
        let start = (0..7).find(|&t| {
            let mut want = vec![t, (t + 1) % 7, (t + 2) % 7];
            want.sort_unstable();
            want == blue
        });
        ensure!(start.is_some(), "blue set {blue:?} is not three consecutive vertices");
        starts.extend(start);
    }
    starts.sort_unstable();
    ensure!(starts == (0..7).collect::<Vec<_>>(), "starts {starts:?}");
    Ok("7 partitions, one per starting vertex".into())
}

fn h4_forcer() -> Outcome {
    let f = build_h4_blue_forcer();
    let v = verify_blue_forcer(&f, DEFAULT_STATE_BUDGET).map_err(|e| e.to_string())?;
    ensure!(v.pass, "verifier: {:?}", v.failed);
    let all = enumerate_partitions(&f.graph, None, DEFAULT_STATE_BUDGET)
        .unwrap()
        .partitions;
    ensure!(!all.is_empty(), "not partitionable");
    ensure!(all.iter().all(|p| p.color(f.q) == Color::Blue), "q red somewhere");
    let nq = f.graph.neighbors(f.q);
    ensure!(
        all.iter().any(|p| nq.iter().all(|&w| p.color(w) == Color::Red)),
        "no partition with N(q) red"
    );
    Ok(format!(
        "{} vertices, q blue in all {} partitions",
        f.graph.vertex_count(),
        all.len()
    ))
}

fn random_triangle_free(rng: &mut ChaCha8Rng, n: usize, tries: usize) -> Graph {
    let mut g = Graph::new(n);
    for _ in 0..tries {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u != v && !g.has_edge(u, v) && !(0..n).any(|w| g.has_edge(u, w) && g.has_edge(v, w)) {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

fn line_graphs() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let (mut yes, mut no) = (0, 0);
    for i in 0..100 {
        let n = rng.gen_range(2..=10);
        let g = random_triangle_free(&mut rng, n, 3 * n + i % 20);
        let direct = solve_edge_partition(&g).map_err(|e| e.to_string())?;
        let (lg, _) = g.line_graph();
        let via_line = solve_partition(&lg);
        ensure!(direct.is_some() == via_line.is_some(), "disagreement on {g:?}");
        if let Some(ep) = &direct {
            ensure!(
                matches!(is_valid_edge_partition(&g, ep), Ok(None)),
                "invalid edge partition"
            );
            // the same coloring read on the line graph is a valid partition
            let lp = Partition::new(ep.colors().to_vec());
            ensure!(
                partition_is_valid(&lg, &lp),
                "edge partition is not a line-graph partition"
            );
            yes += 1;
        } else {
            no += 1;
        }
    }
    Ok(format!("100 graphs, {yes} edge-partitionable, {no} not"))
}

fn deg42() -> Outcome {
    let mut lines = Vec::new();
    for (name, base) in [
        ("K5", generate("complete", &[5]).unwrap()),
        ("K4,4", generate("complete_multipartite", &[4, 4]).unwrap()),
    ] {
        let g = base.subdivide_all();
        let ep = edge_partition_deg42(&g).map_err(|e| e.to_string())?;
        ensure!(matches!(is_valid_edge_partition(&g, &ep), Ok(None)), "{name}: invalid");
        ensure!(
            2 * ep.count(Color::Blue) == g.edge_count(),
            "{name}: {} blue of {}",
            ep.count(Color::Blue),
            g.edge_count()
        );
        lines.push(format!("{name}: {} of {} blue", ep.count(Color::Blue), g.edge_count()));
    }
    let g = generate("complete", &[5]).unwrap().subdivide_all();
    let (all, truncated) = enumerate_edge_partitions(&g, None, DEFAULT_STATE_BUDGET).map_err(|e| e.to_string())?;
    ensure!(!truncated && !all.is_empty(), "enumeration incomplete");
    for ep in &all {
        for v in g.vertices().filter(|&v| g.degree(v) == 4) {
            ensure!(ep.degree(&g, v, Color::Blue) == 2, "vertex {v} breaks the pattern");
        }
    }
    lines.push(format!(
        "all {} edge partitions of subdivided K5 follow the pattern",
        all.len()
    ));
    Ok(lines.join("; "))
}

fn max_degree_3() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut worst = 0.0f64;
    for _ in 0..200 {
        let n = rng.gen_range(1..=50);
        let mut g = Graph::new(n);
        for _ in 0..2 * n {
            let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
            if u != v && g.degree(u) < 3 && g.degree(v) < 3 {
                g.add_edge(u, v).unwrap();
            }
        }
        let (p, ab) = partition_max_degree_3(&g).map_err(|e| e.to_string())?;
        ensure!(partition_is_valid(&g, &p), "invalid partition");
        ensure!(
            ab.moves <= ab.initial_potential,
            "{} moves, potential {}",
            ab.moves,
            ab.initial_potential
        );
        if ab.initial_potential > 0 {
            worst = worst.max(ab.moves as f64 / ab.initial_potential as f64);
        }
    }
    Ok(format!("200 graphs, moves/potential at most {worst:.2}"))
}

/// Random cliques glued by sparse edges, or plain sparse random graphs.
fn p3_candidate(rng: &mut ChaCha8Rng) -> Graph {
    let n = rng.gen_range(3..=14);
    if rng.gen_bool(0.5) {
        let p = rng.gen_range(0.1..0.35);
        return random_graph(rng, n, p);
    }
    let mut g = Graph::new(n);
    let mut v = 0;
    while v < n {
        let size = rng.gen_range(1..=5).min(n - v);
        for a in v..v + size {
            for b in a + 1..v + size {
                g.add_edge(a, b).unwrap();
            }
        }
        v += size;
    }
    for _ in 0..rng.gen_range(0..n) {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if a != b {
            g.add_edge(a, b).unwrap();
        }
    }
    g
}

fn p3_construction() -> Outcome {
    let spec = ClassSpec::preset("p3", 0).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut accepted, mut tried, mut with_big) = (0, 0, 0);
    while accepted < 100 {
        tried += 1;
        ensure!(tried < 100_000, "rejection sampling stalled");
        let g = p3_candidate(&mut rng);
        if !check_class(&g, &spec).unwrap().member {
            continue;
        }
        accepted += 1;
        let p = partition_diamond_house_net_free(&g).map_err(|e| e.to_string())?;
        ensure!(
            partition_is_valid(&g, &p) && oracle_valid(&g, &p),
            "invalid partition on {g:?}"
        );
        ensure!(solve_partition(&g).is_some(), "exact solver disagrees on {g:?}");
        with_big += !bluered_core::construct::big_cliques(&g).is_empty() as usize;
    }
    Ok(format!(
        "100 graphs from {tried} candidates, {with_big} with a big clique"
    ))
}

fn no_independent_triple(g: &Graph) -> bool {
    let n = g.vertex_count();
    !(0..n).any(|a| (a + 1..n).any(|b| !g.has_edge(a, b) && (b + 1..n).any(|c| !g.has_edge(a, c) && !g.has_edge(b, c))))
}

fn kkbar_free() -> Outcome {
    let mut count = 0;
    for level in graphs_up_to(9, no_independent_triple) {
        for g in level {
            count += 1;
            let got = partition_kkbar_free(&g, 3).map_err(|e| e.to_string())?;
            ensure!(got.is_some() == solve_partition(&g).is_some(), "disagreement on {g:?}");
            if let Some(p) = &got {
                ensure!(oracle_valid(&g, p), "invalid partition on {g:?}");
            }
        }
    }
    // every 6-vertex graph has a triangle or an independent triple, C5 has neither
    let has_triangle = |g: &Graph| !triples(g).0.is_empty();
    let six = graphs_up_to(6, |_| true).pop().unwrap();
    ensure!(six.len() == 156, "{} graphs on 6 vertices", six.len());
    ensure!(
        six.iter().all(|g| has_triangle(g) || !no_independent_triple(g)),
        "R(3,3) > 6"
    );
    let c5 = generate("cycle", &[5]).unwrap();
    ensure!(!has_triangle(&c5) && no_independent_triple(&c5), "R(3,3) <= 5");
    ensure!(ramsey_k3(3) == Some(6), "table disagrees");
    Ok(format!("{count} graphs up to 9 vertices, R(3,3) = 6 confirmed"))
}

fn reduction() -> Outcome {
    let set = default_gadget_set();
    let corpus = fixture_corpus();
    let (mut small, mut unsat) = (0, Vec::new());
    for fx in &corpus {
        let out = compile(&fx.formula, &set, DEFAULT_T).map_err(|e| e.to_string())?;
        let r = verify_reduction(&fx.formula, &out).map_err(|e| e.to_string())?;
        ensure!(r.pass, "{}: {r:?}", fx.name);
        ensure!(r.satisfiable == fx.satisfiable, "{}: label", fx.name);
        if let Some(a) = &r.decoded {
            ensure!(fx.formula.evaluate(a), "{}: decoded assignment fails", fx.name);
        }
        if fx.formula.variable_count <= 5 && fx.formula.clauses.len() <= 5 {
            small += 1;
        }
        if !fx.satisfiable {
            ensure!(!r.partitionable, "{}: unsatisfiable but partitionable", fx.name);
            unsat.push(fx);
        }
    }
    ensure!(small >= 20, "only {small} fixtures within 5 variables and 5 clauses");
    ensure!(!unsat.is_empty(), "no unsatisfiable fixture");
    // a clause on 3 distinct variables excludes 2^(n-3) of the 2^n assignments,
    // so at most 5 clauses leave one standing: no unsatisfiable fixture fits
    for n in 3..=5u32 {
        ensure!(5 * (1u32 << (n - 3)) < 1 << n, "counting bound fails at n = {n}");
    }
    let u = unsat[0];
    Ok(format!(
        "{small} fixtures within 5 variables and 5 clauses pass; unsatisfiable fixture {} has {} variables and {} clauses since none with fewer than 8 clauses exists",
        u.name,
        u.formula.variable_count,
        u.formula.clauses.len()
    ))
}

/// Minor-based planarity: a K5 or K3,3 subgraph after some contractions.
/// Graphs above the Euler bound are non-planar outright.
fn oracle_planar(g: &Graph) -> bool {
    fn edges_of(n: usize, adj: &[u32]) -> usize {
        (0..n).map(|v| adj[v].count_ones() as usize).sum::<usize>() / 2
    }
    fn has_k5_or_k33(n: usize, adj: &[u32]) -> bool {
        let sets = |k: usize| (0u32..1 << n).filter(move |m| m.count_ones() as usize == k);
        for s in sets(5) {
            if (0..n).filter(|&v| s >> v & 1 == 1).all(|v| adj[v] & s == s & !(1 << v)) {
                return true;
            }
        }
        for s in sets(6) {
            let vs: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
            for side in 0u32..64 {
                if side.count_ones() != 3 || side & 1 == 0 {
                    continue;
                }
                let a: Vec<usize> = (0..6).filter(|&i| side >> i & 1 == 1).map(|i| vs[i]).collect();
                let b: Vec<usize> = (0..6).filter(|&i| side >> i & 1 == 0).map(|i| vs[i]).collect();
                if a.iter().all(|&x| b.iter().all(|&y| adj[x] >> y & 1 == 1)) {
                    return true;
                }
            }
        }
        false
    }
    fn contract(n: usize, adj: &[u32], u: usize, v: usize) -> Vec<u32> {
        // merge v into u, then move the last vertex into v's place
        let mut a = adj.to_vec();
        let nv = a[v] & !(1 << u) & !(1 << v);
        a[u] = (a[u] | nv) & !(1 << v);
        for w in 0..n {
            if nv >> w & 1 == 1 {
                a[w] = (a[w] & !(1 << v)) | 1 << u;
            }
        }
        a[u] &= !(1 << u);
        let last = n - 1;
        if v != last {
            let lv = a[last];
            a[v] = lv & !(1 << v);
            for w in 0..n {
                if lv >> w & 1 == 1 {
                    a[w] = (a[w] & !(1 << last)) | 1 << v;
                }
            }
        }
        for w in 0..n {
            a[w] &= !(1 << last);
        }
        a.truncate(last);
        a
    }
    fn nonplanar(n: usize, adj: &[u32], seen: &mut std::collections::HashSet<Vec<u32>>) -> bool {
        let m = edges_of(n, adj);
        if n < 5 || m < 9 {
            return false;
        }
        if m > 3 * n - 6 || has_k5_or_k33(n, adj) {
            return true;
        }
        if !seen.insert(adj.to_vec()) {
            return false;
        }
        for u in 0..n {
            for v in u + 1..n {
                if adj[u] >> v & 1 == 1 && nonplanar(n - 1, &contract(n, adj, u, v), seen) {
                    return true;
                }
            }
        }
        false
    }
    let n = g.vertex_count();
    let adj: Vec<u32> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(0, |m, &w| m | 1 << w))
        .collect();
    !nonplanar(n, &adj, &mut Default::default())
}

/// Induced copy of `pattern` among all vertex subsets, by permutations.
fn oracle_induced(pattern: &Graph, host: &Graph) -> bool {
    let k = pattern.vertex_count();
    let n = host.vertex_count();
    fn perms(items: &mut Vec<usize>, i: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if i == items.len() {
            return f(items);
        }
        for j in i..items.len() {
            items.swap(i, j);
            if perms(items, i + 1, f) {
                return true;
            }
            items.swap(i, j);
        }
        false
    }
    (0u32..1 << n).filter(|m| m.count_ones() as usize == k).any(|m| {
        let mut vs: Vec<usize> = (0..n).filter(|&v| m >> v & 1 == 1).collect();
        perms(&mut vs, 0, &mut |map| {
            (0..k).all(|a| (a + 1..k).all(|b| pattern.has_edge(a, b) == host.has_edge(map[a], map[b])))
        })
    })
}

fn structure() -> Outcome {
    for (name, params, planar) in [
        ("complete", vec![5], false),
        ("complete_multipartite", vec![3, 3], false),
    ] {
        let g = generate(name, &params).unwrap();
        let r = is_planar(&g);
        ensure!(r.planar == planar && r.verify(&g), "{name}");
    }
    let mut planar_count = 0;
    let mut total = 0;
    let levels = graphs_up_to(8, |_| true);
    for level in &levels {
        for g in level {
            total += 1;
            let r = is_planar(g);
            let want = oracle_planar(g);
            ensure!(r.planar == want, "planarity {} vs oracle {want} on {g:?}", r.planar);
            ensure!(r.verify(g), "planarity witness fails on {g:?}");
            planar_count += want as usize;
        }
    }
    let petersen = generate("petersen", &[]).unwrap();
    ensure!(girth(&petersen) == Some(5), "girth(Petersen) = {:?}", girth(&petersen));

    // induced patterns: every host up to 6 vertices and random hosts on 7 and 8
    let mut catalog: Vec<(String, Graph)> = PatternName::ALL
        .iter()
        .map(|&p| (p.as_str().to_string(), pattern(p)))
        .collect();
    catalog.push(("K4".into(), generate("complete", &[4]).unwrap()));
    catalog.push(("C4".into(), generate("cycle", &[4]).unwrap()));
    catalog.push(("P4".into(), generate("path", &[4]).unwrap()));
    let mut hosts: Vec<Graph> = levels.iter().take(7).flatten().cloned().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for i in 0..150 {
        let n = 7 + i % 2;
        let p = rng.gen_range(0.2..0.8);
        hosts.push(random_graph(&mut rng, n, p));
    }
    let mut found = 0;
    for (name, p) in &catalog {
        for h in &hosts {
            let got = contains_induced(p, h).map_err(|e| e.to_string())?;
            ensure!(got.is_some() == oracle_induced(p, h), "{name} in {h:?}");
            if let Some(map) = &got {
                ensure!(is_induced_embedding(p, h, map), "{name}: bad embedding");
                found += 1;
            }
        }
    }
    Ok(format!(
        "planarity on {total} graphs up to 8 vertices ({planar_count} planar), girth(Petersen) = 5, {} patterns on {} hosts ({found} hits)",
        catalog.len(),
        hosts.len()
    ))
}

fn h9_forcer() -> Outcome {
    let f = build_h9_red_edge_forcer(5).map_err(|e| e.to_string())?;
    ensure!(f.claimed == Color::Red, "claim is {}", f.claimed);
    let v = verify_edge_forcer(&f).map_err(|e| e.to_string())?;
    ensure!(v.pass, "{:?}", v.failed);
    Ok(format!(
        "{} vertices, {} edges, forced edge {}",
        f.graph.vertex_count(),
        f.graph.edge_count(),
        f.edge
    ))
}

/// A cycle of length at least 11, sometimes with a second cycle hung on a
/// chain of 2-vertices or a long chord path, then pendant trees grown
/// while keeping degree at most 4 and no edge between two 4-vertices.
fn girth11_instance(rng: &mut ChaCha8Rng, i: usize) -> Graph {
    let len = rng.gen_range(11..=18);
    let mut g = generate("cycle", &[len as u64]).unwrap();
    let path = |g: &mut Graph, from: usize, len: usize| -> usize {
        let mut at = from;
        for _ in 0..len {
            at = g.add_pendant(at).unwrap();
        }
        at
    };
    match i % 3 {
        1 => {
            let other = rng.gen_range(11..=14);
            let (c2, off) = g.disjoint_union(&generate("cycle", &[other as u64]).unwrap());
            g = c2;
            let end = path(&mut g, rng.gen_range(0..len), rng.gen_range(0..4));
            g.add_edge(end, off + rng.gen_range(0..other)).unwrap();
        }
        2 => {
            let d = rng.gen_range(2..=len / 2);
            let chain = 11 - d + rng.gen_range(0..3);
            let end = path(&mut g, 0, chain - 1);
            g.add_edge(end, d).unwrap();
        }
        _ => {}
    }
    for _ in 0..rng.gen_range(0..12) {
        let v = rng.gen_range(0..g.vertex_count());
        let d = g.degree(v);
        if d >= 4 || (d == 3 && g.neighbors(v).iter().any(|&w| g.degree(w) >= 4)) {
            continue;
        }
        g.add_pendant(v).unwrap();
    }
    g
}

fn girth11() -> Outcome {
    let spec = ClassSpec::preset("p5'", 0).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut accepted = 0;
    let mut i = 0;
    while accepted < 36 {
        i += 1;
        ensure!(i < 1000, "generator keeps leaving the class");
        let g = girth11_instance(&mut rng, i);
        let report = check_class(&g, &spec).unwrap();
        if !report.member {
            continue;
        }
        ensure!(girth(&g).is_some_and(|x| x >= 11), "girth {:?}", girth(&g));
        accepted += 1;
        let ep = edge_partition_planar_girth11(&g).map_err(|e| e.to_string())?;
        ensure!(
            matches!(is_valid_edge_partition(&g, &ep), Ok(None)),
            "invalid output on {g:?}"
        );
        let exact = solve_edge_partition(&g).map_err(|e| e.to_string())?;
        ensure!(exact.is_some(), "exact solver disagrees on {g:?}");
        if g.edge_count() <= 24 {
            let (all, truncated) =
                enumerate_edge_partitions(&g, Some(1), DEFAULT_STATE_BUDGET).map_err(|e| e.to_string())?;
            ensure!(!all.is_empty() || truncated, "enumeration finds nothing on {g:?}");
        }
    }
    Ok(format!("{accepted} in-class instances from {i} draws"))
}
