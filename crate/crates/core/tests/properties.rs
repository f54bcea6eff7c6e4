use proptest::prelude::*;

use bluered_core::construct::{construct, ConstructOptions, Method, Outcome};
use bluered_core::graph::{contract_two_vertices, generate, identify_vertices, parse_edge_list, to_edge_list};
use bluered_core::solver::{
    encode_cnf, enumerate_partitions, is_valid_edge_partition, partition_is_valid, solve_edge_partition,
    solve_partition, Color, Partition, DEFAULT_STATE_BUDGET,
};
use bluered_core::structure::{
    check_class, contains_induced, contains_induced_bounded, find_induced_cycle, ClassSpec, Parity,
};
use bluered_core::{Edge, Graph};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = Graph::new(n);
            let mut it = bits.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap() {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            g
        })
    })
}

fn dense_graph() -> impl Strategy<Value = Graph> {
    (4..=8usize).prop_flat_map(|n| {
        proptest::collection::vec(proptest::bool::weighted(0.8), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

/// Same order and size plus an induced embedding means isomorphic.
fn isomorphic(a: &Graph, b: &Graph) -> bool {
    a.vertex_count() == b.vertex_count()
        && a.edge_count() == b.edge_count()
        && contains_induced_bounded(a, b, a.vertex_count()).unwrap().is_some()
}

fn count_valid(g: &Graph) -> usize {
    let n = g.vertex_count();
    (0u32..1 << n)
        .filter(|m| {
            let p = Partition::new(
                (0..n)
                    .map(|v| if m >> v & 1 == 1 { Color::Blue } else { Color::Red })
                    .collect(),
            );
            partition_is_valid(g, &p)
        })
        .count()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn edge_list_round_trip(g in graph(10)) {
        let back = parse_edge_list(&to_edge_list(&g)).unwrap();
        prop_assert_eq!(back.vertex_count(), g.vertex_count());
        prop_assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn subdividing_one_edge_adds_one_line_vertex(g in graph(9), pick in any::<usize>()) {
        let edges = g.edges();
        prop_assume!(!edges.is_empty());
        let e = edges[pick % edges.len()];
        let (lg, _) = g.subdivide_edge(e, 1).unwrap().line_graph();
        prop_assert_eq!(lg.vertex_count(), g.edge_count() + 1);
    }

    #[test]
    fn identification_is_symmetric(a in graph(5), b in graph(5), i in any::<usize>(), j in any::<usize>()) {
        prop_assume!(a.vertex_count() > 0 && b.vertex_count() > 0);
        let (va, vb) = (i % a.vertex_count(), j % b.vertex_count());
        let ab = identify_vertices(&a, va, &b, vb).unwrap().graph;
        let ba = identify_vertices(&b, vb, &a, va).unwrap().graph;
        prop_assert!(isomorphic(&ab, &ba));
    }

    #[test]
    fn contracting_a_full_subdivision_recovers_the_graph(g in dense_graph()) {
        prop_assume!(g.min_degree() >= 3);
        let c = contract_two_vertices(&g.subdivide_all());
        prop_assert_eq!(c.kept.clone(), (0..g.vertex_count()).collect::<Vec<_>>());
        prop_assert!(c.closed_cycles.is_empty());
        let simple = c.to_simple().expect("no loops or parallel edges");
        prop_assert_eq!(simple.edges(), g.edges());
    }

    #[test]
    fn cycle_search_agrees_with_induced_search(g in graph(9)) {
        for k in 4..=8usize {
            let cycle = generate("cycle", &[k as u64]).unwrap();
            let found = find_induced_cycle(&g, k, k, Parity::Any, 16).unwrap();
            prop_assert_eq!(found.is_some(), contains_induced(&cycle, &g).unwrap().is_some(), "k = {}", k);
            if let Some(c) = found {
                prop_assert_eq!(c.len(), k);
            }
        }
    }

    #[test]
    fn cnf_models_match_the_solver(g in graph(9)) {
        let enc = encode_cnf(&g);
        let model = enc.formula.brute_force_model();
        prop_assert_eq!(model.is_some(), solve_partition(&g).is_some());
        if let Some(m) = model {
            // a true variable means red
            let p = Partition::new(
                g.vertices().map(|v| if m[enc.var_of[v] - 1] { Color::Red } else { Color::Blue }).collect(),
            );
            prop_assert!(partition_is_valid(&g, &p));
        }
    }

    #[test]
    fn enumeration_counts_every_partition(g in graph(8)) {
        let e = enumerate_partitions(&g, None, DEFAULT_STATE_BUDGET).unwrap();
        prop_assert!(!e.truncated);
        prop_assert_eq!(e.partitions.len(), count_valid(&g));
        prop_assert!(e.partitions.iter().all(|p| partition_is_valid(&g, p)));
    }

    #[test]
    fn violations_survive_edges_away_from_their_witness(
        g in graph(8),
        class in 0..ClassSpec::PRESETS.len(),
        extra in any::<(usize, usize)>(),
    ) {
        let name = ClassSpec::PRESETS[class];
        let spec = (3..=16).find_map(|t| ClassSpec::preset(name, t).ok()).unwrap();
        let report = check_class(&g, &spec).unwrap();
        prop_assert!(report.violations.iter().all(|v| v.validate(&g, &spec)));
        let n = g.vertex_count();
        prop_assume!(n >= 2);
        let (u, w) = (extra.0 % n, extra.1 % n);
        prop_assume!(u != w && !g.has_edge(u, w));
        let mut bigger = g.clone();
        bigger.add_edge(u, w).unwrap();
        for v in &report.violations {
            let touched = v.witness.vertices();
            if !touched.contains(&u) && !touched.contains(&w) {
                prop_assert!(v.validate(&bigger, &spec), "{} lost after adding {:?}", v, Edge::new(u, w));
            }
        }
    }

    #[test]
    fn constructive_outcomes_are_certified(g in graph(9)) {
        let exists = solve_partition(&g).is_some();
        let edge_exists = g.is_triangle_free().then(|| solve_edge_partition(&g).unwrap().is_some());
        for method in Method::ALL {
            let Ok(c) = construct(&g, method, ConstructOptions::default()) else { continue };
            match c.outcome {
                Outcome::Vertex(p) => {
                    prop_assert!(partition_is_valid(&g, &p), "{}", method);
                    prop_assert!(exists);
                }
                Outcome::Edge(ep) => {
                    prop_assert!(matches!(is_valid_edge_partition(&g, &ep), Ok(None)), "{}", method);
                    prop_assert_eq!(edge_exists, Some(true));
                }
                Outcome::NotPartitionable => {
                    if matches!(c.method, Method::P42 | Method::P5) {
                        prop_assert_eq!(edge_exists, Some(false));
                    } else {
                        prop_assert!(!exists, "{} says no", c.method);
                    }
                }
                Outcome::Inconclusive(_) => {}
            }
        }
    }
}
