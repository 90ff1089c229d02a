mod common;

use hyperlambda::constructions::{cartesian_product, line_graph, product_label, s_section};
use hyperlambda::solver::chromatic_number_graph;
use hyperlambda::spectral::{expansion_constant_exact, spectrum, DEFAULT_EIGEN_TOLERANCE};
use hyperlambda::{build_constraints, check, lambda_exact, Colouring, Hypergraph, RawHypergraph, SolveBudget, VertexId};
use proptest::prelude::*;
use proptest::sample::subsequence;

/// Simple hypergraph on `n` vertices from edge bitmasks: undersized masks
/// are dropped and masks comparable with an earlier kept one are skipped.
fn simple_from(n: usize, masks: &[u32]) -> Option<Hypergraph> {
    let full = (1u32 << n) - 1;
    let mut kept: Vec<u32> = Vec::new();
    for &m in masks {
        let m = m & full;
        if m.count_ones() >= 2 && kept.iter().all(|&k| k & m != k && k & m != m) {
            kept.push(m);
        }
    }
    (!kept.is_empty()).then(|| common::from_masks(n, &kept))
}

fn hypergraph(max_n: usize) -> impl Strategy<Value = Hypergraph> {
    (2..=max_n)
        .prop_flat_map(|n| (Just(n), prop::collection::vec(any::<u32>(), 1..8)))
        .prop_filter_map("no edge of size >= 2", |(n, masks)| simple_from(n, &masks))
}

fn graph(max_n: usize) -> impl Strategy<Value = Hypergraph> {
    (3..=max_n)
        .prop_flat_map(|n| {
            let pairs: Vec<u32> =
                (0..n).flat_map(|a| (a + 1..n).map(move |b| (1u32 << a) | (1 << b))).collect();
            let len = pairs.len();
            (Just(n), subsequence(pairs, 1..=len))
        })
        .prop_filter_map("empty", |(n, masks)| simple_from(n, &masks))
}

fn connected_graph(max_n: usize) -> impl Strategy<Value = Hypergraph> {
    graph(max_n).prop_filter("disconnected", |g| g.is_connected())
}

fn relabel(hg: &Hypergraph, perm: &[usize]) -> Hypergraph {
    let vertices: Vec<String> = (0..hg.vertex_count()).map(|i| format!("y{}", perm[i])).collect();
    let edges = hg.edges().iter().map(|e| e.iter().map(|&v| vertices[v].clone()).collect()).collect();
    Hypergraph::from_raw(&RawHypergraph { vertices, edges }).unwrap()
}

fn lambda(hg: &Hypergraph, h: u32, k: u32) -> u32 {
    lambda_exact(hg, h, k, &SolveBudget::default()).unwrap().value().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn distance_is_a_metric(hg in hypergraph(7)) {
        let d = hg.distance_matrix();
        let n = hg.vertex_count();
        for u in 0..n {
            prop_assert_eq!(d[u][u], Some(0));
            for v in 0..n {
                prop_assert_eq!(d[u][v], d[v][u]);
                if u != v {
                    prop_assert_ne!(d[u][v], Some(0));
                }
                for w in 0..n {
                    if let (Some(a), Some(b)) = (d[u][w], d[w][v]) {
                        prop_assert!(d[u][v].is_some_and(|x| x <= a + b));
                    }
                }
            }
        }
    }

    #[test]
    fn degree_and_star_agree(hg in hypergraph(7)) {
        for (i, v) in hg.vertices().iter().enumerate() {
            let listed = hg.edges().iter().filter(|e| e.contains(&i)).count();
            prop_assert_eq!(hg.degree(v).unwrap(), listed);
            if listed > 0 {
                prop_assert_eq!(hg.star(v).unwrap().edge_count(), listed);
            }
        }
        let s = hg.structure_summary();
        prop_assert!(hg.edges().iter().all(|e| (s.corank..=s.rank).contains(&e.len())));
        prop_assert_eq!(s.uniform, s.rank == s.corank);
    }

    #[test]
    fn json_round_trip(hg in hypergraph(7)) {
        let text = hg.to_json();
        let back = Hypergraph::from_json(&text).unwrap();
        prop_assert_eq!(back.to_json(), text);
        prop_assert_eq!(back.structure_summary(), hg.structure_summary());
    }

    #[test]
    fn level_k_is_distance_two_on_graphs(g in graph(8)) {
        let cs = build_constraints(&g);
        let d = g.distance_matrix();
        for u in 0..g.vertex_count() {
            for v in (u + 1)..g.vertex_count() {
                let only_k = cs.level_k.contains(&(u, v)) && !cs.level_h.contains(&(u, v));
                prop_assert_eq!(only_k, d[u][v] == Some(2), "pair ({}, {})", u, v);
            }
        }
    }

    #[test]
    fn check_agrees_with_two_section(
        hg in hypergraph(7),
        raw in prop::collection::vec(0u32..12, 7),
        (h, k) in prop_oneof![Just((2u32, 1u32)), Just((3, 1)), Just((1, 0)), Just((4, 2))],
    ) {
        let section = s_section(&hg, 2).unwrap();
        let colours = &raw[..hg.vertex_count()];
        let a = check(&hg, h, k, &Colouring::from_vec(&hg, colours)).unwrap();
        let b = check(&section, h, k, &Colouring::from_vec(&section, colours)).unwrap();
        prop_assert_eq!(a.valid, b.valid);
        prop_assert_eq!(a.violations.len(), b.violations.len());
        let oracle = common::is_valid(colours, &common::pair_gaps(&hg, h, k));
        prop_assert_eq!(a.valid, oracle);
    }

    #[test]
    fn witness_is_valid_and_breakable(hg in hypergraph(6), pick in any::<prop::sample::Index>()) {
        let res = lambda_exact(&hg, 2, 1, &SolveBudget::default()).unwrap();
        let report = check(&hg, 2, 1, &res.witness).unwrap();
        prop_assert!(report.valid);
        prop_assert_eq!(report.span, res.value().unwrap());
        let cs = build_constraints(&hg);
        let pairs: Vec<(usize, usize)> = cs.level_h.iter().chain(&cs.level_k).copied().collect();
        let (u, v) = pairs[pick.index(pairs.len())];
        let mut colours = res.witness.to_vec(&hg).unwrap();
        colours[u] = colours[v];
        let broken = check(&hg, 2, 1, &Colouring::from_vec(&hg, &colours)).unwrap();
        prop_assert!(!broken.valid);
        let (a, b): (&VertexId, &VertexId) = (hg.vertex(u), hg.vertex(v));
        prop_assert!(broken.violations.iter().any(|x| (&x.u, &x.v) == (a, b) || (&x.u, &x.v) == (b, a)));
    }

    #[test]
    fn solver_matches_enumeration(
        hg in hypergraph(5),
        (h, k) in prop_oneof![Just((2u32, 1u32)), Just((1, 0)), Just((3, 1)), Just((2, 0))],
    ) {
        prop_assert_eq!(lambda(&hg, h, k), common::naive_lambda(&hg, h, k));
    }

    #[test]
    fn chromatic_identity(g in graph(8)) {
        prop_assert_eq!(chromatic_number_graph(&g).unwrap() as u32 - 1, lambda(&g, 1, 0));
    }

    #[test]
    fn monotone_in_levels(hg in hypergraph(6)) {
        for (h, k) in [(2u32, 0u32), (2, 1), (3, 1), (3, 2)] {
            let base = lambda(&hg, h, k);
            prop_assert!(base <= lambda(&hg, h + 1, k));
            if k + 1 < h {
                prop_assert!(base <= lambda(&hg, h, k + 1));
            }
        }
    }

    #[test]
    fn section_invariance(hg in hypergraph(7)) {
        let base = lambda(&hg, 2, 1);
        for s in 2..=hg.rank() {
            prop_assert_eq!(lambda(&s_section(&hg, s).unwrap(), 2, 1), base);
        }
    }

    #[test]
    fn spectrum_matches_two_section(hg in hypergraph(8)) {
        let a = spectrum(&hg, DEFAULT_EIGEN_TOLERANCE).unwrap();
        let b = spectrum(&s_section(&hg, 2).unwrap(), DEFAULT_EIGEN_TOLERANCE).unwrap();
        prop_assert_eq!(&a.eigenvalues, &b.eigenvalues);
        let n = hg.vertex_count() as f64;
        prop_assert!(a.eigenvalues.iter().sum::<f64>().abs() <= n * 1e-9);
        prop_assert!(a.eigenvalues.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn expansion_relabelling_invariant(
        (g, perm) in connected_graph(9).prop_flat_map(|g| {
            let n = g.vertex_count();
            (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
        })
    ) {
        let h = relabel(&g, &perm);
        prop_assert_eq!(expansion_constant_exact(&g).unwrap(), expansion_constant_exact(&h).unwrap());
    }

    #[test]
    fn product_distance_is_additive(left in hypergraph(4), right in hypergraph(4)) {
        let p = cartesian_product(&left, &right).unwrap();
        let (dl, dr) = (left.distance_matrix(), right.distance_matrix());
        prop_assert_eq!(
            p.edge_count(),
            left.edge_count() * right.vertex_count() + right.edge_count() * left.vertex_count()
        );
        for (i, x) in left.vertices().iter().enumerate() {
            for (j, y) in right.vertices().iter().enumerate() {
                let a = VertexId::new(product_label(x.as_str(), y.as_str()));
                for (i2, x2) in left.vertices().iter().enumerate() {
                    for (j2, y2) in right.vertices().iter().enumerate() {
                        let b = VertexId::new(product_label(x2.as_str(), y2.as_str()));
                        let want = dl[i][i2].zip(dr[j][j2]).map(|(s, t)| s + t);
                        prop_assert_eq!(p.distance(&a, &b).unwrap().finite(), want);
                    }
                }
            }
        }
    }

    #[test]
    fn line_graph_has_one_vertex_per_edge(hg in hypergraph(7)) {
        prop_assume!(!hg.has_isolated_vertex());
        let meets = hg.edges().iter().enumerate().any(|(i, a)| hg.edges()[i + 1..].iter().any(|b| a.iter().any(|v| b.contains(v))));
        match line_graph(&hg) {
            Ok(l) => prop_assert_eq!(l.vertex_count(), hg.edge_count()),
            // An edgeless line graph is not a valid hypergraph.
            Err(_) => prop_assert!(!meets),
        }
    }
}
