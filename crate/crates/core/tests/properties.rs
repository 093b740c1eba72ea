mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use szlab::{
    all_pairs_distances, block_decomposition, canonical_code, edge_partition, extremal_family, mu, parse_graph6,
    rooted_trees, shortest_cycle, szeged, to_graph6, wiener, Graph, InvariantReport,
};

fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let edges: Vec<_> = pairs
        .into_iter()
        .zip(bits)
        .filter(|(_, &b)| b)
        .map(|(p, _)| p)
        .collect();
    Graph::from_edge_list(n, &edges).unwrap()
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let len = n * (n - 1) / 2;
        (Just(n), prop::collection::vec(prop::bool::weighted(0.35), len))
            .prop_map(|(n, bits)| graph_from_bits(n, &bits))
    })
}

/// A Prüfer tree plus extra edges, optionally only between the tree's colour
/// classes.
fn arb_connected(min_n: usize, max_n: usize, bipartite: bool) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(move |n| {
        let seq = prop::collection::vec(0..n, n - 2);
        let extra = prop::collection::vec((0..n, 0..n), 0..=n);
        (Just(n), seq, extra).prop_map(move |(n, seq, extra)| {
            let tree = common::tree_from_pruefer(n, &seq);
            let d = common::floyd(n, tree.edges());
            let mut edges = tree.edges().to_vec();
            edges.extend(
                extra
                    .into_iter()
                    .filter(|&(a, b)| a != b && (!bipartite || d[0][a] % 2 != d[0][b] % 2)),
            );
            Graph::from_edge_list(n, &edges).unwrap()
        })
    })
}

fn arb_permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn components_without(g: &Graph, removed: usize) -> usize {
    let n = g.n();
    let mut seen = vec![false; n];
    seen[removed] = true;
    let mut count = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        count += 1;
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    count
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn graph6_round_trip(g in arb_graph(40)) {
        let s = to_graph6(&g);
        prop_assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn canonical_code_ignores_labels((g, perm) in arb_graph(16).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), arb_permutation(n))
    })) {
        let h = g.relabel(&perm);
        prop_assert_eq!(canonical_code(&g).unwrap(), canonical_code(&h).unwrap());
    }

    #[test]
    fn distances_match_floyd(g in arb_graph(14)) {
        let n = g.n();
        let d = all_pairs_distances(&g);
        let f = common::floyd(n, g.edges());
        for (x, fx) in f.iter().enumerate() {
            for (y, &fxy) in fx.iter().enumerate() {
                prop_assert_eq!(d.get(x, y), d.get(y, x));
                prop_assert_eq!(d.get(x, y) == Some(1), g.has_edge(x, y));
                match d.get(x, y) {
                    Some(v) => prop_assert_eq!(v as u64, fxy),
                    None => prop_assert_eq!(fxy, common::INF),
                }
                for z in 0..n {
                    if let (Some(a), Some(b)) = (d.get(x, z), d.get(z, y)) {
                        prop_assert!(d.get(x, y).unwrap() <= a + b);
                    }
                }
            }
        }
    }

    #[test]
    fn partition_covers_every_vertex(g in arb_connected(2, 14, false)) {
        let d = all_pairs_distances(&g);
        for &(u, v) in g.edges() {
            let p = edge_partition(&g, &d, u, v).unwrap();
            prop_assert_eq!(p.n_u + p.n_v + p.n_0, g.n());
            prop_assert!(p.n_u >= 1 && p.n_v >= 1);
        }
    }

    #[test]
    fn mu_sums_to_edge_products(g in arb_connected(2, 12, false)) {
        let d = all_pairs_distances(&g);
        let n = g.n();
        for &(u, v) in g.edges() {
            let p = edge_partition(&g, &d, u, v).unwrap();
            let mut sum = 0u64;
            for x in 0..n {
                for y in x + 1..n {
                    sum += mu(&g, &d, x, y, (u, v)).unwrap() as u64;
                }
            }
            prop_assert_eq!(sum, p.product());
        }
        let b = common::brute(&g);
        prop_assert_eq!(b.mu_total, szeged(&g).unwrap());
    }

    #[test]
    fn invariants_match_oracle(g in arb_connected(2, 16, false)) {
        let r = InvariantReport::compute(&g).unwrap();
        let b = common::brute(&g);
        prop_assert_eq!((r.wiener, r.szeged, r.revised_szeged_times4), (b.wiener, b.szeged, b.revised_times4));
    }

    #[test]
    fn block_identity_and_cut_vertices(g in arb_connected(2, 16, false)) {
        let bd = block_decomposition(&g).unwrap();
        let n = g.n();
        prop_assert_eq!(bd.block_sizes().iter().sum::<usize>(), n + bd.k() - 1);
        for v in 0..n {
            let is_cut = components_without(&g, v) > 1;
            prop_assert_eq!(bd.is_cut_vertex(v), is_cut, "vertex {}", v);
        }
        let covered: usize = bd.block_edges.iter().map(|e| e.len()).sum();
        prop_assert_eq!(covered, g.m());
    }

    #[test]
    fn bipartite_girth_is_even(g in arb_connected(3, 16, true)) {
        prop_assert!(g.is_bipartite());
        if let Some(c) = shortest_cycle(&g) {
            prop_assert_eq!(c.len() % 2, 0);
            prop_assert!(c.len() >= 4);
            for (u, v) in c.edges() {
                prop_assert!(g.has_edge(u, v));
            }
        }
    }

    #[test]
    fn bipartite_partition_has_no_ties(g in arb_connected(2, 16, true)) {
        let r = InvariantReport::compute(&g).unwrap();
        prop_assert!(r.per_edge.iter().all(|p| p.n_0 == 0));
        prop_assert_eq!(r.revised_szeged_times4, 4 * r.szeged);
    }
}

#[test]
fn tree_identity_up_to_nine_vertices() {
    // unrooted classes = rooted trees forgetting the root, deduplicated by code
    let expected = [1, 1, 1, 2, 3, 6, 11, 23, 47];
    for n in 1..=9 {
        let codes: BTreeSet<_> = rooted_trees(n)
            .unwrap()
            .iter()
            .map(|t| canonical_code(&t.to_graph()).unwrap())
            .collect();
        assert_eq!(codes.len(), expected[n - 1], "n = {n}");
        for code in codes {
            let t = parse_graph6(code.as_str()).unwrap();
            let r = InvariantReport::compute(&t).unwrap();
            assert_eq!(r.wiener, r.szeged, "{code}");
            assert_eq!(r.revised_szeged_times4, 4 * r.szeged, "{code}");
            assert_eq!(r.gap, 0);
        }
    }
}

#[test]
fn extremal_members_attain_the_bound() {
    for n in 4..=11 {
        for member in extremal_family(n).unwrap() {
            let b = common::brute(&member.graph);
            assert_eq!(b.gap(), 4 * n as i64 - 8, "{}", member.code);
            assert_eq!(wiener(&all_pairs_distances(&member.graph)).unwrap(), b.wiener);
        }
    }
}

#[test]
fn enumerated_graphs_round_trip_and_recognition() {
    use szlab::{generate, is_extremal_form, EnumerationSpec};
    for n in 1..=8 {
        let family: Vec<Graph> = if n >= 4 {
            extremal_family(n).unwrap().into_iter().map(|m| m.graph).collect()
        } else {
            Vec::new()
        };
        let mut recognised = 0;
        for g in generate(&EnumerationSpec::new(n).min_edges(0)).unwrap() {
            assert_eq!(parse_graph6(&to_graph6(&g.graph)).unwrap(), g.graph);
            assert_eq!(to_graph6(&g.graph), g.code.as_str());
            if is_extremal_form(&g.graph) {
                recognised += 1;
                let matches = family
                    .iter()
                    .filter(|f| common::backtrack_isomorphic(f, &g.graph))
                    .count();
                assert_eq!(matches, 1, "{}", g.code);
            }
        }
        assert_eq!(recognised, family.len(), "n = {n}");
    }
}
