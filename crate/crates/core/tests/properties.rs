use proptest::prelude::*;

use starchrome::graph::graph6;
use starchrome::graph::Graph;
use starchrome::outerplanar::is_outerplanar;
use starchrome::star::{
    brute_force_chi_star, color_with_palette, exact_chi_star, greedy_star_coloring, is_star_coloring, Budget,
};

fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bits[k] {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::new(n, edges).unwrap()
}

fn graphs(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

/// Random graphs with at most `max_m` edges.
fn sparse_graphs(max_n: usize, max_m: usize) -> impl Strategy<Value = Graph> {
    graphs(max_n).prop_map(move |g| {
        let keep: Vec<usize> = (max_m..g.m()).collect();
        g.without_edges(&keep)
    })
}

fn shuffled(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #[test]
    fn graph6_round_trip(g in graphs(14)) {
        let text = graph6::encode(&g).unwrap();
        prop_assert_eq!(graph6::decode(&text).unwrap(), g);
    }

    #[test]
    fn canonical_key_ignores_labels((g, perm) in graphs(8).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), shuffled(n))
    })) {
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(g.canonical_key().unwrap(), h.canonical_key().unwrap());
        let canon = g.canonical_form().unwrap();
        prop_assert_eq!(graph6::encode(&canon.graph).unwrap(), canon.key.0);
    }

    #[test]
    fn outerplanarity_ignores_labels((g, perm) in graphs(9).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), shuffled(n))
    })) {
        prop_assert_eq!(is_outerplanar(&g), is_outerplanar(&g.relabel(&perm).unwrap()));
    }

    #[test]
    fn greedy_is_always_valid(g in graphs(10), seed in any::<u64>()) {
        let c = greedy_star_coloring(&g, seed);
        prop_assert!(is_star_coloring(&g, &c));
    }

    #[test]
    fn solver_witness_is_valid_and_tight(g in sparse_graphs(8, 12)) {
        let (outcome, _) = exact_chi_star(&g, &Budget::default());
        let chi = outcome.chi().unwrap();
        prop_assert!(is_star_coloring(&g, outcome.coloring()));
        prop_assert_eq!(outcome.coloring().palette(), chi);
        prop_assert!(chi as usize >= g.max_degree());
        if chi > 0 {
            let (below, _) = color_with_palette(&g, chi - 1, &Budget::default());
            prop_assert_eq!(below.unwrap(), None);
        }
    }

    #[test]
    fn solver_matches_brute_force(g in sparse_graphs(7, 8)) {
        let (outcome, _) = exact_chi_star(&g, &Budget::default());
        let (brute, _) = brute_force_chi_star(&g).unwrap();
        prop_assert_eq!(outcome.chi(), Some(brute));
    }
}
