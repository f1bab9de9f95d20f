use starchrome::graph::enumerate::all_graphs;
use starchrome::graph::Graph;
use starchrome::outerplanar::{
    enumerate_mops, is_maximal_outerplanar, is_outerplanar, MinorSearch,
};

#[test]
fn recogniser_matches_minor_search_on_all_small_graphs() {
    let mut minors = MinorSearch::new();
    let mut checked = 0;
    for n in 1..=7 {
        for g in all_graphs(n).unwrap() {
            let fast = is_outerplanar(&g);
            let slow = !minors.has_forbidden_minor(&g).unwrap();
            assert_eq!(fast, slow, "disagreement on {g:?}");
            checked += 1;
        }
    }
    assert_eq!(checked, 1 + 2 + 4 + 11 + 34 + 156 + 1044);
}

#[test]
fn maximal_means_two_n_minus_three_edges() {
    for n in 3..=7 {
        for g in all_graphs(n).unwrap() {
            if is_outerplanar(&g) {
                assert_eq!(is_maximal_outerplanar(&g), g.m() == 2 * n - 3, "{g:?}");
            }
        }
    }
}

#[test]
fn every_enumerated_mop_is_maximal() {
    for n in 3..=10 {
        for (_, g) in enumerate_mops(n).unwrap().members {
            assert!(is_maximal_outerplanar(&g));
            assert!(g.is_two_connected());
        }
    }
}

#[test]
fn wheel_is_not_outerplanar() {
    let w = Graph::new(7, (1..7).flat_map(|i| [(0, i), (i, i % 6 + 1)])).unwrap();
    assert!(!is_outerplanar(&w));
}
