//! Randomised greedy upper bound.

use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

use super::state::PartialState;
use super::EdgeColoring;

/// Visits edges in a shuffled breadth-first order and gives each the
/// smallest color that keeps the partial coloring valid. Always returns a
/// star coloring; the same seed gives the same coloring.
pub fn greedy_star_coloring(g: &Graph, seed: u64) -> EdgeColoring {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut state = PartialState::new(g, g.max_degree() as u32 + 1);
    let mut seen = vec![false; g.n()];
    let mut done = vec![false; g.m()];
    let mut roots: Vec<usize> = (0..g.n()).collect();
    roots.shuffle(&mut rng);
    if let Some(first) = (0..g.n()).max_by_key(|&v| (g.degree(v), rng.gen::<u32>())) {
        roots.insert(0, first);
    }
    for root in roots {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let mut inc = g.incident(u).to_vec();
            inc.shuffle(&mut rng);
            for (w, e) in inc {
                if !done[e] {
                    done[e] = true;
                    let a = (1..).find(|&a| state.allows(e, a)).unwrap();
                    state.assign(e, a);
                }
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    EdgeColoring::new(state.colors)
}

#[cfg(test)]
mod tests {
    use super::super::is_star_coloring;
    use super::*;

    #[test]
    fn valid_and_reproducible() {
        let g = Graph::new(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3), (1, 4)]).unwrap();
        for seed in 0..20 {
            let c = greedy_star_coloring(&g, seed);
            assert!(is_star_coloring(&g, &c));
            assert_eq!(c, greedy_star_coloring(&g, seed));
        }
        assert_eq!(greedy_star_coloring(&Graph::empty(1), 3).colors(), &[] as &[u32]);
    }
}
