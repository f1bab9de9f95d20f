//! Exact star chromatic index by iterative deepening on the palette size.
//!
//! For each palette size `k`, starting at the maximum degree, a depth-first
//! search assigns colors to edges in breadth-first order from a vertex of
//! maximum degree. A color id may only be introduced as one more than the
//! largest id already in use, which removes palette permutations.

use std::collections::VecDeque;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::graph::{EdgeId, Graph};

use super::greedy::greedy_star_coloring;
use super::state::PartialState;
use super::{Color, EdgeColoring};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub max_nodes: u64,
    pub max_time: Duration,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_nodes: 100_000_000,
            max_time: Duration::from_secs(300),
        }
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget {
            max_nodes: u64::MAX,
            max_time: Duration::MAX,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Color assignments tried, summed over all palette sizes.
    pub nodes: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    Exact {
        chi: Color,
        witness: EdgeColoring,
    },
    /// Every palette below `lower` was refuted; `upper` is the palette of
    /// the best coloring found, which is returned alongside.
    BudgetExhausted {
        lower: Color,
        upper: Color,
        best: EdgeColoring,
    },
}

impl SolveOutcome {
    pub fn chi(&self) -> Option<Color> {
        match self {
            SolveOutcome::Exact { chi, .. } => Some(*chi),
            SolveOutcome::BudgetExhausted { .. } => None,
        }
    }

    pub fn bounds(&self) -> (Color, Color) {
        match self {
            SolveOutcome::Exact { chi, .. } => (*chi, *chi),
            SolveOutcome::BudgetExhausted { lower, upper, .. } => (*lower, *upper),
        }
    }

    pub fn coloring(&self) -> &EdgeColoring {
        match self {
            SolveOutcome::Exact { witness, .. } => witness,
            SolveOutcome::BudgetExhausted { best, .. } => best,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OutOfBudget;

pub fn exact_chi_star(g: &Graph, budget: &Budget) -> (SolveOutcome, SearchStats) {
    let start = Instant::now();
    let mut stats = SearchStats::default();
    if g.m() == 0 {
        let outcome = SolveOutcome::Exact {
            chi: 0,
            witness: EdgeColoring::uncolored(0),
        };
        return (outcome, stats);
    }
    let greedy = greedy_star_coloring(g, 0);
    let upper = greedy.palette();
    let order = bfs_edge_order(g);
    let mut k = g.max_degree() as Color;
    loop {
        if k >= upper {
            stats.elapsed = start.elapsed();
            return (SolveOutcome::Exact { chi: upper, witness: greedy }, stats);
        }
        let mut search = Search::new(g, &order, k, budget, start);
        let found = search.run();
        stats.nodes += search.nodes;
        stats.elapsed = start.elapsed();
        match found {
            Ok(Some(witness)) => return (SolveOutcome::Exact { chi: k, witness }, stats),
            Ok(None) => k += 1,
            Err(OutOfBudget) => {
                let outcome = SolveOutcome::BudgetExhausted {
                    lower: k,
                    upper,
                    best: greedy,
                };
                return (outcome, stats);
            }
        }
    }
}

/// Decides whether `g` has a star coloring with colors `1..=k`.
pub fn color_with_palette(
    g: &Graph,
    k: Color,
    budget: &Budget,
) -> (Result<Option<EdgeColoring>, OutOfBudget>, SearchStats) {
    let start = Instant::now();
    let order = bfs_edge_order(g);
    let mut search = Search::new(g, &order, k, budget, start);
    let found = search.run();
    let stats = SearchStats {
        nodes: search.nodes,
        elapsed: start.elapsed(),
    };
    (found, stats)
}

/// Edges in the order breadth-first search from a maximum-degree vertex
/// first reaches them, ties broken by smaller vertex id.
pub fn bfs_edge_order(g: &Graph) -> Vec<EdgeId> {
    let n = g.n();
    let mut seen_v = vec![false; n];
    let mut seen_e = vec![false; g.m()];
    let mut order = Vec::with_capacity(g.m());
    let mut roots: Vec<usize> = (0..n).collect();
    roots.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    for root in roots {
        if seen_v[root] {
            continue;
        }
        seen_v[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &(w, e) in g.incident(u) {
                if !seen_e[e] {
                    seen_e[e] = true;
                    order.push(e);
                }
                if !seen_v[w] {
                    seen_v[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

struct Search<'a> {
    state: PartialState<'a>,
    order: &'a [EdgeId],
    k: Color,
    budget: &'a Budget,
    start: Instant,
    nodes: u64,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, order: &'a [EdgeId], k: Color, budget: &'a Budget, start: Instant) -> Self {
        Search {
            state: PartialState::new(g, k),
            order,
            k,
            budget,
            start,
            nodes: 0,
        }
    }

    fn run(&mut self) -> Result<Option<EdgeColoring>, OutOfBudget> {
        if self.dfs(0, 0)? {
            Ok(Some(EdgeColoring::new(self.state.colors.clone())))
        } else {
            Ok(None)
        }
    }

    fn dfs(&mut self, depth: usize, top: Color) -> Result<bool, OutOfBudget> {
        let Some(&e) = self.order.get(depth) else {
            return Ok(true);
        };
        let limit = (top + 1).min(self.k);
        for a in 1..=limit {
            self.nodes += 1;
            if self.nodes > self.budget.max_nodes
                || (self.nodes & 0xfff == 0 && self.start.elapsed() > self.budget.max_time)
            {
                return Err(OutOfBudget);
            }
            if !self.state.allows(e, a) {
                continue;
            }
            self.state.assign(e, a);
            if self.dfs(depth + 1, top.max(a))? {
                return Ok(true);
            }
            self.state.clear(e);
        }
        Ok(false)
    }
}
