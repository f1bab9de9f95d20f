//! Reference test for K4 and K2,3 minors by exhaustive deletion and
//! contraction, memoised on canonical keys. Exponential; meant as an
//! independent check of the fast recogniser on small graphs.

use std::collections::HashMap;

use crate::graph::{CanonicalKey, Graph, GraphError, Vertex};

pub const MINOR_SEARCH_LIMIT: usize = 10;

#[derive(Debug, Default)]
pub struct MinorSearch {
    memo: HashMap<CanonicalKey, bool>,
}

impl MinorSearch {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// True when `g` has K4 or K2,3 as a minor.
    pub fn has_forbidden_minor(&mut self, g: &Graph) -> Result<bool, GraphError> {
        if g.n() > MINOR_SEARCH_LIMIT {
            return Err(GraphError::TooLarge {
                n: g.n(),
                limit: MINOR_SEARCH_LIMIT,
            });
        }
        Ok(self.search(strip(g)))
    }

    fn search(&mut self, g: Graph) -> bool {
        if g.n() < 4 {
            return false;
        }
        let key = g.canonical_key().expect("within limit");
        if let Some(&hit) = self.memo.get(&key) {
            return hit;
        }
        let found = is_k4(&g) || is_k23(&g) || {
            (0..g.m()).any(|e| {
                self.search(strip(&g.without_edges(&[e]))) || self.search(strip(&contract(&g, e)))
            })
        };
        self.memo.insert(key, found);
        found
    }
}

pub fn has_forbidden_minor(g: &Graph) -> Result<bool, GraphError> {
    MinorSearch::new().has_forbidden_minor(g)
}

fn is_k4(g: &Graph) -> bool {
    g.n() == 4 && g.m() == 6
}

fn is_k23(g: &Graph) -> bool {
    let d = g.degree_profile().sequence;
    g.n() == 5 && g.m() == 6 && d == [3, 3, 2, 2, 2] && {
        let big: Vec<Vertex> = (0..5).filter(|&v| g.degree(v) == 3).collect();
        !g.has_edge(big[0], big[1])
    }
}

/// Drops vertices of degree at most one until none remain. Both target
/// minors are 2-connected, so such vertices never take part in a model.
fn strip(g: &Graph) -> Graph {
    let mut keep: Vec<bool> = vec![true; g.n()];
    let mut deg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut changed = true;
    while changed {
        changed = false;
        for v in 0..g.n() {
            if keep[v] && deg[v] <= 1 {
                keep[v] = false;
                changed = true;
                for w in g.neighbors(v) {
                    if keep[w] {
                        deg[w] -= 1;
                    }
                }
            }
        }
    }
    induced(g, &keep)
}

fn induced(g: &Graph, keep: &[bool]) -> Graph {
    let mut idx = vec![usize::MAX; g.n()];
    let mut k = 0;
    for v in 0..g.n() {
        if keep[v] {
            idx[v] = k;
            k += 1;
        }
    }
    let edges = g
        .edges()
        .iter()
        .filter(|&&(u, v)| keep[u] && keep[v])
        .map(|&(u, v)| (idx[u], idx[v]));
    Graph::new(k, edges).unwrap()
}

fn contract(g: &Graph, e: usize) -> Graph {
    let (a, b) = g.edge(e);
    let map = |v: Vertex| {
        let v = if v == b { a } else { v };
        if v > b {
            v - 1
        } else {
            v
        }
    };
    let mut edges: Vec<(Vertex, Vertex)> = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (x, y) = (map(u), map(v));
            (x.min(y), x.max(y))
        })
        .filter(|(x, y)| x != y)
        .collect();
    edges.sort_unstable();
    edges.dedup();
    Graph::new(g.n() - 1, edges).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_targets_and_their_subdivisions() {
        let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(has_forbidden_minor(&k4).unwrap());
        let w5 = Graph::new(6, [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]).unwrap();
        assert!(has_forbidden_minor(&w5).unwrap());
        let c6 = Graph::new(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        assert!(!has_forbidden_minor(&c6).unwrap());
    }

    #[test]
    fn contraction_merges_parallel_edges() {
        let tri = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let c = contract(&tri, 0);
        assert_eq!(c.n(), 2);
        assert_eq!(c.m(), 1);
    }
}
