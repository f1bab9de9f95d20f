//! Outerplanarity, maximal outerplanar graphs and their enumeration.

mod minor;
mod mops;

use thiserror::Error;

use crate::graph::{Diameter, Graph, GraphError, Vertex};

pub use minor::{has_forbidden_minor, MinorSearch, MINOR_SEARCH_LIMIT};
pub use mops::{enumerate_mops, outer_cycle, two_connected_spanning_subgraphs, MopCatalog};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OuterplanarError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("graph is not maximal outerplanar")]
    NotMaximal,
    #[error("maximal outerplanar graphs need at least 3 vertices, got {0}")]
    TooSmall(usize),
}

/// Decides outerplanarity block by block.
///
/// Inside a 2-connected block a degree-2 vertex `y` with neighbours `p`, `q`
/// is peeled off and replaced by the edge `pq`. Each edge counts the peeled
/// triangles resting on it; an edge has two sides, so a count above two, or
/// peeling a vertex whose edges already carry a triangle on both sides,
/// means the block has no outerplanar drawing. A block that runs out of
/// degree-2 vertices before shrinking to one edge is not outerplanar either.
pub fn is_outerplanar(g: &Graph) -> bool {
    let n = g.n();
    if n >= 2 && g.m() > 2 * n - 3 {
        return false;
    }
    blocks(g).iter().all(|b| block_is_outerplanar(g.n(), b))
}

fn block_is_outerplanar(n: usize, block: &[(Vertex, Vertex)]) -> bool {
    use std::collections::BTreeMap;
    if block.len() <= 1 {
        return true;
    }
    let mut load: BTreeMap<(Vertex, Vertex), u8> = BTreeMap::new();
    let mut adj: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    for &(u, v) in block {
        load.insert((u.min(v), u.max(v)), 0);
        adj[u].push(v);
        adj[v].push(u);
    }
    let key = |a: Vertex, b: Vertex| (a.min(b), a.max(b));
    let mut alive = block
        .iter()
        .flat_map(|&(u, v)| [u, v])
        .collect::<std::collections::BTreeSet<_>>()
        .len();
    let mut stack: Vec<Vertex> = (0..n).filter(|&v| adj[v].len() == 2).collect();
    while alive > 2 {
        let Some(y) = stack.pop() else {
            return false;
        };
        if adj[y].len() != 2 {
            continue;
        }
        let (p, q) = (adj[y][0], adj[y][1]);
        if load[&key(y, p)] > 1 || load[&key(y, q)] > 1 {
            return false;
        }
        load.remove(&key(y, p));
        load.remove(&key(y, q));
        adj[y].clear();
        adj[p].retain(|&w| w != y);
        adj[q].retain(|&w| w != y);
        let c = load.entry(key(p, q)).or_insert_with(|| {
            adj[p].push(q);
            adj[q].push(p);
            0
        });
        *c += 1;
        if *c > 2 {
            return false;
        }
        alive -= 1;
        for w in [p, q] {
            if adj[w].len() == 2 {
                stack.push(w);
            }
        }
    }
    true
}

/// Edge sets of the biconnected components.
pub fn blocks(g: &Graph) -> Vec<Vec<(Vertex, Vertex)>> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut clock = 0;
    let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();
    let mut out = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = clock;
        low[root] = clock;
        clock += 1;
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(&mut (u, parent, ref mut i)) = stack.last_mut() {
            if *i < g.degree(u) {
                let w = g.incident(u)[*i].0;
                *i += 1;
                if disc[w] == usize::MAX {
                    disc[w] = clock;
                    low[w] = clock;
                    clock += 1;
                    edge_stack.push((u, w));
                    stack.push((w, u, 0));
                } else if w != parent && disc[w] < disc[u] {
                    low[u] = low[u].min(disc[w]);
                    edge_stack.push((u, w));
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[u]);
                    if low[u] >= disc[p] {
                        let mut comp = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            comp.push(e);
                            if e == (p, u) {
                                break;
                            }
                        }
                        out.push(comp);
                    }
                }
            }
        }
    }
    out
}

/// Outerplanar, and adding any missing edge destroys outerplanarity.
pub fn is_maximal_outerplanar(g: &Graph) -> bool {
    if g.n() < 3 || !is_outerplanar(g) {
        return false;
    }
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if !g.has_edge(u, v) && is_outerplanar(&g.with_edge(u, v).unwrap()) {
                return false;
            }
        }
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub outerplanar: bool,
    pub maximal: bool,
    pub two_connected: bool,
    pub max_degree: usize,
    pub diameter: Diameter,
}

pub fn classify(g: &Graph) -> Classification {
    let outerplanar = is_outerplanar(g);
    Classification {
        outerplanar,
        maximal: outerplanar && is_maximal_outerplanar(g),
        two_connected: g.is_two_connected(),
        max_degree: g.max_degree(),
        diameter: g.diameter(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::new(n, e.iter().copied()).unwrap()
    }

    fn k4() -> Graph {
        g(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    }

    fn k23() -> Graph {
        g(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
    }

    #[test]
    fn forbidden_graphs_rejected() {
        assert!(!is_outerplanar(&k4()));
        assert!(!is_outerplanar(&k23()));
    }

    #[test]
    fn diamond_is_maximal() {
        let d = g(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]);
        assert!(is_outerplanar(&d));
        assert!(is_maximal_outerplanar(&d));
        let c4 = g(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert!(is_outerplanar(&c4));
        assert!(!is_maximal_outerplanar(&c4));
    }

    #[test]
    fn subdivided_k4_rejected() {
        // K4 with edge 2-3 replaced by the path 2-4-3
        let s = g(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (4, 3)]);
        assert!(!is_outerplanar(&s));
    }

    #[test]
    fn trees_and_blocks() {
        let t = g(5, &[(0, 1), (0, 2), (0, 3), (3, 4)]);
        assert!(is_outerplanar(&t));
        assert_eq!(blocks(&t).len(), 4);
        let bowtie = g(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]);
        assert_eq!(blocks(&bowtie).len(), 2);
        assert!(is_outerplanar(&bowtie));
    }

    #[test]
    fn classification_of_triangle() {
        let c = classify(&g(3, &[(0, 1), (1, 2), (0, 2)]));
        assert!(c.outerplanar && c.maximal && c.two_connected);
        assert_eq!(c.diameter, Diameter::Finite(1));
    }
}
