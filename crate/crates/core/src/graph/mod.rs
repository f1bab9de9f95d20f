//! Simple undirected graphs with a stable edge indexing.
//!
//! Edges are stored once as `(u, v)` with `u < v`, sorted, so edge ids are
//! fully determined by the edge set. Everything downstream (colorings,
//! solver state, figure tables) indexes edges by this id.

mod canon;
pub mod enumerate;
pub mod graph6;

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

pub use canon::{Canonical, CanonicalKey, DEFAULT_CANON_LIMIT};

pub type Vertex = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("edge ({0}, {1}) listed twice")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: Vertex, n: usize },
    #[error("graph has {n} vertices, limit is {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("permutation is not a bijection on 0..{0}")]
    BadPermutation(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl Diameter {
    pub fn finite(self) -> Option<usize> {
        match self {
            Diameter::Finite(d) => Some(d),
            Diameter::Infinite => None,
        }
    }
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub min: usize,
    pub max: usize,
    /// Degrees sorted in non-increasing order.
    pub sequence: Vec<usize>,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<(Vertex, EdgeId)>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Graph {
    /// Builds a graph on `0..n`. Edge orientation in the input is irrelevant.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut list = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            for v in [a, b] {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { v, n });
                }
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adj = vec![Vec::new(); n];
        for (id, &(u, v)) in list.iter().enumerate() {
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        Ok(Graph { n, edges: list, adj })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> (Vertex, Vertex) {
        self.edges[id]
    }

    /// Neighbours of `v` in increasing order, paired with the connecting edge id.
    pub fn incident(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn edge_id(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_id(u, v).is_some()
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let mut sequence: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        sequence.sort_unstable_by(|a, b| b.cmp(a));
        DegreeProfile {
            min: sequence.last().copied().unwrap_or(0),
            max: sequence.first().copied().unwrap_or(0),
            sequence,
        }
    }

    pub fn with_edge(&self, u: Vertex, v: Vertex) -> Result<Graph, GraphError> {
        Graph::new(self.n, self.edges.iter().copied().chain([(u, v)]))
    }

    pub fn without_edges(&self, drop: &[EdgeId]) -> Graph {
        let keep = self
            .edges
            .iter()
            .enumerate()
            .filter(|(id, _)| !drop.contains(id))
            .map(|(_, &e)| e);
        Graph::new(self.n, keep).expect("subgraph of a simple graph is simple")
    }

    /// `perm[old] = new`.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Graph, GraphError> {
        let mut seen = vec![false; self.n];
        if perm.len() != self.n {
            return Err(GraphError::BadPermutation(self.n));
        }
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(GraphError::BadPermutation(self.n));
            }
        }
        Graph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    /// Breadth-first distances from `src`; `None` for unreachable vertices.
    pub fn distances_from(&self, src: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::from([src]);
        dist[src] = Some(0);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for w in self.neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.distances_from(0).iter().all(Option::is_some)
    }

    pub fn diameter(&self) -> Diameter {
        let mut best = 0;
        for s in 0..self.n {
            for d in self.distances_from(s) {
                match d {
                    Some(d) => best = best.max(d),
                    None => return Diameter::Infinite,
                }
            }
        }
        Diameter::Finite(best)
    }

    /// Cut vertices, found with the usual low-point DFS.
    pub fn articulation_points(&self) -> Vec<Vertex> {
        let n = self.n;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut cut = vec![false; n];
        let mut clock = 0;
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            // (vertex, parent, next neighbour index)
            let mut stack = vec![(root, usize::MAX, 0usize)];
            disc[root] = clock;
            low[root] = clock;
            clock += 1;
            let mut root_children = 0;
            while let Some(&mut (u, parent, ref mut i)) = stack.last_mut() {
                if *i < self.adj[u].len() {
                    let w = self.adj[u][*i].0;
                    *i += 1;
                    if disc[w] == usize::MAX {
                        disc[w] = clock;
                        low[w] = clock;
                        clock += 1;
                        if u == root {
                            root_children += 1;
                        }
                        stack.push((w, u, 0));
                    } else if w != parent {
                        low[u] = low[u].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _, _)) = stack.last() {
                        low[p] = low[p].min(low[u]);
                        if p != root && low[u] >= disc[p] {
                            cut[p] = true;
                        }
                    }
                }
            }
            if root_children > 1 {
                cut[root] = true;
            }
        }
        (0..n).filter(|&v| cut[v]).collect()
    }

    /// Connected, at least three vertices, no cut vertex.
    pub fn is_two_connected(&self) -> bool {
        self.n >= 3 && self.is_connected() && self.articulation_points().is_empty()
    }

    pub fn canonical_form(&self) -> Result<Canonical, GraphError> {
        canon::canonical_form(self, DEFAULT_CANON_LIMIT)
    }

    pub fn canonical_form_with_limit(&self, limit: usize) -> Result<Canonical, GraphError> {
        canon::canonical_form(self, limit)
    }

    /// Equal exactly for isomorphic graphs (up to the vertex limit).
    pub fn canonical_key(&self) -> Result<CanonicalKey, GraphError> {
        Ok(self.canonical_form()?.key)
    }

    pub fn is_isomorphic(&self, other: &Graph) -> Result<bool, GraphError> {
        if self.n != other.n || self.m() != other.m() {
            return Ok(false);
        }
        Ok(self.canonical_key()? == other.canonical_key()?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn rejects_loops_and_duplicates() {
        assert_eq!(Graph::new(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            Graph::new(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            Graph::new(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange { v: 2, n: 2 })
        ));
    }

    #[test]
    fn edge_ids_follow_sorted_order() {
        let g = Graph::new(3, [(2, 1), (0, 2)]).unwrap();
        assert_eq!(g.edges(), &[(0, 2), (1, 2)]);
        assert_eq!(g.edge_id(2, 1), Some(1));
        assert_eq!(g.edge_id(0, 1), None);
    }

    #[test]
    fn diameters() {
        assert_eq!(cycle(6).diameter(), Diameter::Finite(3));
        assert_eq!(Graph::empty(1).diameter(), Diameter::Finite(0));
        assert_eq!(Graph::new(3, [(0, 1)]).unwrap().diameter(), Diameter::Infinite);
    }

    #[test]
    fn two_connectivity() {
        assert!(cycle(4).is_two_connected());
        let bowtie = Graph::new(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert_eq!(bowtie.articulation_points(), vec![2]);
        assert!(!bowtie.is_two_connected());
        assert!(!Graph::new(2, [(0, 1)]).unwrap().is_two_connected());
    }

    #[test]
    fn relabel_checks_bijection() {
        let g = cycle(4);
        assert!(g.relabel(&[0, 0, 1, 2]).is_err());
        let h = g.relabel(&[1, 0, 3, 2]).unwrap();
        assert!(h.has_edge(0, 3) && !h.has_edge(1, 3));
    }

    #[test]
    fn degree_profile_sorted() {
        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let p = star.degree_profile();
        assert_eq!((p.min, p.max), (1, 3));
        assert_eq!(p.sequence, vec![3, 1, 1, 1]);
    }
}
