//! Canonical labelling by individualisation and refinement.
//!
//! The search tree branches on the first non-singleton cell of an equitable
//! ordered partition. Leaves are compared by their upper-triangle adjacency
//! bit string (graph6 column order) and the smallest one wins, so the key
//! is the graph6 text of the canonical relabelling. Interchangeable twins
//! inside a cell are branched on only once.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{graph6, Graph, GraphError, Vertex};

pub const DEFAULT_CANON_LIMIT: usize = 16;
const HARD_LIMIT: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CanonicalKey(pub String);

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone)]
pub struct Canonical {
    pub graph: Graph,
    /// `labeling[old] = new`.
    pub labeling: Vec<Vertex>,
    pub key: CanonicalKey,
}

pub(super) fn canonical_form(g: &Graph, limit: usize) -> Result<Canonical, GraphError> {
    let n = g.n();
    let limit = limit.min(HARD_LIMIT);
    if n > limit {
        return Err(GraphError::TooLarge { n, limit });
    }
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).fold(0u64, |m, w| m | 1 << w))
        .collect();
    let mut search = Search {
        adj: &adj,
        best: None,
    };
    let start = refine(&adj, vec![(0..n).collect()]);
    search.explore(start);
    let order = search.best.map(|(_, o)| o).unwrap_or_default();
    let mut labeling = vec![0; n];
    for (new, &old) in order.iter().enumerate() {
        labeling[old] = new;
    }
    let graph = g.relabel(&labeling)?;
    let key = CanonicalKey(graph6::encode(&graph).expect("canonical graphs are small"));
    Ok(Canonical {
        graph,
        labeling,
        key,
    })
}

type Partition = Vec<Vec<Vertex>>;

struct Search<'a> {
    adj: &'a [u64],
    best: Option<(Vec<u64>, Vec<Vertex>)>,
}

impl Search<'_> {
    fn explore(&mut self, part: Partition) {
        let Some(ci) = part.iter().position(|c| c.len() > 1) else {
            let order: Vec<Vertex> = part.into_iter().map(|c| c[0]).collect();
            let bits = leaf_bits(self.adj, &order);
            if self.best.as_ref().is_none_or(|(b, _)| bits < *b) {
                self.best = Some((bits, order));
            }
            return;
        };
        let cell = &part[ci];
        let mut tried: Vec<Vertex> = Vec::new();
        for &v in cell {
            if tried.iter().any(|&u| twins(self.adj, u, v)) {
                continue;
            }
            tried.push(v);
            let mut next = part.clone();
            let rest: Vec<Vertex> = cell.iter().copied().filter(|&w| w != v).collect();
            next.splice(ci..=ci, [vec![v], rest]);
            self.explore(refine(self.adj, next));
        }
    }
}

fn twins(adj: &[u64], u: Vertex, v: Vertex) -> bool {
    adj[u] & !(1 << v) == adj[v] & !(1 << u)
}

/// Bits in graph6 order, packed most-significant first so `Vec<u64>`
/// comparison is lexicographic on the bit string.
fn leaf_bits(adj: &[u64], order: &[Vertex]) -> Vec<u64> {
    let n = order.len();
    let total = n * n.saturating_sub(1) / 2;
    let mut out = vec![0u64; total.div_ceil(64)];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if adj[order[i]] >> order[j] & 1 == 1 {
                out[k / 64] |= 1 << (63 - k % 64);
            }
            k += 1;
        }
    }
    out
}

/// Splits cells by neighbour counts into every cell until stable. The new
/// cell order depends only on the old order and the counts, which keeps the
/// result invariant under relabelling.
fn refine(adj: &[u64], mut part: Partition) -> Partition {
    loop {
        let masks: Vec<u64> = part
            .iter()
            .map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect();
        let mut next: Partition = Vec::with_capacity(part.len());
        for cell in &part {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, Vertex)> = cell
                .iter()
                .map(|&v| {
                    let sig = masks.iter().map(|m| (adj[v] & m).count_ones()).collect();
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut i = 0;
            while i < keyed.len() {
                let mut j = i;
                while j < keyed.len() && keyed[j].0 == keyed[i].0 {
                    j += 1;
                }
                next.push(keyed[i..j].iter().map(|(_, v)| *v).collect());
                i = j;
            }
        }
        if next.len() == part.len() {
            return next;
        }
        part = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::new(n, e.iter().copied()).unwrap()
    }

    #[test]
    fn relabelled_square_has_same_key() {
        let a = g(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let b = g(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]);
        assert_eq!(a.canonical_key().unwrap(), b.canonical_key().unwrap());
    }

    #[test]
    fn path_and_star_differ() {
        let p = g(4, &[(0, 1), (1, 2), (2, 3)]);
        let s = g(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_ne!(p.canonical_key().unwrap(), s.canonical_key().unwrap());
    }

    #[test]
    fn symmetric_graphs_finish() {
        let k: Vec<(usize, usize)> = (0..16)
            .flat_map(|i| (i + 1..16).map(move |j| (i, j)))
            .collect();
        let kn = g(16, &k);
        assert_eq!(kn.canonical_key().unwrap(), kn.canonical_key().unwrap());
        Graph::empty(16).canonical_key().unwrap();
    }

    #[test]
    fn limit_enforced() {
        assert!(matches!(
            Graph::empty(17).canonical_key(),
            Err(GraphError::TooLarge { n: 17, limit: 16 })
        ));
        assert!(Graph::empty(17).canonical_form_with_limit(20).is_ok());
    }

    #[test]
    fn canonical_graph_is_isomorphic_image() {
        let a = g(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 2)]);
        let c = a.canonical_form().unwrap();
        assert_eq!(a.relabel(&c.labeling).unwrap(), c.graph);
        assert_eq!(c.graph.canonical_key().unwrap(), c.key);
    }
}
