//! Small exhaustive graph catalogues, one graph per isomorphism class.

use std::collections::BTreeMap;

use super::{CanonicalKey, Graph, GraphError};

/// Every graph on `n` vertices.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>, GraphError> {
    let mut level = dedupe([Graph::empty(n)])?;
    let mut out: Vec<Graph> = level.values().cloned().collect();
    for _ in 0..n * n.saturating_sub(1) / 2 {
        let next = level.values().flat_map(|g| {
            (0..n).flat_map(move |u| {
                (u + 1..n)
                    .filter(move |&v| !g.has_edge(u, v))
                    .map(move |v| g.with_edge(u, v).unwrap())
            })
        });
        level = dedupe(next)?;
        out.extend(level.values().cloned());
    }
    Ok(out)
}

/// Every connected graph with between one and `max_edges` edges.
pub fn connected_graphs(max_edges: usize) -> Result<Vec<Graph>, GraphError> {
    let mut level = dedupe([Graph::new(2, [(0, 1)]).unwrap()])?;
    let mut out: Vec<Graph> = Vec::new();
    for _ in 1..=max_edges {
        out.extend(level.values().cloned());
        let next: Vec<Graph> = level
            .values()
            .flat_map(|g| {
                let n = g.n();
                let inner = (0..n).flat_map(move |u| {
                    (u + 1..n)
                        .filter(move |&v| !g.has_edge(u, v))
                        .map(move |v| g.with_edge(u, v).unwrap())
                });
                let pendant = (0..n).map(move |u| {
                    Graph::new(n + 1, g.edges().iter().copied().chain([(u, n)])).unwrap()
                });
                inner.chain(pendant)
            })
            .collect();
        level = dedupe(next)?;
    }
    Ok(out)
}

fn dedupe(graphs: impl IntoIterator<Item = Graph>) -> Result<BTreeMap<CanonicalKey, Graph>, GraphError> {
    let mut out = BTreeMap::new();
    for g in graphs {
        let c = g.canonical_form()?;
        out.entry(c.key).or_insert(c.graph);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_counts() {
        // unlabeled graphs on 1..=5 vertices
        let counts: Vec<usize> = (1..=5).map(|n| all_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34]);
        // connected graphs with exactly 1..=6 edges
        let by_m = connected_graphs(6).unwrap().iter().fold([0usize; 7], |mut acc, g| {
            acc[g.m()] += 1;
            acc
        });
        assert_eq!(&by_m[1..], &[1, 1, 3, 5, 12, 30]);
    }
}
