//! Enumeration of maximal outerplanar graphs.
//!
//! A maximal outerplanar graph on `n` vertices is a triangulated `n`-gon.
//! Starting from a triangle, each step glues a new vertex onto one edge of
//! the current outer cycle. Positions on the outer cycle are renumbered
//! after every step (vertex 0 stays first), so each level is exactly the
//! set of triangulations of a polygon with labelled corners.

use std::collections::{BTreeMap, BTreeSet};

use crate::graph::{CanonicalKey, Graph};

use super::{is_maximal_outerplanar, OuterplanarError};

type Chords = Vec<(u8, u8)>;

#[derive(Debug, Clone)]
pub struct MopCatalog {
    pub n: usize,
    /// Triangulations of a polygon with fixed, labelled corners.
    pub rooted_count: u64,
    /// One canonical representative per isomorphism class, sorted by key.
    pub members: Vec<(CanonicalKey, Graph)>,
}

pub fn enumerate_mops(n: usize) -> Result<MopCatalog, OuterplanarError> {
    if n < 3 {
        return Err(OuterplanarError::TooSmall(n));
    }
    if n > crate::graph::DEFAULT_CANON_LIMIT {
        return Err(crate::graph::GraphError::TooLarge {
            n,
            limit: crate::graph::DEFAULT_CANON_LIMIT,
        }
        .into());
    }
    let mut level: BTreeSet<Chords> = BTreeSet::from([Vec::new()]);
    for k in 3..n {
        level = level.iter().flat_map(|c| grow(c, k)).collect();
    }
    let mut members = BTreeMap::new();
    for chords in &level {
        let g = polygon_with(n, chords);
        let canon = g.canonical_form()?;
        members.entry(canon.key).or_insert(canon.graph);
    }
    Ok(MopCatalog {
        n,
        rooted_count: level.len() as u64,
        members: members.into_iter().collect(),
    })
}

/// All ways to glue a vertex onto an outer edge of a triangulated `k`-gon.
fn grow(chords: &Chords, k: usize) -> impl Iterator<Item = Chords> + '_ {
    (0..k).map(move |i| {
        let shift = |p: u8| if p as usize > i { p + 1 } else { p };
        let mut next: Chords = chords.iter().map(|&(a, b)| (shift(a), shift(b))).collect();
        // the glued-over edge (i, i+1) turns into a chord
        next.push(if i + 1 < k {
            (i as u8, i as u8 + 2)
        } else {
            (0, i as u8)
        });
        next.sort_unstable();
        next
    })
}

fn polygon_with(n: usize, chords: &Chords) -> Graph {
    let ring = (0..n).map(|i| (i, (i + 1) % n));
    let inner = chords.iter().map(|&(a, b)| (a as usize, b as usize));
    Graph::new(n, ring.chain(inner)).unwrap()
}

/// Outer Hamiltonian cycle of a maximal outerplanar graph, as edge ids.
/// These are the edges lying on exactly one triangle.
pub fn outer_cycle(g: &Graph) -> Result<Vec<usize>, OuterplanarError> {
    if g.n() < 3 {
        return Err(OuterplanarError::TooSmall(g.n()));
    }
    if !is_maximal_outerplanar(g) {
        return Err(OuterplanarError::NotMaximal);
    }
    if g.n() == 3 {
        return Ok((0..3).collect());
    }
    Ok((0..g.m())
        .filter(|&e| {
            let (u, v) = g.edge(e);
            let common = g.neighbors(u).filter(|&w| g.has_edge(v, w)).count();
            common == 1
        })
        .collect())
}

/// Spanning subgraphs obtained by deleting any set of chords, one per
/// isomorphism class. The outer cycle survives every deletion, so each
/// result is 2-connected; the filter is kept as a guard.
pub fn two_connected_spanning_subgraphs(
    mop: &Graph,
) -> Result<Vec<(CanonicalKey, Graph)>, OuterplanarError> {
    let outer = outer_cycle(mop)?;
    let chords: Vec<usize> = (0..mop.m()).filter(|e| !outer.contains(e)).collect();
    let mut out = BTreeMap::new();
    for mask in 0u64..1 << chords.len() {
        let drop: Vec<usize> = chords
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let sub = mop.without_edges(&drop);
        if sub.is_two_connected() {
            let canon = sub.canonical_form()?;
            out.entry(canon.key).or_insert(canon.graph);
        }
    }
    Ok(out.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hexagon() {
        let cat = enumerate_mops(6).unwrap();
        assert_eq!(cat.rooted_count, 14);
        assert_eq!(cat.members.len(), 3);
        for (_, g) in &cat.members {
            assert_eq!(g.m(), 9);
            assert!(is_maximal_outerplanar(g));
        }
    }

    #[test]
    fn too_small() {
        assert!(matches!(enumerate_mops(2), Err(OuterplanarError::TooSmall(2))));
    }

    #[test]
    fn fan_on_five_has_three_spanning_classes() {
        let f5 = Graph::new(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(outer_cycle(&f5).unwrap().len(), 5);
        // two chords: keep both, drop one of two (isomorphic), drop both
        assert_eq!(two_connected_spanning_subgraphs(&f5).unwrap().len(), 3);
    }

    #[test]
    fn rejects_non_maximal() {
        let c5 = Graph::new(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert!(matches!(outer_cycle(&c5), Err(OuterplanarError::NotMaximal)));
    }
}
