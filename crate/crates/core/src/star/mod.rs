//! Star edge colorings: representation, validation and solvers.
//!
//! A proper edge coloring is a star coloring when no path on four edges and
//! no cycle on four edges alternates between two colors.

mod brute;
mod greedy;
mod solver;
mod state;

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{EdgeId, Graph, Vertex};

pub use brute::{brute_force_chi_star, TooManyEdges, BRUTE_FORCE_EDGE_LIMIT};
pub use greedy::greedy_star_coloring;
pub use solver::{
    bfs_edge_order, color_with_palette, exact_chi_star, Budget, OutOfBudget, SearchStats,
    SolveOutcome,
};

pub type Color = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("coloring has {found} entries but the graph has {expected} edges")]
    LengthMismatch { expected: usize, found: usize },
    #[error("edge ({0}, {1}) has no color")]
    PartialColoring(Vertex, Vertex),
    #[error("({0}, {1}) is not an edge of the graph")]
    UnknownEdge(Vertex, Vertex),
    #[error("edge ({0}, {1}) colored twice")]
    DuplicateEdge(Vertex, Vertex),
}

/// Colors indexed by edge id. Color ids start at 1; 0 marks an uncolored edge.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    colors: Vec<Color>,
}

impl EdgeColoring {
    pub fn new(colors: Vec<Color>) -> Self {
        EdgeColoring { colors }
    }

    pub fn uncolored(m: usize) -> Self {
        EdgeColoring { colors: vec![0; m] }
    }

    /// Builds a coloring from `(u, v, color)` triples. Every edge of `g`
    /// must appear exactly once.
    pub fn from_triples<I>(g: &Graph, triples: I) -> Result<Self, ColoringError>
    where
        I: IntoIterator<Item = (Vertex, Vertex, Color)>,
    {
        let mut colors = vec![0; g.m()];
        for (u, v, c) in triples {
            let id = g.edge_id(u, v).ok_or(ColoringError::UnknownEdge(u, v))?;
            if colors[id] != 0 {
                return Err(ColoringError::DuplicateEdge(u, v));
            }
            colors[id] = c;
        }
        let coloring = EdgeColoring { colors };
        coloring.check_total(g)?;
        Ok(coloring)
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn get(&self, e: EdgeId) -> Color {
        self.colors[e]
    }

    pub fn set(&mut self, e: EdgeId, c: Color) {
        self.colors[e] = c;
    }

    pub fn color_of(&self, g: &Graph, u: Vertex, v: Vertex) -> Option<Color> {
        g.edge_id(u, v).map(|e| self.colors[e]).filter(|&c| c != 0)
    }

    /// Palette size is the largest color id in use.
    pub fn palette(&self) -> Color {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    pub fn distinct_colors(&self) -> usize {
        self.colors.iter().filter(|&&c| c != 0).collect::<BTreeSet<_>>().len()
    }

    pub fn check_total(&self, g: &Graph) -> Result<(), ColoringError> {
        if self.colors.len() != g.m() {
            return Err(ColoringError::LengthMismatch {
                expected: g.m(),
                found: self.colors.len(),
            });
        }
        match self.colors.iter().position(|&c| c == 0) {
            Some(e) => {
                let (u, v) = g.edge(e);
                Err(ColoringError::PartialColoring(u, v))
            }
            None => Ok(()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    /// Two edges sharing a vertex with the same color.
    Proper,
    /// An alternating path on four edges through five distinct vertices.
    Path,
    /// An alternating cycle on four edges.
    Cycle,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    /// Walk along the offending edges. For cycles the first vertex is not repeated.
    pub vertices: Vec<Vertex>,
    pub colors: (Color, Color),
}

/// Every obstruction to `c` being a star coloring of `g`, deduplicated up to
/// reversal and rotation. Empty means the coloring is valid.
pub fn star_violations(g: &Graph, c: &EdgeColoring) -> Result<Vec<Violation>, ColoringError> {
    c.check_total(g)?;
    let col = |u: Vertex, v: Vertex| c.colors[g.edge_id(u, v).unwrap()];
    let mut out = BTreeSet::new();

    for v in 0..g.n() {
        let inc = g.incident(v);
        for (i, &(a, ea)) in inc.iter().enumerate() {
            for &(b, eb) in &inc[i + 1..] {
                if c.colors[ea] == c.colors[eb] {
                    out.insert(Violation {
                        kind: ViolationKind::Proper,
                        vertices: vec![a, v, b],
                        colors: (c.colors[ea], c.colors[ea]),
                    });
                }
            }
        }
    }

    // Walks of four edges with alternating, distinct colors. Only simple
    // paths and closed 4-cycles are kept.
    let mut walk = Vec::with_capacity(5);
    for s in 0..g.n() {
        walk.clear();
        walk.push(s);
        extend(g, &col, &mut walk, &mut out);
    }
    Ok(out.into_iter().collect())
}

fn extend(
    g: &Graph,
    col: &impl Fn(Vertex, Vertex) -> Color,
    walk: &mut Vec<Vertex>,
    out: &mut BTreeSet<Violation>,
) {
    let len = walk.len();
    if len >= 3 {
        let c0 = col(walk[0], walk[1]);
        let c1 = col(walk[1], walk[2]);
        let expect = if len.is_multiple_of(2) { c0 } else { c1 };
        if c0 == c1 || col(walk[len - 2], walk[len - 1]) != expect {
            return;
        }
    }
    if len == 5 {
        let c0 = col(walk[0], walk[1]);
        let c1 = col(walk[1], walk[2]);
        let closed = walk[0] == walk[4];
        out.insert(normalise(&walk[..if closed { 4 } else { 5 }], closed, (c0, c1)));
        return;
    }
    let last = walk[len - 1];
    for w in g.neighbors(last) {
        let closes = len == 4 && w == walk[0];
        if walk.contains(&w) && !closes {
            continue;
        }
        walk.push(w);
        extend(g, col, walk, out);
        walk.pop();
    }
}

fn normalise(vs: &[Vertex], closed: bool, colors: (Color, Color)) -> Violation {
    let (lo, hi) = (colors.0.min(colors.1), colors.0.max(colors.1));
    if !closed {
        let fwd = vs.to_vec();
        let rev: Vec<Vertex> = vs.iter().rev().copied().collect();
        return Violation {
            kind: ViolationKind::Path,
            vertices: fwd.min(rev),
            colors: (lo, hi),
        };
    }
    let k = vs.len();
    let mut best: Option<Vec<Vertex>> = None;
    for start in 0..k {
        for dir in [1, k - 1] {
            let cand: Vec<Vertex> = (0..k).map(|i| vs[(start + dir * i) % k]).collect();
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    Violation {
        kind: ViolationKind::Cycle,
        vertices: best.unwrap(),
        colors: (lo, hi),
    }
}

pub fn is_star_coloring(g: &Graph, c: &EdgeColoring) -> bool {
    matches!(star_violations(g, c), Ok(v) if v.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> Graph {
        Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn alternating_square_is_a_cycle_violation() {
        let g = square();
        let c = EdgeColoring::from_triples(&g, [(0, 1, 1), (1, 2, 2), (2, 3, 1), (3, 0, 2)]).unwrap();
        let v = star_violations(&g, &c).unwrap();
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].kind, ViolationKind::Cycle);
        assert_eq!(v[0].vertices, vec![0, 1, 2, 3]);
    }

    #[test]
    fn alternating_path_found_once() {
        let g = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let c = EdgeColoring::new(vec![1, 2, 1, 2]);
        let v = star_violations(&g, &c).unwrap();
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].kind, ViolationKind::Path);
        assert!(is_star_coloring(&g, &EdgeColoring::new(vec![1, 2, 1, 3])));
    }

    #[test]
    fn proper_violation_reported() {
        let g = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let v = star_violations(&g, &EdgeColoring::new(vec![4, 4])).unwrap();
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].kind, ViolationKind::Proper);
    }

    #[test]
    fn partial_colorings_rejected() {
        let g = square();
        assert_eq!(
            star_violations(&g, &EdgeColoring::new(vec![1, 2, 0, 3])),
            Err(ColoringError::PartialColoring(1, 2))
        );
        assert!(matches!(
            star_violations(&g, &EdgeColoring::new(vec![1])),
            Err(ColoringError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn from_triples_checks_edges() {
        let g = square();
        assert_eq!(
            EdgeColoring::from_triples(&g, [(0, 2, 1)]),
            Err(ColoringError::UnknownEdge(0, 2))
        );
    }
}
