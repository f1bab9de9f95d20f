//! Exhaustive reference solver for very small graphs.
//!
//! Enumerates every coloring in restricted-growth form and checks each one
//! with the full validator, so it shares no search logic with the exact
//! solver.

use thiserror::Error;

use crate::graph::Graph;

use super::{star_violations, Color, EdgeColoring};

pub const BRUTE_FORCE_EDGE_LIMIT: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("graph has {0} edges, brute force handles at most {BRUTE_FORCE_EDGE_LIMIT}")]
pub struct TooManyEdges(pub usize);

pub fn brute_force_chi_star(g: &Graph) -> Result<(Color, EdgeColoring), TooManyEdges> {
    let m = g.m();
    if m > BRUTE_FORCE_EDGE_LIMIT {
        return Err(TooManyEdges(m));
    }
    for k in 0..=m as Color {
        let mut colors = vec![0; m];
        if let Some(c) = fill(g, &mut colors, 0, 0, k) {
            return Ok((k, c));
        }
    }
    unreachable!("m distinct colors always give a star coloring")
}

fn fill(g: &Graph, colors: &mut [Color], i: usize, top: Color, k: Color) -> Option<EdgeColoring> {
    if i == colors.len() {
        let c = EdgeColoring::new(colors.to_vec());
        return star_violations(g, &c).ok()?.is_empty().then_some(c);
    }
    for a in 1..=(top + 1).min(k) {
        colors[i] = a;
        if let Some(c) = fill(g, colors, i + 1, top.max(a), k) {
            return Some(c);
        }
    }
    None
}
