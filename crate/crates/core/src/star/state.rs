//! Incremental bookkeeping for building a star coloring one edge at a time.
//!
//! For every vertex and color we remember which neighbour (if any) is joined
//! by an edge of that color. In a proper partial coloring that neighbour is
//! unique, which makes every alternating walk through a new edge a chain of
//! table lookups.

use crate::graph::{EdgeId, Graph, Vertex};

use super::Color;

const NONE: u32 = u32::MAX;

pub(crate) struct PartialState<'g> {
    g: &'g Graph,
    stride: usize,
    /// `partner[v * stride + c]`: neighbour of `v` along color `c`.
    partner: Vec<u32>,
    pub colors: Vec<Color>,
}

impl<'g> PartialState<'g> {
    pub fn new(g: &'g Graph, max_color: Color) -> Self {
        let stride = max_color as usize + 1;
        PartialState {
            g,
            stride,
            partner: vec![NONE; g.n() * stride],
            colors: vec![0; g.m()],
        }
    }

    fn grow(&mut self, c: Color) {
        let stride = (c as usize + 1).max(self.stride * 2);
        let mut partner = vec![NONE; self.g.n() * stride];
        for v in 0..self.g.n() {
            partner[v * stride..v * stride + self.stride]
                .copy_from_slice(&self.partner[v * self.stride..(v + 1) * self.stride]);
        }
        self.partner = partner;
        self.stride = stride;
    }

    #[inline]
    fn at(&self, v: Vertex, c: Color) -> Option<Vertex> {
        if c as usize >= self.stride {
            return None;
        }
        match self.partner[v * self.stride + c as usize] {
            NONE => None,
            w => Some(w as usize),
        }
    }

    /// Whether coloring edge `e` with `a` keeps the partial coloring a
    /// proper star coloring. Only walks through `e` need checking.
    pub fn allows(&self, e: EdgeId, a: Color) -> bool {
        let (u, v) = self.g.edge(e);
        if self.at(u, a).is_some() || self.at(v, a).is_some() {
            return false;
        }
        for (x, y) in [(u, v), (v, u)] {
            for &(z, f) in self.g.incident(y) {
                let b = self.colors[f];
                if b == 0 {
                    continue;
                }
                // x-y is the second edge: ?-b-x-a-y-b-z-a-?
                if self.at(x, b).is_some() && self.at(z, a).is_some() {
                    return false;
                }
                // x-y is the first edge: x-a-y-b-z-a-w-b-?
                if let Some(w) = self.at(z, a) {
                    if self.at(w, b).is_some() {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn assign(&mut self, e: EdgeId, a: Color) {
        if a as usize >= self.stride {
            self.grow(a);
        }
        let (u, v) = self.g.edge(e);
        self.partner[u * self.stride + a as usize] = v as u32;
        self.partner[v * self.stride + a as usize] = u as u32;
        self.colors[e] = a;
    }

    pub fn clear(&mut self, e: EdgeId) {
        let a = self.colors[e];
        let (u, v) = self.g.edge(e);
        self.partner[u * self.stride + a as usize] = NONE;
        self.partner[v * self.stride + a as usize] = NONE;
        self.colors[e] = 0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn blocks_alternating_square() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let mut s = PartialState::new(&g, 4);
        s.assign(0, 1);
        s.assign(1, 2);
        s.assign(3, 2);
        assert!(!s.allows(2, 1));
        assert!(s.allows(2, 3));
        assert!(!s.allows(2, 2));
    }

    #[test]
    fn blocks_alternating_path_from_either_end() {
        let g = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let mut s = PartialState::new(&g, 2);
        s.assign(1, 2);
        s.assign(2, 1);
        s.assign(3, 2);
        assert!(!s.allows(0, 1));
        s.clear(3);
        s.assign(0, 1);
        assert!(!s.allows(3, 2));
        assert!(s.allows(3, 3));
    }
}
