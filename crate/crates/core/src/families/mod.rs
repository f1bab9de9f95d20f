//! Named graph families with role-labelled vertices.
//!
//! Vertices carry role names such as `v3` or `v0^(2)` so colorings can be
//! written down edge by edge without caring about vertex ids.

mod figures;
mod schemes;
mod strip;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, Vertex};
use crate::outerplanar::{is_maximal_outerplanar, is_outerplanar};
use crate::star::{Color, EdgeColoring};

pub use figures::{Figure, FigureCatalog, FigureError};
pub use schemes::{family_coloring, formula_coloring, ColoringSource, FamilyColoring};
pub use strip::{strip_block_counts, STRIP_PERIOD};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Path,
    Cycle,
    /// A hub joined to every vertex of a path; `n` counts all vertices.
    Fan,
    /// Six vertices, nine edges, three vertices of degree four.
    G61,
    /// `G61` without the chords `v0v2` and `v0v3`.
    G61Prime,
    /// Six-vertex maximal outerplanar graph of diameter three.
    G62,
    /// `G61` with `Δ - 4` pendant leaves on each of `v0`, `v2`, `v3`.
    GnDelta,
    /// `GnDelta` with the leaves of each hub threaded into a path.
    HPrime,
    /// Maximal outerplanar extension of `G62` with hubs `v0`, `v3`, `v4`.
    H,
    /// Maximal outerplanar graph on seven core vertices with hubs `v2`, `v3`.
    H2,
    /// Periodic maximal outerplanar strip of maximum degree five.
    Delta5Strip,
}

impl Family {
    pub const ALL: [Family; 11] = [
        Family::Path,
        Family::Cycle,
        Family::Fan,
        Family::G61,
        Family::G61Prime,
        Family::G62,
        Family::GnDelta,
        Family::HPrime,
        Family::H,
        Family::H2,
        Family::Delta5Strip,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Fan => "fan",
            Family::G61 => "g61",
            Family::G61Prime => "g61-prime",
            Family::G62 => "g62",
            Family::GnDelta => "g-n-delta",
            Family::HPrime => "h-prime",
            Family::H => "h",
            Family::H2 => "h2",
            Family::Delta5Strip => "delta5-strip",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for Family {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.to_ascii_lowercase().replace('_', "-");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == norm)
            .ok_or_else(|| FamilyError::UnknownFamily(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Params {
    pub n: Option<usize>,
    pub delta: Option<usize>,
    pub blocks: Option<usize>,
}

impl Params {
    pub fn n(n: usize) -> Self {
        Params {
            n: Some(n),
            ..Self::default()
        }
    }

    pub fn delta(delta: usize) -> Self {
        Params {
            delta: Some(delta),
            ..Self::default()
        }
    }

    pub fn blocks(blocks: usize) -> Self {
        Params {
            blocks: Some(blocks),
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("bad parameters for {family}: {reason}")]
    BadParams { family: Family, reason: String },
    #[error("no coloring rule for {family} at max degree {delta}")]
    OutOfRange { family: Family, delta: usize },
    #[error("built {family} does not have its declared shape: {reason}")]
    PostconditionFailed { family: Family, reason: String },
    #[error("no vertex has role {0:?}")]
    UnknownRole(String),
    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(String, String),
}

/// What a construction promises about its output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Declared {
    pub max_degree: usize,
    /// Vertices that must have degree `max_degree`.
    pub hubs: Vec<String>,
    pub outerplanar: bool,
    pub maximal: bool,
}

#[derive(Debug, Clone)]
pub struct FamilyInstance {
    pub family: Family,
    pub params: Params,
    pub graph: Graph,
    roles: Vec<String>,
    index: HashMap<String, Vertex>,
    pub declared: Declared,
}

impl FamilyInstance {
    pub fn role(&self, v: Vertex) -> &str {
        &self.roles[v]
    }

    pub fn roles(&self) -> &[String] {
        &self.roles
    }

    pub fn vertex(&self, role: &str) -> Result<Vertex, FamilyError> {
        self.index
            .get(role)
            .copied()
            .ok_or_else(|| FamilyError::UnknownRole(role.to_string()))
    }

    /// Coloring from `(role, role, color)` rows; every edge exactly once.
    pub fn coloring_from_roles<'a, I>(&self, rows: I) -> Result<EdgeColoring, FamilyError>
    where
        I: IntoIterator<Item = (&'a str, &'a str, Color)>,
    {
        let mut triples = Vec::new();
        for (a, b, c) in rows {
            let (u, v) = (self.vertex(a)?, self.vertex(b)?);
            if !self.graph.has_edge(u, v) {
                return Err(FamilyError::NotAnEdge(a.to_string(), b.to_string()));
            }
            triples.push((u, v, c));
        }
        EdgeColoring::from_triples(&self.graph, triples).map_err(|e| FamilyError::PostconditionFailed {
            family: self.family,
            reason: e.to_string(),
        })
    }

    pub fn edge_roles(&self, e: usize) -> (&str, &str) {
        let (u, v) = self.graph.edge(e);
        (&self.roles[u], &self.roles[v])
    }
}

pub fn leaf(hub: usize, i: usize) -> String {
    format!("v{hub}^({i})")
}

#[derive(Default)]
struct Builder {
    roles: Vec<String>,
    index: HashMap<String, Vertex>,
    edges: Vec<(Vertex, Vertex)>,
}

impl Builder {
    fn vertex(&mut self, role: &str) -> Vertex {
        if let Some(&v) = self.index.get(role) {
            return v;
        }
        let v = self.roles.len();
        self.roles.push(role.to_string());
        self.index.insert(role.to_string(), v);
        v
    }

    fn edge(&mut self, a: &str, b: &str) {
        let (u, v) = (self.vertex(a), self.vertex(b));
        self.edges.push((u, v));
    }

    fn chain<S: AsRef<str>>(&mut self, names: &[S]) {
        for w in names.windows(2) {
            self.edge(w[0].as_ref(), w[1].as_ref());
        }
    }

    fn finish(self, family: Family, params: Params, declared: Declared) -> Result<FamilyInstance, FamilyError> {
        let graph = Graph::new(self.roles.len(), self.edges).map_err(|e| FamilyError::PostconditionFailed {
            family,
            reason: e.to_string(),
        })?;
        let inst = FamilyInstance {
            family,
            params,
            graph,
            roles: self.roles,
            index: self.index,
            declared,
        };
        check_declared(&inst)?;
        Ok(inst)
    }
}

fn check_declared(inst: &FamilyInstance) -> Result<(), FamilyError> {
    let fail = |reason: String| {
        Err(FamilyError::PostconditionFailed {
            family: inst.family,
            reason,
        })
    };
    let d = &inst.declared;
    let g = &inst.graph;
    if g.max_degree() != d.max_degree {
        return fail(format!("max degree {} != {}", g.max_degree(), d.max_degree));
    }
    for h in &d.hubs {
        let deg = g.degree(inst.vertex(h)?);
        if deg != d.max_degree {
            return fail(format!("hub {h} has degree {deg}"));
        }
    }
    if is_outerplanar(g) != d.outerplanar {
        return fail(format!("outerplanar should be {}", d.outerplanar));
    }
    if d.maximal && !is_maximal_outerplanar(g) {
        return fail("not maximal outerplanar".into());
    }
    Ok(())
}

fn need(family: Family, v: Option<usize>, what: &str, min: usize) -> Result<usize, FamilyError> {
    match v {
        Some(x) if x >= min => Ok(x),
        Some(x) => Err(FamilyError::BadParams {
            family,
            reason: format!("{what} = {x} is below {min}"),
        }),
        None => Err(FamilyError::BadParams {
            family,
            reason: format!("{what} is required"),
        }),
    }
}

fn names(prefix: &str, range: std::ops::Range<usize>) -> Vec<String> {
    range.map(|i| format!("{prefix}{i}")).collect()
}

const G61_EDGES: [(&str, &str); 9] = [
    ("v0", "v1"),
    ("v0", "v2"),
    ("v0", "v3"),
    ("v0", "v4"),
    ("v1", "v2"),
    ("v2", "v5"),
    ("v3", "v5"),
    ("v3", "v4"),
    ("v2", "v3"),
];

const G62_EDGES: [(&str, &str); 9] = [
    ("v0", "v1"),
    ("v1", "v2"),
    ("v0", "v2"),
    ("v0", "v3"),
    ("v0", "v4"),
    ("v2", "v3"),
    ("v3", "v4"),
    ("v3", "v5"),
    ("v4", "v5"),
];

const H2_CORE: [(&str, &str); 11] = [
    ("v0", "v1"),
    ("v0", "v2"),
    ("v0", "v3"),
    ("v0", "v4"),
    ("v1", "v2"),
    ("v2", "v3"),
    ("v3", "v4"),
    ("v1", "v5"),
    ("v2", "v5"),
    ("v3", "v6"),
    ("v4", "v6"),
];

fn hubs(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

pub fn build_family(family: Family, params: Params) -> Result<FamilyInstance, FamilyError> {
    let mut b = Builder::default();
    let declared = match family {
        Family::Path => {
            let n = need(family, params.n, "n", 1)?;
            let vs = names("v", 0..n);
            b.vertex(&vs[0]);
            b.chain(&vs);
            Declared {
                max_degree: (n - 1).min(2),
                hubs: vec![],
                outerplanar: true,
                maximal: false,
            }
        }
        Family::Cycle => {
            let n = need(family, params.n, "n", 3)?;
            let mut vs = names("v", 0..n);
            vs.push("v0".into());
            b.chain(&vs);
            Declared {
                max_degree: 2,
                hubs: vec![],
                outerplanar: true,
                maximal: n == 3,
            }
        }
        Family::Fan => {
            let n = need(family, params.n, "n", 3)?;
            let path = names("v", 1..n);
            for p in &path {
                b.edge("v0", p);
            }
            b.chain(&path);
            Declared {
                max_degree: n - 1,
                hubs: hubs(&["v0"]),
                outerplanar: true,
                maximal: true,
            }
        }
        Family::G61 | Family::G61Prime => {
            for (x, y) in G61_EDGES {
                let chord = matches!((x, y), ("v0", "v2") | ("v0", "v3"));
                if family == Family::G61 || !chord {
                    b.edge(x, y);
                }
            }
            let full = family == Family::G61;
            Declared {
                max_degree: if full { 4 } else { 3 },
                hubs: if full { hubs(&["v0", "v2", "v3"]) } else { hubs(&["v2", "v3"]) },
                outerplanar: true,
                maximal: full,
            }
        }
        Family::G62 => {
            for (x, y) in G62_EDGES {
                b.edge(x, y);
            }
            Declared {
                max_degree: 4,
                hubs: hubs(&["v0", "v3"]),
                outerplanar: true,
                maximal: true,
            }
        }
        Family::GnDelta | Family::HPrime => {
            let min = if family == Family::GnDelta { 4 } else { 5 };
            let d = need(family, params.delta, "delta", min)?;
            for (x, y) in G61_EDGES {
                b.edge(x, y);
            }
            for h in [0, 2, 3] {
                for i in 1..=d - 4 {
                    b.edge(&format!("v{h}"), &leaf(h, i));
                }
            }
            if family == Family::HPrime {
                let thread = |h: usize, from: &str, to: &str| {
                    let mut c = vec![from.to_string()];
                    c.extend((1..=d - 4).map(|i| leaf(h, i)));
                    c.push(to.to_string());
                    c
                };
                b.chain(&thread(0, "v1", "v4"));
                b.chain(&thread(2, "v1", "v5"));
                b.chain(&thread(3, "v5", "v4"));
            }
            Declared {
                max_degree: d,
                hubs: hubs(&["v0", "v2", "v3"]),
                // threading the leaves of v0 around encloses it
                outerplanar: family == Family::GnDelta,
                maximal: false,
            }
        }
        Family::H => {
            let d = need(family, params.delta, "delta", 4)?;
            for (x, y) in G62_EDGES {
                b.edge(x, y);
            }
            for i in 1..=d - 4 {
                b.edge("v0", &leaf(0, i));
                b.edge("v3", &leaf(3, i));
            }
            for i in 1..=d - 3 {
                b.edge("v4", &leaf(4, i));
            }
            let mut c0: Vec<String> = (1..=d - 4).map(|i| leaf(0, i)).collect();
            c0.push("v1".into());
            let mut c3: Vec<String> = (1..=d - 4).map(|i| leaf(3, i)).collect();
            c3.push("v5".into());
            let mut c4 = vec!["v5".to_string()];
            c4.extend((1..=d - 3).map(|i| leaf(4, i)));
            b.chain(&c0);
            b.chain(&c3);
            b.chain(&c4);
            Declared {
                max_degree: d,
                hubs: hubs(&["v0", "v3", "v4"]),
                outerplanar: true,
                maximal: true,
            }
        }
        Family::H2 => {
            let d = need(family, params.delta, "delta", 4)?;
            for (x, y) in H2_CORE {
                b.edge(x, y);
            }
            for i in 1..=d - 4 {
                b.edge("v2", &leaf(2, i));
                b.edge("v3", &leaf(3, i));
            }
            let mut c2 = vec!["v5".to_string()];
            c2.extend((1..=d - 4).map(|i| leaf(2, i)));
            let mut c3: Vec<String> = (1..=d - 4).map(|i| leaf(3, i)).collect();
            c3.push("v6".into());
            b.chain(&c2);
            b.chain(&c3);
            Declared {
                max_degree: d,
                hubs: hubs(&["v2", "v3"]),
                outerplanar: true,
                maximal: true,
            }
        }
        Family::Delta5Strip => {
            let blocks = params.blocks.unwrap_or(10);
            strip::build(&mut b, blocks)?;
            Declared {
                max_degree: 5,
                hubs: vec![],
                outerplanar: true,
                maximal: true,
            }
        }
    };
    let params = match family {
        Family::Delta5Strip => Params {
            blocks: Some(params.blocks.unwrap_or(10)),
            ..params
        },
        _ => params,
    };
    b.finish(family, params, declared)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Diameter;

    #[test]
    fn small_fixed_graphs() {
        let g61 = build_family(Family::G61, Params::default()).unwrap();
        assert_eq!((g61.graph.n(), g61.graph.m()), (6, 9));
        assert_eq!(g61.graph.diameter(), Diameter::Finite(2));
        let p = build_family(Family::G61Prime, Params::default()).unwrap();
        assert_eq!(p.graph.m(), 7);
        let g62 = build_family(Family::G62, Params::default()).unwrap();
        assert_eq!(g62.graph.diameter(), Diameter::Finite(3));
    }

    #[test]
    fn sizes_of_degree_families() {
        for d in 5..12 {
            let hp = build_family(Family::HPrime, Params::delta(d)).unwrap();
            assert_eq!(hp.graph.n(), 6 + 3 * (d - 4));
            assert_eq!(hp.graph.m(), 9 + 6 * (d - 4) + 3);
            let h = build_family(Family::H, Params::delta(d)).unwrap();
            assert_eq!((h.graph.n(), h.graph.m()), (3 * d - 5, 6 * d - 13));
            let h2 = build_family(Family::H2, Params::delta(d)).unwrap();
            assert_eq!((h2.graph.n(), h2.graph.m()), (7 + 2 * (d - 4), 11 + 4 * (d - 4)));
        }
        assert_eq!(build_family(Family::HPrime, Params::delta(5)).unwrap().graph.m(), 18);
    }

    #[test]
    fn parameter_errors() {
        assert!(matches!(
            build_family(Family::HPrime, Params::delta(4)),
            Err(FamilyError::BadParams { .. })
        ));
        assert!(matches!(
            build_family(Family::Fan, Params::default()),
            Err(FamilyError::BadParams { .. })
        ));
        assert_eq!("H-Prime".parse::<Family>(), Ok(Family::HPrime));
        assert!("nope".parse::<Family>().is_err());
    }

    #[test]
    fn fans_are_maximal() {
        for n in 3..10 {
            let f = build_family(Family::Fan, Params::n(n)).unwrap();
            assert_eq!(f.graph.m(), 2 * n - 3);
            assert_eq!(f.role(0), "v0");
        }
    }
}
