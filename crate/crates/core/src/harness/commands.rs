//! The command-line subcommands, as functions writing to any sink.
//!
//! Each command returns the process exit code; errors that should stop the
//! process with code 1 come back as `CommandError`.

use std::io::{self, BufRead, Write};
use std::path::PathBuf;

use serde::Serialize;
use thiserror::Error;

use super::cache::{CacheError, ResultCache};
use super::sweep::{run_sweep, SweepConfig, SweepError, SweepRecord};
use crate::families::{
    build_family, family_coloring, strip_block_counts, ColoringSource, Family, FamilyError,
    FamilyInstance, FigureCatalog, FigureError, Params,
};
use crate::graph::graph6::{self, Graph6Error};
use crate::graph::{Graph, GraphError};
use crate::star::{exact_chi_star, star_violations, Budget, Color, EdgeColoring, SolveOutcome, Violation, ViolationKind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;
/// A sweep record broke a proven bound, which points at a bug.
pub const EXIT_HARD_FAILURE: i32 = 3;

#[derive(Debug, Error)]
pub enum CommandError {
    #[error("bad graph6 input: {0}")]
    Graph6(#[from] Graph6Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Figure(#[from] FigureError),
    #[error(transparent)]
    Sweep(#[from] SweepError),
    #[error(transparent)]
    Cache(#[from] CacheError),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("{0}")]
    Usage(String),
}

/// Where a command's graph comes from.
#[derive(Debug, Clone)]
pub enum GraphSource {
    Graph6(String),
    Family(Family, Params),
}

impl GraphSource {
    /// From the `--g6` / `--family` style flags; exactly one must be set.
    pub fn from_flags(
        g6: Option<&str>,
        family: Option<&str>,
        n: Option<usize>,
        delta: Option<usize>,
        blocks: Option<usize>,
    ) -> Result<GraphSource, CommandError> {
        match (g6, family) {
            (Some(s), None) => Ok(GraphSource::Graph6(s.to_string())),
            (None, Some(f)) => Ok(GraphSource::Family(f.parse()?, Params { n, delta, blocks })),
            _ => Err(CommandError::Usage("give exactly one of --g6 or --family".into())),
        }
    }

    pub fn load(&self) -> Result<(Graph, Option<FamilyInstance>), CommandError> {
        match self {
            GraphSource::Graph6(s) => Ok((graph6::decode(s)?, None)),
            GraphSource::Family(f, p) => {
                let inst = build_family(*f, *p)?;
                Ok((inst.graph.clone(), Some(inst)))
            }
        }
    }
}

fn name_of(inst: Option<&FamilyInstance>, v: usize) -> String {
    inst.map_or_else(|| v.to_string(), |i| i.role(v).to_string())
}

fn write_coloring(
    out: &mut dyn Write,
    g: &Graph,
    inst: Option<&FamilyInstance>,
    c: &EdgeColoring,
) -> io::Result<()> {
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        writeln!(out, "edge {} {} {}", name_of(inst, u), name_of(inst, v), c.get(e))?;
    }
    Ok(())
}

pub fn solve(src: &GraphSource, budget: &Budget, out: &mut dyn Write) -> Result<i32, CommandError> {
    let (g, inst) = src.load()?;
    writeln!(out, "graph n {} m {} max_degree {}", g.n(), g.m(), g.max_degree())?;
    let (outcome, stats) = exact_chi_star(&g, budget);
    let code = match &outcome {
        SolveOutcome::Exact { chi, .. } => {
            writeln!(out, "chi {chi}")?;
            EXIT_OK
        }
        SolveOutcome::BudgetExhausted { lower, upper, .. } => {
            writeln!(out, "budget exhausted")?;
            writeln!(out, "bounds {lower} {upper}")?;
            EXIT_BUDGET
        }
    };
    write_coloring(out, &g, inst.as_ref(), outcome.coloring())?;
    writeln!(out, "nodes {} elapsed_us {}", stats.nodes, stats.elapsed.as_micros())?;
    Ok(code)
}

/// First violation, with vertices named by role where possible.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub kind: ViolationKind,
    pub vertices: Vec<String>,
    pub colors: (Color, Color),
}

impl Witness {
    fn new(v: &Violation, inst: Option<&FamilyInstance>) -> Witness {
        Witness {
            kind: v.kind,
            vertices: v.vertices.iter().map(|&x| name_of(inst, x)).collect(),
            colors: v.colors,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Serialize)]
pub struct FigureRow {
    pub figure: String,
    pub family: String,
    pub edges: usize,
    pub status: Status,
    pub palette: Color,
    pub claimed_palette: Color,
    pub violations: usize,
    pub witness: Option<Witness>,
}

impl FigureRow {
    /// A failed validation or a palette other than the claimed one.
    pub fn is_finding(&self) -> bool {
        self.status == Status::Fail || self.palette != self.claimed_palette
    }
}

/// Validates every figure in the catalog, in catalog order.
pub fn figure_report(catalog: &FigureCatalog) -> Result<Vec<FigureRow>, CommandError> {
    let mut rows = Vec::new();
    for fig in catalog.figures() {
        let (inst, c) = fig.coloring()?;
        let bad = star_violations(&inst.graph, &c).expect("figure colorings are total");
        rows.push(FigureRow {
            figure: fig.id.clone(),
            family: fig.family.to_string(),
            edges: inst.graph.m(),
            status: if bad.is_empty() { Status::Pass } else { Status::Fail },
            palette: c.palette(),
            claimed_palette: fig.claimed_palette,
            violations: bad.len(),
            witness: bad.first().map(|v| Witness::new(v, Some(&inst))),
        });
    }
    Ok(rows)
}

#[derive(Serialize)]
struct Summary<'a> {
    summary: &'a str,
    total: usize,
    pass: usize,
    findings: usize,
}

fn json_line(out: &mut dyn Write, v: &impl Serialize) -> io::Result<()> {
    let s = serde_json::to_string(v).expect("report rows serialise");
    writeln!(out, "{s}")
}

pub fn verify_figures(catalog: &FigureCatalog, out: &mut dyn Write) -> Result<i32, CommandError> {
    let rows = figure_report(catalog)?;
    for r in &rows {
        json_line(out, r)?;
    }
    json_line(
        out,
        &Summary {
            summary: "figures",
            total: rows.len(),
            pass: rows.iter().filter(|r| r.status == Status::Pass).count(),
            findings: rows.iter().filter(|r| r.is_finding()).count(),
        },
    )?;
    Ok(EXIT_OK)
}

/// `"9..12"`, `"9..=12"` or `"9"`; both ends inclusive.
pub fn parse_range(s: &str) -> Result<Vec<usize>, CommandError> {
    let bad = || CommandError::Usage(format!("cannot read range {s:?}"));
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => (num(s)?, num(s)?),
    };
    if lo > hi {
        return Err(bad());
    }
    Ok((lo..=hi).collect())
}

#[derive(Debug, Clone, Serialize)]
pub struct ExactRow {
    pub chi_star: Option<Color>,
    pub chi_lower: Color,
    pub chi_upper: Color,
    /// Claimed palette minus the exact value, when known.
    pub gap_to_claim: Option<i64>,
    pub nodes: u64,
    pub elapsed_us: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct FamilyRow {
    pub family: String,
    /// Maximum degree, or the block count for the strip.
    pub size: usize,
    pub max_degree: usize,
    pub source: String,
    pub edges: usize,
    pub status: Status,
    pub palette: Color,
    pub claimed_palette: Color,
    pub violations: usize,
    pub witness: Option<Witness>,
    pub exact: Option<ExactRow>,
}

fn is_strip_length(b: usize) -> bool {
    strip_block_counts().take_while(|&x| x <= b).any(|x| x == b)
}

fn params_for(family: Family, size: usize) -> Params {
    match family {
        Family::Delta5Strip => Params::blocks(size),
        Family::Path | Family::Cycle | Family::Fan => Params::n(size),
        _ => Params::delta(size),
    }
}

/// One row per size; fails as a whole if any size has no coloring.
pub fn family_report(
    family: Family,
    sizes: &[usize],
    exact: Option<&Budget>,
    catalog: &FigureCatalog,
) -> Result<Vec<FamilyRow>, CommandError> {
    let sizes: Vec<usize> = if family == Family::Delta5Strip {
        // a range over block counts keeps only the lengths the strip allows
        let picked: Vec<usize> = sizes.iter().copied().filter(|&b| is_strip_length(b)).collect();
        if picked.is_empty() {
            return Err(CommandError::Usage(format!("no valid strip length in {sizes:?}")));
        }
        picked
    } else {
        sizes.to_vec()
    };
    let colorings = sizes
        .iter()
        .map(|&s| family_coloring(family, params_for(family, s), catalog))
        .collect::<Result<Vec<_>, _>>()?;
    let mut rows = Vec::new();
    for (&size, fc) in sizes.iter().zip(colorings) {
        let g = &fc.instance.graph;
        let bad = star_violations(g, &fc.coloring).expect("family colorings are total");
        let exact = exact.map(|budget| {
            let (o, stats) = exact_chi_star(g, budget);
            let (lo, hi) = o.bounds();
            ExactRow {
                chi_star: o.chi(),
                chi_lower: lo,
                chi_upper: hi,
                gap_to_claim: o.chi().map(|c| fc.claimed_palette as i64 - c as i64),
                nodes: stats.nodes,
                elapsed_us: stats.elapsed.as_micros() as u64,
            }
        });
        rows.push(FamilyRow {
            family: family.to_string(),
            size,
            max_degree: g.max_degree(),
            source: match &fc.source {
                ColoringSource::Formula => "formula".into(),
                ColoringSource::Figure(id) => format!("figure {id}"),
            },
            edges: g.m(),
            status: if bad.is_empty() { Status::Pass } else { Status::Fail },
            palette: fc.coloring.palette(),
            claimed_palette: fc.claimed_palette,
            violations: bad.len(),
            witness: bad.first().map(|v| Witness::new(v, Some(&fc.instance))),
            exact,
        });
    }
    Ok(rows)
}

pub fn family_check(
    family: Family,
    sizes: &[usize],
    exact: Option<&Budget>,
    catalog: &FigureCatalog,
    out: &mut dyn Write,
) -> Result<i32, CommandError> {
    let rows = family_report(family, sizes, exact, catalog)?;
    for r in &rows {
        json_line(out, r)?;
    }
    let findings = rows
        .iter()
        .filter(|r| r.status == Status::Fail || r.palette != r.claimed_palette)
        .count();
    json_line(
        out,
        &Summary {
            summary: "family",
            total: rows.len(),
            pass: rows.iter().filter(|r| r.status == Status::Pass).count(),
            findings,
        },
    )?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct SweepSummary {
    summary: &'static str,
    records: usize,
    solved: usize,
    from_cache: usize,
    exhausted: usize,
    hard_failures: usize,
    findings: usize,
}

/// Records go to `records_out` if given, else to `out` ahead of the
/// flagged bounds and the summary.
pub fn sweep(
    cfg: &SweepConfig,
    cache_path: Option<PathBuf>,
    records_out: Option<&mut dyn Write>,
    out: &mut dyn Write,
) -> Result<i32, CommandError> {
    let mut cache = cache_path.map(ResultCache::open).transpose()?;
    let report = run_sweep(cfg, cache.as_mut())?;
    let sink: &mut dyn Write = match records_out {
        Some(w) => w,
        None => &mut *out,
    };
    for r in &report.records {
        json_line(sink, r)?;
    }
    sink.flush()?;
    for v in &report.hard_failures {
        json_line(out, &serde_json::json!({ "hard_failure": v }))?;
    }
    for v in &report.findings {
        json_line(out, &serde_json::json!({ "finding": v }))?;
    }
    json_line(
        out,
        &SweepSummary {
            summary: "sweep",
            records: report.records.len(),
            solved: report.solved,
            from_cache: report.from_cache,
            exhausted: report.exhausted,
            hard_failures: report.hard_failures.len(),
            findings: report.findings.len(),
        },
    )?;
    Ok(if report.hard_failures.is_empty() { EXIT_OK } else { EXIT_HARD_FAILURE })
}

/// Reads `u v` pairs, one per line; `#` starts a comment.
pub fn read_edge_list(input: impl BufRead, n: Option<usize>) -> Result<Graph, CommandError> {
    let mut edges = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        let body = line.split('#').next().unwrap_or("");
        let toks: Vec<&str> = body.split_whitespace().collect();
        if toks.is_empty() {
            continue;
        }
        let bad = || CommandError::Usage(format!("edge list line {}: {line:?}", i + 1));
        let [a, b] = toks.as_slice() else { return Err(bad()) };
        edges.push((a.parse::<usize>().map_err(|_| bad())?, b.parse::<usize>().map_err(|_| bad())?));
    }
    let n = n.unwrap_or_else(|| edges.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(0));
    Ok(Graph::new(n, edges)?)
}

pub fn encode(g: &Graph, canonical: bool, out: &mut dyn Write) -> Result<i32, CommandError> {
    let text = if canonical { g.canonical_key()?.0 } else { graph6::encode(g)? };
    writeln!(out, "{text}")?;
    Ok(EXIT_OK)
}

pub fn decode(text: &str, out: &mut dyn Write) -> Result<i32, CommandError> {
    let g = graph6::decode(text)?;
    writeln!(out, "n {} m {}", g.n(), g.m())?;
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}")?;
    }
    Ok(EXIT_OK)
}

/// Re-reads the records a sweep wrote, e.g. for diffing two runs.
pub fn read_records(input: impl BufRead) -> Result<Vec<SweepRecord>, CommandError> {
    input
        .lines()
        .filter(|l| l.as_ref().map_or(true, |l| !l.trim().is_empty()))
        .map(|l| {
            let l = l?;
            serde_json::from_str(&l).map_err(|e| CommandError::Usage(format!("bad record: {e}")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(f: impl FnOnce(&mut dyn Write) -> Result<i32, CommandError>) -> (i32, String) {
        let mut buf = Vec::new();
        let code = f(&mut buf).unwrap();
        (code, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn solve_fan_and_cycle() {
        let src = GraphSource::Family(Family::Fan, Params::n(5));
        let (code, text) = run(|o| solve(&src, &Budget::default(), o));
        assert_eq!(code, EXIT_OK);
        assert!(text.lines().any(|l| l == "chi 6"), "{text}");
        assert!(text.contains("edge v0 v1 "));
        let src = GraphSource::Graph6("C~".into());
        let (_, text) = run(|o| solve(&src, &Budget::default(), o));
        assert!(text.lines().any(|l| l == "chi 5"));
    }

    #[test]
    fn tiny_budget_exits_two() {
        let src = GraphSource::Family(Family::Fan, Params::n(9));
        let budget = Budget {
            max_nodes: 10,
            ..Budget::default()
        };
        let (code, text) = run(|o| solve(&src, &budget, o));
        assert_eq!(code, EXIT_BUDGET);
        assert!(text.contains("bounds "));
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("9..12").unwrap(), vec![9, 10, 11, 12]);
        assert_eq!(parse_range("9..=10").unwrap(), vec![9, 10]);
        assert_eq!(parse_range("5").unwrap(), vec![5]);
        assert!(parse_range("7..5").is_err());
        assert!(parse_range("x").is_err());
    }

    #[test]
    fn family_check_rows() {
        let cat = FigureCatalog::builtin();
        let rows = family_report(Family::HPrime, &parse_range("9..12").unwrap(), None, &cat).unwrap();
        assert_eq!(rows.len(), 4);
        for r in rows {
            assert_eq!(r.status, Status::Pass);
            assert_eq!(r.palette as usize, r.size + 3);
        }
        let err = family_report(Family::HPrime, &[4], None, &cat).unwrap_err();
        assert!(matches!(err, CommandError::Family(_)));
    }

    #[test]
    fn exact_check_uses_the_figure_below_the_formula() {
        let cat = FigureCatalog::builtin();
        let rows = family_report(Family::HPrime, &[5], Some(&Budget::default()), &cat).unwrap();
        let ex = rows[0].exact.as_ref().unwrap();
        let chi = ex.chi_star.unwrap();
        assert!((7..=9).contains(&chi));
        assert_eq!(rows[0].source, "figure fig08a");
    }

    #[test]
    fn encode_decode_text() {
        let g = read_edge_list("0 1\n1 2 # path\n".as_bytes(), None).unwrap();
        let (_, text) = run(|o| encode(&g, false, o));
        assert_eq!(text, "Bg\n");
        let (_, text) = run(|o| decode("Bg", o));
        assert_eq!(text, "n 3 m 2\n0 1\n1 2\n");
        assert!(read_edge_list("0 1 2\n".as_bytes(), None).is_err());
    }
}
