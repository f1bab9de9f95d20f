//! Exhaustive sweeps over small maximal outerplanar graphs.

use std::collections::BTreeMap;
use std::time::Duration;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::cache::{CacheError, ResultCache};
use crate::graph::{CanonicalKey, Graph};
use crate::outerplanar::{classify, enumerate_mops, two_connected_spanning_subgraphs, OuterplanarError};
use crate::star::{exact_chi_star, Budget, SolveOutcome};

pub const DEFAULT_SWEEP_LIMIT: usize = 12;

/// One solved graph. Field order is the serialised order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    /// `None` for disconnected graphs.
    pub diameter: Option<usize>,
    pub two_connected: bool,
    pub outerplanar: bool,
    pub maximal: bool,
    /// `None` when the solver ran out of budget; see the bounds.
    pub chi_star: Option<u32>,
    pub chi_lower: u32,
    pub chi_upper: u32,
    /// `⌊3Δ/2⌋ + 1 - χ`.
    pub margin_three_halves_plus_one: Option<i64>,
    /// `⌊3Δ/2⌋ + 5 - χ`.
    pub margin_three_halves_plus_five: Option<i64>,
    /// `Δ + 6 - χ`, for 2-connected graphs with `Δ >= 6`.
    pub margin_delta_plus_six: Option<i64>,
    /// `Δ + 4 - χ`, for 2-connected maximal graphs with `Δ >= 6`.
    pub margin_delta_plus_four: Option<i64>,
    pub solver_nodes: u64,
    pub elapsed_us: u64,
}

impl SweepRecord {
    pub fn build(g: &Graph, graph6: String, outcome: &SolveOutcome, nodes: u64, elapsed: Duration) -> Self {
        let c = classify(g);
        let d = c.max_degree as i64;
        let (lower, upper) = outcome.bounds();
        let chi = outcome.chi();
        let margin = |bound: i64, applies: bool| chi.filter(|_| applies).map(|x| bound - x as i64);
        SweepRecord {
            graph6,
            n: g.n(),
            m: g.m(),
            max_degree: c.max_degree,
            diameter: c.diameter.finite(),
            two_connected: c.two_connected,
            outerplanar: c.outerplanar,
            maximal: c.maximal,
            chi_star: chi,
            chi_lower: lower,
            chi_upper: upper,
            margin_three_halves_plus_one: margin(3 * d / 2 + 1, true),
            margin_three_halves_plus_five: margin(3 * d / 2 + 5, true),
            margin_delta_plus_six: margin(d + 6, c.two_connected && d >= 6),
            margin_delta_plus_four: margin(d + 4, c.two_connected && c.maximal && d >= 6),
            solver_nodes: nodes,
            elapsed_us: elapsed.as_micros() as u64,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Bound {
    /// Outerplanar: `χ <= ⌊3Δ/2⌋ + 5`. Proven.
    ThreeHalvesPlusFive,
    /// Outerplanar with `Δ <= 3`: `χ <= 5`. Proven.
    Subcubic,
    /// Maximal outerplanar on `n >= 4` vertices: `6 <= χ <= n - 1`. Cited as proven.
    MaximalRange,
    /// Every graph: `Δ <= χ <= m`.
    Trivial,
    /// Outerplanar: `χ <= ⌊3Δ/2⌋ + 1`. Conjectured.
    ThreeHalvesPlusOne,
    /// 2-connected outerplanar, `Δ >= 6`: `χ <= Δ + 6`. Conjectured.
    DeltaPlusSix,
    /// 2-connected maximal outerplanar, `Δ >= 6`: `χ <= Δ + 4`. Conjectured.
    DeltaPlusFour,
}

impl Bound {
    pub fn is_proven(self) -> bool {
        matches!(
            self,
            Bound::ThreeHalvesPlusFive | Bound::Subcubic | Bound::MaximalRange | Bound::Trivial
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundViolation {
    pub bound: Bound,
    pub graph6: String,
    pub chi_lower: u32,
    pub chi_upper: u32,
    pub detail: String,
}

/// Checks a record against every bound whose hypotheses it meets. A bound
/// is violated only when the solver's bounds make it certain.
pub fn check_record(r: &SweepRecord) -> Vec<BoundViolation> {
    let d = r.max_degree as u32;
    let (lo, hi) = (r.chi_lower, r.chi_upper);
    let mut out = Vec::new();
    let mut flag = |bound: Bound, detail: String| {
        out.push(BoundViolation {
            bound,
            graph6: r.graph6.clone(),
            chi_lower: lo,
            chi_upper: hi,
            detail,
        })
    };
    let above = |limit: u32| lo > limit;
    if hi < d || lo > r.m as u32 {
        flag(Bound::Trivial, format!("chi outside [{d}, {}]", r.m));
    }
    if r.outerplanar {
        if above(3 * d / 2 + 5) {
            flag(Bound::ThreeHalvesPlusFive, format!("chi > {}", 3 * d / 2 + 5));
        }
        if d <= 3 && above(5) {
            flag(Bound::Subcubic, "chi > 5 with max degree <= 3".into());
        }
        if above(3 * d / 2 + 1) {
            flag(Bound::ThreeHalvesPlusOne, format!("chi > {}", 3 * d / 2 + 1));
        }
    }
    if r.maximal && r.n >= 4 {
        let top = r.n as u32 - 1;
        if hi < 6 {
            flag(Bound::MaximalRange, format!("chi < 6 on {} vertices", r.n));
        }
        if above(top) {
            flag(Bound::MaximalRange, format!("chi > n - 1 = {top}"));
        }
    }
    if r.outerplanar && r.two_connected && d >= 6 {
        if above(d + 6) {
            flag(Bound::DeltaPlusSix, format!("chi > {}", d + 6));
        }
        if r.maximal && above(d + 4) {
            flag(Bound::DeltaPlusFour, format!("chi > {}", d + 4));
        }
    }
    out
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub n_min: usize,
    pub n_max: usize,
    /// Also sweep every chord-deleted spanning subgraph of each member.
    pub expand_subgraphs: bool,
    /// Most graphs taken per vertex count, in canonical key order.
    pub per_n_cap: Option<usize>,
    pub budget: Budget,
    /// Worker threads; `0` lets the pool decide.
    pub threads: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            n_min: 4,
            n_max: 8,
            expand_subgraphs: false,
            per_n_cap: None,
            budget: Budget::default(),
            threads: 0,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum SweepError {
    #[error(transparent)]
    Cache(#[from] CacheError),
    #[error(transparent)]
    Enumeration(#[from] OuterplanarError),
    #[error("n_max = {0} exceeds the sweep limit of {DEFAULT_SWEEP_LIMIT}")]
    TooLarge(usize),
    #[error("cannot start worker pool: {0}")]
    Pool(String),
}

#[derive(Debug, Clone, Default)]
pub struct SweepReport {
    pub records: Vec<SweepRecord>,
    pub solved: usize,
    pub from_cache: usize,
    pub exhausted: usize,
    pub hard_failures: Vec<BoundViolation>,
    pub findings: Vec<BoundViolation>,
}

/// The graphs a sweep visits, ordered by vertex count then canonical key.
pub fn sweep_graphs(cfg: &SweepConfig) -> Result<Vec<(CanonicalKey, Graph)>, SweepError> {
    let mut out = Vec::new();
    for n in cfg.n_min.max(3)..=cfg.n_max {
        let mut level: BTreeMap<CanonicalKey, Graph> = BTreeMap::new();
        for (key, mop) in enumerate_mops(n)?.members {
            if cfg.expand_subgraphs {
                level.extend(two_connected_spanning_subgraphs(&mop)?);
            } else {
                level.insert(key, mop);
            }
        }
        out.extend(level.into_iter().take(cfg.per_n_cap.unwrap_or(usize::MAX)));
    }
    Ok(out)
}

pub fn run_sweep(cfg: &SweepConfig, mut cache: Option<&mut ResultCache>) -> Result<SweepReport, SweepError> {
    if cfg.n_max > DEFAULT_SWEEP_LIMIT {
        return Err(SweepError::TooLarge(cfg.n_max));
    }
    let graphs = sweep_graphs(cfg)?;
    let mut report = SweepReport::default();
    let mut slots: Vec<Option<SweepRecord>> = graphs
        .iter()
        .map(|(key, _)| cache.as_ref().and_then(|c| c.get(&key.0).cloned()))
        .collect();
    report.from_cache = slots.iter().filter(|s| s.is_some()).count();

    let todo: Vec<usize> = (0..graphs.len()).filter(|&i| slots[i].is_none()).collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.threads)
        .build()
        .map_err(|e| SweepError::Pool(e.to_string()))?;
    let solved: Vec<(usize, SweepRecord)> = pool.install(|| {
        todo.par_iter()
            .map(|&i| {
                let (key, g) = &graphs[i];
                let (outcome, stats) = exact_chi_star(g, &cfg.budget);
                (i, SweepRecord::build(g, key.0.clone(), &outcome, stats.nodes, stats.elapsed))
            })
            .collect()
    });
    report.solved = solved.len();
    // single writer, in canonical order
    for (i, rec) in solved {
        if let Some(c) = cache.as_deref_mut() {
            c.insert(rec.clone())?;
        }
        slots[i] = Some(rec);
    }
    report.records = slots.into_iter().map(|s| s.expect("every slot filled")).collect();
    report.exhausted = report.records.iter().filter(|r| r.chi_star.is_none()).count();
    for r in &report.records {
        for v in check_record(r) {
            if v.bound.is_proven() {
                report.hard_failures.push(v);
            } else {
                report.findings.push(v);
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn up_to_six_gives_five_records() {
        let cfg = SweepConfig {
            n_max: 6,
            ..SweepConfig::default()
        };
        let rep = run_sweep(&cfg, None).unwrap();
        assert_eq!(rep.records.len(), 5);
        assert!(rep.records.iter().all(|r| r.maximal && r.chi_star.is_some()));
    }

    #[test]
    fn diamond_breaks_the_cited_lower_bound() {
        let cfg = SweepConfig {
            n_max: 4,
            ..SweepConfig::default()
        };
        let rep = run_sweep(&cfg, None).unwrap();
        assert_eq!(rep.records[0].chi_star, Some(4));
        assert_eq!(rep.hard_failures.len(), 2);
        assert!(rep.hard_failures.iter().all(|v| v.bound == Bound::MaximalRange));
    }

    #[test]
    fn exhausted_records_only_fail_when_certain() {
        let mut r = SweepRecord {
            graph6: "x".into(),
            n: 10,
            m: 17,
            max_degree: 3,
            diameter: Some(3),
            two_connected: true,
            outerplanar: true,
            maximal: false,
            chi_star: None,
            chi_lower: 5,
            chi_upper: 7,
            margin_three_halves_plus_one: None,
            margin_three_halves_plus_five: None,
            margin_delta_plus_six: None,
            margin_delta_plus_four: None,
            solver_nodes: 0,
            elapsed_us: 0,
        };
        assert!(check_record(&r).is_empty());
        r.chi_lower = 6;
        let v = check_record(&r);
        assert!(v.iter().any(|x| x.bound == Bound::Subcubic));
    }
}
