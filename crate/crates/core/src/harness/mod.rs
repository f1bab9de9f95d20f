//! Experiment plumbing: result cache, bound checks, sweeps and the
//! subcommands behind the binary.

mod cache;
pub mod commands;
mod sweep;

pub use crate::graph::graph6;
pub use cache::{default_cache_path, CacheError, ResultCache, CACHE_ENV, CACHE_SCHEMA, DEFAULT_CACHE_FILE};
pub use sweep::{
    check_record, run_sweep, sweep_graphs, Bound, BoundViolation, SweepConfig, SweepError, SweepRecord,
    SweepReport, DEFAULT_SWEEP_LIMIT,
};
