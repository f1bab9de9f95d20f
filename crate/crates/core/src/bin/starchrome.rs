use std::fs::File;
use std::io::{self, BufWriter};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};

use starchrome::families::{Family, FigureCatalog};
use starchrome::harness::commands::{self, CommandError, GraphSource, EXIT_ERROR};
use starchrome::harness::{default_cache_path, SweepConfig};
use starchrome::star::Budget;

#[derive(Parser)]
#[command(name = "starchrome", version, about = "Star edge coloring toolkit for outerplanar graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct BudgetFlags {
    /// Search node limit for the exact solver.
    #[arg(long, default_value_t = 100_000_000)]
    budget_nodes: u64,
    /// Wall-clock limit for the exact solver, in seconds.
    #[arg(long, default_value_t = 300.0)]
    budget_secs: f64,
}

impl BudgetFlags {
    fn budget(&self) -> Budget {
        Budget {
            max_nodes: self.budget_nodes,
            max_time: Duration::from_secs_f64(self.budget_secs.max(0.0)),
        }
    }
}

#[derive(Args)]
struct GraphFlags {
    /// Graph in graph6 format.
    #[arg(long)]
    g6: Option<String>,
    /// Named family (path, cycle, fan, g61, g61-prime, g62, g-n-delta, h-prime, h, h2, delta5-strip).
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    delta: Option<usize>,
    /// Strip length in blocks.
    #[arg(long)]
    blocks: Option<usize>,
}

impl GraphFlags {
    fn source(&self) -> Result<GraphSource, CommandError> {
        GraphSource::from_flags(
            self.g6.as_deref(),
            self.family.as_deref(),
            self.n,
            self.delta,
            self.blocks,
        )
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Exact star chromatic index with a witness coloring.
    Solve {
        #[command(flatten)]
        graph: GraphFlags,
        #[command(flatten)]
        budget: BudgetFlags,
    },
    /// Validate every transcribed figure coloring.
    VerifyFigures {
        /// Read figure tables from this directory instead of the built-in copies.
        #[arg(long)]
        data_dir: Option<PathBuf>,
    },
    /// Check a family's coloring over a range of sizes, e.g. `h-prime 9..12`.
    FamilyCheck {
        family: Family,
        /// Max degree (block count for the strip); `9..12` or a single value.
        range: String,
        /// Also run the exact solver on each instance.
        #[arg(long)]
        exact: bool,
        #[command(flatten)]
        budget: BudgetFlags,
        #[arg(long)]
        data_dir: Option<PathBuf>,
    },
    /// Solve every maximal outerplanar graph up to `--n` vertices.
    Sweep {
        /// Largest vertex count.
        #[arg(long, default_value_t = 8)]
        n: usize,
        /// Also sweep the chord-deleted spanning subgraphs.
        #[arg(long)]
        expand_subgraphs: bool,
        /// Most graphs per vertex count.
        #[arg(long)]
        per_n_cap: Option<usize>,
        #[arg(long, default_value_t = 0)]
        threads: usize,
        /// Write records here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Result cache; defaults to $STARCHROME_CACHE.
        #[arg(long)]
        cache: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetFlags,
    },
    /// Print graph6 for a family, or for an edge list read from stdin.
    Encode {
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        delta: Option<usize>,
        #[arg(long)]
        blocks: Option<usize>,
        /// Print the canonical form instead.
        #[arg(long)]
        canonical: bool,
    },
    /// Print the vertex count and edge list of a graph6 string.
    Decode {
        #[arg(long)]
        g6: String,
    },
}

fn catalog(dir: Option<PathBuf>) -> Result<FigureCatalog, CommandError> {
    Ok(match dir {
        Some(d) => FigureCatalog::load_dir(&d)?,
        None => FigureCatalog::builtin(),
    })
}

fn run(cli: Cli) -> Result<i32, CommandError> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.cmd {
        Cmd::Solve { graph, budget } => commands::solve(&graph.source()?, &budget.budget(), &mut out),
        Cmd::VerifyFigures { data_dir } => commands::verify_figures(&catalog(data_dir)?, &mut out),
        Cmd::FamilyCheck {
            family,
            range,
            exact,
            budget,
            data_dir,
        } => {
            let sizes = commands::parse_range(&range)?;
            let b = budget.budget();
            commands::family_check(family, &sizes, exact.then_some(&b), &catalog(data_dir)?, &mut out)
        }
        Cmd::Sweep {
            n,
            expand_subgraphs,
            per_n_cap,
            threads,
            out: path,
            cache,
            budget,
        } => {
            let cfg = SweepConfig {
                n_max: n,
                expand_subgraphs,
                per_n_cap,
                threads,
                budget: budget.budget(),
                ..SweepConfig::default()
            };
            let cache = Some(cache.unwrap_or_else(default_cache_path));
            match path {
                Some(p) => {
                    let mut w = BufWriter::new(File::create(&p)?);
                    commands::sweep(&cfg, cache, Some(&mut w), &mut out)
                }
                None => commands::sweep(&cfg, cache, None, &mut out),
            }
        }
        Cmd::Encode {
            family,
            n,
            delta,
            blocks,
            canonical,
        } => {
            let g = match family {
                Some(f) => GraphSource::from_flags(None, Some(&f), n, delta, blocks)?.load()?.0,
                None => commands::read_edge_list(io::stdin().lock(), n)?,
            };
            commands::encode(&g, canonical, &mut out)
        }
        Cmd::Decode { g6 } => commands::decode(&g6, &mut out),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_ERROR as u8)
        }
    }
}
