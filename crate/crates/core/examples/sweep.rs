//! Sweeps maximal outerplanar graphs and prints how close each comes to
//! the bounds.
//!
//! ```bash
//! cargo run --release --example sweep -- 10
//! cargo run --release --example sweep -- 9 expand
//! ```

use starchrome::harness::{run_sweep, SweepConfig};

fn main() {
    let mut args = std::env::args().skip(1);
    let n_max = args.next().and_then(|s| s.parse().ok()).unwrap_or(9);
    let cfg = SweepConfig {
        n_max,
        expand_subgraphs: args.next().as_deref() == Some("expand"),
        ..SweepConfig::default()
    };
    let rep = run_sweep(&cfg, None).unwrap();
    println!("{:<10} {:>2} {:>2} {:>5} {:>4} {:>8} {:>8}", "graph6", "n", "Δ", "max", "chi", "1.5Δ+1", "Δ+4");
    for r in &rep.records {
        let show = |m: Option<i64>| m.map_or("-".to_string(), |x| x.to_string());
        println!(
            "{:<10} {:>2} {:>2} {:>5} {:>4} {:>8} {:>8}",
            r.graph6,
            r.n,
            r.max_degree,
            r.maximal,
            r.chi_star.map_or("?".into(), |c| c.to_string()),
            show(r.margin_three_halves_plus_one),
            show(r.margin_delta_plus_four),
        );
    }
    println!("{} records, {} solved", rep.records.len(), rep.solved);
    for v in rep.hard_failures.iter().chain(&rep.findings) {
        println!("{:?} {}: {}", v.bound, v.graph6, v.detail);
    }
}
