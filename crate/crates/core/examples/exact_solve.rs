//! Exact star chromatic index of a family member or a graph6 string.
//!
//! ```bash
//! cargo run --release --example exact_solve -- h-prime delta=5
//! cargo run --release --example exact_solve -- fan n=8
//! cargo run --release --example exact_solve -- 'C~'
//! ```

use starchrome::families::{build_family, Family, Params};
use starchrome::graph::graph6;
use starchrome::star::{exact_chi_star, star_violations, Budget, SolveOutcome};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let first = args.first().map(String::as_str).unwrap_or("C~");
    let graph = match first.parse::<Family>() {
        Ok(family) => {
            let mut p = Params::default();
            for kv in &args[1..] {
                let (k, v) = kv.split_once('=').expect("parameters look like delta=5");
                let v = v.parse().expect("parameter values are integers");
                match k {
                    "n" => p.n = Some(v),
                    "delta" => p.delta = Some(v),
                    "blocks" => p.blocks = Some(v),
                    _ => panic!("unknown parameter {k}"),
                }
            }
            build_family(family, p).expect("valid family parameters").graph
        }
        Err(_) => graph6::decode(first).expect("graph6 input"),
    };
    println!("n = {}, m = {}, max degree = {}", graph.n(), graph.m(), graph.max_degree());
    let (outcome, stats) = exact_chi_star(&graph, &Budget::default());
    match &outcome {
        SolveOutcome::Exact { chi, witness } => {
            assert!(star_violations(&graph, witness).unwrap().is_empty());
            println!("chi = {chi}");
        }
        SolveOutcome::BudgetExhausted { lower, upper, .. } => {
            println!("budget exhausted: {lower} <= chi <= {upper}")
        }
    }
    println!("{} nodes in {:.2?}", stats.nodes, stats.elapsed);
}
