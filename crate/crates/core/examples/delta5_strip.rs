//! The periodic strip of maximum degree five and its 9-coloring.
//!
//! Valid lengths are 10, 16, 22, ... blocks. The exact solver shows the
//! shortest strip actually needs fewer colors.
//!
//! ```bash
//! cargo run --release --example delta5_strip -- 28
//! ```

use starchrome::families::{formula_coloring, strip_block_counts, Family, Params};
use starchrome::outerplanar::is_maximal_outerplanar;
use starchrome::star::{exact_chi_star, is_star_coloring, Budget};

fn main() {
    let top: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(22);
    for blocks in strip_block_counts().take_while(|&b| b <= top) {
        let fc = formula_coloring(Family::Delta5Strip, Params::blocks(blocks)).unwrap();
        let g = &fc.instance.graph;
        println!(
            "{blocks:>3} blocks: n {:>3}, m {:>3}, max degree {}, maximal {}, palette {}, valid {}",
            g.n(),
            g.m(),
            g.max_degree(),
            is_maximal_outerplanar(g),
            fc.coloring.palette(),
            is_star_coloring(g, &fc.coloring),
        );
    }
    let fc = formula_coloring(Family::Delta5Strip, Params::blocks(10)).unwrap();
    let (outcome, stats) = exact_chi_star(&fc.instance.graph, &Budget::default());
    println!("exact at 10 blocks: {:?} ({} nodes)", outcome.bounds(), stats.nodes);
}
