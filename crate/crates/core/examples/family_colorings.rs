//! Closed-form colorings of the degree families, validated over a range.
//!
//! ```bash
//! cargo run --example family_colorings -- 14
//! ```

use starchrome::families::{formula_coloring, Family, Params};
use starchrome::star::is_star_coloring;

fn main() {
    let top: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(14);
    for (family, from) in [(Family::HPrime, 9), (Family::H, 7), (Family::H2, 10)] {
        for d in from..=top.max(from) {
            let fc = formula_coloring(family, Params::delta(d)).unwrap();
            let ok = is_star_coloring(&fc.instance.graph, &fc.coloring);
            println!(
                "{family:<8} delta {d:>2}: {:>3} edges, palette {:>2} (delta + {}) {}",
                fc.instance.graph.m(),
                fc.coloring.palette(),
                fc.coloring.palette() as usize - d,
                if ok { "valid" } else { "INVALID" },
            );
        }
    }
}
