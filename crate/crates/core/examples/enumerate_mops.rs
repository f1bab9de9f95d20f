//! Counts triangulated polygons, rooted and up to isomorphism.
//!
//! ```bash
//! cargo run --example enumerate_mops -- 10
//! ```

use starchrome::outerplanar::enumerate_mops;

fn main() {
    let max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(10);
    println!("{:>3} {:>8} {:>8}", "n", "rooted", "classes");
    for n in 3..=max {
        let cat = enumerate_mops(n).expect("n within the canonical-labelling limit");
        println!("{:>3} {:>8} {:>8}", n, cat.rooted_count, cat.members.len());
    }
}
