//! Checks a hand-written coloring and prints every obstruction.
//!
//! The fan on five vertices needs six colors; squeezing it into five
//! leaves an alternating path somewhere.
//!
//! ```bash
//! cargo run --example validate_coloring
//! ```

use starchrome::families::{build_family, Family, Params};
use starchrome::star::{greedy_star_coloring, star_violations, EdgeColoring};

fn main() {
    let fan = build_family(Family::Fan, Params::n(5)).unwrap();
    let g = &fan.graph;

    // hub edges 1..4, rim edges reuse colors
    let rows = [
        ("v0", "v1", 1),
        ("v0", "v2", 2),
        ("v0", "v3", 3),
        ("v0", "v4", 4),
        ("v1", "v2", 3),
        ("v2", "v3", 5),
        ("v3", "v4", 1),
    ];
    let c = fan.coloring_from_roles(rows).unwrap();
    report("hand-written", &fan, &c);

    let c = greedy_star_coloring(g, 7);
    report("greedy", &fan, &c);
}

fn report(label: &str, fan: &starchrome::families::FamilyInstance, c: &EdgeColoring) {
    let bad = star_violations(&fan.graph, c).unwrap();
    println!("{label}: palette {}, {} violation(s)", c.palette(), bad.len());
    for v in bad {
        let names: Vec<&str> = v.vertices.iter().map(|&x| fan.role(x)).collect();
        println!("  {:?} {} colors {:?}", v.kind, names.join("-"), v.colors);
    }
}
