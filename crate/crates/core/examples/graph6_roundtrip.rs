//! graph6 encoding, decoding and canonical forms.
//!
//! ```bash
//! cargo run --example graph6_roundtrip -- 'E?~o'
//! ```

use starchrome::graph::{graph6, Graph};

fn main() {
    let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
    println!("K4 -> {}", graph6::encode(&k4).unwrap());

    let text = std::env::args().nth(1).unwrap_or_else(|| "Bg".into());
    let g = graph6::decode(&text).unwrap_or_else(|e| panic!("{text:?}: {e}"));
    println!("{text} -> n {} edges {:?}", g.n(), g.edges());
    assert_eq!(graph6::encode(&g).unwrap(), text);

    // relabelled copies share one canonical key
    let flipped: Vec<usize> = (0..g.n()).rev().collect();
    let h = g.relabel(&flipped).unwrap();
    println!("relabelled {} -> canonical {}", graph6::encode(&h).unwrap(), h.canonical_key().unwrap());
    assert_eq!(g.canonical_key().unwrap(), h.canonical_key().unwrap());
}
