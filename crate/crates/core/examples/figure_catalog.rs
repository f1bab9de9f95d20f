//! Validates the transcribed figure colorings.
//!
//! Pass a directory to read the tables from disk instead of the copies
//! compiled into the library.
//!
//! ```bash
//! cargo run --example figure_catalog
//! cargo run --example figure_catalog -- crates/core/data/figures
//! ```

use std::path::Path;

use starchrome::families::FigureCatalog;
use starchrome::harness::commands::{figure_report, Status};

fn main() {
    let catalog = match std::env::args().nth(1) {
        Some(dir) => FigureCatalog::load_dir(Path::new(&dir)).unwrap_or_else(|e| panic!("{e}")),
        None => FigureCatalog::builtin(),
    };
    for row in figure_report(&catalog).unwrap() {
        let mark = if row.status == Status::Pass { "PASS" } else { "FAIL" };
        print!("{:<12} {:<13} {:>3} edges  palette {:>2}  {mark}", row.figure, row.family, row.edges, row.palette);
        if let Some(w) = row.witness {
            print!("  {:?} {} colors {:?}", w.kind, w.vertices.join("-"), w.colors);
        }
        println!();
    }
}
