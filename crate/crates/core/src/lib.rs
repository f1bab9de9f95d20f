pub mod graph;
pub mod star;
pub mod outerplanar;
pub mod families;
pub mod harness;
