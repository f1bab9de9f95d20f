//! A periodic strip of fans with maximum degree five.
//!
//! The strip is a path of spine vertices `s0, s1, ...` with hubs `h0, h1,
//! ...` alternately above and below it. Each hub is adjacent to a run of
//! three or four consecutive spine vertices, and some hubs carry an ear
//! (`e{k}a` at the start of the run, `e{k}b` at the end) adjacent to the hub
//! and the run's end vertex. Six hubs advance the spine by ten vertices.

use super::{Builder, Family, FamilyError};
use crate::star::Color;

pub const STRIP_PERIOD: usize = 6;

/// First spine vertex of each hub's run, relative to its period.
const OFFSET: [usize; 6] = [0, 2, 4, 5, 7, 9];
const RUN: [usize; 6] = [4, 4, 3, 4, 4, 3];
/// Ear at the start / at the end of the run.
const EARS: [(bool, bool); 6] = [
    (false, true),
    (true, false),
    (true, true),
    (false, true),
    (true, false),
    (true, true),
];

// Colors of one period in a 9-color star coloring.
const SPINE_COLORS: [Color; 10] = [8, 7, 1, 7, 9, 5, 8, 5, 7, 6];
const HUB_SPINE_COLORS: [[Color; 4]; 6] = [
    [2, 4, 9, 8],
    [6, 5, 4, 2],
    [8, 3, 1, 0],
    [1, 7, 6, 9],
    [4, 3, 1, 7],
    [4, 9, 3, 0],
];
const HUB_EAR_COLORS: [[Color; 2]; 6] = [[0, 5], [9, 0], [6, 9], [0, 8], [9, 0], [5, 6]];
const EAR_SPINE_COLORS: [[Color; 2]; 6] = [[0, 3], [3, 0], [5, 4], [0, 4], [2, 0], [8, 5]];

/// Strip lengths (in hubs) for which the construction closes off into a
/// maximal outerplanar graph with maximum degree five.
pub fn strip_block_counts() -> impl Iterator<Item = usize> {
    (0..).map(|t| 10 + STRIP_PERIOD * t)
}

fn run(k: usize) -> (usize, usize) {
    let j = k % 6;
    (10 * (k / 6) + OFFSET[j], RUN[j])
}

pub(super) fn build(b: &mut Builder, blocks: usize) -> Result<(), FamilyError> {
    if blocks < 10 || !(blocks - 10).is_multiple_of(STRIP_PERIOD) {
        return Err(FamilyError::BadParams {
            family: Family::Delta5Strip,
            reason: format!("blocks = {blocks}; the strip closes up for 10, 16, 22, ... hubs"),
        });
    }
    let (last_start, last_len) = run(blocks - 1);
    let spine: Vec<String> = (0..last_start + last_len).map(|i| format!("s{i}")).collect();
    b.chain(&spine);
    for k in 0..blocks {
        let (start, len) = run(k);
        let hub = format!("h{k}");
        for s in &spine[start..start + len] {
            b.edge(&hub, s);
        }
        let (at_start, at_end) = EARS[k % 6];
        if at_start {
            b.edge(&hub, &format!("e{k}a"));
            b.edge(&format!("e{k}a"), &spine[start]);
        }
        if at_end {
            b.edge(&hub, &format!("e{k}b"));
            b.edge(&format!("e{k}b"), &spine[start + len - 1]);
        }
    }
    Ok(())
}

/// Color of the strip edge between roles `a` and `b`.
pub(super) fn color(a: &str, b: &str) -> Option<Color> {
    let (a, b) = if rank(a) <= rank(b) { (a, b) } else { (b, a) };
    let num = |s: &str| s.trim_matches(|c: char| !c.is_ascii_digit()).parse::<usize>().ok();
    let side = |s: &str| usize::from(s.ends_with('b'));
    let c = match (&a[..1], &b[..1]) {
        ("s", "s") => SPINE_COLORS[num(a)? % 10],
        ("s", "h") => {
            let k = num(b)?;
            let d = num(a)?.checked_sub(run(k).0)?;
            *HUB_SPINE_COLORS[k % 6].get(d)?
        }
        ("s", "e") => EAR_SPINE_COLORS[num(b)? % 6][side(b)],
        ("h", "e") => HUB_EAR_COLORS[num(b)? % 6][side(b)],
        _ => return None,
    };
    (c != 0).then_some(c)
}

fn rank(s: &str) -> u8 {
    match s.as_bytes().first() {
        Some(b's') => 0,
        Some(b'h') => 1,
        _ => 2,
    }
}
