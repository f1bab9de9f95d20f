//! Closed-form star colorings of the degree families, and lookup of the
//! transcribed figure tables for degrees the formulas do not cover.

use super::figures::FigureCatalog;
use super::{build_family, leaf, strip, Family, FamilyError, FamilyInstance, Params};
use crate::star::{Color, EdgeColoring};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColoringSource {
    Formula,
    Figure(String),
}

#[derive(Debug, Clone)]
pub struct FamilyColoring {
    pub instance: FamilyInstance,
    pub coloring: EdgeColoring,
    /// Palette the construction is supposed to achieve.
    pub claimed_palette: Color,
    pub source: ColoringSource,
}

type Rows = Vec<(String, String, Color)>;

fn v(i: usize) -> String {
    format!("v{i}")
}

/// Lowest degree each formula is stated for, and its palette above Δ.
fn formula_range(family: Family) -> Option<(usize, usize)> {
    match family {
        Family::HPrime => Some((9, 3)),
        Family::H => Some((7, 4)),
        Family::H2 => Some((10, 2)),
        _ => None,
    }
}

pub fn formula_coloring(family: Family, params: Params) -> Result<FamilyColoring, FamilyError> {
    if family == Family::Delta5Strip {
        let instance = build_family(family, params)?;
        let rows: Vec<(String, String, Color)> = (0..instance.graph.m())
            .map(|e| {
                let (a, b) = instance.edge_roles(e);
                let c = strip::color(a, b).expect("every strip edge has a template color");
                (a.to_string(), b.to_string(), c)
            })
            .collect();
        return finish(instance, rows, 9);
    }
    let delta = params.delta.unwrap_or(0);
    let Some((min, extra)) = formula_range(family) else {
        return Err(FamilyError::OutOfRange { family, delta });
    };
    if delta < min {
        return Err(FamilyError::OutOfRange { family, delta });
    }
    let instance = build_family(family, params)?;
    let rows = match family {
        Family::HPrime => h_prime_rows(delta),
        Family::H => h_rows(delta),
        Family::H2 => h2_rows(delta),
        _ => unreachable!(),
    };
    finish(instance, rows, (delta + extra) as Color)
}

fn finish(instance: FamilyInstance, rows: Rows, claimed: Color) -> Result<FamilyColoring, FamilyError> {
    let coloring = instance.coloring_from_roles(rows.iter().map(|(a, b, c)| (a.as_str(), b.as_str(), *c)))?;
    Ok(FamilyColoring {
        instance,
        coloring,
        claimed_palette: claimed,
        source: ColoringSource::Formula,
    })
}

/// The formula where one exists, otherwise a transcribed table with the
/// same family and parameters.
pub fn family_coloring(
    family: Family,
    params: Params,
    catalog: &FigureCatalog,
) -> Result<FamilyColoring, FamilyError> {
    match formula_coloring(family, params) {
        Err(FamilyError::OutOfRange { .. }) => {}
        other => return other,
    }
    let fig = catalog
        .figures()
        .iter()
        .find(|f| f.family == family && f.params == params)
        .ok_or(FamilyError::OutOfRange {
            family,
            delta: params.delta.unwrap_or(0),
        })?;
    let (instance, coloring) = fig.coloring().map_err(|e| FamilyError::PostconditionFailed {
        family,
        reason: e.to_string(),
    })?;
    Ok(FamilyColoring {
        instance,
        coloring,
        claimed_palette: fig.claimed_palette,
        source: ColoringSource::Figure(fig.id.clone()),
    })
}

fn push(rows: &mut Rows, a: impl Into<String>, b: impl Into<String>, c: usize) {
    rows.push((a.into(), b.into(), c as Color));
}

fn h_prime_rows(d: usize) -> Rows {
    let mut r = Rows::new();
    for (a, b, c) in [
        (0, 1, 1),
        (0, 4, d - 2),
        (1, 2, 2),
        (2, 5, d + 2),
        (3, 5, 1),
        (3, 4, d + 2),
        (0, 2, d),
        (0, 3, d - 1),
        (2, 3, d + 1),
    ] {
        push(&mut r, v(a), v(b), c);
    }
    let k = d - 4;
    for l in 1..=k {
        push(&mut r, v(0), leaf(0, l), l + 1);
        push(&mut r, v(2), leaf(2, l), l + 2);
        push(&mut r, v(3), leaf(3, l), l + 1);
    }
    // path v1 - v0^(1) - ... - v0^(k) - v4
    push(&mut r, v(1), leaf(0, 1), d + 3);
    for m in 2..=d - 5 {
        push(&mut r, leaf(0, m - 1), leaf(0, m), m + 3);
    }
    push(&mut r, leaf(0, d - 5), leaf(0, d - 4), d + 1);
    push(&mut r, leaf(0, k), v(4), d + 3);
    // path v1 - v2^(1) - ... - v2^(k) - v5
    push(&mut r, v(1), leaf(2, 1), 5);
    for n in 2..=d - 5 {
        push(&mut r, leaf(2, n - 1), leaf(2, n), n + 4);
    }
    push(&mut r, leaf(2, d - 5), leaf(2, d - 4), 2);
    push(&mut r, leaf(2, k), v(5), 3);
    // path v5 - v3^(1) - ... - v3^(k) - v4
    push(&mut r, v(5), leaf(3, 1), 4);
    for p in 2..=d - 6 {
        push(&mut r, leaf(3, p - 1), leaf(3, p), p + 3);
    }
    push(&mut r, leaf(3, d - 6), leaf(3, d - 5), d + 2);
    push(&mut r, leaf(3, d - 5), leaf(3, d - 4), d);
    push(&mut r, leaf(3, k), v(4), 2);
    r
}

fn h_rows(d: usize) -> Rows {
    let mut r = Rows::new();
    for (a, b, c) in [
        (0, 1, d - 3),
        (0, 2, d - 2),
        (0, 3, d + 1),
        (0, 4, d + 2),
        (3, 5, d - 1),
        (4, 5, d + 4),
        (1, 2, d + 3),
        (2, 3, d),
        (3, 4, d + 3),
    ] {
        push(&mut r, v(a), v(b), c);
    }
    let k = d - 4;
    for l in 1..=k {
        push(&mut r, v(0), leaf(0, l), l);
        push(&mut r, v(3), leaf(3, l), l + 2);
    }
    for p in 1..=d - 3 {
        push(&mut r, v(4), leaf(4, p), p + 2);
    }
    // v0^(1) - ... - v0^(k) - v1; the last step lands on v1
    for l in 1..=k {
        let next = if l == k { v(1) } else { leaf(0, l + 1) };
        push(&mut r, leaf(0, l), next, l + 3);
    }
    for m in 1..k {
        push(&mut r, leaf(3, m), leaf(3, m + 1), m);
    }
    push(&mut r, leaf(3, k), v(5), d - 4);
    for p in 1..=d - 4 {
        push(&mut r, leaf(4, p), leaf(4, p + 1), p);
    }
    push(&mut r, v(5), leaf(4, 1), d);
    r
}

fn h2_rows(d: usize) -> Rows {
    let mut r = Rows::new();
    for (a, b, c) in [
        (0, 1, d + 2),
        (0, 2, d - 1),
        (0, 3, d + 1),
        (0, 4, 5),
        (1, 2, d),
        (2, 3, d - 2),
        (3, 4, d),
        (1, 5, d + 1),
        (2, 5, 1),
        (3, 6, d - 3),
        (4, 6, d + 2),
    ] {
        push(&mut r, v(a), v(b), c);
    }
    let k = d - 4;
    for l in 1..=k {
        push(&mut r, v(2), leaf(2, l), l + 1);
        push(&mut r, v(3), leaf(3, l), l);
    }
    // v5 - v2^(1) - ... - v2^(k)
    push(&mut r, v(5), leaf(2, 1), 4);
    for p in 1..=d - 7 {
        push(&mut r, leaf(2, p), leaf(2, p + 1), p + 4);
    }
    push(&mut r, leaf(2, d - 6), leaf(2, d - 5), 1);
    push(&mut r, leaf(2, d - 5), leaf(2, d - 4), 2);
    // v3^(1) - ... - v3^(k) - v6
    for q in 1..=d - 6 {
        push(&mut r, leaf(3, q), leaf(3, q + 1), q + 3);
    }
    push(&mut r, leaf(3, d - 5), leaf(3, d - 4), 1);
    push(&mut r, leaf(3, k), v(6), 2);
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::star::star_violations;

    #[test]
    fn formulas_valid_over_a_range() {
        for (family, lo) in [(Family::HPrime, 9), (Family::H, 7), (Family::H2, 10)] {
            for d in lo..lo + 12 {
                let fc = formula_coloring(family, Params::delta(d)).unwrap();
                let bad = star_violations(&fc.instance.graph, &fc.coloring).unwrap();
                assert!(bad.is_empty(), "{family} delta {d}: {:?}", &bad[..1]);
                assert_eq!(fc.coloring.palette(), fc.claimed_palette);
            }
        }
    }

    #[test]
    fn below_range_is_rejected() {
        assert_eq!(
            formula_coloring(Family::HPrime, Params::delta(8)).unwrap_err(),
            FamilyError::OutOfRange {
                family: Family::HPrime,
                delta: 8
            }
        );
        assert!(formula_coloring(Family::Fan, Params::n(5)).is_err());
    }

    #[test]
    fn strip_template_valid_for_several_periods() {
        for blocks in [10, 16, 22, 28] {
            let fc = formula_coloring(Family::Delta5Strip, Params::blocks(blocks)).unwrap();
            assert!(star_violations(&fc.instance.graph, &fc.coloring).unwrap().is_empty());
            assert_eq!(fc.coloring.palette(), 9);
        }
    }
}
