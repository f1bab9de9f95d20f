//! Transcribed colorings of the published drawings.
//!
//! Each figure is a small text file: `key value` header lines followed by
//! one `role role color` line per edge. `alias x 7` lets a table keep the
//! symbol printed in the drawing while mapping it to a color id.

use std::collections::HashMap;
use std::path::Path;

use thiserror::Error;

use super::{build_family, Family, FamilyError, FamilyInstance, Params};
use crate::star::{Color, EdgeColoring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FigureError {
    #[error("figure data file {0} is missing")]
    MissingFile(String),
    #[error("cannot read {path}: {msg}")]
    Io { path: String, msg: String },
    #[error("{file}:{line}: {msg}")]
    Parse { file: String, line: usize, msg: String },
    #[error("figure {id}: {source}")]
    Family { id: String, source: FamilyError },
    #[error("no figure with id {0:?}")]
    UnknownFigure(String),
}

#[derive(Debug, Clone)]
pub struct Figure {
    pub id: String,
    pub family: Family,
    pub params: Params,
    pub claimed_palette: Color,
    rows: Vec<(String, String, String)>,
    aliases: HashMap<String, Color>,
}

impl Figure {
    pub fn parse(file: &str, text: &str) -> Result<Figure, FigureError> {
        let err = |line: usize, msg: String| FigureError::Parse {
            file: file.to_string(),
            line,
            msg,
        };
        let mut id = None;
        let mut family = None;
        let mut params = Params::default();
        let mut claimed = None;
        let mut rows = Vec::new();
        let mut aliases = HashMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let toks: Vec<&str> = raw.split_whitespace().collect();
            let num = |s: &str| s.parse::<usize>().map_err(|e| err(line, format!("{s:?}: {e}")));
            match toks.as_slice() {
                [] => {}
                [c, ..] if c.starts_with('#') => {}
                ["id", v] => id = Some(v.to_string()),
                ["family", v] => family = Some(v.parse::<Family>().map_err(|e| err(line, e.to_string()))?),
                ["n", v] => params.n = Some(num(v)?),
                ["delta", v] => params.delta = Some(num(v)?),
                ["blocks", v] => params.blocks = Some(num(v)?),
                ["claimed-palette", v] => claimed = Some(num(v)? as Color),
                ["alias", sym, v] => {
                    aliases.insert(sym.to_string(), num(v)? as Color);
                }
                [a, b, c] => rows.push((a.to_string(), b.to_string(), c.to_string())),
                _ => return Err(err(line, format!("cannot read {raw:?}"))),
            }
        }
        let missing = |what: &str| err(0, format!("header {what} missing"));
        let family = family.ok_or_else(|| missing("family"))?;
        // only the strip carries a length; delta is informational there
        if family == Family::Delta5Strip {
            params.delta = None;
        }
        Ok(Figure {
            id: id.ok_or_else(|| missing("id"))?,
            family,
            params,
            claimed_palette: claimed.ok_or_else(|| missing("claimed-palette"))?,
            rows,
            aliases,
        })
    }

    pub fn edge_count(&self) -> usize {
        self.rows.len()
    }

    /// Builds the family instance and maps the table onto it.
    pub fn coloring(&self) -> Result<(FamilyInstance, EdgeColoring), FigureError> {
        let wrap = |source| FigureError::Family {
            id: self.id.clone(),
            source,
        };
        let inst = build_family(self.family, self.params).map_err(wrap)?;
        let mut rows = Vec::with_capacity(self.rows.len());
        for (a, b, sym) in &self.rows {
            let c = match self.aliases.get(sym) {
                Some(&c) => c,
                None => sym.parse::<Color>().map_err(|_| FigureError::Parse {
                    file: self.id.clone(),
                    line: 0,
                    msg: format!("color {sym:?} is neither a number nor an alias"),
                })?,
            };
            rows.push((a.as_str(), b.as_str(), c));
        }
        let coloring = inst.coloring_from_roles(rows).map_err(wrap)?;
        Ok((inst, coloring))
    }
}

macro_rules! builtin {
    ($($id:literal),* $(,)?) => {
        const BUILTIN: &[(&str, &str)] = &[
            $(($id, include_str!(concat!("../../data/figures/", $id, ".txt")))),*
        ];
    };
}

builtin!(
    "fig01", "fig02", "fig03-left", "fig03-right", "fig08a", "fig08b", "fig08c", "fig08d",
    "fig08e", "fig10a", "fig10b", "fig10c", "fig10d", "fig11a", "fig11b", "fig11c", "fig11d",
    "fig11e", "fig11f", "fig11g", "fig12",
);

#[derive(Debug, Clone)]
pub struct FigureCatalog {
    figures: Vec<Figure>,
}

impl FigureCatalog {
    pub fn ids() -> impl Iterator<Item = &'static str> {
        BUILTIN.iter().map(|(id, _)| *id)
    }

    /// The tables compiled into the library.
    pub fn builtin() -> FigureCatalog {
        let figures = BUILTIN
            .iter()
            .map(|(id, text)| Figure::parse(id, text).expect("bundled figure tables parse"))
            .collect();
        FigureCatalog { figures }
    }

    /// Reads `<id>.txt` for every known figure id from `dir`.
    pub fn load_dir(dir: &Path) -> Result<FigureCatalog, FigureError> {
        let mut figures = Vec::new();
        for id in Self::ids() {
            let path = dir.join(format!("{id}.txt"));
            if !path.exists() {
                return Err(FigureError::MissingFile(path.display().to_string()));
            }
            let text = std::fs::read_to_string(&path).map_err(|e| FigureError::Io {
                path: path.display().to_string(),
                msg: e.to_string(),
            })?;
            figures.push(Figure::parse(&path.display().to_string(), &text)?);
        }
        Ok(FigureCatalog { figures })
    }

    pub fn figures(&self) -> &[Figure] {
        &self.figures
    }

    pub fn get(&self, id: &str) -> Result<&Figure, FigureError> {
        self.figures
            .iter()
            .find(|f| f.id == id)
            .ok_or_else(|| FigureError::UnknownFigure(id.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_tables_map_onto_their_families() {
        let cat = FigureCatalog::builtin();
        assert_eq!(cat.figures().len(), 21);
        for f in cat.figures() {
            let (inst, c) = f.coloring().unwrap_or_else(|e| panic!("{e}"));
            assert_eq!(inst.graph.m(), f.edge_count(), "{}", f.id);
            c.check_total(&inst.graph).unwrap();
        }
    }

    #[test]
    fn parse_errors_carry_location() {
        let e = Figure::parse("x", "id x\nfamily g61\nclaimed-palette 6\nv0 v1\n").unwrap_err();
        assert!(matches!(e, FigureError::Parse { line: 4, .. }));
        let e = Figure::parse("x", "id x\nfamily nope\n").unwrap_err();
        assert!(matches!(e, FigureError::Parse { line: 2, .. }));
    }

    #[test]
    fn missing_directory_reports_first_file() {
        let e = FigureCatalog::load_dir(Path::new("/definitely/not/here")).unwrap_err();
        assert!(matches!(e, FigureError::MissingFile(p) if p.ends_with("fig01.txt")));
    }
}
