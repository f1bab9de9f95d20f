//! Append-only JSON-lines log of solved graphs, keyed by canonical graph6.
//!
//! The first line is a header carrying the schema version. Every later
//! line is one `SweepRecord`. A key is written at most once, so re-solving
//! a cached graph never touches the file.

use std::collections::BTreeMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::sweep::SweepRecord;

pub const CACHE_SCHEMA: u32 = 1;
pub const CACHE_ENV: &str = "STARCHROME_CACHE";
pub const DEFAULT_CACHE_FILE: &str = "starchrome-cache.jsonl";

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cache {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("cache {path}, line {line}: {msg}")]
    Corrupt { path: String, line: usize, msg: String },
    #[error("cache {path} has schema {found}, expected {CACHE_SCHEMA}")]
    Schema { path: String, found: u32 },
}

#[derive(Serialize, Deserialize)]
struct Header {
    schema: u32,
}

/// Path from `STARCHROME_CACHE`, else a file in the working directory.
pub fn default_cache_path() -> PathBuf {
    std::env::var_os(CACHE_ENV)
        .filter(|v| !v.is_empty())
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(DEFAULT_CACHE_FILE))
}

#[derive(Debug)]
pub struct ResultCache {
    path: PathBuf,
    records: BTreeMap<String, SweepRecord>,
}

impl ResultCache {
    /// Opens `path`, creating it with a header if it does not exist.
    pub fn open(path: impl AsRef<Path>) -> Result<ResultCache, CacheError> {
        let path = path.as_ref().to_path_buf();
        let shown = path.display().to_string();
        let io = |source| CacheError::Io {
            path: shown.clone(),
            source,
        };
        let mut records = BTreeMap::new();
        if !path.exists() {
            if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
                std::fs::create_dir_all(dir).map_err(io)?;
            }
            let mut f = File::create(&path).map_err(io)?;
            let header = serde_json::to_string(&Header { schema: CACHE_SCHEMA }).expect("header serialises");
            writeln!(f, "{header}").map_err(io)?;
            return Ok(ResultCache { path, records });
        }
        let reader = BufReader::new(File::open(&path).map_err(io)?);
        for (i, line) in reader.lines().enumerate() {
            let line = line.map_err(io)?;
            let corrupt = |msg: String| CacheError::Corrupt {
                path: shown.clone(),
                line: i + 1,
                msg,
            };
            if i == 0 {
                let h: Header = serde_json::from_str(&line).map_err(|e| corrupt(e.to_string()))?;
                if h.schema != CACHE_SCHEMA {
                    return Err(CacheError::Schema {
                        path: shown,
                        found: h.schema,
                    });
                }
                continue;
            }
            if line.trim().is_empty() {
                continue;
            }
            let rec: SweepRecord = serde_json::from_str(&line).map_err(|e| corrupt(e.to_string()))?;
            // a torn duplicate write keeps the first copy
            records.entry(rec.graph6.clone()).or_insert(rec);
        }
        Ok(ResultCache { path, records })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn get(&self, graph6: &str) -> Option<&SweepRecord> {
        self.records.get(graph6)
    }

    pub fn records(&self) -> impl Iterator<Item = &SweepRecord> {
        self.records.values()
    }

    /// Appends `rec` unless its key is already present. Returns whether a
    /// line was written.
    pub fn insert(&mut self, rec: SweepRecord) -> Result<bool, CacheError> {
        if self.records.contains_key(&rec.graph6) {
            return Ok(false);
        }
        let io = |source| CacheError::Io {
            path: self.path.display().to_string(),
            source,
        };
        let f = OpenOptions::new().append(true).open(&self.path).map_err(io)?;
        let mut w = BufWriter::new(f);
        let line = serde_json::to_string(&rec).expect("records serialise");
        writeln!(w, "{line}").map_err(io)?;
        w.flush().map_err(io)?;
        self.records.insert(rec.graph6.clone(), rec);
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rec(key: &str) -> SweepRecord {
        SweepRecord {
            graph6: key.into(),
            n: 4,
            m: 5,
            max_degree: 3,
            diameter: Some(2),
            two_connected: true,
            outerplanar: true,
            maximal: true,
            chi_star: Some(4),
            chi_lower: 4,
            chi_upper: 4,
            margin_three_halves_plus_one: Some(1),
            margin_three_halves_plus_five: Some(5),
            margin_delta_plus_six: None,
            margin_delta_plus_four: None,
            solver_nodes: 12,
            elapsed_us: 3,
        }
    }

    #[test]
    fn reopen_sees_inserted_records_once() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("sub/cache.jsonl");
        let mut c = ResultCache::open(&path).unwrap();
        assert!(c.insert(rec("Cz")).unwrap());
        assert!(!c.insert(rec("Cz")).unwrap());
        let c = ResultCache::open(&path).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c.get("Cz"), Some(&rec("Cz")));
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(text.lines().count(), 2);
    }

    #[test]
    fn wrong_schema_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.jsonl");
        std::fs::write(&path, "{\"schema\":99}\n").unwrap();
        assert!(matches!(ResultCache::open(&path), Err(CacheError::Schema { found: 99, .. })));
        std::fs::write(&path, "{\"schema\":1}\nnot json\n").unwrap();
        assert!(matches!(ResultCache::open(&path), Err(CacheError::Corrupt { line: 2, .. })));
    }
}
