//! Append-only text cache of solved game values, keyed by isomorphism
//! certificate.
//!
//! One entry per line: `<base64-cert> <max> <min> <version>`. Lines that do
//! not parse, do not decode to a graph, or carry values outside
//! `μ ≤ v ≤ α′` are skipped with a warning. Entries written by another
//! solver version are ignored.

use std::collections::HashMap;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use base64::engine::general_purpose::STANDARD;
use base64::Engine;
use matchgame::{canonical_certificate, matching_number, min_maximal_size, Certificate, Graph, SOLVER_VERSION};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CacheEntry {
    pub certificate: Certificate,
    pub max: usize,
    pub min: usize,
    pub version: String,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LineError {
    #[error("expected 4 fields, found {0}")]
    Fields(usize),
    #[error("certificate is not valid base64")]
    Base64,
    #[error("certificate does not decode to a graph")]
    Certificate,
    #[error("bad value {0:?}")]
    Value(String),
    #[error("values ({max}, {min}) outside [{mu}, {alpha}]")]
    Bounds { max: usize, min: usize, mu: usize, alpha: usize },
}

impl CacheEntry {
    /// Entry for `g` stamped with the current solver version.
    pub fn new(g: &Graph, max: usize, min: usize) -> Self {
        CacheEntry {
            certificate: canonical_certificate(g),
            max,
            min,
            version: SOLVER_VERSION.to_string(),
        }
    }

    pub fn to_line(&self) -> String {
        format!(
            "{} {} {} {}",
            STANDARD.encode(self.certificate.as_bytes()),
            self.max,
            self.min,
            self.version
        )
    }

    /// Parses and validates one cache line.
    pub fn parse_line(line: &str) -> Result<Self, LineError> {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [cert, max, min, version] = fields[..] else {
            return Err(LineError::Fields(fields.len()));
        };
        let bytes = STANDARD.decode(cert).map_err(|_| LineError::Base64)?;
        let certificate = Certificate::from_bytes(bytes).ok_or(LineError::Certificate)?;
        let g = certificate.to_graph().ok_or(LineError::Certificate)?;
        let value = |s: &str| s.parse::<usize>().map_err(|_| LineError::Value(s.to_string()));
        let (max, min) = (value(max)?, value(min)?);
        let (mu, alpha) = (min_maximal_size(&g), matching_number(&g));
        if [max, min].iter().any(|v| !(mu..=alpha).contains(v)) {
            return Err(LineError::Bounds { max, min, mu, alpha });
        }
        Ok(CacheEntry {
            certificate,
            max,
            min,
            version: version.to_string(),
        })
    }
}

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cache {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> CacheError + '_ {
    move |source| CacheError::Io {
        path: path.to_path_buf(),
        source,
    }
}

/// Cache contents loaded from disk.
#[derive(Debug, Default)]
pub struct Cache {
    entries: HashMap<Certificate, CacheEntry>,
    warnings: Vec<String>,
}

impl Cache {
    /// Reads `path`. A missing file is an empty cache.
    pub fn load(path: &Path) -> Result<Self, CacheError> {
        let text = match fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) if e.kind() == io::ErrorKind::NotFound => String::new(),
            Err(e) => return Err(io_err(path)(e)),
        };
        let mut cache = Cache::default();
        for (i, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            match CacheEntry::parse_line(line) {
                Ok(e) if e.version == SOLVER_VERSION => {
                    cache.entries.insert(e.certificate.clone(), e);
                }
                Ok(_) => {}
                Err(err) => cache
                    .warnings
                    .push(format!("{}:{}: skipping corrupt entry: {err}", path.display(), i + 1)),
            }
        }
        Ok(cache)
    }

    pub fn get(&self, g: &Graph) -> Option<&CacheEntry> {
        self.entries.get(&canonical_certificate(g))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// One message per skipped line.
    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }
}

/// Looks up `g`, printing warnings for corrupt lines to stderr.
pub fn cache_get(path: &Path, g: &Graph) -> Result<Option<CacheEntry>, CacheError> {
    let cache = Cache::load(path)?;
    for w in cache.warnings() {
        eprintln!("warning: {w}");
    }
    Ok(cache.get(g).cloned())
}

/// Appends `entry`. The new contents are written to a temporary file in the
/// same directory and renamed over `path`, so readers never see a torn line.
pub fn cache_put(path: &Path, entry: &CacheEntry) -> Result<(), CacheError> {
    let mut text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == io::ErrorKind::NotFound => String::new(),
        Err(e) => return Err(io_err(path)(e)),
    };
    if !text.is_empty() && !text.ends_with('\n') {
        text.push('\n');
    }
    text.push_str(&entry.to_line());
    text.push('\n');

    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d.to_path_buf(),
        _ => PathBuf::from("."),
    };
    let name = path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
    let tmp = dir.join(format!(".{name}.{}.tmp", std::process::id()));
    let write = || -> io::Result<()> {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(text.as_bytes())?;
        f.sync_all()?;
        fs::rename(&tmp, path)
    };
    write().map_err(|e| {
        let _ = fs::remove_file(&tmp);
        io_err(path)(e)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use matchgame::construct::{cycle, path};

    #[test]
    fn put_then_get() {
        let dir = tempfile::tempdir().unwrap();
        let file = dir.path().join("cache.txt");
        let g = cycle(6).unwrap();
        let entry = CacheEntry::new(&g, 2, 3);
        cache_put(&file, &entry).unwrap();
        assert_eq!(cache_get(&file, &g).unwrap(), Some(entry));
        // relabeled copies hit the same entry
        let h = g.relabel(&[3, 1, 4, 0, 5, 2]);
        assert_eq!(cache_get(&file, &h).unwrap().map(|e| (e.max, e.min)), Some((2, 3)));
    }

    #[test]
    fn missing_or_empty_file_misses() {
        let dir = tempfile::tempdir().unwrap();
        let file = dir.path().join("cache.txt");
        assert_eq!(cache_get(&file, &path(3).unwrap()).unwrap(), None);
        fs::write(&file, "").unwrap();
        assert_eq!(cache_get(&file, &path(3).unwrap()).unwrap(), None);
    }

    #[test]
    fn version_mismatch_misses() {
        let dir = tempfile::tempdir().unwrap();
        let file = dir.path().join("cache.txt");
        let g = path(4).unwrap();
        let mut entry = CacheEntry::new(&g, 2, 1);
        entry.version = "mg0.0.0-old".into();
        cache_put(&file, &entry).unwrap();
        let cache = Cache::load(&file).unwrap();
        assert!(cache.get(&g).is_none());
        assert!(cache.warnings().is_empty());
    }

    #[test]
    fn corrupt_lines_are_skipped() {
        let dir = tempfile::tempdir().unwrap();
        let file = dir.path().join("cache.txt");
        let g = path(4).unwrap();
        let good = CacheEntry::new(&g, 2, 1).to_line();
        let cert = STANDARD.encode(canonical_certificate(&g).as_bytes());
        let text = format!(
            "garbage\n{cert} 9 9 {SOLVER_VERSION}\n!!!! 1 1 {SOLVER_VERSION}\n{cert} x 1 {SOLVER_VERSION}\nAAAA 0 0 {SOLVER_VERSION}\n{good}\n"
        );
        fs::write(&file, text).unwrap();
        let cache = Cache::load(&file).unwrap();
        assert_eq!(cache.warnings().len(), 5);
        assert_eq!(cache.get(&g).map(|e| (e.max, e.min)), Some((2, 1)));
    }

    #[test]
    fn line_round_trip_is_exact() {
        let g = cycle(5).unwrap();
        let e = CacheEntry::new(&g, 2, 2);
        let back = CacheEntry::parse_line(&e.to_line()).unwrap();
        assert_eq!(back, e);
        assert_eq!(back.to_line(), e.to_line());
    }

    #[test]
    fn put_appends() {
        let dir = tempfile::tempdir().unwrap();
        let file = dir.path().join("cache.txt");
        cache_put(&file, &CacheEntry::new(&path(2).unwrap(), 1, 1)).unwrap();
        cache_put(&file, &CacheEntry::new(&path(4).unwrap(), 2, 1)).unwrap();
        let text = fs::read_to_string(&file).unwrap();
        assert_eq!(text.lines().count(), 2);
        assert_eq!(Cache::load(&file).unwrap().len(), 2);
        let leftovers = fs::read_dir(dir.path()).unwrap().count();
        assert_eq!(leftovers, 1);
    }
}
