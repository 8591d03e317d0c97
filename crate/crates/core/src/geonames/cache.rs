//! Search-result cache, optionally persisted as JSON lines.

use std::collections::HashMap;
use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::GeocodeMatch;
use crate::error::{Error, Result, Warnings};

pub const CACHE_FILE: &str = "geonames-cache.jsonl";

/// Lowercased, single-spaced query text plus an optional upper-case
/// ISO-2 country bias.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CacheKey {
    pub query: String,
    pub country: Option<String>,
}

impl CacheKey {
    pub fn new(query: &str, country: Option<&str>) -> Self {
        CacheKey {
            query: normalize_query(query),
            country: country
                .map(|c| c.trim().to_ascii_uppercase())
                .filter(|c| !c.is_empty()),
        }
    }
}

pub fn normalize_query(query: &str) -> String {
    query
        .split_whitespace()
        .collect::<Vec<_>>()
        .join(" ")
        .to_lowercase()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub key: CacheKey,
    /// `maxRows` of the query that produced `matches`.
    pub max_rows: usize,
    pub matches: Vec<GeocodeMatch>,
    /// Seconds since the Unix epoch.
    pub fetched_at: u64,
}

impl CacheEntry {
    /// Whether this entry can answer a query for `max_rows` results: either
    /// it asked for at least as many, or the service returned fewer than it
    /// asked for (so there are no more).
    pub fn covers(&self, max_rows: usize) -> bool {
        self.max_rows >= max_rows || self.matches.len() < self.max_rows
    }
}

#[derive(Debug, Default)]
pub struct GeocodeCache {
    entries: HashMap<CacheKey, CacheEntry>,
    path: Option<PathBuf>,
    needs_rewrite: bool,
    pub warnings: Warnings,
}

impl GeocodeCache {
    pub fn in_memory() -> Self {
        Self::default()
    }

    /// Opens (or creates) the cache file inside `dir`. Unreadable lines are
    /// skipped with a warning and the file is rewritten on the next store.
    pub fn open(dir: &Path) -> Result<Self> {
        fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
        let path = dir.join(CACHE_FILE);
        let mut cache = GeocodeCache {
            path: Some(path.clone()),
            ..Default::default()
        };
        let file = match File::open(&path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(cache),
            Err(e) => return Err(Error::io(&path, e)),
        };
        for (n, line) in BufReader::new(file).lines().enumerate() {
            let parsed = line
                .map_err(|e| e.to_string())
                .and_then(|l| serde_json::from_str::<CacheEntry>(&l).map_err(|e| e.to_string()));
            match parsed {
                Ok(entry) => {
                    cache.entries.insert(entry.key.clone(), entry);
                }
                Err(e) => {
                    cache
                        .warnings
                        .push(format!("{}:{}: corrupt cache line ignored: {e}", path.display(), n + 1));
                    cache.needs_rewrite = true;
                }
            }
        }
        Ok(cache)
    }

    pub fn lookup(&self, key: &CacheKey) -> Option<&CacheEntry> {
        self.entries.get(key)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Inserts or replaces the entry for its key; the last store wins.
    pub fn store(&mut self, entry: CacheEntry) -> Result<()> {
        let line = serde_json::to_string(&entry).expect("cache entry serializes");
        self.entries.insert(entry.key.clone(), entry);
        let Some(path) = &self.path else {
            return Ok(());
        };
        if self.needs_rewrite {
            self.rewrite()?;
            self.needs_rewrite = false;
            return Ok(());
        }
        let mut file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(path)
            .map_err(|e| Error::io(path, e))?;
        writeln!(file, "{line}").map_err(|e| Error::io(path, e))
    }

    fn rewrite(&self) -> Result<()> {
        let path = self.path.as_ref().expect("persistent cache");
        let tmp = path.with_extension("jsonl.tmp");
        let mut entries: Vec<&CacheEntry> = self.entries.values().collect();
        entries.sort_by(|a, b| a.key.cmp(&b.key));
        let mut out = String::new();
        for e in entries {
            out += &serde_json::to_string(e).expect("cache entry serializes");
            out.push('\n');
        }
        fs::write(&tmp, out).map_err(|e| Error::io(&tmp, e))?;
        fs::rename(&tmp, path).map_err(|e| Error::io(path, e))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point::GeoPoint;

    fn entry(q: &str, lat: f64) -> CacheEntry {
        CacheEntry {
            key: CacheKey::new(q, Some("us")),
            max_rows: 1,
            matches: vec![GeocodeMatch {
                point: GeoPoint::new(lat, -86.5),
                toponym_name: q.into(),
                country_code: Some("US".into()),
                rank: 1,
            }],
            fetched_at: 0,
        }
    }

    #[test]
    fn key_normalization() {
        assert_eq!(CacheKey::new("  North   Carolina ", Some("us")), CacheKey::new("north carolina", Some("US")));
        assert_eq!(CacheKey::new("x", Some(" ")).country, None);
    }

    #[test]
    fn lookup_before_store_is_absent() {
        let cache = GeocodeCache::in_memory();
        assert!(cache.lookup(&CacheKey::new("tennessee", Some("US"))).is_none());
    }

    #[test]
    fn persistent_round_trip_and_last_write_wins() {
        let dir = tempfile::tempdir().unwrap();
        {
            let mut cache = GeocodeCache::open(dir.path()).unwrap();
            cache.store(entry("tennessee", 35.0)).unwrap();
            cache.store(entry("tennessee", 35.8)).unwrap();
        }
        let cache = GeocodeCache::open(dir.path()).unwrap();
        let key = CacheKey::new("Tennessee", Some("US"));
        assert_eq!(cache.lookup(&key).unwrap(), &entry("tennessee", 35.8));
        assert_eq!(cache.len(), 1);
    }

    #[test]
    fn corrupt_file_is_a_miss_then_rewritten() {
        let dir = tempfile::tempdir().unwrap();
        fs::write(dir.path().join(CACHE_FILE), "{not json\n").unwrap();
        let mut cache = GeocodeCache::open(dir.path()).unwrap();
        assert!(cache.is_empty());
        assert_eq!(cache.warnings.len(), 1);
        cache.store(entry("alabama", 34.6)).unwrap();
        let text = fs::read_to_string(dir.path().join(CACHE_FILE)).unwrap();
        assert!(!text.contains("{not json"));
        let reopened = GeocodeCache::open(dir.path()).unwrap();
        assert!(reopened.warnings.is_empty());
        assert_eq!(reopened.len(), 1);
    }

    #[test]
    fn coverage_of_smaller_queries() {
        let e = entry("alabama", 34.6);
        assert!(e.covers(1));
        assert!(!e.covers(2));
        let short = CacheEntry { max_rows: 5, ..e };
        assert!(short.covers(10));
    }
}
