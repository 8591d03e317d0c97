//! Recorded `searchJSON` responses for offline runs.
//!
//! A fixture store is either a directory of `*.json` documents or a single
//! `.jsonl` file with one document per line. Each document is
//!
//! ```json
//! {"q": "alabama", "country": "US", "response": { "geonames": [ ... ] }}
//! ```
//!
//! where `response` is the service body verbatim. `country` may be omitted
//! or null for an unbiased query. A query with no matching document
//! behaves like a search with zero results.

use std::collections::HashMap;
use std::fs;
use std::path::Path;

use serde::Deserialize;
use serde_json::Value;

use super::cache::CacheKey;
use crate::error::{Error, Result};

#[derive(Debug, Deserialize)]
struct FixtureDoc {
    q: String,
    #[serde(default)]
    country: Option<String>,
    response: Value,
}

#[derive(Debug, Clone, Default)]
pub struct FixtureStore {
    responses: HashMap<CacheKey, Value>,
}

impl FixtureStore {
    pub fn load(path: &Path) -> Result<Self> {
        let mut store = FixtureStore::default();
        let meta = fs::metadata(path).map_err(|e| Error::io(path, e))?;
        if meta.is_dir() {
            let mut files: Vec<_> = fs::read_dir(path)
                .map_err(|e| Error::io(path, e))?
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|p| p.extension().is_some_and(|x| x == "json" || x == "jsonl"))
                .collect();
            files.sort();
            for file in files {
                store.load_file(&file)?;
            }
        } else {
            store.load_file(path)?;
        }
        Ok(store)
    }

    fn load_file(&mut self, path: &Path) -> Result<()> {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let is_lines = path.extension().is_some_and(|x| x == "jsonl");
        let docs: Vec<(usize, &str)> = if is_lines {
            text.lines()
                .enumerate()
                .filter(|(_, l)| !l.trim().is_empty())
                .map(|(i, l)| (i + 1, l))
                .collect()
        } else {
            vec![(1, text.as_str())]
        };
        for (line, doc) in docs {
            let doc: FixtureDoc = serde_json::from_str(doc).map_err(|e| {
                Error::Format(format!("fixture {}:{line}: {e}", path.display()))
            })?;
            self.insert(&doc.q, doc.country.as_deref(), doc.response);
        }
        Ok(())
    }

    pub fn insert(&mut self, query: &str, country: Option<&str>, response: Value) {
        self.responses.insert(CacheKey::new(query, country), response);
    }

    /// Exact key first, then the unbiased entry for the same query.
    pub fn lookup(&self, key: &CacheKey) -> Option<&Value> {
        self.responses.get(key).or_else(|| {
            key.country.as_ref().and_then(|_| {
                self.responses.get(&CacheKey {
                    query: key.query.clone(),
                    country: None,
                })
            })
        })
    }

    pub fn len(&self) -> usize {
        self.responses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.responses.is_empty()
    }
}
