//! Geocoding of locationized rows through a [`GeoNamesClient`].

use std::collections::HashMap;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::country_codes::COUNTRY_NAMES;
use crate::error::{Error, Result};
use crate::geonames::{CacheKey, GeoNamesClient, GeocodeMatch};
use crate::locationizer::{locationized_to_table, LocationizedRecord};
use crate::table::Table;

pub const LAT_COLUMN: &str = "lat";
pub const LNG_COLUMN: &str = "lng";
pub const MATCHES_COLUMN: &str = "matches";

/// ISO-2 code for a country name as written in EM-DAT. Tries the name as
/// given (exact, then ignoring case), then with trailing parentheticals
/// such as `(the)` removed.
pub fn country_to_iso2(country_name: &str) -> Option<&'static str> {
    let name = country_name.trim();
    if name.is_empty() {
        return None;
    }
    lookup_country(name).or_else(|| {
        let stripped = strip_trailing_parentheticals(name);
        (stripped != name && !stripped.is_empty())
            .then(|| lookup_country(stripped))
            .flatten()
    })
}

fn lookup_country(name: &str) -> Option<&'static str> {
    COUNTRY_NAMES
        .iter()
        .find(|(n, _)| *n == name)
        .or_else(|| {
            let folded = fold(name);
            COUNTRY_NAMES.iter().find(|(n, _)| fold(n) == folded)
        })
        .map(|(_, code)| *code)
}

fn fold(s: &str) -> String {
    s.chars()
        .map(|c| if c == '’' { '\'' } else { c })
        .flat_map(char::to_lowercase)
        .collect::<String>()
        .split_whitespace()
        .collect::<Vec<_>>()
        .join(" ")
}

fn strip_trailing_parentheticals(mut s: &str) -> &str {
    loop {
        let t = s.trim_end();
        if !t.ends_with(')') {
            return t;
        }
        match t.rfind('(') {
            Some(open) => s = &t[..open],
            None => return t,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeocodedRecord {
    pub base: LocationizedRecord,
    /// Candidates in service order, at most `n_results` of them.
    pub matches: Vec<GeocodeMatch>,
}

impl GeocodedRecord {
    pub fn lat(&self) -> Option<f64> {
        self.matches.first().map(|m| m.point.lat)
    }

    pub fn lng(&self) -> Option<f64> {
        self.matches.first().map(|m| m.point.lng)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeocodeOptions {
    pub n_results: usize,
    pub unwrap: bool,
    /// Restrict each search to the record's own country.
    pub country_bias: bool,
    pub workers: usize,
}

impl Default for GeocodeOptions {
    fn default() -> Self {
        GeocodeOptions {
            n_results: 1,
            unwrap: false,
            country_bias: true,
            workers: 1,
        }
    }
}

impl GeocodeOptions {
    pub fn validate(&self) -> Result<()> {
        if self.n_results == 0 {
            return Err(Error::Config("n_results must be at least 1".into()));
        }
        if self.workers == 0 {
            return Err(Error::Config("workers must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BatchPlan {
    pub batch_size: usize,
    #[serde(with = "wait_secs")]
    pub wait_time: Duration,
}

impl Default for BatchPlan {
    fn default() -> Self {
        BatchPlan {
            batch_size: 990,
            wait_time: Duration::from_secs(4800),
        }
    }
}

impl BatchPlan {
    pub fn validate(&self) -> Result<()> {
        if self.batch_size == 0 {
            return Err(Error::Config("batch_size must be at least 1".into()));
        }
        Ok(())
    }
}

mod wait_secs {
    use std::time::Duration;

    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_u64(d.as_secs())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Duration, D::Error> {
        Ok(Duration::from_secs(u64::deserialize(d)?))
    }
}

fn search_key(record: &LocationizedRecord, options: &GeocodeOptions) -> Option<CacheKey> {
    if record.location_word.trim().is_empty() {
        return None;
    }
    let bias = options
        .country_bias
        .then(|| country_to_iso2(&record.record.country))
        .flatten();
    Some(CacheKey::new(&record.location_word, bias))
}

/// Looks up every row with a location word. Rows without a word, or with
/// no hits, come back with no matches. Output order equals input order.
///
/// A quota error carries the index of the first row left unanswered;
/// answered rows are cached, so re-running from the start is cheap.
pub fn geocode(
    records: &[LocationizedRecord],
    options: &GeocodeOptions,
    client: &GeoNamesClient,
) -> Result<Vec<GeocodedRecord>> {
    options.validate()?;
    let keys: Vec<Option<CacheKey>> = records.iter().map(|r| search_key(r, options)).collect();

    // Unique keys in first-seen order.
    let mut unique: Vec<&CacheKey> = Vec::new();
    let mut seen: HashMap<&CacheKey, ()> = HashMap::new();
    for key in keys.iter().flatten() {
        if seen.insert(key, ()).is_none() {
            unique.push(key);
        }
    }

    let results: Mutex<HashMap<&CacheKey, Vec<GeocodeMatch>>> = Mutex::new(HashMap::new());
    let failure: Mutex<Option<Error>> = Mutex::new(None);
    let next = AtomicUsize::new(0);
    let stop = AtomicBool::new(false);

    let work = || loop {
        if stop.load(Ordering::SeqCst) {
            break;
        }
        let i = next.fetch_add(1, Ordering::SeqCst);
        let Some(key) = unique.get(i) else { break };
        match client.search(&key.query, key.country.as_deref(), options.n_results) {
            Ok(matches) => {
                results.lock().unwrap().insert(*key, matches);
            }
            Err(e) => {
                stop.store(true, Ordering::SeqCst);
                failure.lock().unwrap().get_or_insert(e);
                break;
            }
        }
    };
    if options.workers == 1 {
        work();
    } else {
        std::thread::scope(|s| {
            for _ in 0..options.workers.min(unique.len().max(1)) {
                s.spawn(work);
            }
        });
    }

    let results = results.into_inner().unwrap();
    if let Some(err) = failure.into_inner().unwrap() {
        let first_missing = keys
            .iter()
            .position(|k| k.as_ref().is_some_and(|k| !results.contains_key(k)))
            .unwrap_or(0);
        return Err(match err {
            Error::QuotaExhausted { message, .. } => Error::QuotaExhausted {
                message,
                resume_from_row: Some(first_missing),
            },
            other => other,
        });
    }

    Ok(records
        .iter()
        .zip(&keys)
        .map(|(record, key)| GeocodedRecord {
            base: record.clone(),
            matches: key
                .as_ref()
                .and_then(|k| results.get(k).cloned())
                .unwrap_or_default(),
        })
        .collect())
}

/// [`geocode`] over consecutive slices of `plan.batch_size` rows, sleeping
/// `plan.wait_time` on the client's clock between slices.
pub fn geocode_batches(
    records: &[LocationizedRecord],
    plan: &BatchPlan,
    options: &GeocodeOptions,
    client: &GeoNamesClient,
) -> Result<Vec<GeocodedRecord>> {
    plan.validate()?;
    options.validate()?;
    let mut out = Vec::with_capacity(records.len());
    let batches = records.len().div_ceil(plan.batch_size);
    for (i, batch) in records.chunks(plan.batch_size).enumerate() {
        let offset = i * plan.batch_size;
        log::info!("geocoding batch {}/{batches} ({} rows)", i + 1, batch.len());
        match geocode(batch, options, client) {
            Ok(rows) => out.extend(rows),
            Err(Error::QuotaExhausted {
                message,
                resume_from_row,
            }) => {
                return Err(Error::QuotaExhausted {
                    message,
                    resume_from_row: Some(offset + resume_from_row.unwrap_or(0)),
                })
            }
            Err(e) => return Err(e),
        }
        if i + 1 < batches {
            client.clock().sleep(plan.wait_time);
        }
    }
    Ok(out)
}

fn coord_text(v: Option<f64>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

/// Nested layout: locationized columns plus `lat`, `lng` and `matches`
/// (all candidates as a JSON array). Unwrapped layout: locationized columns
/// plus `lat1`, `lng1`, ..., `latN`, `lngN` with blanks for missing ranks.
pub fn geocoded_to_table(records: &[GeocodedRecord], unwrap: bool, n_results: usize) -> Table {
    let base: Vec<LocationizedRecord> = records.iter().map(|r| r.base.clone()).collect();
    let mut table = locationized_to_table(&base);
    if unwrap {
        for rank in 0..n_results {
            let pick = |f: fn(&GeocodeMatch) -> f64| {
                records
                    .iter()
                    .map(move |r| coord_text(r.matches.get(rank).map(f)))
            };
            table
                .append_column(&format!("lat{}", rank + 1), pick(|m| m.point.lat))
                .expect("fresh column");
            table
                .append_column(&format!("lng{}", rank + 1), pick(|m| m.point.lng))
                .expect("fresh column");
        }
    } else {
        table
            .append_column(LAT_COLUMN, records.iter().map(|r| coord_text(r.lat())))
            .expect("fresh column");
        table
            .append_column(LNG_COLUMN, records.iter().map(|r| coord_text(r.lng())))
            .expect("fresh column");
        table
            .append_column(
                MATCHES_COLUMN,
                records
                    .iter()
                    .map(|r| serde_json::to_string(&r.matches).expect("matches serialize")),
            )
            .expect("fresh column");
    }
    table
}
