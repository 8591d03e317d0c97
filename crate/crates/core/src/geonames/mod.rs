//! Client for the GeoNames `searchJSON` web service.
//!
//! Every request goes through one quota authority (trailing hour and
//! trailing day budgets) and every result is cached by normalized query and
//! country bias. In offline mode responses come from a fixture store and the
//! network is never touched.

pub mod cache;
pub mod fixtures;
pub mod quota;
pub mod transport;

use std::path::PathBuf;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex};
use std::time::{Duration, SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use serde_json::Value;
use url::Url;

pub use cache::{CacheEntry, CacheKey, GeocodeCache};
pub use fixtures::FixtureStore;
pub use quota::{Clock, Permit, QuotaLimiter, SimulatedClock, SystemClock};
pub use transport::{HttpTransport, Transport, TransportError};

use crate::error::{Error, Result};
use crate::point::GeoPoint;

pub const DEFAULT_BASE_URL: &str = "http://api.geonames.org";
pub const DEFAULT_HOURLY_BUDGET: u32 = 1000;
pub const DEFAULT_DAILY_BUDGET: u32 = 20_000;
pub const USERNAME_ENV: &str = "GEONAMES_USERNAME";

/// GeoNames status codes signalling an exhausted credit limit
/// (daily, hourly, weekly).
const QUOTA_STATUS_CODES: [i64; 3] = [18, 19, 20];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClientMode {
    Live,
    OfflineFixtures(PathBuf),
}

/// Which query parameter carries the place name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchParam {
    /// Full-text search over names and alternate names.
    Q,
    /// Place name only.
    Name,
}

impl SearchParam {
    fn as_str(self) -> &'static str {
        match self {
            SearchParam::Q => "q",
            SearchParam::Name => "name",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RetryPolicy {
    pub max_attempts: u32,
    /// Delay after the first failure; doubles after each further failure.
    #[serde(with = "secs")]
    pub base_delay: Duration,
}

impl Default for RetryPolicy {
    fn default() -> Self {
        RetryPolicy {
            max_attempts: 3,
            base_delay: Duration::from_secs(1),
        }
    }
}

impl RetryPolicy {
    /// Delay before attempt `failed + 1`, given `failed` failures so far.
    pub fn delay_after(&self, failed: u32) -> Duration {
        self.base_delay * 2u32.saturating_pow(failed.saturating_sub(1))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeoNamesConfig {
    pub username: Option<String>,
    pub base_url: String,
    pub hourly_budget: u32,
    pub daily_budget: u32,
    #[serde(with = "secs")]
    pub timeout: Duration,
    pub mode: ClientMode,
    pub search_param: SearchParam,
    pub retry: RetryPolicy,
    /// Directory for the persistent result cache; in-memory when absent.
    pub cache_dir: Option<PathBuf>,
}

impl Default for GeoNamesConfig {
    fn default() -> Self {
        GeoNamesConfig {
            username: None,
            base_url: DEFAULT_BASE_URL.to_string(),
            hourly_budget: DEFAULT_HOURLY_BUDGET,
            daily_budget: DEFAULT_DAILY_BUDGET,
            timeout: Duration::from_secs(30),
            mode: ClientMode::Live,
            search_param: SearchParam::Q,
            retry: RetryPolicy::default(),
            cache_dir: None,
        }
    }
}

impl GeoNamesConfig {
    pub fn validate(&self) -> Result<()> {
        if self.hourly_budget == 0 || self.daily_budget == 0 {
            return Err(Error::Config("query budgets must be positive".into()));
        }
        if self.retry.max_attempts == 0 {
            return Err(Error::Config("retry.max_attempts must be at least 1".into()));
        }
        if self.mode == ClientMode::Live {
            if self.username.as_deref().is_none_or(|u| u.trim().is_empty()) {
                return Err(Error::Config(format!(
                    "live geocoding needs a GeoNames username (flag or {USERNAME_ENV})"
                )));
            }
            self.search_url()?;
        }
        Ok(())
    }

    fn search_url(&self) -> Result<Url> {
        let base = Url::parse(&self.base_url)
            .map_err(|e| Error::Config(format!("bad base url `{}`: {e}", self.base_url)))?;
        let mut base = base;
        if !base.path().ends_with('/') {
            let path = format!("{}/", base.path());
            base.set_path(&path);
        }
        base.join("searchJSON")
            .map_err(|e| Error::Config(format!("bad base url `{}`: {e}", self.base_url)))
    }
}

mod secs {
    use std::time::Duration;

    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(d.as_secs_f64())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Duration, D::Error> {
        let v = f64::deserialize(d)?;
        Duration::try_from_secs_f64(v).map_err(serde::de::Error::custom)
    }
}

/// One candidate returned by a search, in service relevance order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeocodeMatch {
    pub point: GeoPoint,
    pub toponym_name: String,
    pub country_code: Option<String>,
    /// 1-based position in the service's result list.
    pub rank: usize,
}

fn number_field(item: &Value, name: &str) -> Option<f64> {
    match item.get(name)? {
        Value::String(s) => s.trim().parse().ok(),
        Value::Number(n) => n.as_f64(),
        _ => None,
    }
}

/// Parses a `searchJSON` body. A `status` object is turned into a quota or
/// service error; entries with missing or out-of-range coordinates are
/// skipped.
pub fn parse_search_response(body: &Value) -> Result<Vec<GeocodeMatch>> {
    if let Some(status) = body.get("status") {
        let code = status.get("value").and_then(Value::as_i64).unwrap_or(-1);
        let message = status
            .get("message")
            .and_then(Value::as_str)
            .unwrap_or("unknown service status")
            .to_string();
        return Err(if QUOTA_STATUS_CODES.contains(&code) {
            Error::QuotaExhausted {
                message,
                resume_from_row: None,
            }
        } else {
            Error::Service { code, message }
        });
    }
    let items = match body.get("geonames") {
        Some(Value::Array(items)) => items.as_slice(),
        Some(_) => return Err(Error::Format("`geonames` is not an array".into())),
        None => &[],
    };
    let mut out = Vec::new();
    for (i, item) in items.iter().enumerate() {
        let (Some(lat), Some(lng)) = (number_field(item, "lat"), number_field(item, "lng")) else {
            log::warn!("search result {} has no usable coordinates", i + 1);
            continue;
        };
        let point = GeoPoint::new(lat, lng);
        if !point.is_valid() {
            log::warn!("search result {} out of range: ({lat}, {lng})", i + 1);
            continue;
        }
        let text = |k: &str| item.get(k).and_then(Value::as_str).map(str::to_string);
        out.push(GeocodeMatch {
            point,
            toponym_name: text("toponymName").or_else(|| text("name")).unwrap_or_default(),
            country_code: text("countryCode").filter(|c| !c.is_empty()),
            rank: i + 1,
        });
    }
    Ok(out)
}

/// Thread-safe GeoNames client. Share one instance across workers so the
/// quota accounting stays global to the process.
pub struct GeoNamesClient {
    config: GeoNamesConfig,
    transport: Arc<dyn Transport>,
    clock: Arc<dyn Clock>,
    fixtures: Option<FixtureStore>,
    cache: Mutex<GeocodeCache>,
    quota: Mutex<QuotaLimiter>,
    requests: AtomicU64,
    cache_hits: AtomicU64,
}

impl std::fmt::Debug for GeoNamesClient {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GeoNamesClient")
            .field("config", &self.config)
            .field("requests", &self.requests_issued())
            .finish_non_exhaustive()
    }
}

impl GeoNamesClient {
    /// Client with the HTTP transport and the system clock. Loads fixtures
    /// in offline mode and opens the cache directory when configured.
    pub fn new(config: GeoNamesConfig) -> Result<Self> {
        let transport = Arc::new(HttpTransport::new(config.timeout));
        Self::with_parts(config, transport, Arc::new(SystemClock::new()))
    }

    pub fn with_parts(
        config: GeoNamesConfig,
        transport: Arc<dyn Transport>,
        clock: Arc<dyn Clock>,
    ) -> Result<Self> {
        config.validate()?;
        let fixtures = match &config.mode {
            ClientMode::Live => None,
            ClientMode::OfflineFixtures(path) => Some(FixtureStore::load(path)?),
        };
        let cache = match &config.cache_dir {
            Some(dir) => GeocodeCache::open(dir)?,
            None => GeocodeCache::in_memory(),
        };
        Ok(GeoNamesClient {
            quota: Mutex::new(QuotaLimiter::new(config.hourly_budget, config.daily_budget)),
            config,
            transport,
            clock,
            fixtures,
            cache: Mutex::new(cache),
            requests: AtomicU64::new(0),
            cache_hits: AtomicU64::new(0),
        })
    }

    /// Offline client over an already-loaded fixture store.
    pub fn offline(store: FixtureStore) -> Self {
        let config = GeoNamesConfig {
            mode: ClientMode::OfflineFixtures(PathBuf::new()),
            ..Default::default()
        };
        GeoNamesClient {
            quota: Mutex::new(QuotaLimiter::new(config.hourly_budget, config.daily_budget)),
            config,
            transport: Arc::new(NoNetwork),
            clock: Arc::new(SystemClock::new()),
            fixtures: Some(store),
            cache: Mutex::new(GeocodeCache::in_memory()),
            requests: AtomicU64::new(0),
            cache_hits: AtomicU64::new(0),
        }
    }

    pub fn config(&self) -> &GeoNamesConfig {
        &self.config
    }

    pub fn clock(&self) -> &Arc<dyn Clock> {
        &self.clock
    }

    /// Live HTTP requests issued so far, including retries.
    pub fn requests_issued(&self) -> u64 {
        self.requests.load(Ordering::SeqCst)
    }

    pub fn cache_hits(&self) -> u64 {
        self.cache_hits.load(Ordering::SeqCst)
    }

    /// The URL a live search would request.
    pub fn search_url(&self, word: &str, country_bias: Option<&str>, max_rows: usize) -> Result<Url> {
        let mut url = self.config.search_url()?;
        {
            let mut q = url.query_pairs_mut();
            q.append_pair(self.config.search_param.as_str(), word);
            if let Some(c) = country_bias {
                q.append_pair("country", c);
            }
            q.append_pair("maxRows", &max_rows.to_string());
            q.append_pair("username", self.config.username.as_deref().unwrap_or(""));
        }
        Ok(url)
    }

    /// Up to `max_rows` matches for `word`, in service order. An empty word
    /// or a search with no hits gives an empty list.
    pub fn search(
        &self,
        word: &str,
        country_bias: Option<&str>,
        max_rows: usize,
    ) -> Result<Vec<GeocodeMatch>> {
        let key = CacheKey::new(word, country_bias);
        if key.query.is_empty() || max_rows == 0 {
            return Ok(Vec::new());
        }
        if let Some(entry) = self.cache.lock().unwrap().lookup(&key) {
            if entry.covers(max_rows) {
                self.cache_hits.fetch_add(1, Ordering::SeqCst);
                return Ok(entry.matches.iter().take(max_rows).cloned().collect());
            }
        }

        let mut matches = match &self.fixtures {
            Some(store) => match store.lookup(&key) {
                Some(body) => parse_search_response(body)?,
                None => Vec::new(),
            },
            None => self.fetch_live(&key, max_rows)?,
        };
        matches.truncate(max_rows);

        let fetched_at = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        self.cache.lock().unwrap().store(CacheEntry {
            key,
            max_rows,
            matches: matches.clone(),
            fetched_at,
        })?;
        Ok(matches)
    }

    fn fetch_live(&self, key: &CacheKey, max_rows: usize) -> Result<Vec<GeocodeMatch>> {
        let url = self.search_url(&key.query, key.country.as_deref(), max_rows)?;
        let policy = &self.config.retry;
        let mut failures = 0;
        loop {
            self.acquire_quota();
            self.requests.fetch_add(1, Ordering::SeqCst);
            let err = match self.transport.get(&url) {
                Ok(body) => {
                    let value: Value = serde_json::from_str(&body).map_err(|e| {
                        Error::Format(format!("geonames response for `{}`: {e}", key.query))
                    })?;
                    return parse_search_response(&value);
                }
                Err(e) => e,
            };
            failures += 1;
            if !err.retryable || failures >= policy.max_attempts {
                return Err(Error::Transport(format!(
                    "`{}` after {failures} attempt(s): {err}",
                    key.query
                )));
            }
            let delay = policy.delay_after(failures);
            log::warn!("geonames request failed ({err}); retrying in {delay:?}");
            self.clock.sleep(delay);
        }
    }

    /// Waits until one more request fits the hourly and daily budgets.
    pub fn acquire_quota(&self) -> Permit {
        self.quota.lock().unwrap().acquire(self.clock.as_ref())
    }
}

struct NoNetwork;

impl Transport for NoNetwork {
    fn get(&self, url: &Url) -> std::result::Result<String, TransportError> {
        Err(TransportError {
            message: format!("network disabled in offline mode ({url})"),
            retryable: false,
        })
    }
}
