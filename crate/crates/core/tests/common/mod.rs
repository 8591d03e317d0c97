#![allow(dead_code)]

use std::path::PathBuf;

use emdat_wrangler::geonames::{FixtureStore, GeoNamesClient};
use emdat_wrangler::ingest::{read_emdat_path, DisasterRecord};
use emdat_wrangler::locationizer::{default_split_config, split_locations, LocationizedRecord};

pub fn testdata(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("testdata").join(name)
}

pub fn sample_records() -> Vec<DisasterRecord> {
    read_emdat_path(&testdata("emdat_sample.csv"), false)
        .expect("sample loads")
        .records
}

pub fn sample_locationized() -> Vec<LocationizedRecord> {
    split_locations(&sample_records(), "Location", &default_split_config()).expect("sample splits")
}

pub fn fixture_client() -> GeoNamesClient {
    GeoNamesClient::offline(FixtureStore::load(&testdata("fixtures")).expect("fixtures load"))
}

use std::sync::{Arc, Mutex};
use std::time::Duration;

use emdat_wrangler::geonames::{
    Clock, GeoNamesConfig, SimulatedClock, Transport, TransportError,
};
use url::Url;

/// Stand-in for the live service. Answers every search with one synthetic
/// match derived from the query and logs the clock time of each call.
pub struct RecordingTransport {
    pub clock: Arc<SimulatedClock>,
    pub calls: Mutex<Vec<(Duration, Url)>>,
}

impl RecordingTransport {
    pub fn new(clock: Arc<SimulatedClock>) -> Arc<Self> {
        Arc::new(RecordingTransport {
            clock,
            calls: Mutex::new(Vec::new()),
        })
    }

    pub fn times(&self) -> Vec<Duration> {
        self.calls.lock().unwrap().iter().map(|(t, _)| *t).collect()
    }

    pub fn call_count(&self) -> usize {
        self.calls.lock().unwrap().len()
    }
}

pub fn synthetic_body(query: &str) -> String {
    let h = query.bytes().fold(7u64, |a, b| a.wrapping_mul(31).wrapping_add(u64::from(b)));
    let lat = (h % 17_000) as f64 / 100.0 - 85.0;
    let lng = (h / 17_000 % 35_000) as f64 / 100.0 - 175.0;
    serde_json::json!({
        "totalResultsCount": 1,
        "geonames": [{"toponymName": query, "lat": lat.to_string(), "lng": lng.to_string(), "countryCode": "US"}]
    })
    .to_string()
}

impl Transport for RecordingTransport {
    fn get(&self, url: &Url) -> Result<String, TransportError> {
        self.calls.lock().unwrap().push((self.clock.now(), url.clone()));
        let q = url
            .query_pairs()
            .find(|(k, _)| k == "q" || k == "name")
            .map(|(_, v)| v.into_owned())
            .unwrap_or_default();
        Ok(synthetic_body(&q))
    }
}

pub fn live_config() -> GeoNamesConfig {
    GeoNamesConfig {
        username: Some("tester".into()),
        ..Default::default()
    }
}

/// Largest number of calls falling in any half-open window of `window`.
pub fn max_in_window(times: &[Duration], window: Duration) -> usize {
    let mut best = 0;
    let mut start = 0;
    for end in 0..times.len() {
        while times[start] + window <= times[end] {
            start += 1;
        }
        best = best.max(end - start + 1);
    }
    best
}

pub fn words(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("place {i}")).collect()
}

pub fn word_records(words: &[String]) -> Vec<LocationizedRecord> {
    words
        .iter()
        .enumerate()
        .map(|(i, w)| LocationizedRecord {
            record: DisasterRecord {
                dis_no: format!("2000-{:04}-USA", i / 3),
                country: "United States of America (the)".into(),
                ..Default::default()
            },
            location_word: w.clone(),
            uncertain_location_specificity: false,
        })
        .collect()
}
