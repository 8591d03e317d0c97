//! One test per acceptance criterion. Each prints a `criterion N: PASS|FAIL`
//! line; run with `--nocapture` to see them.

mod common;

use std::panic::{catch_unwind, resume_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::{Duration, Instant};

use common::{
    fixture_client, live_config, max_in_window, sample_locationized, sample_records, testdata,
    word_records, words, RecordingTransport,
};
use emdat_wrangler::coverage::{percent_located_disasters, percent_located_locations, DisasterAggregation};
use emdat_wrangler::geocoder::{geocode, geocode_batches, geocoded_to_table, BatchPlan, GeocodeOptions};
use emdat_wrangler::geonames::{quota::HOUR, ClientMode, GeoNamesClient, GeoNamesConfig, SimulatedClock};
use emdat_wrangler::ingest::DisasterRecord;
use emdat_wrangler::locationizer::{default_split_config, split_locations, DEFAULT_JOINERS};
use emdat_wrangler::spatial::{
    load_region, located_in_box, located_in_shapefile, point_in_polygon, BoundingBox, Polygon,
    PolygonSet, IN_BOX_COLUMN, IN_SHAPE_COLUMN,
};
use emdat_wrangler::table::Table;
use emdat_wrangler::GeoPoint;
use num_rational::Ratio;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use rand::{rngs::StdRng, Rng, SeedableRng};
use regex::Regex;

fn criterion(n: u32, title: &str, body: impl FnOnce()) {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(()) => println!("criterion {n}: PASS  {title}"),
        Err(e) => {
            println!("criterion {n}: FAIL  {title}");
            resume_unwind(e);
        }
    }
}

fn geocoded_sample() -> Table {
    let rows = geocode(&sample_locationized(), &GeocodeOptions::default(), &fixture_client()).unwrap();
    geocoded_to_table(&rows, false, 1)
}

fn column(t: &Table, name: &str) -> Vec<String> {
    let c = t.require_column(name).unwrap();
    (0..t.len()).map(|r| t.cell(r, c).to_string()).collect()
}

#[test]
fn criterion_1_locationizing_golden() {
    criterion(1, "sample splits into 18 disaster-location rows", || {
        let records = sample_records();
        let start = Instant::now();
        let rows = split_locations(&records, "Location", &default_split_config()).unwrap();
        let elapsed = start.elapsed();
        assert_eq!(rows.len(), 18);
        let counts: Vec<usize> = records
            .iter()
            .map(|r| rows.iter().filter(|x| x.dis_no() == r.dis_no).count())
            .collect();
        assert_eq!(counts, [10, 2, 6]);
        let six: Vec<(&str, bool)> = rows[..6]
            .iter()
            .map(|r| (r.location_word.as_str(), r.uncertain_location_specificity))
            .collect();
        assert_eq!(
            six,
            [
                ("alabama", false),
                ("georgia", false),
                ("louisiana", false),
                ("north carolina", false),
                ("south carolina", false),
                ("tennessee", false),
            ]
        );
        assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    });
}

#[test]
fn criterion_2_pre_geocode_coverage() {
    criterion(2, "native coordinates: 2/18 locations, 1/3 disasters", || {
        let t = emdat_wrangler::locationizer::locationized_to_table(&sample_locationized());
        let loc = percent_located_locations(&t, "Latitude", "Longitude").unwrap();
        assert_eq!((loc.located, loc.total), (2, 18));
        assert_eq!(loc.percent_not_located(), Ratio::new(1600, 18));
        assert_eq!(loc.percent_not_located_text(), "88.89");
        let dis = percent_located_disasters(&t, "Latitude", "Longitude", &DisasterAggregation::Any).unwrap();
        assert_eq!((dis.located, dis.total), (1, 3));
    });
}

#[test]
fn criterion_3_post_geocode_fixtures() {
    criterion(3, "fixture geocoding reproduces the six coordinates; ANY = 100%", || {
        let t = geocoded_sample();
        let expected = [
            ("alabama", "34.60739", "-86.97977"),
            ("georgia", "33.69277", "-84.39957"),
            ("louisiana", "30.12595", "-92.00939"),
            ("north carolina", "34.00071", "-81.03481"),
            ("south carolina", "34.00071", "-81.03481"),
            ("tennessee", "35.8", "-86.5"),
        ];
        let (w, la, ln) = (column(&t, "location_word"), column(&t, "lat"), column(&t, "lng"));
        for (i, (word, lat, lng)) in expected.iter().enumerate() {
            assert_eq!((w[i].as_str(), la[i].as_str(), ln[i].as_str()), (*word, *lat, *lng));
        }
        let any = percent_located_disasters(&t, "lat", "lng", &DisasterAggregation::Any).unwrap();
        assert_eq!(any.percent_located(), Ratio::from_integer(100));
    });
}

#[test]
fn criterion_4_box_golden() {
    criterion(4, "box (40,-119)/(35,-75): only tennessee inside", || {
        let t = geocoded_sample();
        let bbox = BoundingBox::new(GeoPoint::new(40.0, -119.0), GeoPoint::new(35.0, -75.0)).unwrap();
        let out = located_in_box(&t, &bbox, "lat", "lng").unwrap();
        assert_eq!(
            column(&out, IN_BOX_COLUMN)[..6],
            ["FALSE", "FALSE", "FALSE", "FALSE", "FALSE", "TRUE"]
        );
    });
}

#[test]
fn criterion_5_shape_golden() {
    criterion(5, "California region: six states outside, Sacramento inside", || {
        let region = load_region(&testdata("california.geojson")).unwrap();
        let out = located_in_shapefile(&geocoded_sample(), &region, "lat", "lng").unwrap();
        assert_eq!(column(&out, IN_SHAPE_COLUMN)[..6], ["FALSE"; 6]);
        assert!(point_in_polygon(GeoPoint::new(38.58, -121.49), &region));
    });
}

fn cross(a: GeoPoint, b: GeoPoint, p: GeoPoint) -> f64 {
    (b.lng - a.lng) * (p.lat - a.lat) - (b.lat - a.lat) * (p.lng - a.lng)
}

fn edge_distance(a: GeoPoint, b: GeoPoint, p: GeoPoint) -> f64 {
    let (dx, dy) = (b.lng - a.lng, b.lat - a.lat);
    let t = (((p.lng - a.lng) * dx + (p.lat - a.lat) * dy) / (dx * dx + dy * dy)).clamp(0.0, 1.0);
    ((p.lng - a.lng - t * dx).powi(2) + (p.lat - a.lat - t * dy).powi(2)).sqrt()
}

#[test]
fn criterion_6_point_in_polygon_oracle() {
    criterion(6, "ray casting agrees with half-plane oracle (60 polygons x 1200 points)", || {
        let mut rng = StdRng::seed_from_u64(0x5eed);
        let (mut checked, mut inside, mut disagreements) = (0usize, 0usize, 0usize);
        for _ in 0..60 {
            let (clat, clng, r) = (rng.gen_range(-60.0..60.0), rng.gen_range(-150.0..150.0), rng.gen_range(1.0..25.0));
            let mut angles: Vec<f64> = (0..rng.gen_range(3..14))
                .map(|_| rng.gen_range(0.0..std::f64::consts::TAU))
                .collect();
            angles.sort_by(f64::total_cmp);
            angles.dedup_by(|a, b| (*a - *b).abs() < 1e-6);
            if angles.len() < 3 {
                continue;
            }
            let ring: Vec<GeoPoint> = angles
                .iter()
                .map(|t| GeoPoint::new(clat + r * t.sin(), clng + r * t.cos()))
                .collect();
            let set = PolygonSet::new(vec![Polygon::new(ring.clone(), vec![]).unwrap()]);
            for _ in 0..1200 {
                let p = GeoPoint::new(clat + rng.gen_range(-1.2..1.2) * r, clng + rng.gen_range(-1.2..1.2) * r);
                let edges = (0..ring.len()).map(|i| (ring[i], ring[(i + 1) % ring.len()]));
                if edges.clone().any(|(a, b)| edge_distance(a, b, p) < 1e-9) {
                    continue;
                }
                let oracle = edges.clone().all(|(a, b)| cross(a, b, p) >= 0.0);
                checked += 1;
                inside += usize::from(oracle);
                disagreements += usize::from(point_in_polygon(p, &set) != oracle);
            }
        }
        assert!(checked >= 50 * 1000);
        assert!(inside > 0 && inside < checked);
        assert_eq!(disagreements, 0);
    });
}

#[test]
fn criterion_7_quota_safety() {
    criterion(7, "5000 simulated queries stay within 1000/hour; 990/4800 batching sleeps 5 times", || {
        let clock = Arc::new(SimulatedClock::new());
        let transport = RecordingTransport::new(clock.clone());
        let config = GeoNamesConfig {
            hourly_budget: 1000,
            ..live_config()
        };
        let client = GeoNamesClient::with_parts(config.clone(), transport.clone(), clock.clone()).unwrap();
        for w in words(5000) {
            client.search(&w, None, 1).unwrap();
        }
        assert_eq!(transport.call_count(), 5000);
        assert!(max_in_window(&transport.times(), HOUR) <= 1000);

        let clock = Arc::new(SimulatedClock::new());
        let transport = RecordingTransport::new(clock.clone());
        let client = GeoNamesClient::with_parts(config, transport.clone(), clock.clone()).unwrap();
        let plan = BatchPlan {
            batch_size: 990,
            wait_time: Duration::from_secs(4800),
        };
        let out = geocode_batches(&word_records(&words(5000)), &plan, &GeocodeOptions::default(), &client).unwrap();
        assert_eq!(out.len(), 5000);
        assert_eq!(clock.sleeps(), vec![Duration::from_secs(4800); 5000usize.div_ceil(990) - 1]);
        assert!(max_in_window(&transport.times(), HOUR) <= 1000);
    });
}

#[test]
fn criterion_8_batch_equivalence() {
    criterion(8, "geocode_batches equals geocode for batch sizes 1, 2, 990", || {
        let recs = sample_locationized();
        let whole = geocode(&recs, &GeocodeOptions::default(), &fixture_client()).unwrap();
        for batch_size in [1, 2, 990] {
            let clock = Arc::new(SimulatedClock::new());
            let client = GeoNamesClient::with_parts(
                GeoNamesConfig {
                    mode: ClientMode::OfflineFixtures(testdata("fixtures")),
                    ..Default::default()
                },
                RecordingTransport::new(clock.clone()),
                clock,
            )
            .unwrap();
            let plan = BatchPlan {
                batch_size,
                wait_time: Duration::from_secs(4800),
            };
            let batched = geocode_batches(&recs, &plan, &GeocodeOptions::default(), &client).unwrap();
            assert_eq!(batched, whole, "batch_size {batch_size}");
        }
    });
}

fn location_string() -> impl Strategy<Value = String> {
    let place = prop_oneof![
        "[A-Z][a-z]{2,9}",
        "[A-Z][a-z]{2,7} [A-Z][a-z]{2,7}",
        Just("Statesboro".to_string()),
    ];
    let dummy = prop::sample::select(vec!["provinces", "States", "district", "Region", "town", "areas"]);
    let joiner = prop::sample::select(vec![", ", "; ", " and ", " & ", " / ", "\n", " (", ") "]);
    let item = (place, prop::option::of(dummy.clone())).prop_map(|(p, d)| match d {
        Some(d) => format!("{p} {d}"),
        None => p,
    });
    prop_oneof![
        4 => prop::collection::vec((item, joiner.clone()), 1..6)
            .prop_map(|v| v.into_iter().map(|(i, j)| format!("{i}{j}")).collect::<String>()),
        1 => prop::collection::vec((dummy, joiner), 1..4)
            .prop_map(|v| v.into_iter().map(|(d, j)| format!("{d}{j}")).collect::<String>()),
    ]
}

#[test]
fn criterion_9_parser_properties() {
    criterion(9, "500 generated location strings satisfy the parser properties", || {
        let cfg = default_split_config();
        let joiners: Vec<Regex> = DEFAULT_JOINERS.iter().map(|p| Regex::new(p).unwrap()).collect();
        let only_dummies = |s: &str| {
            s.split(|c: char| !c.is_alphabetic())
                .filter(|w| !w.is_empty())
                .all(|w| cfg.dummy_words.contains(&w.to_lowercase()) || w.eq_ignore_ascii_case("and"))
        };
        let mut runner = TestRunner::new(Config {
            cases: 500,
            failure_persistence: None,
            ..Config::default()
        });
        runner
            .run(&location_string(), |s| {
                let rec = DisasterRecord {
                    dis_no: "2000-0001-XXX".into(),
                    location_string: Some(s.clone()),
                    ..Default::default()
                };
                let out = split_locations(&[rec], "Location", &cfg).unwrap();
                prop_assert!(!out.is_empty());
                prop_assert!(out.iter().all(|r| r.dis_no() == "2000-0001-XXX"));
                for r in &out {
                    let w = &r.location_word;
                    prop_assert!(joiners.iter().all(|j| !j.is_match(w)), "{:?}", w);
                    prop_assert!(!cfg.dummy_words.contains(w), "{:?}", w);
                    prop_assert!(!w.chars().any(char::is_uppercase), "{:?}", w);
                }
                if only_dummies(&s) {
                    prop_assert_eq!(out.len(), 1);
                    prop_assert_eq!(out[0].location_word.as_str(), "");
                }
                Ok(())
            })
            .unwrap();
    });
}
