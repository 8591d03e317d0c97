mod common;

use std::collections::BTreeSet;

use common::{sample_locationized, sample_records};
use emdat_wrangler::ingest::DisasterRecord;
use emdat_wrangler::locationizer::{
    default_split_config, split_locations, DEFAULT_DUMMY_WORDS, DEFAULT_JOINERS,
};
use proptest::prelude::*;
use regex::Regex;

#[test]
fn sample_gives_eighteen_pairs() {
    let rows = sample_locationized();
    assert_eq!(rows.len(), 18);
    let per: Vec<usize> = ["2000-0919-USA", "1928-0024-CAN", "1998-0212-USA"]
        .iter()
        .map(|d| rows.iter().filter(|r| r.dis_no() == *d).count())
        .collect();
    assert_eq!(per, [10, 2, 6]);
    let first_six: Vec<&str> = rows[..6].iter().map(|r| r.location_word.as_str()).collect();
    assert_eq!(
        first_six,
        ["alabama", "georgia", "louisiana", "north carolina", "south carolina", "tennessee"]
    );
    assert!(rows.iter().all(|r| !r.uncertain_location_specificity));
    assert_eq!(rows[9].location_word, "massachussetts");
    assert_eq!(rows[17].location_word, "la");
    // Parent fields travel with every row.
    assert_eq!(rows[11].record.native_latitude.as_deref(), Some("48.60 N"));
    assert_eq!(rows[11].record.extras["CPI"], "6.731507");
}

#[test]
fn defaults_named_in_docs() {
    let cfg = default_split_config();
    for w in ["provinces", "states", "towns", "state", "province", "town"] {
        assert!(cfg.dummy_words.contains(w), "{w}");
    }
    let splitter = cfg.compile().unwrap();
    assert_eq!(splitter.split("a, b and c").0, ["a", "b", "c"]);
    assert_eq!(splitter.split("anderson, candy").0, ["anderson", "candy"]);
}

#[test]
fn single_word_is_unchanged() {
    let (words, _) = default_split_config().compile().unwrap().split("tennessee");
    assert_eq!(words, ["tennessee"]);
}

fn record(i: usize, location: Option<String>) -> DisasterRecord {
    DisasterRecord {
        dis_no: format!("2000-{i:04}-XXX"),
        country: "Nowhere".into(),
        location_string: location,
        ..Default::default()
    }
}

fn place() -> impl Strategy<Value = String> {
    prop_oneof![
        "[A-Z][a-z]{2,9}",
        "[A-Z][a-z]{2,7} [A-Z][a-z]{2,7}",
        Just("Statesboro".to_string()),
        Just("Islamabad".to_string()),
        Just("São Paulo".to_string()),
        Just("ÎLE".to_string()),
    ]
}

fn dummy() -> impl Strategy<Value = String> {
    prop::sample::select(DEFAULT_DUMMY_WORDS).prop_map(|w| {
        let mut c = w.chars();
        match c.next() {
            Some(f) if w.len() % 2 == 0 => f.to_uppercase().chain(c).collect(),
            _ => w.to_string(),
        }
    })
}

fn joiner() -> impl Strategy<Value = String> {
    prop::sample::select(vec![", ", "; ", " and ", " & ", " / ", "\n", ",", " (", ") ", " AND "])
        .prop_map(str::to_string)
}

/// A location string in one of the styles seen in exports.
fn location_string() -> impl Strategy<Value = String> {
    let item = (place(), prop::option::of(dummy()), prop::option::of(dummy())).prop_map(
        |(p, before, after)| {
            let mut s = String::new();
            if let Some(d) = before {
                s += &d;
                s.push(' ');
            }
            s += &p;
            if let Some(d) = after {
                s.push(' ');
                s += &d;
            }
            s
        },
    );
    let list = prop::collection::vec((item, joiner()), 1..6).prop_map(|parts| {
        parts
            .into_iter()
            .map(|(i, j)| format!("{i}{j}"))
            .collect::<String>()
    });
    let enumerated = prop::collection::vec(place(), 1..5).prop_map(|ps| {
        ps.iter()
            .enumerate()
            .map(|(i, p)| format!("({}) {p} ", i + 1))
            .collect::<String>()
    });
    let only_dummies = prop::collection::vec((dummy(), joiner()), 1..4)
        .prop_map(|ds| ds.into_iter().map(|(d, j)| format!("{d}{j}")).collect::<String>());
    prop_oneof![4 => list, 1 => enumerated, 1 => only_dummies]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn split_output_invariants(strings in prop::collection::vec(prop::option::of(location_string()), 1..6)) {
        let records: Vec<DisasterRecord> = strings
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, s)| record(i, s))
            .collect();
        let cfg = default_split_config();
        let out = split_locations(&records, "Location", &cfg).unwrap();
        let joiners: Vec<Regex> = DEFAULT_JOINERS.iter().map(|p| Regex::new(p).unwrap()).collect();

        for row in &out {
            let w = &row.location_word;
            prop_assert_eq!(w.trim(), w.as_str());
            prop_assert!(!w.chars().any(char::is_uppercase), "uppercase in {:?}", w);
            prop_assert!(!cfg.dummy_words.contains(w), "dummy word {:?}", w);
            for j in &joiners {
                prop_assert!(!j.is_match(w), "joiner {} matches {:?}", j, w);
            }
        }

        let input_ids: BTreeSet<&str> = records.iter().map(|r| r.dis_no.as_str()).collect();
        let output_ids: BTreeSet<&str> = out.iter().map(|r| r.dis_no()).collect();
        prop_assert_eq!(input_ids, output_ids);

        for r in &records {
            let rows: Vec<_> = out.iter().filter(|o| o.dis_no() == r.dis_no).collect();
            let text = r.location_string.clone().unwrap_or_default();
            let flagged = text.contains('(') || text.contains(')');
            prop_assert!(rows.iter().all(|o| o.uncertain_location_specificity == flagged));
            if rows.iter().any(|o| o.location_word.is_empty()) {
                prop_assert_eq!(rows.len(), 1);
            }
        }
    }

    #[test]
    fn only_dummy_words_fall_back(words in prop::collection::vec((dummy(), joiner()), 1..5)) {
        let text: String = words.into_iter().map(|(d, j)| format!("{d}{j}")).collect();
        let out = split_locations(&[record(0, Some(text))], "Location", &default_split_config()).unwrap();
        prop_assert_eq!(out.len(), 1);
        prop_assert_eq!(out[0].location_word.as_str(), "");
    }
}

#[test]
fn input_order_is_stable() {
    let records = sample_records();
    let out = split_locations(&records, "Location", &default_split_config()).unwrap();
    let order: Vec<&str> = out.iter().map(|r| r.dis_no()).collect();
    let mut sorted_by_input = order.clone();
    sorted_by_input.sort_by_key(|d| records.iter().position(|r| r.dis_no == *d));
    assert_eq!(order, sorted_by_input);
}
