//! Turns one-row-per-disaster into one-row-per-disaster-location.
//!
//! A location string is lowercased, flagged as uncertain when it holds any
//! parenthesis, split on every joiner pattern, and each piece is stripped of
//! administrative-level words ("provinces", "state", ...) and surrounding
//! whitespace. Whitespace itself never splits, so `north carolina` survives.

use std::collections::BTreeSet;

use indexmap::IndexMap;
use regex::Regex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ingest::{DisasterRecord, CORE_COLUMNS};
use crate::table::{bool_literal, columns_match, non_absent, parse_bool_literal, Table};

pub const LOCATION_WORD_COLUMN: &str = "location_word";
pub const UNCERTAIN_COLUMN: &str = "uncertain_location_specificity";

/// Delimiter patterns applied when splitting location strings. Enumeration
/// markers come first so `(1)` is consumed whole instead of leaving a `1`
/// behind once the parentheses split.
pub const DEFAULT_JOINERS: &[&str] = &[
    r"\(\s*\d+\s*\)",
    r"\b\d+[.)]",
    r",",
    r";",
    r"[()]",
    r"\band\b",
    r"&",
    r"/",
    r"\n",
];

/// Words naming an administrative level rather than a place.
pub const DEFAULT_DUMMY_WORDS: &[&str] = &[
    "state",
    "states",
    "province",
    "provinces",
    "district",
    "districts",
    "city",
    "cities",
    "town",
    "towns",
    "region",
    "regions",
    "village",
    "villages",
    "county",
    "counties",
    "department",
    "departments",
    "municipality",
    "municipalities",
    "island",
    "islands",
    "near",
    "area",
    "areas",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitConfig {
    pub joiner_patterns: Vec<String>,
    pub dummy_words: BTreeSet<String>,
    /// Drop repeated words within one record.
    pub dedup: bool,
}

impl Default for SplitConfig {
    fn default() -> Self {
        default_split_config()
    }
}

pub fn default_split_config() -> SplitConfig {
    SplitConfig {
        joiner_patterns: DEFAULT_JOINERS.iter().map(|s| s.to_string()).collect(),
        dummy_words: DEFAULT_DUMMY_WORDS.iter().map(|s| s.to_string()).collect(),
        dedup: false,
    }
}

impl SplitConfig {
    /// Adds user joiner patterns after the defaults, or in place of them
    /// when `replace` is set.
    pub fn with_joiners<I, S>(mut self, patterns: I, replace: bool) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        if replace {
            self.joiner_patterns.clear();
        }
        self.joiner_patterns.extend(patterns.into_iter().map(Into::into));
        self
    }

    pub fn with_dummy_words<I, S>(mut self, words: I, replace: bool) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        if replace {
            self.dummy_words.clear();
        }
        self.dummy_words.extend(
            words
                .into_iter()
                .map(|w| collapse_whitespace(&w.into().to_lowercase()))
                .filter(|w| !w.is_empty()),
        );
        self
    }

    pub fn with_dedup(mut self, dedup: bool) -> Self {
        self.dedup = dedup;
        self
    }

    pub fn compile(&self) -> Result<Splitter> {
        Splitter::new(self)
    }
}

/// Compiled form of a [`SplitConfig`].
#[derive(Debug, Clone)]
pub struct Splitter {
    joiner: Option<Regex>,
    dummy: Option<Regex>,
    dummy_words: BTreeSet<String>,
    dedup: bool,
}

impl Splitter {
    pub fn new(config: &SplitConfig) -> Result<Self> {
        let mut parts = Vec::with_capacity(config.joiner_patterns.len());
        for pattern in &config.joiner_patterns {
            Regex::new(pattern)
                .map_err(|e| Error::Config(format!("bad joiner pattern `{pattern}`: {e}")))?;
            parts.push(format!("(?:{pattern})"));
        }
        let joiner = if parts.is_empty() {
            None
        } else {
            Some(
                Regex::new(&parts.join("|"))
                    .map_err(|e| Error::Config(format!("joiner patterns: {e}")))?,
            )
        };

        // Longest first, so a phrase beats any word it contains.
        let mut words: Vec<&String> = config.dummy_words.iter().collect();
        words.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
        let dummy = if words.is_empty() {
            None
        } else {
            let alternation = words
                .iter()
                .map(|w| {
                    w.split_whitespace()
                        .map(regex::escape)
                        .collect::<Vec<_>>()
                        .join(r"\s+")
                })
                .collect::<Vec<_>>()
                .join("|");
            Some(
                Regex::new(&format!(r"\b(?:{alternation})\b"))
                    .map_err(|e| Error::Config(format!("dummy words: {e}")))?,
            )
        };

        Ok(Splitter {
            joiner,
            dummy,
            dummy_words: config.dummy_words.clone(),
            dedup: config.dedup,
        })
    }

    /// Splits one location string. Returns the location words and the
    /// uncertainty flag; the word list may be empty.
    pub fn split(&self, location: &str) -> (Vec<String>, bool) {
        let lowered = location.to_lowercase();
        let uncertain = lowered.contains('(') || lowered.contains(')');
        let mut words = Vec::new();
        self.split_into(&lowered, &mut words);
        if self.dedup {
            let mut seen = BTreeSet::new();
            words.retain(|w| seen.insert(w.clone()));
        }
        (words, uncertain)
    }

    fn split_into(&self, text: &str, out: &mut Vec<String>) {
        let pieces: Vec<&str> = match &self.joiner {
            Some(re) => re.split(text).collect(),
            None => vec![text],
        };
        for piece in pieces {
            let cleaned = self.clean(piece);
            if cleaned.is_empty() {
                continue;
            }
            // Removing a dummy word can bring two delimiter halves together;
            // keep splitting until no joiner matches. Each pass shrinks the text.
            let splits_again = self
                .joiner
                .as_ref()
                .is_some_and(|re| re.is_match(&cleaned));
            if splits_again && cleaned.len() < text.len() {
                self.split_into(&cleaned, out);
            } else if !self.dummy_words.contains(&cleaned) {
                out.push(cleaned);
            }
        }
    }

    fn clean(&self, piece: &str) -> String {
        let mut current = collapse_whitespace(piece);
        if let Some(dummy) = &self.dummy {
            loop {
                let next = collapse_whitespace(&dummy.replace_all(&current, " "));
                if next == current {
                    break;
                }
                current = next;
            }
        }
        current
    }
}

fn collapse_whitespace(text: &str) -> String {
    text.split_whitespace().collect::<Vec<_>>().join(" ")
}

/// One disaster-location pair.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct LocationizedRecord {
    pub record: DisasterRecord,
    pub location_word: String,
    pub uncertain_location_specificity: bool,
}

impl LocationizedRecord {
    pub fn dis_no(&self) -> &str {
        &self.record.dis_no
    }

    pub fn column_names(&self) -> Vec<String> {
        let mut cols = self.record.column_names();
        cols.push(LOCATION_WORD_COLUMN.to_string());
        cols.push(UNCERTAIN_COLUMN.to_string());
        cols
    }

    pub fn to_cells(&self) -> Vec<String> {
        let mut cells = self.record.to_cells();
        cells.push(self.location_word.clone());
        cells.push(bool_literal(self.uncertain_location_specificity).to_string());
        cells
    }
}

/// Splits the location column of every record. `column` names the field
/// holding the location string; usually `Location`.
pub fn split_locations(
    records: &[DisasterRecord],
    column: &str,
    config: &SplitConfig,
) -> Result<Vec<LocationizedRecord>> {
    let splitter = config.compile()?;
    let is_core_location = columns_match(column, crate::ingest::LOCATION_COLUMN);
    if !is_core_location {
        if let Some(r) = records.iter().find(|r| r.field(column).is_none()) {
            return Err(Error::Config(format!(
                "unknown location column `{column}`; available columns: {}",
                r.column_names().join(", ")
            )));
        }
    }

    let mut out = Vec::with_capacity(records.len());
    for record in records {
        let text = if is_core_location {
            record.location_string.as_deref()
        } else {
            record.field(column).and_then(non_absent)
        };
        let (words, uncertain) = match text {
            Some(t) => splitter.split(t),
            None => (Vec::new(), false),
        };
        if words.is_empty() {
            out.push(LocationizedRecord {
                record: record.clone(),
                location_word: String::new(),
                uncertain_location_specificity: uncertain,
            });
        } else {
            out.extend(words.into_iter().map(|word| LocationizedRecord {
                record: record.clone(),
                location_word: word,
                uncertain_location_specificity: uncertain,
            }));
        }
    }
    Ok(out)
}

/// Table layout: core columns, union of extras, `location_word`,
/// `uncertain_location_specificity`.
pub fn locationized_to_table(records: &[LocationizedRecord]) -> Table {
    let disasters: Vec<DisasterRecord> = records.iter().map(|r| r.record.clone()).collect();
    let mut table = crate::ingest::records_to_table(&disasters);
    let words = records.iter().map(|r| r.location_word.clone());
    let flags = records
        .iter()
        .map(|r| bool_literal(r.uncertain_location_specificity).to_string());
    table
        .append_column(LOCATION_WORD_COLUMN, words)
        .expect("fresh column");
    table
        .append_column(UNCERTAIN_COLUMN, flags)
        .expect("fresh column");
    table
}

/// Reads locationized rows back. Columns other than the core six and the
/// two locationizer columns become extras; `skip` lists further columns to
/// ignore (for example geocoder output).
pub fn locationized_from_table(table: &Table, skip: &[&str]) -> Result<Vec<LocationizedRecord>> {
    let word_col = table.require_column(LOCATION_WORD_COLUMN)?;
    let flag_col = table.column_index(UNCERTAIN_COLUMN);
    let dis_col = table.require_column(crate::ingest::DIS_NO_COLUMN)?;
    let core: Vec<Option<usize>> = CORE_COLUMNS.iter().map(|c| table.column_index(c)).collect();

    let mut taken: Vec<usize> = core.iter().flatten().copied().collect();
    taken.push(word_col);
    taken.extend(flag_col);
    for name in skip {
        taken.extend(table.columns.iter().position(|c| c == name));
    }

    let mut out = Vec::with_capacity(table.len());
    for row in 0..table.len() {
        let opt = |i: Option<usize>| i.map(|i| table.cell(row, i)).and_then(non_absent).map(str::to_string);
        let dis_no = table.cell(row, dis_col).trim().to_string();
        if dis_no.is_empty() {
            return Err(Error::Validation(format!("row {} has an empty `Dis No`", row + 2)));
        }
        let uncertain = match flag_col {
            Some(i) => parse_bool_literal(table.cell(row, i)).ok_or_else(|| {
                Error::Format(format!(
                    "row {}: `{}` is not TRUE/FALSE",
                    row + 2,
                    table.cell(row, i)
                ))
            })?,
            None => false,
        };
        let extras: IndexMap<String, String> = table
            .columns
            .iter()
            .enumerate()
            .filter(|(i, _)| !taken.contains(i))
            .map(|(i, name)| (name.clone(), table.cell(row, i).to_string()))
            .collect();
        out.push(LocationizedRecord {
            record: DisasterRecord {
                dis_no,
                country: opt(core[1]).unwrap_or_default(),
                disaster_type: opt(core[2]).unwrap_or_default(),
                location_string: opt(core[3]),
                native_latitude: opt(core[4]),
                native_longitude: opt(core[5]),
                extras,
            },
            location_word: table.cell(row, word_col).trim().to_string(),
            uncertain_location_specificity: uncertain,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn split(s: &str) -> (Vec<String>, bool) {
        default_split_config().compile().unwrap().split(s)
    }

    #[test]
    fn table_one_first_row() {
        let (words, flag) = split(
            "Alabama, Georgia, Louisiana, North Carolina, South Carolina, Tennessee, \
             Virginia, New York, Pennsylvania, Massachussetts provinces",
        );
        assert_eq!(
            words,
            [
                "alabama",
                "georgia",
                "louisiana",
                "north carolina",
                "south carolina",
                "tennessee",
                "virginia",
                "new york",
                "pennsylvania",
                "massachussetts"
            ]
        );
        assert!(!flag);
    }

    #[test]
    fn and_is_a_joiner() {
        let (words, _) = split("New York, Pennsylvania, and Massachusetts provinces");
        assert_eq!(words, ["new york", "pennsylvania", "massachusetts"]);
    }

    #[test]
    fn parentheses_flag_and_split() {
        assert_eq!(split("Berkeley (California)"), (vec!["berkeley".into(), "california".into()], true));
        let (words, flag) = split("California (Berkeley, Emeryville, Alameda)");
        assert_eq!(words, ["california", "berkeley", "emeryville", "alameda"]);
        assert!(flag);
    }

    #[test]
    fn enumerated_lists() {
        assert_eq!(split("(1) A (2) B (3) C").0, ["a", "b", "c"]);
        assert_eq!(split("1. Dhaka 2. Khulna").0, ["dhaka", "khulna"]);
        assert_eq!(split("A (B and C)").0, ["a", "b", "c"]);
    }

    #[test]
    fn dummy_words_are_whole_words() {
        assert_eq!(split("Statesboro").0, ["statesboro"]);
        assert_eq!(split("Kerala state").0, ["kerala"]);
        assert_eq!(split("near Lima").0, ["lima"]);
    }

    #[test]
    fn only_dummy_words_is_empty() {
        assert!(split("provinces, states").0.is_empty());
        assert!(split("  ").0.is_empty());
    }

    #[test]
    fn user_additions_extend_defaults() {
        let cfg = default_split_config()
            .with_joiners([r"\s-\s"], false)
            .with_dummy_words(["Prefecture"], false);
        let (words, _) = cfg.compile().unwrap().split("Osaka prefecture - Kyoto, Nara");
        assert_eq!(words, ["osaka", "kyoto", "nara"]);

        let replaced = default_split_config().with_joiners([";"], true);
        assert_eq!(replaced.joiner_patterns, [";"]);
        assert_eq!(replaced.compile().unwrap().split("a, b; c").0, ["a, b", "c"]);
    }

    #[test]
    fn bad_regex_is_config_error() {
        let cfg = default_split_config().with_joiners(["("], false);
        assert!(matches!(cfg.compile(), Err(Error::Config(_))));
    }

    #[test]
    fn dedup_is_opt_in() {
        assert_eq!(split("Lima, Lima").0, ["lima", "lima"]);
        let cfg = default_split_config().with_dedup(true);
        assert_eq!(cfg.compile().unwrap().split("Lima, Lima").0, ["lima"]);
    }

    #[test]
    fn absent_location_gives_one_row() {
        let rec = DisasterRecord {
            dis_no: "2001-0001-PER".into(),
            ..Default::default()
        };
        let out = split_locations(&[rec], "Location", &default_split_config()).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].location_word, "");
        assert!(!out[0].uncertain_location_specificity);
    }

    #[test]
    fn unknown_column() {
        let rec = DisasterRecord {
            dis_no: "x".into(),
            ..Default::default()
        };
        let err = split_locations(&[rec], "Region", &default_split_config()).unwrap_err();
        assert!(matches!(err, Error::Config(ref m) if m.contains("Dis No")));
    }

    #[test]
    fn table_round_trip() {
        let mut rec = DisasterRecord {
            dis_no: "1928-0024-CAN".into(),
            country: "Canada".into(),
            location_string: Some("Burin Peninsula, Newfoundland".into()),
            native_latitude: Some("48.60 N".into()),
            ..Default::default()
        };
        rec.extras.insert("CPI".into(), "6.731507".into());
        let out = split_locations(&[rec], "Location", &default_split_config()).unwrap();
        let table = locationized_to_table(&out);
        let back = locationized_from_table(&table, &[]).unwrap();
        assert_eq!(back, out);
    }
}
