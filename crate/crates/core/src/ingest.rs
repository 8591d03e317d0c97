//! Loading of EM-DAT public exports.
//!
//! An export is a table whose real column-header row may be preceded by a
//! block of `key: value` lines describing the query that produced it. The
//! header row is the first row holding a `Dis No` column (in any of its
//! spellings). Six columns are mapped onto typed fields; every other column
//! is carried through untouched, in source order.

use std::fs::File;
use std::io::Read;
use std::path::Path;

use indexmap::IndexMap;

use crate::error::{Error, Result, Warnings};
use crate::table::{columns_match, non_absent, normalize_column, Table};

pub const DIS_NO_COLUMN: &str = "Dis No";
pub const COUNTRY_COLUMN: &str = "Country";
pub const DISASTER_TYPE_COLUMN: &str = "Disaster Type";
pub const LOCATION_COLUMN: &str = "Location";
pub const LATITUDE_COLUMN: &str = "Latitude";
pub const LONGITUDE_COLUMN: &str = "Longitude";

/// Canonical names of the typed columns, in the order they are written.
pub const CORE_COLUMNS: [&str; 6] = [
    DIS_NO_COLUMN,
    COUNTRY_COLUMN,
    DISASTER_TYPE_COLUMN,
    LOCATION_COLUMN,
    LATITUDE_COLUMN,
    LONGITUDE_COLUMN,
];

/// Provenance lines found above the header row. Values are kept verbatim.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EmdatMetadata {
    pub timestamp: Option<String>,
    pub version: Option<String>,
    pub request_type: Option<String>,
    pub extra: IndexMap<String, String>,
}

impl EmdatMetadata {
    /// Number of key/value entries held, recognized or not.
    pub fn len(&self) -> usize {
        [&self.timestamp, &self.version, &self.request_type]
            .iter()
            .filter(|v| v.is_some())
            .count()
            + self.extra.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn insert(&mut self, key: String, value: String) {
        let norm = normalize_column(&key);
        let slot = if norm.contains("version") {
            &mut self.version
        } else if norm.contains("request") {
            &mut self.request_type
        } else if norm.contains("timestamp") || norm.contains("created") || norm == "date" {
            &mut self.timestamp
        } else {
            self.push_extra(key, value);
            return;
        };
        if slot.is_none() {
            *slot = Some(value);
        } else {
            self.push_extra(key, value);
        }
    }

    fn push_extra(&mut self, key: String, value: String) {
        let mut name = key.clone();
        let mut n = 2;
        while self.extra.contains_key(&name) {
            name = format!("{key} ({n})");
            n += 1;
        }
        self.extra.insert(name, value);
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct DisasterRecord {
    pub dis_no: String,
    pub country: String,
    pub disaster_type: String,
    pub location_string: Option<String>,
    pub native_latitude: Option<String>,
    pub native_longitude: Option<String>,
    /// Every non-core column, keyed by its source header, in source order.
    /// Missing values are stored as empty strings.
    pub extras: IndexMap<String, String>,
}

impl DisasterRecord {
    /// Value of a column by name, checking core fields first.
    pub fn field(&self, column: &str) -> Option<&str> {
        match core_slot(column) {
            Some(0) => Some(self.dis_no.as_str()),
            Some(1) => Some(self.country.as_str()),
            Some(2) => Some(self.disaster_type.as_str()),
            Some(3) => Some(self.location_string.as_deref().unwrap_or("")),
            Some(4) => Some(self.native_latitude.as_deref().unwrap_or("")),
            Some(5) => Some(self.native_longitude.as_deref().unwrap_or("")),
            _ => self
                .extras
                .get(column)
                .or_else(|| {
                    self.extras
                        .iter()
                        .find(|(k, _)| columns_match(k, column))
                        .map(|(_, v)| v)
                })
                .map(String::as_str),
        }
    }

    pub fn has_column(&self, column: &str) -> bool {
        core_slot(column).is_some() || self.field(column).is_some()
    }

    /// Column names this record exposes, core first.
    pub fn column_names(&self) -> Vec<String> {
        CORE_COLUMNS
            .iter()
            .map(|c| c.to_string())
            .chain(self.extras.keys().cloned())
            .collect()
    }

    /// Cells in the layout of [`DisasterRecord::column_names`].
    pub fn to_cells(&self) -> Vec<String> {
        let opt = |v: &Option<String>| v.clone().unwrap_or_default();
        let mut cells = vec![
            self.dis_no.clone(),
            self.country.clone(),
            self.disaster_type.clone(),
            opt(&self.location_string),
            opt(&self.native_latitude),
            opt(&self.native_longitude),
        ];
        cells.extend(self.extras.values().cloned());
        cells
    }
}

fn core_slot(column: &str) -> Option<usize> {
    let norm = normalize_column(column);
    CORE_COLUMNS
        .iter()
        .position(|c| normalize_column(c) == norm)
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct EmdatDataset {
    pub records: Vec<DisasterRecord>,
    pub metadata: Option<EmdatMetadata>,
    pub warnings: Warnings,
}

/// Finds the column-header row. Returns how many rows precede it and the
/// key/value entries parsed from those rows.
pub fn detect_header_block(rows: &[Vec<String>]) -> Result<(usize, EmdatMetadata)> {
    if rows.is_empty() {
        return Err(Error::Format("no rows in input".into()));
    }
    let header = rows
        .iter()
        .position(|row| row.iter().any(|cell| columns_match(cell, DIS_NO_COLUMN)))
        .ok_or_else(|| {
            let seen: Vec<&str> = rows
                .iter()
                .take(25)
                .flat_map(|r| r.iter())
                .map(|c| c.trim())
                .filter(|c| !c.is_empty())
                .take(40)
                .collect();
            Error::Format(format!(
                "no `Dis No` column found; columns seen: {}",
                seen.join(", ")
            ))
        })?;

    let mut metadata = EmdatMetadata::default();
    for row in &rows[..header] {
        if let Some((key, value)) = metadata_entry(row) {
            metadata.insert(key, value);
        }
    }
    Ok((header, metadata))
}

fn metadata_entry(row: &[String]) -> Option<(String, String)> {
    let cells: Vec<&str> = row.iter().map(|c| c.trim()).filter(|c| !c.is_empty()).collect();
    let (first, rest) = cells.split_first()?;
    let (key, head) = match first.split_once(':') {
        Some((k, v)) => (k.trim(), Some(v.trim())),
        None => (*first, None),
    };
    let value: Vec<&str> = head
        .into_iter()
        .chain(rest.iter().copied())
        .filter(|v| !v.is_empty())
        .collect();
    Some((key.to_string(), value.join(", ")))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Latitude,
    Longitude,
}

impl Axis {
    pub fn limit(self) -> f64 {
        match self {
            Axis::Latitude => 90.0,
            Axis::Longitude => 180.0,
        }
    }
}

/// Converts a native coordinate cell to signed degrees.
///
/// Accepts plain signed decimals and hemisphere forms such as `48.60 N` or
/// `W 58.00`; `S` and `W` negate. Blank input is absent. Anything else is
/// absent with a warning, since native coordinates are auxiliary data.
pub fn parse_native_coordinate(
    text: Option<&str>,
    axis: Axis,
    warnings: &mut Warnings,
) -> Option<f64> {
    let raw = text?;
    non_absent(raw)?;
    let parsed = parse_coordinate_text(raw, axis);
    if parsed.is_none() {
        warnings.push(format!("unparseable {axis:?} value `{}`", raw.trim()));
    }
    parsed
}

fn parse_coordinate_text(raw: &str, axis: Axis) -> Option<f64> {
    let compact: String = raw
        .chars()
        .filter(|c| !c.is_whitespace() && *c != '°')
        .collect::<String>()
        .to_ascii_uppercase();
    let (hemisphere, number) = match (compact.chars().next(), compact.chars().last()) {
        (Some(c @ ('N' | 'S' | 'E' | 'W')), _) => (Some(c), &compact[1..]),
        (_, Some(c @ ('N' | 'S' | 'E' | 'W'))) => (Some(c), &compact[..compact.len() - 1]),
        _ => (None, compact.as_str()),
    };
    let value: f64 = number.parse().ok().filter(|v: &f64| v.is_finite())?;
    match (axis, hemisphere) {
        (_, None) => Some(value),
        (_, Some(_)) if value < 0.0 => None,
        (Axis::Latitude, Some('N')) | (Axis::Longitude, Some('E')) => Some(value),
        (Axis::Latitude, Some('S')) | (Axis::Longitude, Some('W')) => Some(-value),
        _ => None,
    }
}

/// Reads an export from CSV bytes.
pub fn read_emdat<R: Read>(reader: R, with_metadata: bool) -> Result<EmdatDataset> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .from_reader(reader);
    let mut rows = Vec::new();
    for record in rdr.records() {
        rows.push(record?.iter().map(str::to_string).collect::<Vec<_>>());
    }
    records_from_rows(rows, with_metadata)
}

/// Reads an export from a file. `.xlsx` workbooks are accepted when the
/// `xlsx` feature is enabled; everything else is parsed as CSV.
pub fn read_emdat_path(path: &Path, with_metadata: bool) -> Result<EmdatDataset> {
    let is_workbook = path
        .extension()
        .and_then(|e| e.to_str())
        .is_some_and(|e| e.eq_ignore_ascii_case("xlsx") || e.eq_ignore_ascii_case("xls"));
    if is_workbook {
        return read_workbook(path, with_metadata);
    }
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    read_emdat(std::io::BufReader::new(file), with_metadata)
}

#[cfg(feature = "xlsx")]
fn read_workbook(path: &Path, with_metadata: bool) -> Result<EmdatDataset> {
    use calamine::{open_workbook_auto, Reader};

    let mut workbook =
        open_workbook_auto(path).map_err(|e| Error::Format(format!("{}: {e}", path.display())))?;
    let sheet = workbook
        .sheet_names()
        .first()
        .cloned()
        .ok_or_else(|| Error::Format(format!("{}: workbook has no sheets", path.display())))?;
    let range = workbook
        .worksheet_range(&sheet)
        .map_err(|e| Error::Format(format!("{}: {e}", path.display())))?;
    let rows = range
        .rows()
        .map(|row| row.iter().map(|cell| cell.to_string()).collect())
        .collect();
    records_from_rows(rows, with_metadata)
}

#[cfg(not(feature = "xlsx"))]
fn read_workbook(path: &Path, _with_metadata: bool) -> Result<EmdatDataset> {
    Err(Error::Config(format!(
        "{}: spreadsheet input requires the `xlsx` feature; export the sheet as CSV instead",
        path.display()
    )))
}

/// Builds records from raw rows, locating the header with
/// [`detect_header_block`].
pub fn records_from_rows(rows: Vec<Vec<String>>, with_metadata: bool) -> Result<EmdatDataset> {
    let (skip, metadata) = detect_header_block(&rows)?;
    let mut warnings = Warnings::new();
    let mut rows = rows.into_iter().skip(skip);
    let header = rows.next().expect("header row located above");
    let header = dedupe_header(header, &mut warnings);

    let mut core_index = [None; 6];
    let mut extra_index = Vec::new();
    for (i, name) in header.iter().enumerate() {
        match core_slot(name) {
            Some(slot) if core_index[slot].is_none() => core_index[slot] = Some(i),
            _ => extra_index.push(i),
        }
    }

    let mut records = Vec::new();
    for (n, row) in rows.enumerate() {
        if row.iter().all(|c| c.trim().is_empty()) {
            continue;
        }
        let line = skip + n + 2;
        if row.len() > header.len() && row[header.len()..].iter().any(|c| !c.trim().is_empty()) {
            return Err(Error::Format(format!(
                "row {line} has {} fields but the header has {}",
                row.len(),
                header.len()
            )));
        }
        let cell = |i: Option<usize>| -> Option<String> {
            i.and_then(|i| row.get(i))
                .and_then(|v| non_absent(v))
                .map(|v| v.trim().to_string())
        };
        let dis_no = cell(core_index[0]).ok_or_else(|| {
            Error::Validation(format!("row {line} has an empty `Dis No`"))
        })?;
        let extras = extra_index
            .iter()
            .map(|&i| {
                let value = row.get(i).and_then(|v| non_absent(v)).unwrap_or("");
                (header[i].clone(), value.to_string())
            })
            .collect();
        records.push(DisasterRecord {
            dis_no,
            country: cell(core_index[1]).unwrap_or_default(),
            disaster_type: cell(core_index[2]).unwrap_or_default(),
            location_string: cell(core_index[3]),
            native_latitude: cell(core_index[4]),
            native_longitude: cell(core_index[5]),
            extras,
        });
    }

    check_unique(&records)?;

    Ok(EmdatDataset {
        records,
        metadata: (with_metadata && skip > 0).then_some(metadata),
        warnings,
    })
}

fn dedupe_header(header: Vec<String>, warnings: &mut Warnings) -> Vec<String> {
    let mut seen: Vec<String> = Vec::with_capacity(header.len());
    for name in header {
        let base = name.trim().to_string();
        let mut candidate = base.clone();
        let mut n = 2;
        while seen.contains(&candidate) {
            candidate = format!("{base}_{n}");
            n += 1;
        }
        if candidate != base {
            warnings.push(format!("duplicate column `{base}` renamed to `{candidate}`"));
        }
        seen.push(candidate);
    }
    seen
}

fn check_unique(records: &[DisasterRecord]) -> Result<()> {
    let mut counts: IndexMap<&str, usize> = IndexMap::new();
    for r in records {
        *counts.entry(r.dis_no.as_str()).or_default() += 1;
    }
    let dupes: Vec<&str> = counts
        .iter()
        .filter(|(_, &n)| n > 1)
        .map(|(k, _)| *k)
        .collect();
    if dupes.is_empty() {
        Ok(())
    } else {
        Err(Error::Validation(format!(
            "duplicate `Dis No` values: {}",
            dupes.join(", ")
        )))
    }
}

/// Lays records out as a table: the six core columns, then the union of
/// extras columns in first-seen order.
pub fn records_to_table(records: &[DisasterRecord]) -> Table {
    let mut extras: IndexMap<&str, ()> = IndexMap::new();
    for r in records {
        for k in r.extras.keys() {
            extras.insert(k, ());
        }
    }
    let mut columns: Vec<String> = CORE_COLUMNS.iter().map(|c| c.to_string()).collect();
    columns.extend(extras.keys().map(|k| k.to_string()));
    let mut table = Table::new(columns);
    for r in records {
        let mut cells = r.to_cells()[..6].to_vec();
        cells.extend(
            extras
                .keys()
                .map(|k| r.extras.get(*k).cloned().unwrap_or_default()),
        );
        table.push_row(cells);
    }
    table
}

pub fn write_emdat_csv<W: std::io::Write>(records: &[DisasterRecord], writer: W) -> Result<()> {
    records_to_table(records).write_csv(writer)
}
