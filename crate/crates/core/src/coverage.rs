//! Coverage statistics: how many location rows, or how many disasters,
//! carry usable coordinates.
//!
//! Percentages are exact rationals; rounding to two decimals happens only
//! when a report is rendered.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use indexmap::IndexMap;
use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result, Warnings};
use crate::ingest::{parse_native_coordinate, Axis, DIS_NO_COLUMN};
use crate::table::Table;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CoverageUnit {
    Locations,
    Disasters,
}

impl fmt::Display for CoverageUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoverageUnit::Locations => "locations",
            CoverageUnit::Disasters => "disasters",
        })
    }
}

impl FromStr for CoverageUnit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "locations" | "location" => Ok(CoverageUnit::Locations),
            "disasters" | "disaster" => Ok(CoverageUnit::Disasters),
            other => Err(Error::Config(format!("unknown unit `{other}`"))),
        }
    }
}

type Predicate = dyn Fn(&[bool]) -> std::result::Result<bool, String> + Send + Sync;

/// Rule reducing a disaster's per-location located flags to one verdict.
#[derive(Clone)]
pub enum DisasterAggregation {
    Any,
    All,
    /// Receives the located flags of one disaster in row order.
    Custom {
        name: String,
        predicate: Arc<Predicate>,
    },
}

impl DisasterAggregation {
    pub fn custom<F>(name: impl Into<String>, predicate: F) -> Self
    where
        F: Fn(&[bool]) -> std::result::Result<bool, String> + Send + Sync + 'static,
    {
        DisasterAggregation::Custom {
            name: name.into(),
            predicate: Arc::new(predicate),
        }
    }

    /// Located when at least `numer/denom` of the disaster's locations are.
    pub fn at_least_share(numer: u64, denom: u64) -> Self {
        Self::custom(format!("at least {numer}/{denom} of locations located"), move |flags| {
            if denom == 0 {
                return Err("share denominator is zero".into());
            }
            let located = flags.iter().filter(|&&f| f).count() as u64;
            Ok(located * denom >= numer * flags.len() as u64)
        })
    }

    pub fn apply(&self, flags: &[bool]) -> std::result::Result<bool, String> {
        match self {
            DisasterAggregation::Any => Ok(flags.iter().any(|&f| f)),
            DisasterAggregation::All => Ok(flags.iter().all(|&f| f)),
            DisasterAggregation::Custom { predicate, .. } => predicate(flags),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            DisasterAggregation::Any => "any: at least one location located".into(),
            DisasterAggregation::All => "all: every location located".into(),
            DisasterAggregation::Custom { name, .. } => format!("custom: {name}"),
        }
    }
}

impl fmt::Debug for DisasterAggregation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

impl FromStr for DisasterAggregation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "any" => Ok(DisasterAggregation::Any),
            "all" => Ok(DisasterAggregation::All),
            other => {
                // `share:N/D` or `at-least:N/D`
                let bad = || {
                    Error::Config(format!(
                        "unknown aggregation `{other}` (expected any, all or share:N/D)"
                    ))
                };
                let frac = other
                    .strip_prefix("share:")
                    .or_else(|| other.strip_prefix("at-least:"))
                    .ok_or_else(bad)?;
                let (n, d) = frac.split_once('/').ok_or_else(bad)?;
                let (n, d): (u64, u64) = (
                    n.trim().parse().map_err(|_| bad())?,
                    d.trim().parse().map_err(|_| bad())?,
                );
                if d == 0 || n > d {
                    return Err(bad());
                }
                Ok(DisasterAggregation::at_least_share(n, d))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CoverageReport {
    pub unit: CoverageUnit,
    pub total: u64,
    pub located: u64,
    pub rule: String,
    pub warnings: Warnings,
}

impl CoverageReport {
    pub fn not_located(&self) -> u64 {
        self.total - self.located
    }

    /// `100 * located / total`, or zero for an empty report.
    pub fn percent_located(&self) -> Ratio<u64> {
        percent(self.located, self.total)
    }

    pub fn percent_not_located(&self) -> Ratio<u64> {
        percent(self.not_located(), self.total)
    }

    pub fn percent_located_text(&self) -> String {
        format_hundredths(self.percent_located())
    }

    pub fn percent_not_located_text(&self) -> String {
        format_hundredths(self.percent_not_located())
    }
}

fn percent(part: u64, total: u64) -> Ratio<u64> {
    if total == 0 {
        Ratio::from_integer(0)
    } else {
        Ratio::new(100 * part, total)
    }
}

/// Percentage in hundredths, rounded half up.
fn hundredths(value: Ratio<u64>) -> u64 {
    let (n, d) = (*value.numer(), *value.denom());
    (200 * n + d) / (2 * d)
}

/// Formats a percentage with exactly two decimals, rounding half up.
pub fn format_hundredths(value: Ratio<u64>) -> String {
    let h = hundredths(value);
    format!("{}.{:02}", h / 100, h % 100)
}

/// Row-level located test. Both cells must parse (plain or hemisphere form)
/// and fall inside the valid degree ranges.
pub fn row_is_located(lat: &str, lng: &str, warnings: &mut Warnings) -> bool {
    let lat_v = parse_native_coordinate(Some(lat), Axis::Latitude, warnings);
    let lng_v = parse_native_coordinate(Some(lng), Axis::Longitude, warnings);
    match (lat_v, lng_v) {
        (Some(la), Some(ln)) => {
            if la.abs() > 90.0 || ln.abs() > 180.0 {
                warnings.push(format!("coordinate ({la}, {ln}) out of range"));
                false
            } else {
                true
            }
        }
        _ => false,
    }
}

fn located_flags(table: &Table, lat_column: &str, lng_column: &str, warnings: &mut Warnings) -> Result<Vec<bool>> {
    let lat = table.require_column(lat_column)?;
    let lng = table.require_column(lng_column)?;
    Ok((0..table.len())
        .map(|row| row_is_located(table.cell(row, lat), table.cell(row, lng), warnings))
        .collect())
}

pub fn percent_located_locations(
    table: &Table,
    lat_column: &str,
    lng_column: &str,
) -> Result<CoverageReport> {
    let mut warnings = Warnings::new();
    let flags = located_flags(table, lat_column, lng_column, &mut warnings)?;
    if flags.is_empty() {
        warnings.push("no location rows; percentage reported as 0");
    }
    Ok(CoverageReport {
        unit: CoverageUnit::Locations,
        total: flags.len() as u64,
        located: flags.iter().filter(|&&f| f).count() as u64,
        rule: format!("row has valid `{lat_column}` and `{lng_column}`"),
        warnings,
    })
}

pub fn percent_located_disasters(
    table: &Table,
    lat_column: &str,
    lng_column: &str,
    how: &DisasterAggregation,
) -> Result<CoverageReport> {
    let mut warnings = Warnings::new();
    let flags = located_flags(table, lat_column, lng_column, &mut warnings)?;
    let dis = table.require_column(DIS_NO_COLUMN)?;

    let mut groups: IndexMap<&str, Vec<bool>> = IndexMap::new();
    for (row, flag) in flags.into_iter().enumerate() {
        groups.entry(table.cell(row, dis)).or_default().push(flag);
    }
    let mut located = 0;
    for (dis_no, flags) in &groups {
        let verdict = how
            .apply(flags)
            .map_err(|e| Error::Validation(format!("aggregation failed for `{dis_no}`: {e}")))?;
        located += u64::from(verdict);
    }
    if groups.is_empty() {
        warnings.push("no disasters; percentage reported as 0");
    }
    Ok(CoverageReport {
        unit: CoverageUnit::Disasters,
        total: groups.len() as u64,
        located,
        rule: how.describe(),
        warnings,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
    Svg,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "text" | "txt" => Ok(ReportFormat::Text),
            "json" => Ok(ReportFormat::Json),
            "svg" | "svg-bar-chart" => Ok(ReportFormat::Svg),
            other => Err(Error::Config(format!(
                "unknown report format `{other}` (expected text, json or svg)"
            ))),
        }
    }
}

#[derive(Serialize)]
struct JsonReport<'a> {
    unit: CoverageUnit,
    rule: &'a str,
    total: u64,
    located: u64,
    not_located: u64,
    percent_located: String,
    percent_not_located: String,
    percent_located_exact: String,
    warnings: Vec<&'a str>,
}

pub fn render_report(report: &CoverageReport, format: ReportFormat) -> Vec<u8> {
    match format {
        ReportFormat::Text => render_text(report).into_bytes(),
        ReportFormat::Json => {
            let exact = report.percent_located();
            let doc = JsonReport {
                unit: report.unit,
                rule: &report.rule,
                total: report.total,
                located: report.located,
                not_located: report.not_located(),
                percent_located: report.percent_located_text(),
                percent_not_located: report.percent_not_located_text(),
                percent_located_exact: format!("{}/{}", exact.numer(), exact.denom()),
                warnings: report.warnings.iter().collect(),
            };
            let mut out = serde_json::to_vec_pretty(&doc).expect("plain struct serializes");
            out.push(b'\n');
            out
        }
        ReportFormat::Svg => render_svg(report).into_bytes(),
    }
}

/// Parses a format name and renders; unknown names are a configuration error.
pub fn render_report_as(report: &CoverageReport, format: &str) -> Result<Vec<u8>> {
    Ok(render_report(report, format.parse()?))
}

fn render_text(report: &CoverageReport) -> String {
    let mut out = format!("coverage of {} ({})\n", report.unit, report.rule);
    out += &format!(
        "  located:     {} / {} ({}%)\n",
        report.located,
        report.total,
        report.percent_located_text()
    );
    out += &format!(
        "  not located: {} / {} ({}%)\n",
        report.not_located(),
        report.total,
        report.percent_not_located_text()
    );
    for w in report.warnings.iter() {
        out += &format!("warning: {w}\n");
    }
    out
}

fn render_svg(report: &CoverageReport) -> String {
    const HEIGHT: u64 = 200;
    let bars = [
        ("located", hundredths(report.percent_located()), "#2b6cb0"),
        ("not located", hundredths(report.percent_not_located()), "#c05621"),
    ];
    let mut out = String::new();
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"320\" height=\"280\" viewBox=\"0 0 320 280\">\n";
    out += &format!(
        "  <text x=\"160\" y=\"20\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">{} ({} total)</text>\n",
        report.unit, report.total
    );
    out += "  <line x1=\"30\" y1=\"240\" x2=\"290\" y2=\"240\" stroke=\"#000\"/>\n";
    for (i, (label, h, color)) in bars.iter().enumerate() {
        let x = 60 + i as u64 * 120;
        // Height in pixels from hundredths of a percent, integer arithmetic only.
        let px = h * HEIGHT / 10_000;
        let y = 240 - px;
        out += &format!(
            "  <rect x=\"{x}\" y=\"{y}\" width=\"80\" height=\"{px}\" fill=\"{color}\"/>\n"
        );
        out += &format!(
            "  <text x=\"{}\" y=\"{}\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">{}.{:02}%</text>\n",
            x + 40,
            y.saturating_sub(6).max(34),
            h / 100,
            h % 100
        );
        out += &format!(
            "  <text x=\"{}\" y=\"258\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">{label}</text>\n",
            x + 40
        );
    }
    out += "</svg>\n";
    out
}
