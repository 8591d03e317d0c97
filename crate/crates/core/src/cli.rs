//! Command-line front end. Each subcommand is a file-to-file transform;
//! `pipeline` chains locationize, geocode and coverage and keeps every
//! intermediate file.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::coverage::{
    percent_located_disasters, percent_located_locations, render_report, CoverageUnit,
    DisasterAggregation, ReportFormat,
};
use crate::error::{Error, Result};
use crate::geocoder::{
    geocode, geocode_batches, geocoded_to_table, BatchPlan, GeocodeOptions, LAT_COLUMN,
    LNG_COLUMN, MATCHES_COLUMN,
};
use crate::geonames::{ClientMode, GeoNamesClient, GeoNamesConfig, SearchParam, USERNAME_ENV};
use crate::ingest::{self, read_emdat_path, LATITUDE_COLUMN, LOCATION_COLUMN, LONGITUDE_COLUMN};
use crate::locationizer::{
    default_split_config, locationized_from_table, locationized_to_table, split_locations,
    SplitConfig,
};
use crate::point::GeoPoint;
use crate::spatial::{load_region, located_in_box, located_in_shapefile, points_geojson, BoundingBox};
use crate::table::Table;

#[derive(Debug, Parser)]
#[command(name = "emdat-wrangler", version, about = "Split, geocode and analyse EM-DAT disaster exports")]
pub struct Cli {
    /// Write the fully resolved configuration of this run as JSON.
    #[arg(long, global = true, value_name = "PATH")]
    pub dump_config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Load an export (CSV, or .xlsx with the `xlsx` feature) and write it back as normalized CSV.
    Ingest {
        input: PathBuf,
        output: PathBuf,
        /// Also write the metadata block found above the header as JSON.
        #[arg(long, value_name = "PATH")]
        metadata_out: Option<PathBuf>,
    },
    /// Split location strings into one row per disaster-location pair.
    Locationize {
        #[command(flatten)]
        split: SplitArgs,
        input: PathBuf,
        output: PathBuf,
    },
    /// Report the share of located rows or disasters.
    Coverage {
        #[command(flatten)]
        coverage: CoverageArgs,
        input: PathBuf,
        /// Defaults to standard output.
        #[arg(long, short, value_name = "PATH")]
        output: Option<PathBuf>,
    },
    /// Resolve location words to coordinates through GeoNames.
    Geocode {
        #[command(flatten)]
        geo: GeocodeArgs,
        input: PathBuf,
        output: PathBuf,
    },
    /// Flag rows whose point lies inside a latitude-longitude box.
    FilterBox {
        #[arg(long, value_name = "LAT,LNG", allow_hyphen_values = true)]
        top_left: GeoPoint,
        #[arg(long, value_name = "LAT,LNG", allow_hyphen_values = true)]
        bottom_right: GeoPoint,
        #[command(flatten)]
        columns: PointColumns,
        input: PathBuf,
        output: PathBuf,
    },
    /// Flag rows whose point lies inside a GeoJSON region.
    FilterShape {
        #[arg(long, value_name = "FILE")]
        region: PathBuf,
        #[command(flatten)]
        columns: PointColumns,
        input: PathBuf,
        output: PathBuf,
    },
    /// locationize -> geocode -> coverage, keeping intermediate files.
    Pipeline {
        /// Re-run from a configuration written by --dump-config; other flags are ignored.
        #[arg(long, value_name = "PATH")]
        config: Option<PathBuf>,
        #[command(flatten)]
        split: SplitArgs,
        #[command(flatten)]
        geo: GeocodeArgs,
        #[arg(long, default_value = "any")]
        how: String,
        #[arg(long, default_value = "text")]
        format: String,
        #[arg(long, value_name = "DIR", required_unless_present = "config")]
        out_dir: Option<PathBuf>,
        #[arg(required_unless_present = "config")]
        input: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Args)]
pub struct SplitArgs {
    /// Column holding the location string.
    #[arg(long, default_value = LOCATION_COLUMN)]
    pub column: String,
    /// Extra delimiter pattern (regular expression); repeatable.
    #[arg(long = "joiner", value_name = "REGEX")]
    pub joiners: Vec<String>,
    /// Extra administrative-level word to drop; repeatable.
    #[arg(long = "dummy-word", value_name = "WORD")]
    pub dummy_words: Vec<String>,
    #[arg(long)]
    pub replace_joiners: bool,
    #[arg(long)]
    pub replace_dummy_words: bool,
    /// Drop repeated words within one record.
    #[arg(long)]
    pub dedup: bool,
}

impl SplitArgs {
    fn to_config(&self) -> SplitConfig {
        default_split_config()
            .with_joiners(self.joiners.iter().cloned(), self.replace_joiners)
            .with_dummy_words(self.dummy_words.iter().cloned(), self.replace_dummy_words)
            .with_dedup(self.dedup)
    }
}

#[derive(Debug, Clone, Args)]
pub struct CoverageArgs {
    #[arg(long, default_value = "locations")]
    pub unit: String,
    #[arg(long, default_value = "any")]
    pub how: String,
    #[arg(long, default_value = LAT_COLUMN)]
    pub lat_col: String,
    #[arg(long, default_value = LNG_COLUMN)]
    pub lng_col: String,
    #[arg(long, default_value = "text")]
    pub format: String,
}

#[derive(Debug, Clone, Args)]
pub struct PointColumns {
    #[arg(long, default_value = LAT_COLUMN)]
    pub lat_col: String,
    #[arg(long, default_value = LNG_COLUMN)]
    pub lng_col: String,
    /// Also write the located points as a GeoJSON FeatureCollection.
    #[arg(long, value_name = "PATH")]
    pub points_geojson: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct GeocodeArgs {
    /// Rows per batch; enables batched geocoding with a pause between batches.
    #[arg(long)]
    pub batch_size: Option<usize>,
    /// Pause between batches, in seconds.
    #[arg(long)]
    pub wait_time: Option<u64>,
    #[arg(long, default_value_t = 1)]
    pub n_results: usize,
    /// Write lat1,lng1,...,latN,lngN instead of lat,lng,matches.
    #[arg(long)]
    pub unwrap: bool,
    #[arg(long, env = USERNAME_ENV, hide_env_values = true)]
    pub username: Option<String>,
    /// Serve every query from recorded responses; the network is never used.
    #[arg(long, value_name = "PATH")]
    pub offline_fixtures: Option<PathBuf>,
    /// Search without restricting to the record's country.
    #[arg(long)]
    pub no_country_bias: bool,
    /// Persist search results here so interrupted runs resume cheaply.
    #[arg(long, value_name = "DIR")]
    pub cache_dir: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
    #[arg(long)]
    pub base_url: Option<String>,
    #[arg(long)]
    pub hourly_budget: Option<u32>,
    #[arg(long)]
    pub daily_budget: Option<u32>,
    /// Query by exact `name` instead of full-text `q`.
    #[arg(long)]
    pub name_search: bool,
}

impl GeocodeArgs {
    fn geonames(&self) -> GeoNamesConfig {
        let defaults = GeoNamesConfig::default();
        GeoNamesConfig {
            username: self.username.clone().filter(|u| !u.trim().is_empty()),
            base_url: self.base_url.clone().unwrap_or(defaults.base_url),
            hourly_budget: self.hourly_budget.unwrap_or(defaults.hourly_budget),
            daily_budget: self.daily_budget.unwrap_or(defaults.daily_budget),
            mode: match &self.offline_fixtures {
                Some(p) => ClientMode::OfflineFixtures(p.clone()),
                None => ClientMode::Live,
            },
            search_param: if self.name_search {
                SearchParam::Name
            } else {
                SearchParam::Q
            },
            cache_dir: self.cache_dir.clone(),
            ..defaults
        }
    }

    fn options(&self) -> GeocodeOptions {
        GeocodeOptions {
            n_results: self.n_results,
            unwrap: self.unwrap,
            country_bias: !self.no_country_bias,
            workers: self.workers,
        }
    }

    fn batch(&self) -> Option<BatchPlan> {
        if self.batch_size.is_none() && self.wait_time.is_none() {
            return None;
        }
        let defaults = BatchPlan::default();
        Some(BatchPlan {
            batch_size: self.batch_size.unwrap_or(defaults.batch_size),
            wait_time: self
                .wait_time
                .map(Duration::from_secs)
                .unwrap_or(defaults.wait_time),
        })
    }
}

/// Everything a run depends on, with defaults filled in.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PipelineConfig {
    pub command: String,
    pub input: Option<PathBuf>,
    pub output: Option<PathBuf>,
    pub location_column: String,
    pub lat_column: String,
    pub lng_column: String,
    pub split: SplitConfig,
    pub geonames: GeoNamesConfig,
    pub geocode: GeocodeOptions,
    pub batch: Option<BatchPlan>,
    pub unit: Option<String>,
    pub how: String,
    pub format: String,
    pub region: Option<PathBuf>,
    pub top_left: Option<GeoPoint>,
    pub bottom_right: Option<GeoPoint>,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            command: String::new(),
            input: None,
            output: None,
            location_column: LOCATION_COLUMN.into(),
            lat_column: LAT_COLUMN.into(),
            lng_column: LNG_COLUMN.into(),
            split: default_split_config(),
            geonames: GeoNamesConfig::default(),
            geocode: GeocodeOptions::default(),
            batch: None,
            unit: None,
            how: "any".into(),
            format: "text".into(),
            region: None,
            top_left: None,
            bottom_right: None,
        }
    }
}

impl PipelineConfig {
    fn from_command(command: &Command) -> Result<Self> {
        let mut cfg = PipelineConfig::default();
        match command {
            Command::Ingest { input, output, .. } => {
                cfg.command = "ingest".into();
                cfg.input = Some(input.clone());
                cfg.output = Some(output.clone());
            }
            Command::Locationize { split, input, output } => {
                cfg.command = "locationize".into();
                cfg.input = Some(input.clone());
                cfg.output = Some(output.clone());
                cfg.location_column = split.column.clone();
                cfg.split = split.to_config();
            }
            Command::Coverage { coverage, input, output } => {
                cfg.command = "coverage".into();
                cfg.input = Some(input.clone());
                cfg.output = output.clone();
                cfg.unit = Some(coverage.unit.clone());
                cfg.how = coverage.how.clone();
                cfg.lat_column = coverage.lat_col.clone();
                cfg.lng_column = coverage.lng_col.clone();
                cfg.format = coverage.format.clone();
            }
            Command::Geocode { geo, input, output } => {
                cfg.command = "geocode".into();
                cfg.input = Some(input.clone());
                cfg.output = Some(output.clone());
                cfg.geonames = geo.geonames();
                cfg.geocode = geo.options();
                cfg.batch = geo.batch();
            }
            Command::FilterBox {
                top_left,
                bottom_right,
                columns,
                input,
                output,
            } => {
                cfg.command = "filter-box".into();
                cfg.input = Some(input.clone());
                cfg.output = Some(output.clone());
                cfg.lat_column = columns.lat_col.clone();
                cfg.lng_column = columns.lng_col.clone();
                cfg.top_left = Some(*top_left);
                cfg.bottom_right = Some(*bottom_right);
            }
            Command::FilterShape {
                region,
                columns,
                input,
                output,
            } => {
                cfg.command = "filter-shape".into();
                cfg.input = Some(input.clone());
                cfg.output = Some(output.clone());
                cfg.lat_column = columns.lat_col.clone();
                cfg.lng_column = columns.lng_col.clone();
                cfg.region = Some(region.clone());
            }
            Command::Pipeline {
                config: Some(path), ..
            } => {
                let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
                cfg = serde_json::from_str(&text)
                    .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
                if cfg.command != "pipeline" {
                    return Err(Error::Config(format!(
                        "{}: configuration is for `{}`, not `pipeline`",
                        path.display(),
                        cfg.command
                    )));
                }
            }
            Command::Pipeline {
                config: None,
                split,
                geo,
                how,
                format,
                out_dir,
                input,
            } => {
                cfg.command = "pipeline".into();
                cfg.input = input.clone();
                cfg.output = out_dir.clone();
                cfg.location_column = split.column.clone();
                cfg.split = split.to_config();
                cfg.geonames = geo.geonames();
                cfg.geocode = geo.options();
                cfg.batch = geo.batch();
                cfg.how = how.clone();
                cfg.format = format.clone();
                if cfg.geocode.unwrap {
                    cfg.lat_column = "lat1".into();
                    cfg.lng_column = "lng1".into();
                }
            }
        }
        Ok(cfg)
    }

    fn input(&self) -> Result<&Path> {
        self.input
            .as_deref()
            .ok_or_else(|| Error::Config("no input path".into()))
    }

    fn output(&self) -> Result<&Path> {
        self.output
            .as_deref()
            .ok_or_else(|| Error::Config("no output path".into()))
    }
}

/// Parses arguments, runs, and returns the process exit status. Failures
/// print one `error[kind]: message` line on standard error.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let _ = env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn"))
        .format_timestamp(None)
        .try_init();
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match run(&cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error[{}]: {}", e.kind(), e.to_string().replace('\n', " "));
            e.exit_code()
        }
    }
}

pub fn run(cli: &Cli) -> Result<()> {
    let cfg = PipelineConfig::from_command(&cli.command)?;
    if let Some(path) = &cli.dump_config {
        write_config(&cfg, path)?;
    }
    match &cli.command {
        Command::Ingest { metadata_out, .. } => run_ingest(&cfg, metadata_out.as_deref()),
        Command::Locationize { .. } => run_locationize(&cfg),
        Command::Coverage { .. } => run_coverage(&cfg),
        Command::Geocode { .. } => run_geocode(&cfg),
        Command::FilterBox { columns, .. } => run_filter_box(&cfg, columns.points_geojson.as_deref()),
        Command::FilterShape { columns, .. } => run_filter_shape(&cfg, columns.points_geojson.as_deref()),
        Command::Pipeline { .. } => run_pipeline(&cfg),
    }
}

fn write_config(cfg: &PipelineConfig, path: &Path) -> Result<()> {
    let mut text = serde_json::to_string_pretty(cfg).expect("config serializes");
    text.push('\n');
    write_file(path, text.as_bytes())
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<()> {
    fs::write(path, bytes).map_err(|e| Error::io(path, e))
}

fn run_ingest(cfg: &PipelineConfig, metadata_out: Option<&Path>) -> Result<()> {
    let dataset = read_emdat_path(cfg.input()?, metadata_out.is_some())?;
    ingest::records_to_table(&dataset.records).write_csv_path(cfg.output()?)?;
    if let Some(path) = metadata_out {
        let meta = dataset.metadata.unwrap_or_default();
        let doc = serde_json::json!({
            "timestamp": meta.timestamp,
            "version": meta.version,
            "request_type": meta.request_type,
            "extra": meta.extra,
        });
        let mut text = serde_json::to_string_pretty(&doc).expect("json value serializes");
        text.push('\n');
        write_file(path, text.as_bytes())?;
    }
    Ok(())
}

fn locationize(cfg: &PipelineConfig, input: &Path) -> Result<Table> {
    let dataset = read_emdat_path(input, false)?;
    let rows = split_locations(&dataset.records, &cfg.location_column, &cfg.split)?;
    Ok(locationized_to_table(&rows))
}

fn run_locationize(cfg: &PipelineConfig) -> Result<()> {
    locationize(cfg, cfg.input()?)?.write_csv_path(cfg.output()?)
}

fn coverage_bytes(table: &Table, unit: CoverageUnit, cfg: &PipelineConfig, lat: &str, lng: &str) -> Result<Vec<u8>> {
    let format: ReportFormat = cfg.format.parse()?;
    let report = match unit {
        CoverageUnit::Locations => percent_located_locations(table, lat, lng)?,
        CoverageUnit::Disasters => {
            let how: DisasterAggregation = cfg.how.parse()?;
            percent_located_disasters(table, lat, lng, &how)?
        }
    };
    Ok(render_report(&report, format))
}

fn run_coverage(cfg: &PipelineConfig) -> Result<()> {
    let unit: CoverageUnit = cfg.unit.as_deref().unwrap_or("locations").parse()?;
    let table = Table::read_csv_path(cfg.input()?)?;
    let bytes = coverage_bytes(&table, unit, cfg, &cfg.lat_column, &cfg.lng_column)?;
    match &cfg.output {
        Some(path) => write_file(path, &bytes),
        None => {
            use std::io::Write;
            std::io::stdout()
                .write_all(&bytes)
                .map_err(|e| Error::io("<stdout>", e))
        }
    }
}

/// Columns a previous geocoding run may have added.
fn is_geocoder_column(name: &str) -> bool {
    let numbered = |prefix: &str| {
        name.strip_prefix(prefix)
            .is_some_and(|n| !n.is_empty() && n.chars().all(|c| c.is_ascii_digit()))
    };
    name == LAT_COLUMN || name == LNG_COLUMN || name == MATCHES_COLUMN || numbered("lat") || numbered("lng")
}

fn geocode_table(cfg: &PipelineConfig, table: &Table) -> Result<Table> {
    let skip: Vec<&str> = table
        .columns
        .iter()
        .map(String::as_str)
        .filter(|c| is_geocoder_column(c))
        .collect();
    let rows = locationized_from_table(table, &skip)?;
    let client = GeoNamesClient::new(cfg.geonames.clone())?;
    let geocoded = match &cfg.batch {
        Some(plan) => geocode_batches(&rows, plan, &cfg.geocode, &client)?,
        None => geocode(&rows, &cfg.geocode, &client)?,
    };
    log::info!(
        "geocoded {} rows with {} requests ({} cache hits)",
        geocoded.len(),
        client.requests_issued(),
        client.cache_hits()
    );
    Ok(geocoded_to_table(&geocoded, cfg.geocode.unwrap, cfg.geocode.n_results))
}

fn run_geocode(cfg: &PipelineConfig) -> Result<()> {
    let table = Table::read_csv_path(cfg.input()?)?;
    geocode_table(cfg, &table)?.write_csv_path(cfg.output()?)
}

fn write_points(table: &Table, cfg: &PipelineConfig, path: Option<&Path>) -> Result<()> {
    if let Some(path) = path {
        let mut text = points_geojson(table, &cfg.lat_column, &cfg.lng_column)?;
        text.push('\n');
        write_file(path, text.as_bytes())?;
    }
    Ok(())
}

fn run_filter_box(cfg: &PipelineConfig, points: Option<&Path>) -> Result<()> {
    let (Some(tl), Some(br)) = (cfg.top_left, cfg.bottom_right) else {
        return Err(Error::Config("filter-box needs --top-left and --bottom-right".into()));
    };
    let bbox = BoundingBox::new(tl, br)?;
    let table = Table::read_csv_path(cfg.input()?)?;
    let out = located_in_box(&table, &bbox, &cfg.lat_column, &cfg.lng_column)?;
    out.write_csv_path(cfg.output()?)?;
    write_points(&out, cfg, points)
}

fn run_filter_shape(cfg: &PipelineConfig, points: Option<&Path>) -> Result<()> {
    let region = cfg
        .region
        .as_deref()
        .ok_or_else(|| Error::Config("filter-shape needs --region".into()))?;
    let polys = load_region(region)?;
    let table = Table::read_csv_path(cfg.input()?)?;
    let out = located_in_shapefile(&table, &polys, &cfg.lat_column, &cfg.lng_column)?;
    out.write_csv_path(cfg.output()?)?;
    write_points(&out, cfg, points)
}

/// Files written by `pipeline` inside the output directory.
pub mod outputs {
    pub const LOCATIONIZED: &str = "locationized.csv";
    pub const GEOCODED: &str = "geocoded.csv";
    pub const CONFIG: &str = "config.json";

    pub fn coverage(stage: &str, unit: &str, ext: &str) -> String {
        format!("coverage_{stage}_{unit}.{ext}")
    }
}

fn run_pipeline(cfg: &PipelineConfig) -> Result<()> {
    let out_dir = cfg.output()?;
    fs::create_dir_all(out_dir).map_err(|e| Error::io(out_dir, e))?;
    let format: ReportFormat = cfg.format.parse()?;
    let _: DisasterAggregation = cfg.how.parse()?;
    let ext = match format {
        ReportFormat::Text => "txt",
        ReportFormat::Json => "json",
        ReportFormat::Svg => "svg",
    };

    let locationized = locationize(cfg, cfg.input()?)?;
    locationized.write_csv_path(&out_dir.join(outputs::LOCATIONIZED))?;
    for unit in [CoverageUnit::Locations, CoverageUnit::Disasters] {
        let bytes = coverage_bytes(&locationized, unit, cfg, LATITUDE_COLUMN, LONGITUDE_COLUMN)?;
        write_file(&out_dir.join(outputs::coverage("native", &unit.to_string(), ext)), &bytes)?;
    }

    let geocoded = geocode_table(cfg, &locationized)?;
    geocoded.write_csv_path(&out_dir.join(outputs::GEOCODED))?;
    for unit in [CoverageUnit::Locations, CoverageUnit::Disasters] {
        let bytes = coverage_bytes(&geocoded, unit, cfg, &cfg.lat_column, &cfg.lng_column)?;
        write_file(&out_dir.join(outputs::coverage("geocoded", &unit.to_string(), ext)), &bytes)?;
    }

    write_config(cfg, &out_dir.join(outputs::CONFIG))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geocoder_columns_recognized() {
        for c in ["lat", "lng", "matches", "lat1", "lng12"] {
            assert!(is_geocoder_column(c), "{c}");
        }
        for c in ["latitude", "lat_x", "Latitude", "lng"] {
            assert_eq!(is_geocoder_column(c), c == "lng", "{c}");
        }
    }

    #[test]
    fn unknown_subcommand_is_usage_error() {
        assert_ne!(main_with_args(["emdat-wrangler", "frobnicate"]), 0);
    }

    #[test]
    fn batch_flags_materialize_defaults() {
        let cli = Cli::try_parse_from(["x", "geocode", "--batch-size", "10", "--username", "u", "a", "b"]).unwrap();
        let cfg = PipelineConfig::from_command(&cli.command).unwrap();
        assert_eq!(
            cfg.batch,
            Some(BatchPlan {
                batch_size: 10,
                wait_time: Duration::from_secs(4800)
            })
        );
        assert_eq!(cfg.geonames.username.as_deref(), Some("u"));
    }
}
