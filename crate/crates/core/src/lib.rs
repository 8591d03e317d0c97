//! Wrangling of EM-DAT disaster exports into geocoded, analysis-ready tables.
//!
//! The workflow mirrors the modules: [`ingest`] loads an export,
//! [`locationizer`] splits location strings into one row per place,
//! [`coverage`] reports how much of the table has coordinates,
//! [`geocoder`] resolves places through [`geonames`], and [`spatial`] tests
//! the resulting points against boxes and polygons. [`cli`] ties the steps
//! together as file-to-file subcommands.

pub mod cli;
mod country_codes;
pub mod coverage;
pub mod error;
pub mod geocoder;
pub mod geonames;
pub mod ingest;
pub mod locationizer;
pub mod point;
pub mod spatial;
pub mod table;

pub use error::{Error, Result, Warnings};
pub use point::GeoPoint;
