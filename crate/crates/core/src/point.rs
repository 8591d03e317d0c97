use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Latitude/longitude in signed decimal degrees.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GeoPoint {
    pub lat: f64,
    pub lng: f64,
}

impl GeoPoint {
    pub fn new(lat: f64, lng: f64) -> Self {
        GeoPoint { lat, lng }
    }

    /// Builds a point, rejecting values outside [-90, 90] x [-180, 180].
    pub fn checked(lat: f64, lng: f64) -> Result<Self> {
        let p = GeoPoint { lat, lng };
        if p.is_valid() {
            Ok(p)
        } else {
            Err(Error::Validation(format!("coordinate ({lat}, {lng}) out of range")))
        }
    }

    pub fn is_valid(&self) -> bool {
        self.lat.is_finite()
            && self.lng.is_finite()
            && (-90.0..=90.0).contains(&self.lat)
            && (-180.0..=180.0).contains(&self.lng)
    }
}

impl std::str::FromStr for GeoPoint {
    type Err = Error;

    /// Parses `LAT,LNG`.
    fn from_str(s: &str) -> Result<Self> {
        let (lat, lng) = s
            .split_once(',')
            .ok_or_else(|| Error::Config(format!("expected LAT,LNG, got `{s}`")))?;
        let num = |v: &str| {
            v.trim()
                .parse::<f64>()
                .map_err(|_| Error::Config(format!("bad coordinate `{v}` in `{s}`")))
        };
        GeoPoint::checked(num(lat)?, num(lng)?).map_err(|e| Error::Config(e.to_string()))
    }
}
