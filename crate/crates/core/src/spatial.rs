//! Point membership in latitude-longitude boxes and polygon regions.
//!
//! Geometry is planar on raw degrees; longitude is the x axis. Boxes never
//! wrap the antimeridian.

use std::fs;
use std::path::Path;

use serde_json::Value;

use crate::error::{Error, Result, Warnings};
use crate::ingest::{parse_native_coordinate, Axis};
use crate::point::GeoPoint;
use crate::table::{bool_literal, Table};

pub const IN_BOX_COLUMN: &str = "in_box";
pub const IN_SHAPE_COLUMN: &str = "in_shape";

/// Points closer than this (in degrees) to a polygon edge count as inside.
pub const EDGE_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundingBox {
    top_left: GeoPoint,
    bottom_right: GeoPoint,
}

impl BoundingBox {
    pub fn new(top_left: GeoPoint, bottom_right: GeoPoint) -> Result<Self> {
        if !top_left.is_valid() || !bottom_right.is_valid() {
            return Err(Error::Config("box corner out of range".into()));
        }
        if top_left.lat < bottom_right.lat {
            return Err(Error::Config(format!(
                "box top latitude {} is below bottom latitude {}",
                top_left.lat, bottom_right.lat
            )));
        }
        if top_left.lng > bottom_right.lng {
            return Err(Error::Config(format!(
                "box left longitude {} is east of right longitude {} (antimeridian boxes are not supported)",
                top_left.lng, bottom_right.lng
            )));
        }
        Ok(BoundingBox {
            top_left,
            bottom_right,
        })
    }

    pub fn top_left(&self) -> GeoPoint {
        self.top_left
    }

    pub fn bottom_right(&self) -> GeoPoint {
        self.bottom_right
    }

    /// Boundaries are inclusive.
    pub fn contains(&self, p: GeoPoint) -> bool {
        (self.bottom_right.lat..=self.top_left.lat).contains(&p.lat)
            && (self.top_left.lng..=self.bottom_right.lng).contains(&p.lng)
    }

    /// The same region as a four-corner polygon.
    pub fn to_polygon(&self) -> Polygon {
        let (tl, br) = (self.top_left, self.bottom_right);
        Polygon::new(
            vec![
                tl,
                GeoPoint::new(tl.lat, br.lng),
                br,
                GeoPoint::new(br.lat, tl.lng),
            ],
            Vec::new(),
        )
        .expect("non-degenerate box")
    }
}

/// Closed ring of vertices; a repeated closing vertex is dropped.
pub type Ring = Vec<GeoPoint>;

#[derive(Debug, Clone, PartialEq)]
pub struct Polygon {
    outer: Ring,
    holes: Vec<Ring>,
}

impl Polygon {
    pub fn new(outer: Ring, holes: Vec<Ring>) -> Result<Self> {
        let outer = close_ring(outer)?;
        let holes = holes.into_iter().map(close_ring).collect::<Result<_>>()?;
        Ok(Polygon { outer, holes })
    }

    pub fn outer(&self) -> &[GeoPoint] {
        &self.outer
    }

    pub fn holes(&self) -> &[Ring] {
        &self.holes
    }

    fn rings(&self) -> impl Iterator<Item = &Ring> {
        std::iter::once(&self.outer).chain(self.holes.iter())
    }

    /// Even-odd test over the outer ring and holes; points on an edge are inside.
    pub fn contains(&self, p: GeoPoint) -> bool {
        if self.rings().any(|r| near_ring(r, p)) {
            return true;
        }
        self.rings().filter(|r| ray_crosses_odd(r, p)).count() % 2 == 1
    }
}

fn close_ring(mut ring: Ring) -> Result<Ring> {
    if ring.len() > 1 && ring.first() == ring.last() {
        ring.pop();
    }
    if let Some(bad) = ring.iter().find(|p| !p.lat.is_finite() || !p.lng.is_finite()) {
        return Err(Error::Validation(format!("ring vertex {bad:?} is not finite")));
    }
    let mut distinct: Vec<GeoPoint> = Vec::new();
    for p in &ring {
        if !distinct.contains(p) {
            distinct.push(*p);
            if distinct.len() >= 3 {
                return Ok(ring);
            }
        }
    }
    Err(Error::Validation(format!(
        "degenerate ring with {} distinct vertices (need at least 3)",
        distinct.len()
    )))
}

fn edges(ring: &[GeoPoint]) -> impl Iterator<Item = (GeoPoint, GeoPoint)> + '_ {
    ring.iter()
        .zip(ring.iter().cycle().skip(1))
        .map(|(a, b)| (*a, *b))
}

fn ray_crosses_odd(ring: &[GeoPoint], p: GeoPoint) -> bool {
    let mut inside = false;
    for (a, b) in edges(ring) {
        if (a.lat > p.lat) != (b.lat > p.lat) {
            let x = (b.lng - a.lng) * (p.lat - a.lat) / (b.lat - a.lat) + a.lng;
            if p.lng < x {
                inside = !inside;
            }
        }
    }
    inside
}

/// Planar distance in degrees from `p` to segment `a`-`b`.
pub fn segment_distance(p: GeoPoint, a: GeoPoint, b: GeoPoint) -> f64 {
    let (dx, dy) = (b.lng - a.lng, b.lat - a.lat);
    let len2 = dx * dx + dy * dy;
    let t = if len2 == 0.0 {
        0.0
    } else {
        (((p.lng - a.lng) * dx + (p.lat - a.lat) * dy) / len2).clamp(0.0, 1.0)
    };
    let (cx, cy) = (a.lng + t * dx, a.lat + t * dy);
    ((p.lng - cx).powi(2) + (p.lat - cy).powi(2)).sqrt()
}

fn near_ring(ring: &[GeoPoint], p: GeoPoint) -> bool {
    edges(ring).any(|(a, b)| segment_distance(p, a, b) <= EDGE_TOLERANCE)
}

/// A region made of one or more polygons. A point is in the set when it is
/// in any member polygon.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct PolygonSet {
    pub polygons: Vec<Polygon>,
}

impl PolygonSet {
    pub fn new(polygons: Vec<Polygon>) -> Self {
        PolygonSet { polygons }
    }

    pub fn len(&self) -> usize {
        self.polygons.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polygons.is_empty()
    }
}

pub fn point_in_polygon(point: GeoPoint, polys: &PolygonSet) -> bool {
    polys.polygons.iter().any(|poly| poly.contains(point))
}

/// Reads a GeoJSON Polygon, MultiPolygon, GeometryCollection, Feature or
/// FeatureCollection. Non-areal geometries are skipped with a warning.
pub fn load_region(path: &Path) -> Result<PolygonSet> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_region(&text).map_err(|e| match e {
        Error::Format(m) => Error::Format(format!("{}: {m}", path.display())),
        Error::Validation(m) => Error::Validation(format!("{}: {m}", path.display())),
        other => other,
    })
}

pub fn parse_region(text: &str) -> Result<PolygonSet> {
    let doc: Value = serde_json::from_str(text).map_err(|e| Error::Format(format!("invalid JSON: {e}")))?;
    let mut polygons = Vec::new();
    let mut warnings = Warnings::new();
    collect_geojson(&doc, "$", &mut polygons, &mut warnings)?;
    Ok(PolygonSet::new(polygons))
}

fn collect_geojson(v: &Value, at: &str, out: &mut Vec<Polygon>, warnings: &mut Warnings) -> Result<()> {
    let kind = v
        .get("type")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::Format(format!("{at}: missing `type`")))?;
    let field = |name: &str| {
        v.get(name)
            .ok_or_else(|| Error::Format(format!("{at}: {kind} without `{name}`")))
    };
    match kind {
        "FeatureCollection" => {
            let features = field("features")?
                .as_array()
                .ok_or_else(|| Error::Format(format!("{at}.features: expected an array")))?;
            for (i, f) in features.iter().enumerate() {
                collect_geojson(f, &format!("{at}.features[{i}]"), out, warnings)?;
            }
        }
        "Feature" => match field("geometry")? {
            Value::Null => warnings.push(format!("{at}: feature without geometry skipped")),
            g => collect_geojson(g, &format!("{at}.geometry"), out, warnings)?,
        },
        "GeometryCollection" => {
            let geoms = field("geometries")?
                .as_array()
                .ok_or_else(|| Error::Format(format!("{at}.geometries: expected an array")))?;
            for (i, g) in geoms.iter().enumerate() {
                collect_geojson(g, &format!("{at}.geometries[{i}]"), out, warnings)?;
            }
        }
        "Polygon" => out.push(polygon_from(field("coordinates")?, &format!("{at}.coordinates"))?),
        "MultiPolygon" => {
            let polys = field("coordinates")?
                .as_array()
                .ok_or_else(|| Error::Format(format!("{at}.coordinates: expected an array")))?;
            for (i, p) in polys.iter().enumerate() {
                out.push(polygon_from(p, &format!("{at}.coordinates[{i}]"))?);
            }
        }
        "Point" | "MultiPoint" | "LineString" | "MultiLineString" => {
            warnings.push(format!("{at}: {kind} has no area, skipped"));
        }
        other => return Err(Error::Format(format!("{at}: unknown GeoJSON type `{other}`"))),
    }
    Ok(())
}

fn polygon_from(v: &Value, at: &str) -> Result<Polygon> {
    let rings = v
        .as_array()
        .filter(|r| !r.is_empty())
        .ok_or_else(|| Error::Format(format!("{at}: expected a non-empty array of rings")))?;
    let mut parsed = Vec::with_capacity(rings.len());
    for (i, ring) in rings.iter().enumerate() {
        let ring_at = format!("{at}[{i}]");
        let positions = ring
            .as_array()
            .ok_or_else(|| Error::Format(format!("{ring_at}: expected an array of positions")))?;
        let mut points = Vec::with_capacity(positions.len());
        for (j, pos) in positions.iter().enumerate() {
            let pair = pos.as_array().filter(|p| p.len() >= 2);
            let (lng, lat) = match pair {
                Some(p) => (p[0].as_f64(), p[1].as_f64()),
                None => (None, None),
            };
            let (Some(lng), Some(lat)) = (lng, lat) else {
                return Err(Error::Format(format!("{ring_at}[{j}]: expected [lng, lat]")));
            };
            points.push(GeoPoint::new(lat, lng));
        }
        parsed.push(points);
    }
    let outer = parsed.remove(0);
    Polygon::new(outer, parsed).map_err(|e| match e {
        Error::Validation(m) => Error::Validation(format!("{at}: {m}")),
        other => other,
    })
}

fn row_point(table: &Table, row: usize, lat: usize, lng: usize) -> Option<GeoPoint> {
    let mut w = Warnings::new();
    let la = parse_native_coordinate(Some(table.cell(row, lat)), Axis::Latitude, &mut w)?;
    let ln = parse_native_coordinate(Some(table.cell(row, lng)), Axis::Longitude, &mut w)?;
    Some(GeoPoint::new(la, ln)).filter(GeoPoint::is_valid)
}

/// Appends `in_box`. Rows without usable coordinates get `FALSE`.
pub fn located_in_box(
    table: &Table,
    bbox: &BoundingBox,
    lat_column: &str,
    lng_column: &str,
) -> Result<Table> {
    let lat = table.require_column(lat_column)?;
    let lng = table.require_column(lng_column)?;
    let flags: Vec<String> = (0..table.len())
        .map(|row| {
            let inside = row_point(table, row, lat, lng).is_some_and(|p| bbox.contains(p));
            bool_literal(inside).to_string()
        })
        .collect();
    let mut out = table.clone();
    out.append_column(IN_BOX_COLUMN, flags)?;
    Ok(out)
}

/// Appends `in_shape`. Rows without usable coordinates get `FALSE`.
pub fn located_in_shapefile(
    table: &Table,
    polys: &PolygonSet,
    lat_column: &str,
    lng_column: &str,
) -> Result<Table> {
    if polys.is_empty() {
        return Err(Error::Config("region contains no polygons".into()));
    }
    let lat = table.require_column(lat_column)?;
    let lng = table.require_column(lng_column)?;
    let flags: Vec<String> = (0..table.len())
        .map(|row| {
            let inside = row_point(table, row, lat, lng).is_some_and(|p| point_in_polygon(p, polys));
            bool_literal(inside).to_string()
        })
        .collect();
    let mut out = table.clone();
    out.append_column(IN_SHAPE_COLUMN, flags)?;
    Ok(out)
}

/// Same as [`located_in_shapefile`], loading the region from a GeoJSON file.
pub fn located_in_region_file(
    table: &Table,
    region_file: &Path,
    lat_column: &str,
    lng_column: &str,
) -> Result<Table> {
    located_in_shapefile(table, &load_region(region_file)?, lat_column, lng_column)
}

/// Rows with usable coordinates as a GeoJSON FeatureCollection of points;
/// every other column becomes a string property.
pub fn points_geojson(table: &Table, lat_column: &str, lng_column: &str) -> Result<String> {
    let lat = table.require_column(lat_column)?;
    let lng = table.require_column(lng_column)?;
    let features: Vec<Value> = (0..table.len())
        .filter_map(|row| {
            let p = row_point(table, row, lat, lng)?;
            let props: serde_json::Map<String, Value> = table
                .columns
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != lat && *i != lng)
                .map(|(i, c)| (c.clone(), Value::String(table.cell(row, i).to_string())))
                .collect();
            Some(serde_json::json!({
                "type": "Feature",
                "geometry": {"type": "Point", "coordinates": [p.lng, p.lat]},
                "properties": props,
            }))
        })
        .collect();
    let doc = serde_json::json!({"type": "FeatureCollection", "features": features});
    Ok(serde_json::to_string_pretty(&doc).expect("json value serializes"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_square() -> PolygonSet {
        parse_region(r#"{"type":"Polygon","coordinates":[[[0,0],[1,0],[1,1],[0,1],[0,0]]]}"#).unwrap()
    }

    #[test]
    fn unit_square_loads_and_tests() {
        let set = unit_square();
        assert_eq!(set.len(), 1);
        assert_eq!(set.polygons[0].outer().len(), 4);
        assert!(set.polygons[0].holes().is_empty());
        assert!(point_in_polygon(GeoPoint::new(0.5, 0.5), &set));
        assert!(!point_in_polygon(GeoPoint::new(2.0, 2.0), &set));
    }

    #[test]
    fn edges_and_vertices_are_inside() {
        let set = unit_square();
        assert!(point_in_polygon(GeoPoint::new(0.0, 0.0), &set));
        assert!(point_in_polygon(GeoPoint::new(1.0, 0.5), &set));
        assert!(point_in_polygon(GeoPoint::new(0.5, 1.0 + 5e-10), &set));
        assert!(!point_in_polygon(GeoPoint::new(0.5, 1.0 + 1e-6), &set));
    }

    #[test]
    fn hole_is_outside() {
        let set = parse_region(
            r#"{"type":"Polygon","coordinates":[
                [[0,0],[10,0],[10,10],[0,10]],
                [[4,4],[6,4],[6,6],[4,6]]]}"#,
        )
        .unwrap();
        assert!(!point_in_polygon(GeoPoint::new(5.0, 5.0), &set));
        assert!(point_in_polygon(GeoPoint::new(2.0, 2.0), &set));
    }

    #[test]
    fn degenerate_ring_rejected() {
        let err = parse_region(r#"{"type":"Polygon","coordinates":[[[0,0],[1,1],[0,0],[1,1]]]}"#).unwrap_err();
        assert!(matches!(err, Error::Validation(_)));
    }

    #[test]
    fn malformed_position_reports_location() {
        let err = parse_region(
            r#"{"type":"FeatureCollection","features":[{"type":"Feature","geometry":{"type":"Polygon","coordinates":[[[0,0],[1,"x"],[1,1]]]}}]}"#,
        )
        .unwrap_err();
        assert!(
            matches!(err, Error::Format(ref m) if m.contains("features[0].geometry.coordinates[0][1]")),
            "{err}"
        );
    }

    #[test]
    fn feature_collection_of_two() {
        let set = parse_region(
            r#"{"type":"FeatureCollection","features":[
              {"type":"Feature","properties":{},"geometry":{"type":"Polygon","coordinates":[[[0,0],[1,0],[1,1],[0,0]]]}},
              {"type":"Feature","properties":{},"geometry":{"type":"MultiPolygon","coordinates":[[[[5,5],[6,5],[6,6],[5,5]]]]}},
              {"type":"Feature","properties":{},"geometry":{"type":"Point","coordinates":[3,3]}}
            ]}"#,
        )
        .unwrap();
        assert_eq!(set.len(), 2);
    }

    #[test]
    fn empty_collection_fails_on_use() {
        let set = parse_region(r#"{"type":"FeatureCollection","features":[]}"#).unwrap();
        let table = Table::new(vec!["lat".into(), "lng".into()]);
        assert!(matches!(
            located_in_shapefile(&table, &set, "lat", "lng"),
            Err(Error::Config(_))
        ));
    }

    #[test]
    fn box_validation_and_corners() {
        let bbox = BoundingBox::new(GeoPoint::new(40.0, -119.0), GeoPoint::new(35.0, -75.0)).unwrap();
        assert!(bbox.contains(GeoPoint::new(35.0, -75.0)));
        assert!(bbox.contains(GeoPoint::new(40.0, -119.0)));
        assert!(!bbox.contains(GeoPoint::new(34.99, -80.0)));
        assert!(BoundingBox::new(GeoPoint::new(35.0, -119.0), GeoPoint::new(40.0, -75.0)).is_err());
        assert!(BoundingBox::new(GeoPoint::new(40.0, 170.0), GeoPoint::new(35.0, -170.0)).is_err());
    }

    #[test]
    fn missing_coordinates_are_false() {
        let mut t = Table::new(vec!["lat".into(), "lng".into()]);
        t.push_row(vec!["".into(), "".into()]);
        t.push_row(vec!["36".into(), "-80".into()]);
        let bbox = BoundingBox::new(GeoPoint::new(40.0, -119.0), GeoPoint::new(35.0, -75.0)).unwrap();
        let out = located_in_box(&t, &bbox, "lat", "lng").unwrap();
        assert_eq!(out.columns, ["lat", "lng", "in_box"]);
        assert_eq!(out.rows[0][2], "FALSE");
        assert_eq!(out.rows[1][2], "TRUE");
    }

    #[test]
    fn points_export() {
        let mut t = Table::new(vec!["name".into(), "lat".into(), "lng".into()]);
        t.push_row(vec!["a".into(), "1".into(), "2".into()]);
        t.push_row(vec!["b".into(), "".into(), "".into()]);
        let doc: Value = serde_json::from_str(&points_geojson(&t, "lat", "lng").unwrap()).unwrap();
        assert_eq!(doc["features"].as_array().unwrap().len(), 1);
        assert_eq!(doc["features"][0]["geometry"]["coordinates"], serde_json::json!([2.0, 1.0]));
    }
}
