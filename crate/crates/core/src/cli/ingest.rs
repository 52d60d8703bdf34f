//! CSV ingestion for point and feature datasets.

use std::path::Path;

use crate::element::{ElementId, GroundSet};
use crate::objectives::{class_members, FeatureVector, Point};
use crate::{Error, Result};

fn parse_error(path: &Path, line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        path: path.to_path_buf(),
        line,
        message: message.into(),
    }
}

/// Non-empty records with their 1-based line numbers.
fn records(path: &Path) -> Result<Vec<(usize, Vec<String>)>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_path(path)?;
    let mut out = Vec::new();
    for rec in reader.records() {
        let rec = rec?;
        let line = rec.position().map_or(0, |p| p.line() as usize);
        if rec.iter().all(str::is_empty) {
            continue;
        }
        out.push((line, rec.iter().map(str::to_owned).collect()));
    }
    Ok(out)
}

fn looks_like_header(fields: &[String]) -> bool {
    fields.iter().any(|f| f.parse::<f64>().is_err())
        && fields.iter().all(|f| f.chars().next().is_some_and(|c| c.is_alphabetic()))
}

/// One element per row of `lat,lon` pairs; an optional header row is skipped.
pub fn load_points_csv(path: impl AsRef<Path>) -> Result<GroundSet<Point>> {
    let path = path.as_ref();
    let mut rows = records(path)?;
    if rows.first().is_some_and(|(_, f)| looks_like_header(f)) {
        rows.remove(0);
    }
    if rows.is_empty() {
        return Err(parse_error(path, 0, "file contains no data rows"));
    }
    let mut points = Vec::with_capacity(rows.len());
    for (line, fields) in rows {
        if fields.len() != 2 {
            return Err(parse_error(path, line, format!("expected 2 fields, found {}", fields.len())));
        }
        let mut coords = [0.0; 2];
        for (slot, field) in coords.iter_mut().zip(&fields) {
            *slot = field
                .parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| parse_error(path, line, format!("`{field}` is not a finite number")))?;
        }
        points.push(Point::new(coords[0], coords[1]));
    }
    GroundSet::new(points)
}

/// Feature rows plus the derived class memberships `Ω_i`.
#[derive(Clone, Debug)]
pub struct FeatureData {
    pub ground: GroundSet<FeatureVector>,
    pub classes: Vec<Vec<ElementId>>,
}

/// One element per row of `class_count` non-negative integer counts.
pub fn load_features_csv(path: impl AsRef<Path>, class_count: usize) -> Result<FeatureData> {
    let path = path.as_ref();
    if class_count == 0 {
        return Err(Error::Config("class count must be at least 1".into()));
    }
    let mut rows = records(path)?;
    if rows.first().is_some_and(|(_, f)| looks_like_header(f)) {
        rows.remove(0);
    }
    if rows.is_empty() {
        return Err(parse_error(path, 0, "file contains no data rows"));
    }
    let mut vectors = Vec::with_capacity(rows.len());
    for (line, fields) in rows {
        if fields.len() != class_count {
            return Err(parse_error(
                path,
                line,
                format!("expected {class_count} fields, found {}", fields.len()),
            ));
        }
        let counts = fields
            .iter()
            .map(|f| match f.parse::<i64>() {
                Ok(v) if v < 0 => Err(parse_error(path, line, format!("negative count `{f}`"))),
                Ok(v) => u32::try_from(v).map_err(|_| parse_error(path, line, format!("count `{f}` too large"))),
                Err(_) => Err(parse_error(path, line, format!("`{f}` is not an integer"))),
            })
            .collect::<Result<Vec<u32>>>()?;
        vectors.push(FeatureVector(counts));
    }
    let classes = class_members(&vectors, class_count);
    Ok(FeatureData {
        ground: GroundSet::new(vectors)?,
        classes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn file(contents: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(contents.as_bytes()).unwrap();
        f
    }

    #[test]
    fn points_plain_and_with_header() {
        let f = file("40.75,-73.99\n40.76,-73.98\n");
        let g = load_points_csv(f.path()).unwrap();
        assert_eq!(g.len(), 2);
        assert_eq!(g.payload(ElementId(0)), Some(&Point::new(40.75, -73.99)));

        let f = file("lat,lon\n1,2\n3,4\n5,6\n");
        assert_eq!(load_points_csv(f.path()).unwrap().len(), 3);
    }

    #[test]
    fn points_errors_name_the_line() {
        let f = file("1.0,2.0\nabc,1.0\n");
        match load_points_csv(f.path()) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        let f = file("");
        assert!(matches!(load_points_csv(f.path()), Err(Error::Parse { .. })));
        let f = file("1.0,2.0,3.0\n");
        assert!(matches!(load_points_csv(f.path()), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn features_and_classes() {
        let f = file("1,0,2\n0,0,0\n0,3,0\n1,1,1\n0,0,4\n");
        let data = load_features_csv(f.path(), 3).unwrap();
        assert_eq!(data.ground.len(), 5);
        assert_eq!(data.classes.len(), 3);
        assert_eq!(data.classes[0], vec![ElementId(0), ElementId(3)]);
        assert!(data.classes.iter().all(|c| !c.contains(&ElementId(1))));
    }

    #[test]
    fn features_errors() {
        let f = file("1,0\n1,-1\n");
        assert!(matches!(load_features_csv(f.path(), 2), Err(Error::Parse { line: 2, .. })));
        let f = file("1,0,1\n");
        assert!(matches!(load_features_csv(f.path(), 2), Err(Error::Parse { line: 1, .. })));
    }
}
