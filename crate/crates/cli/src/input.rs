//! CSV microdata ingestion.
//!
//! Accepted format: UTF-8, a required header row, columns `value[,weight]`,
//! `.` as the decimal separator, no thousands separators. The weight column
//! is `weight` when present, another column may be selected with
//! `--weights`; otherwise every row gets weight 1.

use std::path::Path;

use anyhow::{bail, Context, Result};
use kgen::WeightedSample;

#[derive(Debug)]
pub struct LoadedData {
    pub sample: WeightedSample,
    /// Human-readable note on which weights were used.
    pub weight_note: String,
    pub dropped_rows: usize,
    pub dropped_weight: f64,
}

pub fn load_csv(
    path: &Path,
    weight_column: Option<&str>,
    require_positive: bool,
    drop_nonpositive: bool,
) -> Result<LoadedData> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_path(path)
        .with_context(|| format!("cannot open {}", path.display()))?;

    let headers = reader
        .headers()
        .with_context(|| format!("{}: cannot read header row", path.display()))?
        .clone();
    let value_idx = headers
        .iter()
        .position(|h| h == "value")
        .with_context(|| format!("{}: no `value` column in header", path.display()))?;

    let (weight_idx, weight_note) = match weight_column {
        Some(name) => match headers.iter().position(|h| h == name) {
            Some(i) => (Some(i), format!("weights: column `{name}`")),
            None => bail!("{}: no `{name}` column in header", path.display()),
        },
        None => match headers.iter().position(|h| h == "weight") {
            Some(i) => (Some(i), "weights: column `weight`".to_string()),
            None => (None, "weights: equal (no weight column)".to_string()),
        },
    };

    let mut values = Vec::new();
    let mut weights = Vec::new();
    let mut dropped_rows = 0usize;
    let mut dropped_weight = 0.0f64;

    for record in reader.records() {
        let record = record.with_context(|| format!("{}: malformed CSV", path.display()))?;
        let line = record
            .position()
            .map(|p| p.line())
            .unwrap_or_default();
        let parse = |idx: usize, what: &str| -> Result<f64> {
            let raw = record.get(idx).with_context(|| {
                format!("{}: line {line}: missing {what} field", path.display())
            })?;
            raw.trim().parse::<f64>().with_context(|| {
                format!("{}: line {line}: cannot parse {what} `{raw}`", path.display())
            })
        };

        let value = parse(value_idx, "value")?;
        let weight = match weight_idx {
            Some(i) => {
                let w = parse(i, "weight")?;
                if !(w.is_finite() && w >= 0.0) {
                    bail!(
                        "{}: line {line}: weight must be finite and nonnegative, got {w}",
                        path.display()
                    );
                }
                w
            }
            None => 1.0,
        };

        if require_positive && value <= 0.0 {
            if drop_nonpositive {
                dropped_rows += 1;
                dropped_weight += weight;
                continue;
            }
            bail!(
                "{}: line {line}: nonpositive value {value} not allowed for income models \
                 (pass --drop-nonpositive to skip such rows)",
                path.display()
            );
        }
        values.push(value);
        weights.push(weight);
    }

    if values.is_empty() {
        bail!("{}: no usable data rows", path.display());
    }
    let sample = WeightedSample::new(values, weights)?;
    Ok(LoadedData {
        sample,
        weight_note,
        dropped_rows,
        dropped_weight,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn write_csv(content: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(content.as_bytes()).unwrap();
        f
    }

    #[test]
    fn loads_value_and_weight_columns() {
        let f = write_csv("value,weight\n1.5,2\n2.5,1\n");
        let d = load_csv(f.path(), None, true, false).unwrap();
        assert_eq!(d.sample.values(), &[1.5, 2.5]);
        assert_eq!(d.sample.weights(), &[2.0, 1.0]);
        assert!(d.weight_note.contains("column `weight`"));
    }

    #[test]
    fn equal_weights_when_no_column() {
        let f = write_csv("value\n1\n2\n3\n");
        let d = load_csv(f.path(), None, true, false).unwrap();
        assert_eq!(d.sample.weights(), &[1.0, 1.0, 1.0]);
        assert!(d.weight_note.contains("equal"));
    }

    #[test]
    fn named_weight_column() {
        let f = write_csv("value,w,weight\n1,5,9\n");
        let d = load_csv(f.path(), Some("w"), true, false).unwrap();
        assert_eq!(d.sample.weights(), &[5.0]);
        assert!(load_csv(f.path(), Some("nope"), true, false).is_err());
    }

    #[test]
    fn parse_errors_name_the_line() {
        let f = write_csv("value\n1.0\nn/a\n");
        let err = load_csv(f.path(), None, true, false).unwrap_err();
        assert!(format!("{err:#}").contains("line 3"), "{err:#}");
    }

    #[test]
    fn nonpositive_handling() {
        let f = write_csv("value,weight\n1.0,1\n-2.0,3\n4.0,1\n");
        let err = load_csv(f.path(), None, true, false).unwrap_err();
        assert!(format!("{err:#}").contains("line 3"), "{err:#}");

        let d = load_csv(f.path(), None, true, true).unwrap();
        assert_eq!(d.sample.values(), &[1.0, 4.0]);
        assert_eq!(d.dropped_rows, 1);
        assert_eq!(d.dropped_weight, 3.0);

        // Sign-free loading keeps everything (net-wealth mode).
        let d = load_csv(f.path(), None, false, false).unwrap();
        assert_eq!(d.sample.len(), 3);
    }

    #[test]
    fn missing_value_column_is_an_error() {
        let f = write_csv("income\n1\n");
        assert!(load_csv(f.path(), None, true, false).is_err());
    }
}
