//! Numeric and table output formatting.
//!
//! All numeric CLI output goes through [`sig10`], which renders 10
//! significant digits (`%.10g`-style), so repeated runs are byte-identical.

use std::io::{self, Write};

/// Formats with 10 significant digits, trimming trailing zeros; plain
/// decimal notation for exponents in [-4, 10), scientific otherwise.
pub fn sig10(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.9e}", x);
    let (mantissa, exponent) = sci.split_once('e').expect("{:e} format");
    let exponent: i32 = exponent.parse().expect("exponent digits");
    if (-4..10).contains(&exponent) {
        let decimals = (9 - exponent).max(0) as usize;
        let plain = format!("{x:.decimals$}");
        if plain.contains('.') {
            plain.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            plain
        }
    } else {
        let mantissa = mantissa.trim_end_matches('0').trim_end_matches('.');
        format!("{mantissa}e{exponent}")
    }
}

/// Plot-ready table: an x column plus one or more value columns.
#[derive(Debug, Clone)]
pub struct CurveTable {
    header: Vec<String>,
    rows: Vec<Vec<f64>>,
}

impl CurveTable {
    /// First header entry names the x column.
    pub fn new(header: Vec<String>) -> CurveTable {
        assert!(header.len() >= 2, "curve table needs an x column and at least one value column");
        CurveTable {
            header,
            rows: Vec::new(),
        }
    }

    /// Appends a row; x values must be strictly increasing.
    pub fn push_row(&mut self, row: Vec<f64>) {
        assert_eq!(row.len(), self.header.len(), "row width mismatch");
        if let Some(last) = self.rows.last() {
            assert!(row[0] > last[0], "x grid must be strictly increasing");
        }
        self.rows.push(row);
    }

    /// Writes comma-separated values with a header row and LF line endings.
    pub fn write(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(out, "{}", self.header.join(","))?;
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|&v| sig10(v)).collect();
            writeln!(out, "{}", cells.join(","))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sig10_rendering() {
        assert_eq!(sig10(0.0), "0");
        assert_eq!(sig10(-0.0), "0");
        assert_eq!(sig10(1.2), "1.2");
        assert_eq!(sig10(-1.2), "-1.2");
        assert_eq!(sig10(0.5291336839893998), "0.529133684");
        assert_eq!(sig10(0.5291336843893998), "0.5291336844");
        assert_eq!(sig10(1e9), "1000000000");
        assert_eq!(sig10(1.23456789012345e14), "1.23456789e14");
        assert_eq!(sig10(2.5e-7), "2.5e-7");
        assert_eq!(sig10(0.0001), "0.0001");
        assert_eq!(sig10(123.4567890123), "123.456789");
    }

    #[test]
    fn table_writes_csv() {
        let mut t = CurveTable::new(vec!["x".into(), "pdf".into()]);
        t.push_row(vec![0.5, 0.25]);
        t.push_row(vec![1.0, 0.125]);
        let mut buf = Vec::new();
        t.write(&mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "x,pdf\n0.5,0.25\n1,0.125\n");
    }

    #[test]
    #[should_panic(expected = "strictly increasing")]
    fn table_rejects_non_increasing_x() {
        let mut t = CurveTable::new(vec!["x".into(), "y".into()]);
        t.push_row(vec![1.0, 0.0]);
        t.push_row(vec![1.0, 0.0]);
    }
}
