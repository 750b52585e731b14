//! CSV form of a probability series.
//!
//! Columns: `t, mu_h1, mu_h2, mu_h0, mu_h1_theory, mu_h2_theory`. Reals are
//! written in scientific notation with 17 significant digits so that reading
//! them back reproduces the exact doubles.

use std::io::{Read, Write};

use pulsewalk_core::ProbabilitySeries;

use crate::CliError;

pub const HEADER: [&str; 6] = ["t", "mu_h1", "mu_h2", "mu_h0", "mu_h1_theory", "mu_h2_theory"];

/// One CSV line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesRow {
    pub t: usize,
    pub mu_h1: f64,
    pub mu_h2: f64,
    pub mu_h0: f64,
    pub mu_h1_theory: f64,
    pub mu_h2_theory: f64,
}

pub fn format_real(x: f64) -> String {
    format!("{x:.16e}")
}

/// Rows of `series`; the theory columns are NaN when no envelope is attached.
pub fn rows(series: &ProbabilitySeries) -> Vec<SeriesRow> {
    series
        .triples
        .iter()
        .enumerate()
        .map(|(t, p)| {
            let (m1, m2) = series.theory.get(t).copied().unwrap_or((f64::NAN, f64::NAN));
            SeriesRow {
                t,
                mu_h1: p.mu_h1,
                mu_h2: p.mu_h2,
                mu_h0: p.mu_h0,
                mu_h1_theory: m1,
                mu_h2_theory: m2,
            }
        })
        .collect()
}

pub fn write_rows<W: Write>(out: W, rows: &[SeriesRow]) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(HEADER)?;
    for r in rows {
        let record = [
            r.t.to_string(),
            format_real(r.mu_h1),
            format_real(r.mu_h2),
            format_real(r.mu_h0),
            format_real(r.mu_h1_theory),
            format_real(r.mu_h2_theory),
        ];
        w.write_record(&record)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_rows<R: Read>(input: R) -> Result<Vec<SeriesRow>, CliError> {
    let mut reader = csv::Reader::from_reader(input);
    let header = reader.headers()?.clone();
    if header.iter().ne(HEADER) {
        return Err(CliError::Usage(format!("unexpected CSV header {:?}", header)));
    }
    let mut out = Vec::new();
    for record in reader.records() {
        let record = record?;
        let field = |i: usize| -> Result<f64, CliError> {
            record[i].parse::<f64>().map_err(|_| CliError::BadValue {
                key: HEADER[i].to_string(),
                value: record[i].to_string(),
            })
        };
        out.push(SeriesRow {
            t: record[0].parse().map_err(|_| CliError::BadValue {
                key: "t".into(),
                value: record[0].to_string(),
            })?,
            mu_h1: field(1)?,
            mu_h2: field(2)?,
            mu_h0: field(3)?,
            mu_h1_theory: field(4)?,
            mu_h2_theory: field(5)?,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digits() {
        assert_eq!(format_real(0.25), "2.5000000000000000e-1");
        let x = 0.1 + 0.2;
        assert_eq!(format_real(x).parse::<f64>().unwrap(), x);
    }

    #[test]
    fn round_trip() {
        let rows = vec![
            SeriesRow {
                t: 0,
                mu_h1: 1.0,
                mu_h2: 0.0,
                mu_h0: 0.0,
                mu_h1_theory: 1.0,
                mu_h2_theory: 0.0,
            },
            SeriesRow {
                t: 1,
                mu_h1: 0.9999999999999998,
                mu_h2: 1e-300,
                mu_h0: 1.0 / 3.0,
                mu_h1_theory: 0.7,
                mu_h2_theory: f64::MIN_POSITIVE,
            },
        ];
        let mut buf = Vec::new();
        write_rows(&mut buf, &rows).unwrap();
        assert_eq!(read_rows(buf.as_slice()).unwrap(), rows);
    }

    #[test]
    fn rejects_foreign_header() {
        assert!(read_rows("a,b\n1,2\n".as_bytes()).is_err());
    }
}
