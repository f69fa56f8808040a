//! Text formats: `#`-headed comma-separated tables, grid specs and
//! coefficient lists.

use std::io::{self, Write};

use crate::conjugate::SampledFunction;
use crate::error::{ParseError, SampleError};

pub const MAX_GRID_POINTS: usize = 50_000_000;

/// `min,max,points` description of an evenly spaced grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub min: f64,
    pub max: f64,
    pub points: usize,
}

impl GridSpec {
    pub fn new(min: f64, max: f64, points: usize) -> Result<Self, ParseError> {
        if !min.is_finite() || !max.is_finite() {
            return Err(ParseError::Invalid("grid bounds must be finite".into()));
        }
        if min >= max {
            return Err(ParseError::Invalid(format!(
                "grid needs min < max, got {min} >= {max}"
            )));
        }
        if points < 2 {
            return Err(ParseError::Invalid(format!(
                "grid needs at least 2 points, got {points}"
            )));
        }
        if points > MAX_GRID_POINTS {
            return Err(ParseError::Invalid(format!(
                "grid has {points} points, more than the limit of {MAX_GRID_POINTS}"
            )));
        }
        let spec = GridSpec { min, max, points };
        if spec.values().windows(2).any(|w| w[1] <= w[0]) {
            return Err(ParseError::Invalid(
                "grid spacing is below floating-point resolution".into(),
            ));
        }
        Ok(spec)
    }

    pub fn values(&self) -> Vec<f64> {
        let step = (self.max - self.min) / (self.points - 1) as f64;
        let mut xs: Vec<f64> = (0..self.points)
            .map(|i| self.min + step * i as f64)
            .collect();
        xs[self.points - 1] = self.max;
        xs
    }
}

fn parse_number(s: &str) -> Result<f64, String> {
    let t = s.trim();
    t.parse::<f64>().map_err(|_| format!("not a number: {t:?}"))
}

pub fn parse_grid_spec(s: &str) -> Result<GridSpec, ParseError> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(ParseError::Invalid(format!(
            "expected min,max,points, got {s:?}"
        )));
    }
    let min = parse_number(parts[0]).map_err(ParseError::Invalid)?;
    let max = parse_number(parts[1]).map_err(ParseError::Invalid)?;
    let points = parts[2]
        .trim()
        .parse::<usize>()
        .map_err(|_| ParseError::Invalid(format!("not a point count: {:?}", parts[2].trim())))?;
    GridSpec::new(min, max, points)
}

/// Comma-separated polynomial coefficients, constant term first.
pub fn parse_coefficients(s: &str) -> Result<Vec<f64>, ParseError> {
    let coeffs = s
        .split(',')
        .map(|c| parse_number(c).map_err(ParseError::Invalid))
        .collect::<Result<Vec<f64>, _>>()?;
    if let Some(c) = coeffs.iter().find(|c| !c.is_finite()) {
        return Err(ParseError::Invalid(format!(
            "coefficient {c} is not finite"
        )));
    }
    Ok(coeffs)
}

/// Two-column `x,f` table. Blank lines and lines starting with `#` are
/// skipped; errors carry 1-based line numbers.
pub fn parse_sampled_csv(text: &str) -> Result<SampledFunction, ParseError> {
    let mut xs = Vec::new();
    let mut fs = Vec::new();
    let mut lines = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let row = raw.trim();
        if row.is_empty() || row.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = row.split(',').collect();
        if fields.len() != 2 {
            return Err(ParseError::Line {
                line,
                msg: format!("expected 2 columns, found {}", fields.len()),
            });
        }
        let x = parse_number(fields[0]).map_err(|msg| ParseError::Line { line, msg })?;
        let f = parse_number(fields[1]).map_err(|msg| ParseError::Line { line, msg })?;
        if !x.is_finite() || !f.is_finite() {
            return Err(ParseError::Line {
                line,
                msg: "non-finite value".into(),
            });
        }
        xs.push(x);
        fs.push(f);
        lines.push(line);
    }
    SampledFunction::new(xs, fs).map_err(|e| match e {
        SampleError::NotIncreasing(i) | SampleError::NonFinite(i) => ParseError::Line {
            line: lines[i],
            msg: e.to_string(),
        },
        other => ParseError::Samples(other),
    })
}

/// Shortest representation that parses back to the same `f64`.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:?}")
}

/// Writes a `#`-headed table with LF line endings.
pub struct CsvWriter<W: Write> {
    out: W,
    columns: usize,
}

impl<W: Write> CsvWriter<W> {
    pub fn new(mut out: W, header: &[&str]) -> io::Result<Self> {
        writeln!(out, "# {}", header.join(","))?;
        Ok(CsvWriter {
            out,
            columns: header.len(),
        })
    }

    /// Writes a comment line before the header.
    pub fn with_preamble(mut out: W, preamble: &[&str], header: &[&str]) -> io::Result<Self> {
        for line in preamble {
            writeln!(out, "# {line}")?;
        }
        CsvWriter::new(out, header)
    }

    pub fn row(&mut self, fields: &[String]) -> io::Result<()> {
        debug_assert_eq!(fields.len(), self.columns);
        writeln!(self.out, "{}", fields.join(","))
    }

    pub fn numbers(&mut self, xs: &[f64]) -> io::Result<()> {
        let fields: Vec<String> = xs.iter().map(|&x| fmt_f64(x)).collect();
        self.row(&fields)
    }

    pub fn into_inner(self) -> W {
        self.out
    }
}
