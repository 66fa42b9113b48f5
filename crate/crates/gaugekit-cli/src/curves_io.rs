//! Curve I/O: CSV rows `t, x_1..x_d[, dx_1..dx_d]` and a JSON array form.

use anyhow::{anyhow, Context};
use serde::{Deserialize, Serialize};

use gaugekit_core::curve::SampledCurve;
use gaugekit_core::linalg;

use crate::{CliError, CliResult2};

#[derive(Debug, Serialize, Deserialize)]
pub struct CurveFile {
    pub curve: CurveSchema,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CurveSchema {
    pub times: Vec<f64>,
    pub points: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tangents: Option<Vec<Vec<f64>>>,
    pub closed: bool,
}

impl CurveSchema {
    pub fn from_curve(c: &SampledCurve) -> Self {
        CurveSchema {
            times: c.times().to_vec(),
            points: c.points().to_vec(),
            tangents: c.analytic_tangents().map(|t| t.to_vec()),
            closed: c.closed(),
        }
    }

    pub fn to_curve(&self) -> anyhow::Result<SampledCurve> {
        Ok(SampledCurve::new(
            self.times.clone(),
            self.points.clone(),
            self.tangents.clone(),
            self.closed,
        )?)
    }
}

/// Load a curve from `.csv` (header `t,x1..[,dx1..]`) or `.json`. A CSV
/// curve counts as closed when its endpoints coincide within 1e-6.
pub fn load_curve(path: &str) -> CliResult2<SampledCurve> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading curve file {path}"))
        .map_err(CliError::Input)?;
    if path.ends_with(".json") {
        let file: CurveFile = serde_json::from_str(&text)
            .with_context(|| format!("parsing curve file {path}"))
            .map_err(CliError::Input)?;
        return file.curve.to_curve().map_err(CliError::Input);
    }
    parse_csv_curve(&text).map_err(CliError::Input)
}

fn parse_csv_curve(text: &str) -> anyhow::Result<SampledCurve> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| anyhow!("empty curve file"))?;
    let columns: Vec<&str> = header.split(',').map(str::trim).collect();
    if columns.first() != Some(&"t") {
        return Err(anyhow!("curve CSV must start with a 't' column"));
    }
    let dx_count = columns.iter().filter(|c| c.starts_with("dx")).count();
    let dim = columns.len() - 1 - dx_count;
    if dim == 0 || (dx_count > 0 && dx_count != dim) {
        return Err(anyhow!("curve CSV needs columns t, x1..xd and optionally dx1..dxd"));
    }

    let mut times = Vec::new();
    let mut points = Vec::new();
    let mut tangents = Vec::new();
    for (row_idx, line) in lines.enumerate() {
        let fields: Vec<f64> = line
            .split(',')
            .map(|f| f.trim().parse::<f64>())
            .collect::<Result<_, _>>()
            .with_context(|| format!("parsing curve row {}", row_idx + 2))?;
        if fields.len() != columns.len() {
            return Err(anyhow!("curve row {} has {} fields", row_idx + 2, fields.len()));
        }
        times.push(fields[0]);
        points.push(fields[1..1 + dim].to_vec());
        if dx_count > 0 {
            tangents.push(fields[1 + dim..].to_vec());
        }
    }
    let closed = points.len() >= 2
        && linalg::distance(&points[0], &points[points.len() - 1]) <= 1e-6;
    Ok(SampledCurve::new(
        times,
        points,
        if dx_count > 0 { Some(tangents) } else { None },
        closed,
    )?)
}

/// Write a curve as CSV with 17-significant-digit numbers.
pub fn write_csv_curve(curve: &SampledCurve, path: &str) -> anyhow::Result<()> {
    let dim = curve.dim();
    let mut out = String::from("t");
    for j in 1..=dim {
        out.push_str(&format!(",x{j}"));
    }
    if curve.analytic_tangents().is_some() {
        for j in 1..=dim {
            out.push_str(&format!(",dx{j}"));
        }
    }
    out.push('\n');
    for i in 0..curve.len() {
        out.push_str(&format!("{:.16e}", curve.times()[i]));
        for c in &curve.points()[i] {
            out.push_str(&format!(",{c:.16e}"));
        }
        if let Some(tangents) = curve.analytic_tangents() {
            for c in &tangents[i] {
                out.push_str(&format!(",{c:.16e}"));
            }
        }
        out.push('\n');
    }
    std::fs::write(path, out).with_context(|| format!("writing curve CSV {path}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_roundtrip() {
        let curve = gaugekit_core::sampling::circle_curve(2, 0, 1, 1.0, 64);
        let dir = std::env::temp_dir().join("gaugekit-csv-test.csv");
        let path = dir.to_str().unwrap();
        write_csv_curve(&curve, path).unwrap();
        let back = load_curve(path).unwrap();
        assert!(back.closed());
        assert_eq!(back.len(), curve.len());
        assert_eq!(back.points()[3], curve.points()[3]);
        assert_eq!(back.analytic_tangents().unwrap()[5], curve.analytic_tangents().unwrap()[5]);
        std::fs::remove_file(path).ok();
    }

    #[test]
    fn bad_headers_are_rejected() {
        assert!(parse_csv_curve("x,y\n1,2\n").is_err());
        assert!(parse_csv_curve("t,x1,dx1,dx2\n0,1,2,3\n").is_err());
    }
}
