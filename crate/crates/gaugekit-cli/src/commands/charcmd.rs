use clap::Subcommand;
use serde::Serialize;

use gaugekit_core::body::Body;
use gaugekit_core::characteristics::{
    capacity_estimate, integrate_characteristic, isoperimetric_report, FlowOptions,
};

use crate::curves_io::{load_curve, write_csv_curve};
use crate::schema::{load_body, load_form, parse_vector};
use crate::{emit, CliError, CliResult2, Ctx};

#[derive(Subcommand)]
pub enum CharCmd {
    /// Integrate the characteristic flow from a boundary point
    Flow {
        #[arg(long)]
        body: String,
        #[arg(long)]
        form: String,
        /// Start point on the boundary, e.g. "1,0,0,0"
        #[arg(long)]
        start: String,
        #[arg(long, default_value_t = 1e-3)]
        step: f64,
        #[arg(long, default_value_t = 100.0)]
        max_time: f64,
        /// Write the sampled curve (with tangents) as CSV
        #[arg(long)]
        csv: Option<String>,
        #[arg(long)]
        out: Option<String>,
    },
    /// Minimum symplectic area over closed characteristics from given starts
    Capacity {
        #[arg(long)]
        body: String,
        #[arg(long)]
        form: String,
        /// Start points separated by ';', e.g. "1,0,0,0;0,0,2,0"
        #[arg(long)]
        starts: Option<String>,
        /// File with one start point per line
        #[arg(long)]
        starts_file: Option<String>,
        #[arg(long, default_value_t = 1e-3)]
        step: f64,
        #[arg(long, default_value_t = 100.0)]
        max_time: f64,
        #[arg(long)]
        out: Option<String>,
    },
    /// Isoperimetric comparison 2A(c) vs L_ω(c) for a curve on the boundary
    Iso {
        #[arg(long)]
        body: String,
        #[arg(long)]
        form: String,
        /// Curve file (.csv with t,x..[,dx..] or .json)
        #[arg(long)]
        curve: String,
        /// Relative tolerance for certifying the equality
        #[arg(long, default_value_t = 1e-4)]
        iso_tol: f64,
        #[arg(long)]
        out: Option<String>,
    },
}

#[derive(Serialize)]
struct FlowReport {
    operation: &'static str,
    closed: bool,
    period: Option<f64>,
    area: f64,
    dual_length: f64,
    iso_ratio: f64,
    max_constraint_drift: f64,
    samples: usize,
}

#[derive(Serialize)]
struct CapacityReport {
    operation: &'static str,
    capacity: f64,
    half_min_dual_length: f64,
    closed_flows: usize,
    attempted: usize,
    all_closed: bool,
    heuristic: bool,
}

#[derive(Serialize)]
struct IsoReport {
    operation: &'static str,
    area: f64,
    dual_length: f64,
    ratio: f64,
    is_characteristic: bool,
    tolerance: f64,
}

fn smooth_body(path: &str) -> CliResult2<gaugekit_core::body::SmoothBody> {
    match load_body(path)? {
        Body::Smooth(s) => Ok(s),
        _ => Err(CliError::Input(anyhow::anyhow!(
            "characteristic flows need a smooth body (ellipsoid or quadratic)"
        ))),
    }
}

pub fn run(_ctx: &Ctx, cmd: CharCmd) -> CliResult2<i32> {
    match cmd {
        CharCmd::Flow { body, form, start, step, max_time, csv, out } => {
            let smooth = smooth_body(&body)?;
            let omega = load_form(&form)?;
            let x0 = parse_vector(&start)?;
            let opts = FlowOptions { step, max_time, ..FlowOptions::default() };
            let flow = integrate_characteristic(&smooth, &omega, &x0, &opts)?;
            if let Some(path) = &csv {
                write_csv_curve(&flow.curve, path).map_err(CliError::Input)?;
            }
            let report = FlowReport {
                operation: "characteristic_flow",
                closed: flow.closed,
                period: flow.period,
                area: flow.area,
                dual_length: flow.dual_length,
                iso_ratio: 2.0 * flow.area / flow.dual_length,
                max_constraint_drift: flow.max_constraint_drift,
                samples: flow.curve.len(),
            };
            emit(
                &report,
                out.as_deref(),
                &format!(
                    "flow from {start}: closed={} period={:?} area={:.8}",
                    flow.closed, flow.period, flow.area
                ),
            )?;
            Ok(0)
        }
        CharCmd::Capacity { body, form, starts, starts_file, step, max_time, out } => {
            let smooth = smooth_body(&body)?;
            let omega = load_form(&form)?;
            let mut start_points: Vec<Vec<f64>> = Vec::new();
            if let Some(text) = &starts {
                for part in text.split(';') {
                    start_points.push(parse_vector(part)?);
                }
            }
            if let Some(path) = &starts_file {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| CliError::Input(anyhow::anyhow!("reading {path}: {e}")))?;
                for line in text.lines().filter(|l| !l.trim().is_empty()) {
                    start_points.push(parse_vector(line)?);
                }
            }
            if start_points.is_empty() {
                return Err(CliError::Input(anyhow::anyhow!(
                    "give start points with --starts or --starts-file"
                )));
            }
            let opts = FlowOptions { step, max_time, ..FlowOptions::default() };
            let cap = capacity_estimate(&smooth, &omega, &start_points, &opts)?;
            let report = CapacityReport {
                operation: "capacity_estimate",
                capacity: cap.capacity,
                half_min_dual_length: cap.half_min_dual_length,
                closed_flows: cap.closed_flows,
                attempted: cap.attempted,
                all_closed: cap.all_closed,
                heuristic: !cap.all_closed,
            };
            emit(
                &report,
                out.as_deref(),
                &format!(
                    "capacity ≈ {:.8} ({}/{} flows closed{})",
                    cap.capacity,
                    cap.closed_flows,
                    cap.attempted,
                    if cap.all_closed { "" } else { "; heuristic" }
                ),
            )?;
            Ok(0)
        }
        CharCmd::Iso { body, form, curve, iso_tol, out } => {
            let k = load_body(&body)?;
            let omega = load_form(&form)?;
            let c = load_curve(&curve)?;
            let report = isoperimetric_report(&k, &omega, &c)?;
            let is_characteristic = (report.ratio - 1.0).abs() <= iso_tol;
            emit(
                &IsoReport {
                    operation: "isoperimetric_report",
                    area: report.area,
                    dual_length: report.dual_length,
                    ratio: report.ratio,
                    is_characteristic,
                    tolerance: iso_tol,
                },
                out.as_deref(),
                &format!(
                    "2A = {:.8}, L_ω = {:.8}, ratio = {:.8}",
                    2.0 * report.area,
                    report.dual_length,
                    report.ratio
                ),
            )?;
            Ok(if is_characteristic { 0 } else { 1 })
        }
    }
}
