use clap::Subcommand;
use serde::Serialize;

use gaugekit_core::gauge::{Gauge, Line};

use crate::schema::{load_body, parse_vector};
use crate::{emit, CliResult2, Ctx};

#[derive(Subcommand)]
pub enum GaugeCmd {
    /// Evaluate the gauge at a point
    Eval {
        #[arg(long)]
        body: String,
        /// Comma-separated coordinates, e.g. "0,-2"
        #[arg(long)]
        point: String,
        #[arg(long)]
        out: Option<String>,
    },
    /// The (asymmetric) distance from one point to another
    Distance {
        #[arg(long)]
        body: String,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long)]
        out: Option<String>,
    },
    /// Distance from a point to a line, with its foot point
    Pointline {
        #[arg(long)]
        body: String,
        #[arg(long)]
        point: String,
        /// A point on the line
        #[arg(long)]
        line_point: String,
        /// The line direction
        #[arg(long)]
        line_dir: String,
        #[arg(long)]
        out: Option<String>,
    },
}

#[derive(Serialize)]
struct ValueReport<'a> {
    operation: &'a str,
    value: f64,
}

#[derive(Serialize)]
struct PointLineReport {
    operation: &'static str,
    distance: f64,
    foot: Vec<f64>,
}

pub fn run(_ctx: &Ctx, cmd: GaugeCmd) -> CliResult2<i32> {
    match cmd {
        GaugeCmd::Eval { body, point, out } => {
            let gauge = Gauge::new(load_body(&body)?);
            let x = parse_vector(&point)?;
            let value = gauge.eval(&x)?;
            emit(
                &ValueReport { operation: "gauge_eval", value },
                out.as_deref(),
                &format!("gauge({point}) = {value:.12}"),
            )?;
        }
        GaugeCmd::Distance { body, from, to, out } => {
            let gauge = Gauge::new(load_body(&body)?);
            let a = parse_vector(&from)?;
            let b = parse_vector(&to)?;
            let value = gauge.distance(&a, &b)?;
            emit(
                &ValueReport { operation: "gauge_distance", value },
                out.as_deref(),
                &format!("d({from} -> {to}) = {value:.12}"),
            )?;
        }
        GaugeCmd::Pointline { body, point, line_point, line_dir, out } => {
            let gauge = Gauge::new(load_body(&body)?);
            let p = parse_vector(&point)?;
            let line = Line::new(parse_vector(&line_point)?, parse_vector(&line_dir)?)
                .map_err(|e| crate::CliError::Input(anyhow::anyhow!(e)))?;
            let result = gauge.point_line_distance(&p, &line)?;
            emit(
                &PointLineReport {
                    operation: "point_line_distance",
                    distance: result.distance,
                    foot: result.foot.clone(),
                },
                out.as_deref(),
                &format!("d(point, line) = {:.12}", result.distance),
            )?;
        }
    }
    Ok(0)
}
