use clap::Subcommand;
use serde::Serialize;

use gaugekit_core::gauge::Gauge;
use gaugekit_core::orthogonality::{is_orthogonal, DEFAULT_ORTHO_TOL};

use crate::schema::{load_body, parse_vector};
use crate::{emit, CliResult2, Ctx};

#[derive(Subcommand)]
pub enum OrthoCmd {
    /// Decide x ⊣ y for the gauge of the given body
    Check {
        #[arg(long)]
        body: String,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        /// Relative tolerance on the line minimum
        #[arg(long, default_value_t = DEFAULT_ORTHO_TOL)]
        tol: f64,
        #[arg(long)]
        out: Option<String>,
    },
}

#[derive(Serialize)]
struct OrthoReport {
    operation: &'static str,
    orthogonal: bool,
    t_min: f64,
    min_value: f64,
    gauge_at_x: f64,
    witness: Vec<f64>,
    tolerance: f64,
}

pub fn run(_ctx: &Ctx, cmd: OrthoCmd) -> CliResult2<i32> {
    match cmd {
        OrthoCmd::Check { body, x, y, tol, out } => {
            let gauge = Gauge::new(load_body(&body)?);
            let xv = parse_vector(&x)?;
            let yv = parse_vector(&y)?;
            let report = is_orthogonal(&gauge, &xv, &yv, tol)?;
            let orthogonal = report.orthogonal;
            emit(
                &OrthoReport {
                    operation: "orthogonality_check",
                    orthogonal,
                    t_min: report.t_min,
                    min_value: report.min_value,
                    gauge_at_x: report.gauge_at_x,
                    witness: report.witness,
                    tolerance: tol,
                },
                out.as_deref(),
                &format!(
                    "{x} ⊣ {y}: {} (min {:.3e} vs γ(x) {:.3e})",
                    orthogonal, report.min_value, report.gauge_at_x
                ),
            )?;
            Ok(if orthogonal { 0 } else { 1 })
        }
    }
}
