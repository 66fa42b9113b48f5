use clap::Subcommand;
use serde::Serialize;

use gaugekit_core::body::Body;
use gaugekit_core::isometry::{is_gauge_isometry, linear_equivalence_search_2d};

use crate::schema::{load_body, load_map};
use crate::{emit, CliError, CliResult2, Ctx};

#[derive(Subcommand)]
pub enum IsometryCmd {
    /// Verify that a map is a gauge isometry between two bodies
    Check {
        /// JSON file {"linear": [[...]], "translation": [...]}
        #[arg(long)]
        map: String,
        #[arg(long)]
        body1: String,
        #[arg(long)]
        body2: String,
        #[arg(long)]
        out: Option<String>,
    },
    /// Exhaustively search for a planar linear equivalence of two polygons
    Search {
        #[arg(long)]
        body1: String,
        #[arg(long)]
        body2: String,
        #[arg(long)]
        out: Option<String>,
    },
}

#[derive(Serialize)]
struct CheckReport {
    operation: &'static str,
    isometry: bool,
}

#[derive(Serialize)]
struct SearchReport {
    operation: &'static str,
    found: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    linear: Option<Vec<Vec<f64>>>,
}

pub fn run(_ctx: &Ctx, cmd: IsometryCmd) -> CliResult2<i32> {
    match cmd {
        IsometryCmd::Check { map, body1, body2, out } => {
            let t = load_map(&map)?;
            let k1 = load_body(&body1)?;
            let k2 = load_body(&body2)?;
            let ok = is_gauge_isometry(&t, &k1, &k2)?;
            emit(
                &CheckReport { operation: "isometry_check", isometry: ok },
                out.as_deref(),
                &format!("{map} maps {body1} onto {body2}: {ok}"),
            )?;
            Ok(if ok { 0 } else { 1 })
        }
        IsometryCmd::Search { body1, body2, out } => {
            let k1 = match load_body(&body1)? {
                Body::Vertices(p) => p,
                _ => {
                    return Err(CliError::Input(anyhow::anyhow!(
                        "equivalence search needs vertex polytopes"
                    )))
                }
            };
            let k2 = match load_body(&body2)? {
                Body::Vertices(p) => p,
                _ => {
                    return Err(CliError::Input(anyhow::anyhow!(
                        "equivalence search needs vertex polytopes"
                    )))
                }
            };
            let found = linear_equivalence_search_2d(&k1, &k2)?;
            let report = SearchReport {
                operation: "linear_equivalence_search",
                found: found.is_some(),
                linear: found.as_ref().map(|m| m.linear().to_rows()),
            };
            let ok = report.found;
            emit(
                &report,
                out.as_deref(),
                &format!("linear equivalence of {body1} and {body2}: {ok}"),
            )?;
            Ok(if ok { 0 } else { 1 })
        }
    }
}
