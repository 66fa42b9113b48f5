use clap::Subcommand;
use serde::Serialize;

use gaugekit_core::body::Body;
use gaugekit_core::characteristics::{
    planar_characteristic_check, section_body, section_duality_check,
};

use crate::schema::{load_body, load_form, parse_plane, BodySchema, Provenance};
use crate::{emit, CliError, CliResult2, Ctx};

#[derive(Subcommand)]
pub enum SectionCmd {
    /// The planar section K ∩ Y in plane coordinates
    Body {
        #[arg(long)]
        body: String,
        #[arg(long)]
        form: String,
        /// Two spanning vectors "u;v", e.g. "1,0,0,0;0,1,0,0"
        #[arg(long)]
        plane: String,
        #[arg(long)]
        out: Option<String>,
    },
    /// Verify the section-duality identity (K∩Y)^ω = proj_Y(K^ω)
    Check {
        #[arg(long)]
        body: String,
        #[arg(long)]
        form: String,
        #[arg(long)]
        plane: String,
        /// Hausdorff tolerance; defaults to GAUGEKIT_EPS raised to 1e-8
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        out: Option<String>,
    },
    /// Whether ∂K ∩ Y is a planar closed characteristic
    Planar {
        #[arg(long)]
        body: String,
        #[arg(long)]
        form: String,
        #[arg(long)]
        plane: String,
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        out: Option<String>,
    },
}

#[derive(Serialize)]
struct SectionBodyReport {
    body: BodySchema,
    provenance: Provenance,
}

#[derive(Serialize)]
struct SectionCheckReport {
    operation: &'static str,
    hausdorff: f64,
    tolerance: f64,
    pass: bool,
    section_dual: BodySchema,
    projected_dual: BodySchema,
}

#[derive(Serialize)]
struct PlanarReport {
    operation: &'static str,
    planar_characteristic: bool,
    tolerance: f64,
}

pub fn run(ctx: &Ctx, cmd: SectionCmd) -> CliResult2<i32> {
    match cmd {
        SectionCmd::Body { body, form, plane, out } => {
            let k = load_body(&body)?;
            let omega = load_form(&form)?;
            let y = parse_plane(&plane)?;
            let section = section_body(&k, &omega, &y)?;
            emit(
                &SectionBodyReport {
                    body: BodySchema::from_body(&section),
                    provenance: Provenance {
                        operation: "section".into(),
                        source: body.clone(),
                        form: Some(form.clone()),
                    },
                },
                out.as_deref(),
                &format!("section of {body} by the plane, in plane coordinates"),
            )?;
            Ok(0)
        }
        SectionCmd::Check { body, form, plane, tol, out } => {
            let k = load_body(&body)?;
            let omega = load_form(&form)?;
            let y = parse_plane(&plane)?;
            let tol = tol.unwrap_or(ctx.eps.max(1e-8));
            let result = section_duality_check(&k, &omega, &y)?;
            let pass = result.hausdorff <= tol;
            emit(
                &SectionCheckReport {
                    operation: "section_duality_check",
                    hausdorff: result.hausdorff,
                    tolerance: tol,
                    pass,
                    section_dual: BodySchema::from_body(&result.section_dual),
                    projected_dual: BodySchema::from_body(&result.projected_dual),
                },
                out.as_deref(),
                &format!("section duality hausdorff = {:.3e} (tol {tol:.1e})", result.hausdorff),
            )?;
            Ok(if pass { 0 } else { 1 })
        }
        SectionCmd::Planar { body, form, plane, tol, out } => {
            let smooth = match load_body(&body)? {
                Body::Smooth(s) => s,
                _ => {
                    return Err(CliError::Input(anyhow::anyhow!(
                        "planar-characteristic checks need a smooth body"
                    )))
                }
            };
            let omega = load_form(&form)?;
            let y = parse_plane(&plane)?;
            let tol = tol.unwrap_or(ctx.eps.max(1e-8));
            let flag = planar_characteristic_check(&smooth, &omega, &y, tol)?;
            emit(
                &PlanarReport {
                    operation: "planar_characteristic_check",
                    planar_characteristic: flag,
                    tolerance: tol,
                },
                out.as_deref(),
                &format!("boundary section is a planar closed characteristic: {flag}"),
            )?;
            Ok(if flag { 0 } else { 1 })
        }
    }
}
