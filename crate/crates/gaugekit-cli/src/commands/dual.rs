use clap::{Args, Subcommand};
use serde::Serialize;

use gaugekit_core::duality::{dual_body, dual_gauge_eval, homothety_detect_signed, polar_body};

use crate::schema::{load_body, load_form, parse_vector, BodyFile, BodySchema, Provenance};
use crate::{emit, CliResult2, Ctx};

#[derive(Args)]
pub struct PolarArgs {
    #[arg(long)]
    pub body: String,
    #[arg(long)]
    pub out: Option<String>,
}

#[derive(Subcommand)]
pub enum DualCmd {
    /// The dual body K^ω in the bodies schema
    Body {
        #[arg(long)]
        body: String,
        /// "det", "std:N", or a form JSON file
        #[arg(long)]
        form: String,
        #[arg(long)]
        out: Option<String>,
        /// Also report whether K^ω is homothetic to ±K (the norm/Radon flag)
        #[arg(long, default_value_t = false)]
        homothety: bool,
    },
    /// Evaluate the dual gauge γ_ω at a point
    Gauge {
        #[arg(long)]
        body: String,
        #[arg(long)]
        form: String,
        #[arg(long)]
        point: String,
        #[arg(long)]
        out: Option<String>,
    },
}

#[derive(Serialize)]
struct DualBodyReport {
    body: BodySchema,
    provenance: Provenance,
    /// Present when requested: the signed homothety ratio of K^ω against K,
    /// if one exists. A nonzero ratio means the gauge is a norm (a Radon
    /// norm in the plane).
    #[serde(skip_serializing_if = "Option::is_none")]
    homothety: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    is_norm: Option<bool>,
}

#[derive(Serialize)]
struct ValueReport {
    operation: &'static str,
    value: f64,
}

pub fn run_polar(_ctx: &Ctx, args: PolarArgs) -> CliResult2<i32> {
    let body = load_body(&args.body)?;
    let polar = polar_body(&body)?;
    let file = BodyFile {
        body: BodySchema::from_body(&polar),
        provenance: Some(Provenance {
            operation: "polar".into(),
            source: args.body.clone(),
            form: None,
        }),
    };
    emit(&file, args.out.as_deref(), &format!("polar body of {}", args.body))?;
    Ok(0)
}

pub fn run(ctx: &Ctx, cmd: DualCmd) -> CliResult2<i32> {
    match cmd {
        DualCmd::Body { body, form, out, homothety } => {
            let k = load_body(&body)?;
            let omega = load_form(&form)?;
            let dual = dual_body(&k, &omega)?;
            let ratio = if homothety {
                homothety_detect_signed(&k, &dual, ctx.eps.max(1e-8))?
            } else {
                None
            };
            let report = DualBodyReport {
                body: BodySchema::from_body(&dual),
                provenance: Provenance {
                    operation: "dual".into(),
                    source: body.clone(),
                    form: Some(form.clone()),
                },
                homothety: ratio,
                is_norm: if homothety { Some(ratio.is_some()) } else { None },
            };
            emit(&report, out.as_deref(), &format!("dual body of {body} under {form}"))?;
        }
        DualCmd::Gauge { body, form, point, out } => {
            let k = load_body(&body)?;
            let omega = load_form(&form)?;
            let x = parse_vector(&point)?;
            let value = dual_gauge_eval(&k, &omega, &x)?;
            emit(
                &ValueReport { operation: "dual_gauge_eval", value },
                out.as_deref(),
                &format!("dual gauge({point}) = {value:.12}"),
            )?;
        }
    }
    Ok(0)
}
