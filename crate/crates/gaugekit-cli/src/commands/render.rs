use clap::Args;

use gaugekit_core::symplectic::PlaneSubspace;

use crate::curves_io::load_curve;
use crate::schema::{load_body, load_form, parse_plane};
use crate::svg::{body_outline, render_svg, Layer, COLORS};
use crate::{CliError, CliResult2, Ctx};

#[derive(Args)]
pub struct RenderArgs {
    /// Body JSON files (repeat for overlays); colors cycle black, red,
    /// green, blue, orange, purple
    #[arg(long)]
    pub body: Vec<String>,
    /// Curve files (.csv or .json) to overlay
    #[arg(long)]
    pub curve: Vec<String>,
    /// Projection plane "u;v" for 4-D curves (needs --form)
    #[arg(long)]
    pub plane: Option<String>,
    /// Form used for the plane projection
    #[arg(long)]
    pub form: Option<String>,
    /// Output SVG path
    #[arg(long)]
    pub out: String,
}

fn stem(path: &str) -> String {
    std::path::Path::new(path)
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.to_string())
}

pub fn run(_ctx: &Ctx, args: RenderArgs) -> CliResult2<i32> {
    if args.body.is_empty() && args.curve.is_empty() {
        return Err(CliError::Input(anyhow::anyhow!("nothing to render")));
    }
    let plane: Option<PlaneSubspace> =
        args.plane.as_deref().map(parse_plane).transpose()?;
    let form = args.form.as_deref().map(load_form).transpose()?;

    let mut layers = Vec::new();
    for (i, path) in args.body.iter().enumerate() {
        let body = load_body(path)?;
        let outline = body_outline(&body).map_err(CliError::Input)?;
        layers.push(Layer {
            outline,
            label: stem(path),
            color: COLORS[i % COLORS.len()].to_string(),
            closed: true,
        });
    }
    for (i, path) in args.curve.iter().enumerate() {
        let curve = load_curve(path)?;
        let outline: Vec<[f64; 2]> = if curve.dim() == 2 {
            curve.points().iter().map(|p| [p[0], p[1]]).collect()
        } else {
            let (Some(plane), Some(form)) = (&plane, &form) else {
                return Err(CliError::Input(anyhow::anyhow!(
                    "curves above dimension 2 need --plane and --form for projection"
                )));
            };
            let mut out = Vec::with_capacity(curve.len());
            for p in curve.points() {
                let c = form.plane_coordinates(plane, p)?;
                out.push([c[0], c[1]]);
            }
            out
        };
        layers.push(Layer {
            outline,
            label: stem(path),
            color: COLORS[(args.body.len() + i) % COLORS.len()].to_string(),
            closed: curve.closed(),
        });
    }

    let svg = render_svg(&layers);
    std::fs::write(&args.out, &svg)
        .map_err(|e| CliError::Input(anyhow::anyhow!("writing {}: {e}", args.out)))?;
    eprintln!("wrote {} ({} layers)", args.out, layers.len());
    Ok(0)
}
