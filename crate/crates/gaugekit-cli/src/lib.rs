//! Command-line front end for gauge geometry with symplectic duality.
//!
//! Exit codes: 0 success (all checks passed), 1 a check failed, 2 malformed
//! input, 3 numerical failure.

use clap::{Parser, Subcommand};

pub mod commands;
pub mod curves_io;
pub mod json17;
pub mod report;
pub mod schema;
pub mod svg;

/// Failures routed to exit codes: input problems exit 2, numerical problems
/// exit 3.
#[derive(Debug)]
pub enum CliError {
    Input(anyhow::Error),
    Numeric(anyhow::Error),
}

impl From<gaugekit_core::Error> for CliError {
    fn from(e: gaugekit_core::Error) -> Self {
        CliError::Numeric(anyhow::anyhow!(e))
    }
}

pub type CliResult2<T> = Result<T, CliError>;

/// Shared settings resolved from the environment.
#[derive(Debug, Clone, Copy)]
pub struct Ctx {
    /// Geometric comparison tolerance; defaults to 1e-9, overridden by the
    /// `GAUGEKIT_EPS` environment variable.
    pub eps: f64,
}

impl Ctx {
    pub fn from_env() -> Self {
        let eps = std::env::var("GAUGEKIT_EPS")
            .ok()
            .and_then(|v| v.parse::<f64>().ok())
            .filter(|v| *v > 0.0)
            .unwrap_or(gaugekit_core::DEFAULT_GEOMETRY_EPS);
        Ctx { eps }
    }
}

#[derive(Parser)]
#[command(
    name = "gaugekit",
    version,
    about = "Gauge (asymmetric-norm) geometry with symplectic duality"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Evaluate gauges, distances, and point-line distances
    Gauge {
        #[command(subcommand)]
        cmd: commands::gauge::GaugeCmd,
    },
    /// Polar body of a convex body
    Polar(commands::dual::PolarArgs),
    /// Symplectic dual body and dual gauge
    Dual {
        #[command(subcommand)]
        cmd: commands::dual::DualCmd,
    },
    /// Orthogonality relation checks
    Ortho {
        #[command(subcommand)]
        cmd: commands::ortho::OrthoCmd,
    },
    /// Gauge-isometry verification and planar equivalence search
    Isometry {
        #[command(subcommand)]
        cmd: commands::isometry::IsometryCmd,
    },
    /// Characteristic flows, isoperimetric reports, and capacity
    Char {
        #[command(subcommand)]
        cmd: commands::charcmd::CharCmd,
    },
    /// Planar sections and the section-duality identity
    Section {
        #[command(subcommand)]
        cmd: commands::section::SectionCmd,
    },
    /// Seeded property-law suites
    Laws {
        #[command(subcommand)]
        cmd: commands::laws::LawsCmd,
    },
    /// Render planar bodies and curves to SVG
    Render(commands::render::RenderArgs),
}

/// Parse arguments, dispatch, and map failures onto exit codes.
pub fn run() -> i32 {
    let cli = Cli::parse();
    run_command(cli)
}

pub fn run_command(cli: Cli) -> i32 {
    let ctx = Ctx::from_env();
    let outcome = match cli.command {
        Command::Gauge { cmd } => commands::gauge::run(&ctx, cmd),
        Command::Polar(args) => commands::dual::run_polar(&ctx, args),
        Command::Dual { cmd } => commands::dual::run(&ctx, cmd),
        Command::Ortho { cmd } => commands::ortho::run(&ctx, cmd),
        Command::Isometry { cmd } => commands::isometry::run(&ctx, cmd),
        Command::Char { cmd } => commands::charcmd::run(&ctx, cmd),
        Command::Section { cmd } => commands::section::run(&ctx, cmd),
        Command::Laws { cmd } => commands::laws::run(&ctx, cmd),
        Command::Render(args) => commands::render::run(&ctx, args),
    };
    match outcome {
        Ok(code) => code,
        Err(CliError::Input(e)) => {
            eprintln!("input error: {e:#}");
            2
        }
        Err(CliError::Numeric(e)) => {
            eprintln!("numerical error: {e:#}");
            3
        }
    }
}

/// Print a JSON report to stdout (and optionally a file), with a summary on
/// stderr.
pub fn emit<T: serde::Serialize>(
    value: &T,
    out: Option<&str>,
    summary: &str,
) -> CliResult2<()> {
    let json = json17::to_string_17(value).map_err(CliError::Numeric)?;
    println!("{json}");
    if let Some(path) = out {
        std::fs::write(path, format!("{json}\n"))
            .map_err(|e| CliError::Input(anyhow::anyhow!("writing {path}: {e}")))?;
    }
    eprintln!("{summary}");
    Ok(())
}
