use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::builder::{PossibleValuesParser, TypedValueParser};
use clap::{Args, Parser, Subcommand, ValueEnum};
use cy3::commands::{self, BundleChoice, CheckArgs, Format, Outcome, SearchArgs};

#[derive(Parser)]
#[command(name = "cy3", version, about = "Stable extension bundles on Calabi-Yau threefolds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect, validate and export geometries.
    #[command(subcommand)]
    Geometry(GeometryCommand),
    /// Search for certifying classes D for an ample H.
    Search(SearchCli),
    /// Evaluate every certificate condition for one D.
    Check(CheckCli),
}

#[derive(Subcommand)]
enum GeometryCommand {
    /// List the built-in geometries.
    List,
    /// Print the full intersection data of a built-in geometry.
    Show { name: String },
    /// Validate a geometry file.
    Validate { path: PathBuf },
    /// Write a built-in geometry to a file (.json or .toml).
    Save { name: String, path: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum BundleArg {
    #[value(name = "O")]
    O,
    #[value(name = "TX")]
    Tx,
}

#[derive(Args)]
struct Common {
    /// Built-in geometry name.
    geometry: Option<String>,
    /// Load the geometry from a file instead.
    #[arg(long, value_name = "PATH")]
    geometry_file: Option<PathBuf>,
    /// Polarization coordinates, e.g. "1,5/2".
    #[arg(long = "H", value_name = "COORDS", allow_hyphen_values = true)]
    h: String,
    /// 2 for Ext(O, O), 4 for Ext(O, TX).
    #[arg(long, default_value_t = 2, value_parser = PossibleValuesParser::new(["2", "4"]).map(|s| s.parse::<u32>().unwrap()))]
    rank: u32,
    /// Override the subbundle E1.
    #[arg(long, value_enum)]
    e1: Option<BundleArg>,
    /// Override the quotient E2.
    #[arg(long, value_enum)]
    e2: Option<BundleArg>,
    #[arg(long, value_enum, default_value = "table")]
    format: FormatArg,
}

#[derive(Args)]
struct SearchCli {
    #[command(flatten)]
    common: Common,
    /// Maximum absolute coordinate of D.
    #[arg(long, default_value_t = 3)]
    bound: u32,
    /// Multiples m in [-M, M] scanned for rays without a certificate.
    #[arg(long, default_value_t = 3)]
    multiples: u32,
    /// Perturb H when an orthogonal class has D^3 = 0.
    #[arg(long)]
    perturb: bool,
    /// Perturbation steps tried in order, e.g. "1,1/2" (default 1/2, ..., 1/32).
    #[arg(long, value_name = "LIST", requires = "perturb")]
    deltas: Option<String>,
    /// Keep rejected candidates with their per-check diagnostics.
    #[arg(long)]
    include_failures: bool,
}

#[derive(Args)]
struct CheckCli {
    #[command(flatten)]
    common: Common,
    /// Candidate class coordinates, e.g. "1,-1".
    #[arg(long = "D", value_name = "COORDS", allow_hyphen_values = true)]
    d: String,
}

fn format(f: FormatArg) -> Format {
    match f {
        FormatArg::Json => Format::Json,
        FormatArg::Table => Format::Table,
    }
}

fn bundle(b: Option<BundleArg>) -> Option<BundleChoice> {
    b.map(|b| match b {
        BundleArg::O => BundleChoice::O,
        BundleArg::Tx => BundleChoice::TX,
    })
}

fn threads() -> Result<Option<usize>, commands::Failure> {
    match std::env::var("CY3_THREADS") {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n > 0)
            .map(Some)
            .ok_or_else(|| commands::Failure::input(format!("CY3_THREADS must be a positive integer, found `{v}`"))),
        Err(_) => Ok(None),
    }
}

fn run(cli: Cli, out: &mut dyn Write) -> Outcome {
    match cli.command {
        Command::Geometry(GeometryCommand::List) => commands::geometry_list(out),
        Command::Geometry(GeometryCommand::Show { name }) => {
            let g = commands::resolve_geometry(Some(&name), None)?;
            commands::geometry_show(out, &g)
        }
        Command::Geometry(GeometryCommand::Validate { path }) => commands::geometry_validate(out, &path),
        Command::Geometry(GeometryCommand::Save { name, path }) => commands::geometry_save(out, &name, &path),
        Command::Search(s) => commands::search_command(
            out,
            &SearchArgs {
                geometry: s.common.geometry,
                geometry_file: s.common.geometry_file,
                h: s.common.h,
                rank: s.common.rank,
                e1: bundle(s.common.e1),
                e2: bundle(s.common.e2),
                bound: s.bound,
                multiples: s.multiples,
                perturb: s.perturb,
                deltas: s.deltas,
                include_failures: s.include_failures,
                format: format(s.common.format),
                threads: threads()?,
            },
        ),
        Command::Check(c) => commands::check_command(
            out,
            &CheckArgs {
                geometry: c.common.geometry,
                geometry_file: c.common.geometry_file,
                d: c.d,
                h: c.common.h,
                rank: c.common.rank,
                e1: bundle(c.common.e1),
                e2: bundle(c.common.e2),
                format: format(c.common.format),
            },
        ),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let code = match run(cli, &mut out) {
        Ok(code) => code,
        Err(f) => {
            let _ = out.flush();
            eprintln!("error: {}", f.message);
            f.code
        }
    };
    let _ = out.flush();
    ExitCode::from(code as u8)
}
