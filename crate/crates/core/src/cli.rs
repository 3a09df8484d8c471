//! `pascal-det` command line.
//!
//! Exit status: 0 when everything passed, 1 on a counterexample or an
//! internal route error, 2 on a usage error.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::det_arrays::{pd_grid, Method, PdTables};
use crate::pascal_core::GridIndex;
use crate::report::{self, Bounds, Format, Identity};

#[derive(Debug, Parser)]
#[command(
    name = "pascal-det",
    version,
    about = "Exact Pascal determinantal arrays and identity checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a window of PD_k.
    Gen(GenArgs),
    /// Print the single entry P^(k)_{i,j}.
    Det(DetArgs),
    /// Sweep an identity and print a JSON report.
    Check(CheckArgs),
    /// Time the per-entry routes on one entry.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
struct Origin {
    #[arg(long, default_value_t = 0)]
    i0: usize,
    #[arg(long, default_value_t = 0)]
    j0: usize,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long)]
    order: usize,
    #[command(flatten)]
    origin: Origin,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    rows: u32,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    cols: u32,
    #[arg(long, default_value = "direct")]
    method: Method,
    #[arg(long, default_value = "table")]
    format: Format,
}

#[derive(Debug, Args)]
struct DetArgs {
    #[arg(long)]
    order: usize,
    #[command(flatten)]
    origin: Origin,
    #[arg(long, default_value = "direct")]
    method: Method,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum IdentityArg {
    Rahimpour,
    General,
    Star,
    Cross,
    Product,
    Stick,
    Routes,
}

impl From<IdentityArg> for Identity {
    fn from(a: IdentityArg) -> Self {
        match a {
            IdentityArg::Rahimpour => Identity::Rahimpour,
            IdentityArg::General => Identity::General,
            IdentityArg::Star => Identity::Star,
            IdentityArg::Cross => Identity::Cross,
            IdentityArg::Product => Identity::Product,
            IdentityArg::Stick => Identity::Stick,
            IdentityArg::Routes => Identity::Routes,
        }
    }
}

#[derive(Debug, Args)]
struct CheckArgs {
    identity: IdentityArg,
    #[arg(long, default_value_t = 8)]
    max_i: usize,
    #[arg(long, default_value_t = 8)]
    max_j: usize,
    /// Largest order (k for general/product/stick/routes, array order for star/cross).
    #[arg(long, default_value_t = 4)]
    max_k: usize,
    /// Largest anti-diagonal i + j for star/cross anchors.
    #[arg(long, default_value_t = 10)]
    max_sum: usize,
    /// Largest rectangle extent (star) or cross size (cross).
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..))]
    max_size: u32,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[arg(long)]
    order: usize,
    #[command(flatten)]
    origin: Origin,
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..))]
    iters: u32,
}

/// Entry point for the binary.
pub fn run() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_from(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_from<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Internal(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<crate::Error> for Failure {
    fn from(e: crate::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    let text = match command {
        Command::Gen(a) => {
            let origin = GridIndex::new(a.origin.i0, a.origin.j0);
            if a.method == Method::Algorithm && origin != GridIndex::ORIGIN {
                return Err(Failure::Usage(
                    "--method algorithm requires --i0 0 --j0 0".into(),
                ));
            }
            let grid = pd_grid(a.order, origin, a.rows as usize, a.cols as usize, a.method)?;
            report::render_grid(&grid, a.format)
        }
        Command::Det(a) => {
            let idx = GridIndex::new(a.origin.i0, a.origin.j0);
            let v = PdTables::new().entry(a.method, a.order, idx)?;
            format!("{v}\n")
        }
        Command::Check(a) => {
            let bounds = Bounds {
                max_i: a.max_i,
                max_j: a.max_j,
                max_k: a.max_k,
                max_sum: a.max_sum,
                max_size: a.max_size as usize,
            };
            let rep = report::sweep(a.identity.into(), bounds)?;
            let _ = writeln!(out, "{}", rep.to_json());
            return Ok(if rep.passed() { 0 } else { 1 });
        }
        Command::Bench(a) => {
            let idx = GridIndex::new(a.origin.i0, a.origin.j0);
            let recs = report::bench(a.order, idx, a.iters)?;
            report::render_bench(&recs)
        }
    };
    out.write_all(text.as_bytes())
        .map_err(|e| Failure::Internal(e.to_string()))?;
    Ok(0)
}
