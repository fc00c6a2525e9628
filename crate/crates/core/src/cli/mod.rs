//! Command-line front end.
//!
//! Exit codes: 0 when every verdict is CONFIRMED (or nothing was verified),
//! 1 when any verdict is FAILED, MIXED or UNDETERMINED or a computation
//! fails, 2 on usage and domain errors.

mod render;

use crate::identities::{self, Identity, IdentityError, Param, ParamPoint};
use crate::quad::QuadConfig;
use crate::specfun::CNum;
use crate::verify::{self, Verdict, VerifyError};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::io::Write;
use std::path::PathBuf;

pub use render::{ConfigEcho, Report, VerdictSummary};

pub const MAX_LEVEL_ENV: &str = "ZETATAB_MAX_LEVEL";

#[derive(Debug, Parser)]
#[command(name = "zetatab", version, about = "Audit a table of definite integrals against their closed forms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the registered identities
    List(OutputArgs),
    /// Compare both sides of one identity at one parameter point
    Verify(PointArgs),
    /// Compare both sides over a grid (comma-separated values per parameter)
    Sweep(PointArgs),
    /// Audit every row of the table of integrals
    Table(TableArgs),
    /// Print the classical constants
    Constants(OutputArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Markdown,
}

#[derive(Debug, Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Markdown)]
    format: Format,
    /// Write to this file instead of standard output
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct QuadArgs {
    /// Deepest quadrature level, 3..=16 (overrides ZETATAB_MAX_LEVEL)
    #[arg(long)]
    max_level: Option<u32>,
    /// Level-to-level stopping tolerance of the quadrature
    #[arg(long)]
    abs_tol: Option<f64>,
}

#[derive(Debug, Args)]
struct PointArgs {
    #[arg(long)]
    identity: String,
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    k: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    m: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    n: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    p: Option<String>,
    /// Relative tolerance; defaults to the identity's own
    #[arg(long)]
    tol: Option<f64>,
    #[command(flatten)]
    quad: QuadArgs,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Args)]
struct TableArgs {
    /// Relative tolerance for every row; defaults to each row's own
    #[arg(long)]
    tol: Option<f64>,
    #[command(flatten)]
    quad: QuadArgs,
    #[command(flatten)]
    out: OutputArgs,
}

enum Failure {
    Usage(String),
    Compute(String),
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Identity(IdentityError::SpecFun(_) | IdentityError::Quad(_)) => {
                Failure::Compute(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<IdentityError> for Failure {
    fn from(e: IdentityError) -> Self {
        VerifyError::from(e).into()
    }
}

/// Run the CLI on `argv` (including the program name) and return the exit
/// code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            1
        }
    }
}

fn dispatch(command: Command) -> Result<i32, Failure> {
    match command {
        Command::List(out) => {
            let text = render::list(identities::registry(), out.format);
            emit(&out, &text)?;
            Ok(0)
        }
        Command::Constants(out) => {
            emit(&out, &render::constants(out.format))?;
            Ok(0)
        }
        Command::Verify(args) => {
            let identity = identities::lookup(&args.identity)?;
            let grid = grid_from_args(identity, &args, false)?;
            run_sweep("verify", identity, &grid, &args)
        }
        Command::Sweep(args) => {
            let identity = identities::lookup(&args.identity)?;
            let grid = grid_from_args(identity, &args, true)?;
            run_sweep("sweep", identity, &grid, &args)
        }
        Command::Table(args) => {
            let qcfg = quad_config(&args.quad)?;
            let tol = check_tol(args.tol)?;
            let rows = verify::reproduce_table(tol, &qcfg)?;
            let echo = render::ConfigEcho::new(None, tol, &qcfg);
            emit(&args.out, &render::table(&rows, &echo, args.out.format))?;
            Ok(exit_code(rows.iter().map(|r| r.result.verdict)))
        }
    }
}

fn run_sweep(
    command: &str,
    identity: &Identity,
    grid: &[ParamPoint],
    args: &PointArgs,
) -> Result<i32, Failure> {
    let qcfg = quad_config(&args.quad)?;
    let tol = check_tol(args.tol)?;
    if command == "verify" {
        // a single point outside the domain is a usage error, not a skip
        identity.check_domain(&grid[0])?;
    }
    let verdict = verify::sweep(
        identity.id,
        grid,
        tol.unwrap_or(identity.default_tol),
        &qcfg,
    )?;
    let echo = render::ConfigEcho::new(Some(identity.id), tol, &qcfg);
    let text = render::verdicts(command, std::slice::from_ref(&verdict), &echo, args.out.format);
    emit(&args.out, &text)?;
    Ok(exit_code([verdict.verdict]))
}

fn exit_code(verdicts: impl IntoIterator<Item = Verdict>) -> i32 {
    if verdicts.into_iter().all(|v| v == Verdict::Confirmed) {
        0
    } else {
        1
    }
}

fn check_tol(tol: Option<f64>) -> Result<Option<f64>, Failure> {
    match tol {
        Some(t) if !(t > 0.0 && t.is_finite()) => {
            Err(Failure::Usage(format!("--tol must be positive, got {t}")))
        }
        _ => Ok(tol),
    }
}

fn quad_config(args: &QuadArgs) -> Result<QuadConfig, Failure> {
    let mut cfg = QuadConfig::default();
    if let Ok(raw) = std::env::var(MAX_LEVEL_ENV) {
        cfg.max_level = raw
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{MAX_LEVEL_ENV} must be an integer, got '{raw}'")))?;
    }
    if let Some(level) = args.max_level {
        cfg.max_level = level;
    }
    if let Some(tol) = args.abs_tol {
        cfg.abs_tol = tol;
    }
    cfg.validate().map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(cfg)
}

/// Parse `re`, `re+imi`, `imi`, and so on.
pub fn parse_complex(s: &str) -> Result<CNum, String> {
    let z: CNum = s
        .trim()
        .parse()
        .map_err(|_| format!("'{s}' is not a complex number (expected e.g. 0.5, 1+0.5i, 2i)"))?;
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(format!("'{s}' is not finite"))
    }
}

fn given_params(args: &PointArgs) -> Vec<(Param, &str)> {
    [
        (Param::A, &args.a),
        (Param::K, &args.k),
        (Param::M, &args.m),
        (Param::N, &args.n),
        (Param::P, &args.p),
    ]
    .into_iter()
    .filter_map(|(p, v)| v.as_deref().map(|v| (p, v)))
    .collect()
}

/// Parameter points from the command line. Unset parameters take their
/// value from the identity's first default point; a sweep with no
/// parameters at all uses the whole default grid.
fn grid_from_args(
    identity: &Identity,
    args: &PointArgs,
    lists: bool,
) -> Result<Vec<ParamPoint>, Failure> {
    let given = given_params(args);
    for (p, _) in &given {
        if !identity.uses.contains(p) {
            return Err(Failure::Usage(if identity.is_fixed() {
                format!("{} has fixed parameters; --{p} is not accepted", identity.id)
            } else {
                format!("parameter {p} is not used by {}", identity.id)
            }));
        }
    }
    let defaults = identity.default_grid();
    if lists && given.is_empty() {
        return Ok(defaults);
    }
    let mut points = vec![defaults[0]];
    for (p, raw) in given {
        let values: Vec<CNum> = if lists {
            raw.split(',').map(parse_complex).collect::<Result<_, _>>()
        } else {
            parse_complex(raw).map(|v| vec![v])
        }
        .map_err(|e| Failure::Usage(format!("--{p}: {e}")))?;
        points = points
            .iter()
            .flat_map(|pp| values.iter().map(move |&v| pp.with(p, v)))
            .collect();
    }
    Ok(points)
}

fn emit(out: &OutputArgs, text: &str) -> Result<(), Failure> {
    let result = match &out.output {
        Some(path) => std::fs::write(path, text),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush())
        }
    };
    result.map_err(|e| Failure::Compute(format!("cannot write output: {e}")))
}
