//! Command-line front end: `eval`, `verify`, `table`, and `bench`.
//!
//! Output records go to standard output as JSON/CSV with floats printed to
//! 17 significant digits; diagnostics go to standard error. Exit codes:
//! 0 success, 1 verification tolerance failure, 2 domain or I/O error,
//! 3 series truncation failure. The environment variable
//! `HERMITE_MULTISECT_THREADS` bounds sweep parallelism (0 or unset = auto);
//! records are emitted in grid order regardless of thread count.

mod output;
mod record;

pub use output::{to_json, write_csv, write_jsonl, CSV_HEADER};
pub use record::{measure_point, parse_complex, parse_test_function, OutputRecord};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::time::Instant;

use crate::error::Error;
use crate::numerics::SeriesControl;
use crate::operators::TestFunction;
use crate::sweep::{closed_value, default_grid, run_sweep, series_value, Family, GridPoint};

pub const THREADS_ENV_VAR: &str = "HERMITE_MULTISECT_THREADS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    #[value(name = "S", alias = "s")]
    S,
    #[value(name = "G", alias = "g")]
    G,
    #[value(name = "K-even", alias = "k-even")]
    KEven,
    #[value(name = "K-odd", alias = "k-odd")]
    KOdd,
    #[value(name = "K-combined", alias = "k-combined")]
    KCombined,
    #[value(name = "I", alias = "i")]
    I,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::S => Family::S,
            FamilyArg::G => Family::G,
            FamilyArg::KEven => Family::KEven,
            FamilyArg::KOdd => Family::KOdd,
            FamilyArg::KCombined => Family::KCombined,
            FamilyArg::I => Family::I,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Jsonl,
}

#[derive(Parser)]
#[command(
    name = "hermite-multisect",
    version,
    about = "Closed forms and series oracles for multisected Hermite and exponential sums"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate one point by the closed and series paths; print one JSON record
    Eval(EvalArgs),
    /// Sweep closed-vs-series over the default grids and judge the max error
    Verify(VerifyArgs),
    /// Write one record per grid point to a file as CSV or JSONL
    Table(TableArgs),
    /// Time the closed and series paths separately at one point
    Bench(BenchArgs),
}

#[derive(Args)]
struct PointArgs {
    /// Sum family
    #[arg(long)]
    family: FamilyArg,
    /// Stride (families S, G) or operator order (family I)
    #[arg(long, default_value_t = 1)]
    j: u32,
    /// Offset within the stride (families S, G)
    #[arg(long, default_value_t = 0)]
    k: u32,
    /// Complex argument `a+bi`; for family I this is the real operator scale
    #[arg(long, default_value = "0", value_parser = parse_complex, allow_hyphen_values = true)]
    z: Complex64,
    /// Real argument (families G, K, I)
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    x: f64,
    /// Series relative tolerance (default 1e-12)
    #[arg(long)]
    tol: Option<f64>,
    /// Series term budget (default 1000)
    #[arg(long)]
    max_terms: Option<usize>,
    /// Quadrature order for the family-I closed path
    #[arg(long, default_value_t = 40)]
    rule_order: usize,
    /// Test function for family I: `poly:c0,c1,...` | `exp:lambda` | `gauss:beta`
    #[arg(long = "fn", value_parser = parse_test_function)]
    func: Option<TestFunction>,
}

#[derive(Args)]
struct EvalArgs {
    #[command(flatten)]
    point: PointArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// Family to sweep; omit to run the full default suite
    #[arg(long)]
    family: Option<FamilyArg>,
    /// Pass/fail threshold on max_rel_err (default: the family tolerance)
    #[arg(long)]
    tol: Option<f64>,
    /// Series term budget (default 1000)
    #[arg(long)]
    max_terms: Option<usize>,
    /// Quadrature order for the family-I closed path
    #[arg(long, default_value_t = 40)]
    rule_order: usize,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long)]
    family: FamilyArg,
    /// Stride/operator-order axis, comma separated
    #[arg(long, value_delimiter = ',', default_value = "1")]
    j: Vec<u32>,
    /// Offset axis, comma separated
    #[arg(long, value_delimiter = ',', default_value = "0")]
    k: Vec<u32>,
    /// Complex-argument axis, comma separated
    #[arg(long, value_delimiter = ',', value_parser = parse_complex, allow_hyphen_values = true, default_value = "0")]
    z: Vec<Complex64>,
    /// Real-argument axis, comma separated
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "0")]
    x: Vec<f64>,
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    max_terms: Option<usize>,
    #[arg(long, default_value_t = 40)]
    rule_order: usize,
    #[arg(long = "fn", value_parser = parse_test_function)]
    func: Option<TestFunction>,
    /// Output format
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    format: TableFormat,
    /// Output file path
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct BenchArgs {
    #[command(flatten)]
    point: PointArgs,
    /// Repetitions per path
    #[arg(long, default_value_t = 100)]
    reps: usize,
}

/// Timing summary for one point: medians and quartiles in nanoseconds for
/// each path, from simple order statistics over `reps` runs.
#[derive(Debug, Serialize)]
struct BenchSummary {
    family: String,
    j: u32,
    k: u32,
    z_re: f64,
    z_im: f64,
    x: f64,
    reps: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    rule_order: Option<usize>,
    terms_used: usize,
    t_closed_ns_median: u128,
    t_closed_ns_p25: u128,
    t_closed_ns_p75: u128,
    t_series_ns_median: u128,
    t_series_ns_p25: u128,
    t_series_ns_p75: u128,
}

#[derive(Debug)]
enum CliError {
    /// Evaluation failure, optionally tagged with the grid point.
    Eval { context: Option<String>, source: Error },
    /// A sweep member failed during `verify`; always exit 2, naming the point.
    VerifyMember { point: String, source: Error },
    Io(std::io::Error),
    Usage(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Eval {
                context: Some(at),
                source,
            } => write!(f, "at {at}: {source}"),
            CliError::Eval {
                context: None,
                source,
            } => write!(f, "{source}"),
            CliError::VerifyMember { point, source } => write!(f, "at {point}: {source}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
            CliError::Usage(m) => write!(f, "{m}"),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Eval {
                source: Error::Truncation { .. },
                ..
            } => 3,
            _ => 2,
        }
    }
}

impl From<Error> for CliError {
    fn from(source: Error) -> Self {
        CliError::Eval {
            context: None,
            source,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

/// Entry point used by the binary; parses `std::env::args`.
pub fn run() -> i32 {
    run_from(std::env::args())
}

/// Parse the given arguments and execute; returns the process exit code.
pub fn run_from<I>(args: I) -> i32
where
    I: IntoIterator<Item = String>,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let outcome = match cli.cmd {
        Cmd::Eval(args) => cmd_eval(args),
        Cmd::Verify(args) => cmd_verify(args),
        Cmd::Table(args) => cmd_table(args),
        Cmd::Bench(args) => cmd_bench(args),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn series_control(tol: Option<f64>, max_terms: Option<usize>) -> SeriesControl {
    let mut control = SeriesControl::default();
    if let Some(t) = tol {
        control.rel_tol = t;
    }
    if let Some(m) = max_terms {
        control.max_terms = m;
    }
    control
}

fn grid_point(
    family: Family,
    j: u32,
    k: u32,
    z: Complex64,
    x: f64,
    func: Option<TestFunction>,
) -> GridPoint {
    // the K variants have fixed indices; user-provided j/k are ignored there
    let (j, k) = family.fixed_index().unwrap_or((j, k));
    GridPoint {
        family,
        j,
        k,
        z,
        x,
        func,
    }
}

fn point_from_args(args: &PointArgs) -> GridPoint {
    grid_point(
        args.family.into(),
        args.j,
        args.k,
        args.z,
        args.x,
        args.func.clone(),
    )
}

/// Run `body` on a rayon pool sized by `HERMITE_MULTISECT_THREADS`
/// (0 or unset = auto).
fn with_thread_pool<T: Send>(body: impl FnOnce() -> T + Send) -> Result<T, CliError> {
    let threads = match std::env::var(THREADS_ENV_VAR) {
        Err(_) => 0,
        Ok(raw) => raw.trim().parse::<usize>().map_err(|_| {
            CliError::Usage(format!("{THREADS_ENV_VAR} must be a non-negative integer, got '{raw}'"))
        })?,
    };
    if threads == 0 {
        return Ok(body());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot build thread pool: {e}")))?;
    Ok(pool.install(body))
}

fn cmd_eval(args: EvalArgs) -> Result<i32, CliError> {
    let control = series_control(args.point.tol, args.point.max_terms);
    let point = point_from_args(&args.point);
    let record = measure_point(&point, &control, args.point.rule_order)?;
    println!("{}", to_json(&record));
    Ok(0)
}

fn cmd_verify(args: VerifyArgs) -> Result<i32, CliError> {
    let control = series_control(None, args.max_terms);
    let families: Vec<Family> = match args.family {
        Some(f) => vec![f.into()],
        None => Family::ALL.to_vec(),
    };
    let mut all_within_tolerance = true;
    for family in families {
        let report = with_thread_pool(|| {
            run_sweep(family, &default_grid(family), &control, args.rule_order)
        })?
        .map_err(|e| CliError::VerifyMember {
            point: e.point,
            source: e.source,
        })?;
        println!("{}", to_json(&report));
        let threshold = args.tol.unwrap_or(family.default_tolerance());
        if report.max_rel_err.is_nan() || report.max_rel_err > threshold {
            eprintln!(
                "verify: family {} max_rel_err {:e} exceeds tolerance {:e}",
                report.family, report.max_rel_err, threshold
            );
            all_within_tolerance = false;
        }
    }
    Ok(if all_within_tolerance { 0 } else { 1 })
}

fn cmd_table(args: TableArgs) -> Result<i32, CliError> {
    use rayon::prelude::*;

    let family: Family = args.family.into();
    let control = series_control(args.tol, args.max_terms);
    let mut grid = Vec::new();
    for &j in &args.j {
        for &k in &args.k {
            for &z in &args.z {
                for &x in &args.x {
                    grid.push(grid_point(family, j, k, z, x, args.func.clone()));
                }
            }
        }
    }

    // evaluate everything before touching the output path, so a failed grid
    // leaves no partial file behind
    let outcomes: Vec<crate::error::Result<OutputRecord>> = with_thread_pool(|| {
        grid.par_iter()
            .map(|p| measure_point(p, &control, args.rule_order))
            .collect()
    })?;
    let mut records = Vec::with_capacity(outcomes.len());
    for (point, outcome) in grid.iter().zip(outcomes) {
        records.push(outcome.map_err(|source| CliError::Eval {
            context: Some(point.describe()),
            source,
        })?);
    }

    let file = File::create(&args.out)?;
    let mut out = BufWriter::new(file);
    match args.format {
        TableFormat::Csv => write_csv(&mut out, &records)?,
        TableFormat::Jsonl => write_jsonl(&mut out, &records)?,
    }
    out.flush()?;
    Ok(0)
}

fn percentile(sorted: &[u128], q: f64) -> u128 {
    let idx = ((sorted.len() - 1) as f64 * q).round() as usize;
    sorted[idx]
}

fn cmd_bench(args: BenchArgs) -> Result<i32, CliError> {
    if args.reps < 1 {
        return Err(CliError::Usage("--reps must be at least 1".into()));
    }
    let control = series_control(args.point.tol, args.point.max_terms);
    let point = point_from_args(&args.point);

    // validate the point and capture terms_used before timing loops
    let probe = series_value(&point, &control)?;
    closed_value(&point, args.point.rule_order)?;

    let mut closed_ns: Vec<u128> = Vec::with_capacity(args.reps);
    for _ in 0..args.reps {
        let t = Instant::now();
        let _ = closed_value(&point, args.point.rule_order)?;
        closed_ns.push(t.elapsed().as_nanos());
    }
    let mut series_ns: Vec<u128> = Vec::with_capacity(args.reps);
    for _ in 0..args.reps {
        let t = Instant::now();
        let _ = series_value(&point, &control)?;
        series_ns.push(t.elapsed().as_nanos());
    }
    closed_ns.sort_unstable();
    series_ns.sort_unstable();

    let summary = BenchSummary {
        family: point.family.name().to_string(),
        j: point.j,
        k: point.k,
        z_re: point.z.re,
        z_im: point.z.im,
        x: point.x,
        reps: args.reps,
        rule_order: matches!(point.family, Family::I).then_some(args.point.rule_order),
        terms_used: probe.terms_used,
        t_closed_ns_median: percentile(&closed_ns, 0.5),
        t_closed_ns_p25: percentile(&closed_ns, 0.25),
        t_closed_ns_p75: percentile(&closed_ns, 0.75),
        t_series_ns_median: percentile(&series_ns, 0.5),
        t_series_ns_p25: percentile(&series_ns, 0.25),
        t_series_ns_p75: percentile(&series_ns, 0.75),
    };
    println!("{}", to_json(&summary));
    Ok(0)
}
