//! The `sidonset` command line.
//!
//! Exit codes: 0 success, 1 verification failed, 2 usage or format error,
//! 3 construction failure.

use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use sidonset_core::format::{read_set, write_histogram_csv, write_profile_csv, write_set};
use sidonset_core::oracle::{self, MAX_SEARCH_DIMENSION};
use sidonset_core::ruzsa::{DEFAULT_MAX_ATTEMPTS, DEFAULT_SLACK};
use sidonset_core::{choose3, BchParams, Error, RuzsaParams, SidonSet};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_CONSTRUCTION: u8 = 3;

/// Largest n the oracle search runs without `--long`.
const ORACLE_QUICK_MAX: u32 = 5;

#[derive(Debug, Parser)]
#[command(
    name = "sidonset",
    version,
    about = "Build, verify and analyze Sidon sets in Z_2^n"
)]
pub struct Cli {
    /// Worker threads for coverage computations (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the BCH Sidon set {(x, x^3)} in dimension m.
    Bch(BchArgs),
    /// Check that a set file is Sidon (and optionally maximal).
    Verify(VerifyArgs),
    /// Compute the triple-coverage profile of a Sidon set.
    Cover(CoverArgs),
    /// Build a small maximal Sidon set by lifting a BCH set from a quotient.
    Construct(ConstructArgs),
    /// Exhaustive reference searches for tiny dimensions.
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Debug, Args)]
pub struct BchArgs {
    #[arg(long)]
    pub m: u32,
    /// Set file to write; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long)]
    pub maximal: bool,
}

#[derive(Debug, Args)]
pub struct CoverArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Per-point CSV (`point_hex,count`).
    #[arg(long)]
    pub profile: Option<PathBuf>,
    /// Histogram CSV (`count,num_points`).
    #[arg(long)]
    pub histogram: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(long)]
    pub n: u32,
    /// Coverage slack constant.
    #[arg(long = "T", default_value_t = DEFAULT_SLACK)]
    pub slack: f64,
    /// Quotient dimension; computed from n and T when absent.
    #[arg(long)]
    pub m: Option<u32>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Maximum number of random lifts to try.
    #[arg(long, default_value_t = DEFAULT_MAX_ATTEMPTS)]
    pub retries: u32,
    #[arg(long)]
    pub out: PathBuf,
    /// JSON report path; defaults to the set path with `.json` appended.
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum OracleCommand {
    /// Smallest maximal Sidon set in Z_2^n by exhaustive search.
    MinMaximal(MinMaximalArgs),
}

#[derive(Debug, Args)]
pub struct MinMaximalArgs {
    #[arg(long)]
    pub n: u32,
    /// Allow n = 6.
    #[arg(long)]
    pub long: bool,
    /// Witness set file; printed after the size when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// A failed command: exit code plus message for stderr.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn verify(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_VERIFY_FAILED,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::AttemptsExhausted(_) | Error::QuotientNotMaximal(_) => EXIT_CONSTRUCTION,
            _ => EXIT_USAGE,
        };
        let mut message = e.to_string();
        if let Error::DimensionTooSmall { .. } = e {
            message.push_str("; for tiny n try `sidonset oracle min-maximal`");
        }
        Failure { code, message }
    }
}

fn io_failure(path: &Path, e: io::Error) -> Failure {
    Failure::usage(format!("{}: {e}", path.display()))
}

type CmdResult = Result<(), Failure>;

fn load_set(path: &Path) -> Result<SidonSet, Failure> {
    let file = File::open(path).map_err(|e| io_failure(path, e))?;
    read_set(BufReader::new(file)).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, f: impl FnOnce(&mut dyn Write) -> io::Result<()>) -> CmdResult {
    let file = File::create(path).map_err(|e| io_failure(path, e))?;
    let mut w = BufWriter::new(file);
    f(&mut w)
        .and_then(|_| w.flush())
        .map_err(|e| io_failure(path, e))
}

/// Runs one parsed command, writing human-readable output to `out`.
pub fn run(cli: Cli, out: &mut dyn Write) -> CmdResult {
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(threads) = cli.threads {
        if threads == 0 {
            return Err(Failure::usage("--threads must be at least 1"));
        }
        pool = pool.num_threads(threads);
    }
    let pool = pool.build().map_err(|e| Failure::usage(e.to_string()))?;
    let mut buf = Vec::new();
    let result = pool.install(|| dispatch(cli.command, &mut buf));
    out.write_all(&buf)
        .map_err(|e| Failure::usage(format!("stdout: {e}")))?;
    result
}

fn dispatch(command: Command, out: &mut dyn Write) -> CmdResult {
    match command {
        Command::Bch(a) => cmd_bch(a, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Cover(a) => cmd_cover(a, out),
        Command::Construct(a) => cmd_construct(a, out),
        Command::Oracle(OracleCommand::MinMaximal(a)) => cmd_min_maximal(a, out),
    }
}

fn say(out: &mut dyn Write, line: std::fmt::Arguments<'_>) -> CmdResult {
    out.write_fmt(line)
        .and_then(|_| out.write_all(b"\n"))
        .map_err(|e| Failure::usage(format!("stdout: {e}")))
}

macro_rules! say {
    ($out:expr, $($arg:tt)*) => { say($out, format_args!($($arg)*)) };
}

pub fn cmd_bch(args: BchArgs, out: &mut dyn Write) -> CmdResult {
    if args.m % 2 != 0 {
        return Err(Failure::usage(format!("m must be even, got {}", args.m)));
    }
    let params = BchParams::new(args.m)?;
    let mut set = params.build();
    let sidon = set.is_sidon();
    match &args.out {
        Some(path) => {
            write_file(path, |w| write_set(&set, w))?;
            say!(out, "m: {}", params.m())?;
            say!(out, "t: {}", params.t())?;
            say!(out, "modulus: {:#x}", params.field().modulus())?;
            say!(out, "size: {}", set.len())?;
            say!(out, "sidon: {sidon}")?;
        }
        None => {
            write_set(&set, &mut *out).map_err(|e| Failure::usage(format!("stdout: {e}")))?;
            eprintln!(
                "m: {} t: {} modulus: {:#x} size: {} sidon: {sidon}",
                params.m(),
                params.t(),
                params.field().modulus(),
                set.len()
            );
        }
    }
    Ok(())
}

pub fn cmd_verify(args: VerifyArgs, out: &mut dyn Write) -> CmdResult {
    let mut set = load_set(&args.input)?;
    if let Err(c) = set.certify() {
        return Err(Failure::verify(format!("sidon: false\nwitness: {c}")));
    }
    say!(out, "size: {}", set.len())?;
    say!(out, "sidon: true")?;
    if args.maximal {
        if let Some(x) = set.first_uncovered() {
            return Err(Failure::verify(format!("maximal: false\nuncovered: {x}")));
        }
        say!(out, "maximal: true")?;
    }
    Ok(())
}

pub fn cmd_cover(args: CoverArgs, out: &mut dyn Write) -> CmdResult {
    let mut set = load_set(&args.input)?;
    if let Err(c) = set.certify() {
        return Err(Failure::verify(format!("input is not Sidon: {c}")));
    }
    let profile = set.cover_profile();
    if let Some(path) = &args.profile {
        write_file(path, |w| write_profile_csv(&profile, w))?;
    }
    if let Some(path) = &args.histogram {
        write_file(path, |w| write_histogram_csv(&profile, w))?;
    }
    let show = |v: Option<u32>| v.map_or_else(|| "none".to_string(), |c| c.to_string());
    say!(out, "size: {}", set.len())?;
    say!(
        out,
        "min_cover_non_member: {}",
        show(profile.min_cover_off_set)
    )?;
    say!(
        out,
        "max_cover_non_member: {}",
        show(profile.max_cover_off_set)
    )?;
    say!(out, "triples: {}", choose3(set.len() as u64))?;
    say!(out, "checksum: {}", profile.total())?;
    Ok(())
}

pub fn cmd_construct(args: ConstructArgs, out: &mut dyn Write) -> CmdResult {
    let params = RuzsaParams {
        n: args.n,
        slack: args.slack,
        m_override: args.m,
        seed: args.seed,
        max_attempts: args.retries,
    };
    let report = sidonset_core::construct_small_maximal(&params)?;
    let report_path = args.report.clone().unwrap_or_else(|| {
        let mut p = args.out.clone().into_os_string();
        p.push(".json");
        PathBuf::from(p)
    });
    write_file(&args.out, |w| write_set(&report.set, w))?;
    write_file(&report_path, |w| w.write_all(report.to_json().as_bytes()))?;

    say!(out, "n: {} m: {} T: {}", report.n, report.m, report.slack)?;
    say!(out, "attempts: {}", report.attempts_used)?;
    say!(out, "j_min: {}", report.j_min)?;
    say!(out, "union_bound: {:e}", report.union_bound)?;
    say!(
        out,
        "size: {} (|B| = {}, |X| = {})",
        report.size_s,
        report.size_b,
        report.size_x
    )?;
    if !report.maximality_verified {
        return Err(Failure::verify("maximal: false"));
    }
    say!(out, "maximal: true")?;
    Ok(())
}

pub fn cmd_min_maximal(args: MinMaximalArgs, out: &mut dyn Write) -> CmdResult {
    let limit = if args.long {
        MAX_SEARCH_DIMENSION
    } else {
        ORACLE_QUICK_MAX
    };
    if args.n == 0 || args.n > limit {
        let hint = if args.n == MAX_SEARCH_DIMENSION {
            " (n = 6 needs --long)"
        } else {
            ""
        };
        return Err(Failure::usage(format!(
            "n must be in 1..={limit}, got {}{hint}",
            args.n
        )));
    }
    let result = oracle::min_maximal_size(args.n)?;
    say!(out, "{}", result.size)?;
    match &args.out {
        Some(path) => write_file(path, |w| write_set(&result.witness, w))?,
        None => write_set(&result.witness, &mut *out)
            .map_err(|e| Failure::usage(format!("stdout: {e}")))?,
    }
    Ok(())
}
