//! Command-line front end.
//!
//! Exit codes: 0 success (including runs whose data contradict the closed
//! form), 1 usage error, 2 internal invariant violation.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::census::{class_number_dirichlet, class_number_forms, census, verify_watkins, Verdict};
use crate::error::Error;
use crate::numtheory::Discriminant;
use crate::paperlab::{self, compare, predicted_counts, predicted_zeta};
use crate::report::{self, Meta};
use crate::series::{expand_rational, DEFAULT_ORDER};
use crate::watkins::load_watkins;

/// Environment variable consulted for the worker count when `--workers` is absent.
pub const WORKERS_ENV: &str = "CLASSZETA_WORKERS";

/// Census bound used by `report` when neither `--bound` nor `--watkins` is given;
/// certifies every h ≤ 31.
pub const DEFAULT_REPORT_BOUND: u64 = 170_000;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INTERNAL: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "classzeta", version, about = "Class numbers of imaginary quadratic fields and their counting zeta function")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
struct WorkerArgs {
    /// Number of census worker threads [default: $CLASSZETA_WORKERS, else all cores]
    #[arg(long)]
    workers: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Class number of one negative fundamental discriminant
    Classnum {
        #[arg(long, allow_negative_numbers = true)]
        disc: i64,
        /// Also evaluate the analytic class number formula and compare
        #[arg(long)]
        oracle: bool,
    },
    /// Count fundamental discriminants with |D| <= bound by class number
    Census {
        #[arg(long)]
        bound: u64,
        #[command(flatten)]
        workers: WorkerArgs,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a census and check it against the embedded h <= 100 table
    VerifyCensus {
        #[arg(long)]
        bound: u64,
        #[command(flatten)]
        workers: WorkerArgs,
    },
    /// Power-series coefficients of (1+s^2)(1-s^6)/(1-s)^8
    Expand {
        #[arg(long)]
        order: usize,
    },
    /// Predicted class-number counts K_1..K_hmax
    Counts {
        #[arg(long)]
        hmax: usize,
    },
    /// Predicted vs empirical counts and the prime lower-bound check
    Report {
        #[arg(long, conflicts_with = "watkins")]
        bound: Option<u64>,
        /// Use the embedded table as empirical data instead of a census
        #[arg(long)]
        watkins: bool,
        #[arg(long, default_value_t = 100)]
        hmax: usize,
        #[command(flatten)]
        workers: WorkerArgs,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the closed form's internal identities
    Selftest {
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
    },
}

impl WorkerArgs {
    fn resolve(&self) -> usize {
        if let Some(w) = self.workers {
            return w.max(1);
        }
        std::env::var(WORKERS_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .filter(|&w| w > 0)
            .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
    }
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_usage() {
            Failure::Usage(e.to_string())
        } else {
            Failure::Internal(e.to_string())
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Internal(format!("i/o: {e}"))
    }
}

type CmdResult = std::result::Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command, writing
/// data to `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Internal(msg)) => {
            let _ = writeln!(err, "internal error: {msg}");
            EXIT_INTERNAL
        }
    }
}

fn emit(text: &str, path: Option<&PathBuf>, out: &mut dyn Write) -> std::result::Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, text)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", p.display()))),
        None => Ok(out.write_all(text.as_bytes())?),
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    match cmd {
        Command::Classnum { disc, oracle } => {
            let d = Discriminant::new(disc)?;
            let h = class_number_forms(d);
            writeln!(out, "h({d}) = {h}")?;
            if oracle {
                let hd = class_number_dirichlet(d)?;
                writeln!(out, "forms: {h}")?;
                writeln!(out, "dirichlet: {hd}")?;
                if h != hd {
                    return Err(Failure::Internal(format!("class number routes disagree for {d}: {h} vs {hd}")));
                }
                writeln!(out, "agree: yes")?;
            }
            Ok(EXIT_OK)
        }
        Command::Census { bound, workers, format, out: path } => {
            let table = census(bound, workers.resolve())?;
            let text = match format {
                Format::Csv => report::census_csv(&table)?,
                Format::Json => report::census_json(&table)?,
            };
            emit(&text, path.as_ref(), out)?;
            Ok(EXIT_OK)
        }
        Command::VerifyCensus { bound, workers } => {
            let reference = load_watkins()?;
            let table = census(bound, workers.resolve())?;
            let checks = verify_watkins(&table, &reference);
            let mut tally = [0usize; 3];
            for c in &checks {
                writeln!(out, "h={} expected={} actual={} {}", c.h, c.expected, c.actual, c.verdict.as_str())?;
                tally[c.verdict as usize] += 1;
            }
            writeln!(
                out,
                "bound={bound} match={} mismatch={} inconclusive={}",
                tally[Verdict::Match as usize],
                tally[Verdict::Mismatch as usize],
                tally[Verdict::Inconclusive as usize]
            )?;
            if tally[Verdict::Mismatch as usize] > 0 {
                writeln!(err, "census disagrees with the reference table")?;
                return Ok(EXIT_INTERNAL);
            }
            Ok(EXIT_OK)
        }
        Command::Expand { order } => {
            let series = expand_rational(&predicted_zeta(), order);
            out.write_all(report::series_csv(&series).as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Counts { hmax } => {
            if hmax == 0 {
                return Err(Failure::Usage("--hmax must be at least 1".into()));
            }
            let k = predicted_counts(hmax)?;
            out.write_all(report::sequence_csv(&k, 1).as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Report { bound, watkins, hmax, workers, format, out: path } => {
            let reference = load_watkins()?;
            let (report, meta) = if watkins {
                (compare(&reference, &reference, hmax)?, Meta::new("reference-table", None, Some(hmax)))
            } else {
                let bound = bound.unwrap_or(DEFAULT_REPORT_BOUND);
                let table = census(bound, workers.resolve())?;
                (compare(&table, &reference, hmax)?, Meta::new("census", Some(bound), Some(hmax)))
            };
            let text = match format {
                Format::Csv => report::report_csv(&report)?,
                Format::Json => report::report_json(meta, &report)?,
            };
            emit(&text, path.as_ref(), out)?;
            let s = &report.summary;
            if !s.prime_bound_violations.is_empty() {
                writeln!(err, "finding: #p < 2p for p in {:?}", s.prime_bound_violations)?;
            }
            if !s.dold_failures_empirical.is_empty() {
                writeln!(err, "finding: #h not divisible by h for {} class numbers", s.dold_failures_empirical.len())?;
            }
            Ok(EXIT_OK)
        }
        Command::Selftest { order } => {
            if order == 0 {
                return Err(Failure::Usage("--order must be at least 1".into()));
            }
            let checks = [
                paperlab::identity_a(order)?,
                paperlab::identity_b(),
                paperlab::identity_c(order)?,
                paperlab::identity_dold(order)?,
            ];
            let mut ok = true;
            for c in &checks {
                let verdict = if c.holds { "pass" } else { "FAIL" };
                writeln!(out, "identity {}: {verdict} ({})", c.name, c.detail)?;
                ok &= c.holds;
            }
            if let Some(m) = paperlab::verbatim_lambert_divergence(order)? {
                writeln!(
                    err,
                    "finding: exp(sum K_m/m * s^m/(1-s^m)) read literally differs from the closed form at s^{m}"
                )?;
            }
            Ok(if ok { EXIT_OK } else { EXIT_INTERNAL })
        }
    }
}
