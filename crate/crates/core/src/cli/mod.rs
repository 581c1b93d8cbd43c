//! The `structdet` command line.
//!
//! ```text
//! structdet eval --diag 1,2,4 [--method closed|expanded|elimination|bareiss] [--dump-matrix]
//! structdet sequence <count> [--format plain|json|csv] [--check-known]
//! structdet verify <count> [--oracle-cutoff N] [--bfile PATH]
//! structdet bench <n,...> [--methods expanded,bareiss] [--repeat 3] [--force]
//! ```
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error,
//! 3 domain precondition violated.

mod bench;
mod output;

use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::prime_sequence::{
    parse_bfile, prime_det_sequence, verify_sequence, VerifyOptions, KNOWN_VALUES,
};
use crate::structured_det::{
    det_bareiss, det_closed_form, det_elimination, det_expanded, materialize_matrix, DiagonalShifts,
};

pub use bench::{bench, BenchRow, DEFAULT_BAREISS_CAP};
pub use output::{write_records, OutputFormat};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "structdet",
    version,
    about = "Exact determinants of all-ones-plus-diagonal matrices"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Closed,
    Expanded,
    Elimination,
    Bareiss,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Closed => "closed",
            Method::Expanded => "expanded",
            Method::Elimination => "elimination",
            Method::Bareiss => "bareiss",
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Determinant of the matrix with diagonal 1+a_k and ones elsewhere.
    Eval {
        /// Comma-separated shifts a_1,...,a_n.
        #[arg(long, allow_hyphen_values = true)]
        diag: String,
        #[arg(long, value_enum, default_value_t = Method::Expanded)]
        method: Method,
        /// Print the materialized matrix before the determinant.
        #[arg(long)]
        dump_matrix: bool,
    },
    /// Emit the prime-diagonal determinants D_1..D_count.
    Sequence {
        count: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
        /// Compare against the six published values.
        #[arg(long)]
        check_known: bool,
    },
    /// Cross-check recurrence, direct evaluation and Bareiss elimination.
    Verify {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
        #[arg(long, default_value_t = crate::prime_sequence::DEFAULT_ORACLE_CUTOFF)]
        oracle_cutoff: usize,
        /// OEIS b-file with "n value" lines to compare against.
        #[arg(long)]
        bfile: Option<PathBuf>,
    },
    /// Median timings as CSV: method,n,median_seconds.
    Bench {
        /// Comma-separated matrix sizes.
        #[arg(value_delimiter = ',', required = true, value_parser = clap::value_parser!(u64).range(1..))]
        sizes: Vec<u64>,
        #[arg(long, value_enum, value_delimiter = ',', default_values_t = [Method::Expanded, Method::Bareiss])]
        methods: Vec<Method>,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
        repeat: u64,
        /// Run Bareiss even above the size cap.
        #[arg(long)]
        force: bool,
        #[arg(long, default_value_t = DEFAULT_BAREISS_CAP)]
        bareiss_cap: usize,
    },
}

/// Runs the CLI with explicit streams and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write, color: bool) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{rendered}");
            return code;
        }
    };
    match dispatch(cli.command, out, err, color) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(
    cmd: Command,
    out: &mut dyn Write,
    err: &mut dyn Write,
    color: bool,
) -> io::Result<i32> {
    match cmd {
        Command::Eval {
            diag,
            method,
            dump_matrix,
        } => cmd_eval(&diag, method, dump_matrix, out, err),
        Command::Sequence {
            count,
            format,
            check_known,
        } => cmd_sequence(count, format, check_known, out, err),
        Command::Verify {
            count,
            oracle_cutoff,
            bfile,
        } => cmd_verify(count as usize, oracle_cutoff, bfile, out, err, color),
        Command::Bench {
            sizes,
            methods,
            repeat,
            force,
            bareiss_cap,
        } => {
            let sizes: Vec<usize> = sizes.into_iter().map(|n| n as usize).collect();
            let cap = if force { None } else { Some(bareiss_cap) };
            let rows = bench(&sizes, &methods, repeat as usize, cap, |method, n| {
                let _ = writeln!(
                    err,
                    "skipping {} at n={n}: above cap {bareiss_cap} (use --force)",
                    method.name()
                );
            });
            writeln!(out, "method,n,median_seconds")?;
            for row in rows {
                writeln!(
                    out,
                    "{},{},{:.9}",
                    row.method.name(),
                    row.n,
                    row.median_seconds
                )?;
            }
            Ok(EXIT_OK)
        }
    }
}

fn domain_error(err: &mut dyn Write, e: &Error) -> io::Result<i32> {
    writeln!(err, "zero shift not allowed for this method: {e}")?;
    Ok(EXIT_DOMAIN)
}

pub fn cmd_eval(
    diag: &str,
    method: Method,
    dump_matrix: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<i32> {
    let shifts: DiagonalShifts = match diag.parse() {
        Ok(s) => s,
        Err(e) => {
            writeln!(err, "error: --diag: {e}")?;
            return Ok(EXIT_USAGE);
        }
    };
    if dump_matrix {
        write!(out, "{}", materialize_matrix(&shifts))?;
    }
    match method {
        Method::Expanded => writeln!(out, "{}", det_expanded(&shifts))?,
        Method::Closed => match det_closed_form(&shifts) {
            Ok(v) => writeln!(out, "{v}")?,
            Err(e) => return domain_error(err, &e),
        },
        Method::Elimination => match det_elimination(&shifts) {
            Ok((v, trace)) => {
                writeln!(out, "{v}")?;
                writeln!(out, "pivot_b={}", trace.pivot_fraction())?;
            }
            Err(e) => return domain_error(err, &e),
        },
        Method::Bareiss => {
            let m = materialize_matrix(&shifts);
            let v = det_bareiss(m.rows()).expect("materialized matrix is square and nonempty");
            writeln!(out, "{v}")?;
        }
    }
    Ok(EXIT_OK)
}

pub fn cmd_sequence(
    count: usize,
    format: OutputFormat,
    check_known: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<i32> {
    let records = prime_det_sequence(count);
    write_records(out, &records, format)?;
    if check_known {
        let mismatches = output::known_mismatches(&records, &KNOWN_VALUES);
        if !mismatches.is_empty() {
            for (n, expected, got) in &mismatches {
                writeln!(err, "D_{n}: expected {expected}, got {got}")?;
            }
            return Ok(EXIT_MISMATCH);
        }
    }
    Ok(EXIT_OK)
}

pub fn cmd_verify(
    count: usize,
    oracle_cutoff: usize,
    bfile: Option<PathBuf>,
    out: &mut dyn Write,
    err: &mut dyn Write,
    color: bool,
) -> io::Result<i32> {
    let reference = match bfile {
        None => None,
        Some(path) => {
            let text = match std::fs::read_to_string(&path) {
                Ok(t) => t,
                Err(e) => {
                    writeln!(err, "error: cannot read {}: {e}", path.display())?;
                    return Ok(EXIT_USAGE);
                }
            };
            match parse_bfile(&text) {
                Ok(v) => Some(v),
                Err(e) => {
                    writeln!(err, "error: {}: {e}", path.display())?;
                    return Ok(EXIT_USAGE);
                }
            }
        }
    };
    let has_reference = reference.is_some();
    let options = VerifyOptions {
        oracle_cutoff,
        reference,
    };
    let report = verify_sequence(count, &options).expect("count is at least 1");
    output::write_report(out, &report, has_reference, color)?;
    match report.first_failure() {
        None => Ok(EXIT_OK),
        Some(t) => {
            writeln!(err, "verification failed at n={}", t.n)?;
            Ok(EXIT_MISMATCH)
        }
    }
}
