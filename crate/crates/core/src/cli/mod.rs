//! The `symmpol` command line.
//!
//! Partition literals are comma-separated parts (`3,2,1`; optional
//! parentheses; `()` or an empty string for the empty partition). Cycle types
//! are `j:k` pairs meaning `k` cycles of length `j`, so `2:1,1:3` is one
//! transposition and three fixed points.
//!
//! Exit codes: 0 success, 1 usage error, 2 domain error, 3 verification
//! failure. Errors print one line to standard error and nothing to standard
//! output.

mod bench;
mod verify;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::characters::{character, dimension, z_order, CharacterError, CharacterQuery};
use crate::partitions::{
    enumerate_partitions, make_partition, ConjugacyClass, PartitionError, YoungDiagram,
};
use crate::polyalgebra::Polynomial;
use crate::symfun::{self, AlphabetContext, SymFunError};

pub use bench::BenchTarget;
pub use verify::{CheckOutcome, VerifyScope, MAX_VERIFY_BOXES};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_DOMAIN: u8 = 2;
pub const EXIT_VERIFY: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "symmpol",
    version,
    about = "Exact integer partitions, symmetric polynomials and symmetric-group characters",
    after_help = "Partition literals: comma-separated parts such as 3,2,1 (\"()\" is the empty partition).\n\
                  Cycle types: j:k pairs such as 2:1,1:3 (k cycles of length j)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Shape statistics, transpose, Frobenius coordinates and class vector.
    Partition {
        #[arg(value_parser = parts_arg, allow_hyphen_values = true)]
        parts: PartsLiteral,
        #[arg(long)]
        json: bool,
    },
    /// Draws a Young diagram, shortest row first.
    Draw {
        #[arg(value_parser = parts_arg, allow_hyphen_values = true)]
        parts: PartsLiteral,
        /// Box symbol: 0 '*', 1 '■', 2 '□', 3 '●', 4 '#'.
        #[arg(long, default_value_t = 4)]
        symbol: usize,
    },
    /// Lists all partitions of n in ACCELASC order.
    List {
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Complete homogeneous polynomial h_n in Miwa coordinates.
    Homogeneous {
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Elementary symmetric polynomial e_n in Miwa coordinates.
    Elementary {
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// (Skew-)Schur polynomial in Miwa coordinates via Jacobi–Trudi.
    Schur {
        #[arg(value_parser = parts_arg, allow_hyphen_values = true)]
        parts: PartsLiteral,
        /// Inner partition μ of s_{λ/μ}.
        #[arg(long, value_parser = parts_arg, allow_hyphen_values = true)]
        skew: Option<PartsLiteral>,
        #[arg(long)]
        json: bool,
    },
    /// Monomial symmetric polynomial in x_1..x_N.
    Monomial {
        #[arg(value_parser = parts_arg, allow_hyphen_values = true)]
        parts: PartsLiteral,
        #[arg(long, default_value_t = 3)]
        vars: usize,
        #[arg(long)]
        json: bool,
    },
    /// Hall–Littlewood polynomial P_λ(x_1..x_N; Q).
    #[command(name = "hall-littlewood")]
    HallLittlewood {
        #[arg(value_parser = parts_arg, allow_hyphen_values = true)]
        parts: PartsLiteral,
        #[arg(long, default_value_t = 3)]
        vars: usize,
        #[arg(long)]
        json: bool,
    },
    /// Symmetric-group character χ^λ(μ).
    Character {
        #[arg(value_parser = parts_arg, allow_hyphen_values = true)]
        parts: PartsLiteral,
        #[arg(long, value_parser = cycles_arg)]
        cycles: CycleLiteral,
    },
    /// Runs the invariant suites.
    Verify {
        scope: VerifyScope,
        #[arg(long, default_value_t = 6)]
        max_boxes: usize,
    },
    /// Times partition enumeration or a Hall–Littlewood evaluation.
    Bench {
        target: BenchTarget,
        size: usize,
        #[arg(long)]
        csv: bool,
    },
}

#[derive(Debug)]
enum CliError {
    Domain(String),
    VerificationFailed(String),
}

impl From<PartitionError> for CliError {
    fn from(e: PartitionError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<CharacterError> for CliError {
    fn from(e: CharacterError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<SymFunError> for CliError {
    fn from(e: SymFunError) -> Self {
        CliError::Domain(e.to_string())
    }
}

/// Raw partition literal; validated by [`make_partition`] at execution.
#[derive(Debug, Clone, PartialEq, Eq)]
struct PartsLiteral(Vec<i64>);

#[derive(Debug, Clone, PartialEq, Eq)]
struct CycleLiteral(Vec<(i64, i64)>);

fn parts_arg(s: &str) -> Result<PartsLiteral, String> {
    parse_parts(s).map(PartsLiteral)
}

fn cycles_arg(s: &str) -> Result<CycleLiteral, String> {
    parse_cycles(s).map(CycleLiteral)
}

/// Parses a partition literal into raw integers; validation happens later.
pub fn parse_parts(s: &str) -> Result<Vec<i64>, String> {
    let s = s.trim();
    let s = s
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .unwrap_or(s)
        .trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .map_err(|_| format!("malformed partition literal {s:?}"))
        })
        .collect()
}

/// Parses a cycle type `j:k,j:k`.
pub fn parse_cycles(s: &str) -> Result<Vec<(i64, i64)>, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|pair| {
            let bad = || format!("malformed cycle type {s:?}; expected j:k pairs");
            let (j, k) = pair.split_once(':').ok_or_else(bad)?;
            Ok((
                j.trim().parse().map_err(|_| bad())?,
                k.trim().parse().map_err(|_| bad())?,
            ))
        })
        .collect()
}

#[derive(Serialize)]
struct PolynomialReport<'a> {
    family: &'a str,
    lambda: Vec<usize>,
    mu: Option<Vec<usize>>,
    vars: Option<usize>,
    terms: &'a Polynomial,
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let rendered = e.to_string();
            let line = rendered.lines().next().unwrap_or("error: invalid usage");
            let _ = writeln!(err, "{line}");
            return EXIT_USAGE;
        }
    };
    match execute(cli.command) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            EXIT_OK
        }
        Err(CliError::Domain(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_DOMAIN
        }
        Err(CliError::VerificationFailed(report)) => {
            let _ = out.write_all(report.as_bytes());
            EXIT_VERIFY
        }
    }
}

fn polynomial_output(
    p: &Polynomial,
    json: bool,
    family: &str,
    lambda: Vec<usize>,
    mu: Option<Vec<usize>>,
    vars: Option<usize>,
) -> String {
    if json {
        let report = PolynomialReport {
            family,
            lambda,
            mu,
            vars,
            terms: p,
        };
        format!(
            "{}\n",
            serde_json::to_string(&report).expect("polynomials always serialize")
        )
    } else {
        format!("{p}\n")
    }
}

fn execute(command: Command) -> Result<String, CliError> {
    Ok(match command {
        Command::Partition { parts, json } => partition_report(&make_partition(&parts.0)?, json),
        Command::Draw { parts, symbol } => {
            let drawing = make_partition(&parts.0)?.draw(symbol)?;
            if drawing.is_empty() {
                drawing
            } else {
                format!("{drawing}\n")
            }
        }
        Command::List { n, json } => {
            let all = enumerate_partitions(n);
            if json {
                let raw: Vec<&[usize]> = all.iter().map(|d| d.parts()).collect();
                format!("{}\n", serde_json::to_string(&raw).expect("serializable"))
            } else {
                all.iter().map(|d| format!("{d}\n")).collect()
            }
        }
        Command::Homogeneous { n, json } => polynomial_output(
            &symfun::homogeneous(n),
            json,
            "homogeneous",
            vec![n],
            None,
            None,
        ),
        Command::Elementary { n, json } => polynomial_output(
            &symfun::elementary(n),
            json,
            "elementary",
            vec![n],
            None,
            None,
        ),
        Command::Schur { parts, skew, json } => {
            let lam = make_partition(&parts.0)?;
            let mu = skew.as_ref().map(|m| make_partition(&m.0)).transpose()?;
            let p = symfun::schur(&lam, mu.as_ref());
            let mu_parts = mu.map(|m| m.parts().to_vec());
            polynomial_output(&p, json, "schur", lam.parts().to_vec(), mu_parts, None)
        }
        Command::Monomial { parts, vars, json } => {
            let lam = make_partition(&parts.0)?;
            let ctx = AlphabetContext::new(vars)?;
            let p = symfun::monomial(&lam, &ctx);
            polynomial_output(&p, json, "monomial", lam.parts().to_vec(), None, Some(vars))
        }
        Command::HallLittlewood { parts, vars, json } => {
            let lam = make_partition(&parts.0)?;
            let ctx = AlphabetContext::new(vars)?;
            let p = symfun::hall_littlewood(&lam, &ctx)?;
            polynomial_output(
                &p,
                json,
                "hall-littlewood",
                lam.parts().to_vec(),
                None,
                Some(vars),
            )
        }
        Command::Character { parts, cycles } => {
            let shape = make_partition(&parts.0)?;
            let class = ConjugacyClass::new(cycles.0)?;
            let q = CharacterQuery::new(shape, class)?;
            format!("{}\n", character(&q))
        }
        Command::Verify { scope, max_boxes } => {
            if max_boxes > MAX_VERIFY_BOXES {
                return Err(CliError::Domain(format!(
                    "--max-boxes {max_boxes} exceeds the limit of {MAX_VERIFY_BOXES}"
                )));
            }
            let outcomes = verify::run_scope(scope, max_boxes);
            let report = verify::render(scope, max_boxes, &outcomes);
            if outcomes.iter().all(CheckOutcome::passed) {
                report
            } else {
                return Err(CliError::VerificationFailed(report));
            }
        }
        Command::Bench { target, size, csv } => {
            bench::run(target, size, csv).map_err(CliError::Domain)?
        }
    })
}

fn partition_report(d: &YoungDiagram, json: bool) -> String {
    let p = d.profile();
    let f = d.frobenius();
    let class = d.to_conjugacy();
    if json {
        let value = serde_json::json!({
            "parts": d.parts(),
            "conjugacy": class.multiplicities(),
            "rows": p.rows,
            "columns": p.columns,
            "boxes": p.boxes,
            "diagonal": p.diagonal,
            "transpose": d.transpose().parts(),
            "frobenius": { "arms": f.arms, "legs": f.legs },
            "dimension": dimension(d).to_string(),
            "z": z_order(&class).to_string(),
        });
        format!("{value}\n")
    } else {
        format!(
            "partition: {d}\nconjugacy: {class}\nrows: {}\ncolumns: {}\nboxes: {}\ndiagonal: {}\n\
             transpose: {}\nfrobenius: {f}\ndimension: {}\nz: {}\n",
            p.rows,
            p.columns,
            p.boxes,
            p.diagonal,
            d.transpose(),
            dimension(d),
            z_order(&class),
        )
    }
}

impl std::fmt::Display for VerifyScope {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = self.to_possible_value().expect("no skipped variants");
        f.write_str(name.get_name())
    }
}

impl std::fmt::Display for BenchTarget {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = self.to_possible_value().expect("no skipped variants");
        f.write_str(name.get_name())
    }
}
