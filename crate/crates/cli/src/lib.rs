//! The `eqlr` command line: single coefficients, tables, conjecture scans and the full
//! verification run. Every verb renders as text, JSON or CSV, and output is sorted before it
//! is written so that it does not depend on the thread count.

mod output;
mod verbs;
pub mod verify;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use eqlr::horn::CoeffKind;
use eqlr::par::Exec;
use eqlr::shapes::{Partition, Rectangle, StrictPartition};

pub use output::{Format, Output};

/// Embedded copy of `golden/star_n3.csv`.
pub const STAR_N3_GOLDEN: &str = include_str!("../golden/star_n3.csv");

#[derive(Debug, Parser)]
#[command(name = "eqlr", version, about = "Structure constants of (equivariant, shifted) Schubert calculus")]
pub struct Cli {
    /// Output format; `star-table` defaults to csv, everything else to text.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Worker threads for scans.
    #[arg(long, global = true, env = "EQLR_THREADS")]
    pub threads: Option<usize>,
    /// Run scans on the calling thread only.
    #[arg(long, global = true)]
    pub sequential: bool,
    /// Write the report here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LrMethodArg {
    Jdt,
    Ballot,
    Polytope,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EqMethodArg {
    Ejdt,
    Eballot,
    Factorial,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ShiftedMethodArg {
    Jdt,
    Ballot,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StarMethod {
    /// `D` from edge-labeled shifted tableaux.
    Tableaux,
    /// Products of `σ_λ` in the Anderson-Fulton ring.
    Ring,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Lr,
    Eq,
}

impl From<KindArg> for CoeffKind {
    fn from(k: KindArg) -> CoeffKind {
        match k {
            KindArg::Lr => CoeffKind::Lr,
            KindArg::Eq => CoeffKind::EqLr,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SaturationKind {
    Lr,
    Eq,
    Shifted,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Littlewood-Richardson coefficient c.
    Lr {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long, value_parser = parse_partition)]
        nu: Partition,
        /// Ambient rectangle `KxW`; defaults to the smallest one holding all three shapes.
        #[arg(long, value_parser = parse_rect)]
        rect: Option<Rectangle>,
        #[arg(long, value_enum, default_value = "all")]
        method: LrMethodArg,
    },
    /// Equivariant structure constant C for Gr_k(C^n), `KxW = k x (n-k)`.
    EqLr {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long, value_parser = parse_partition)]
        nu: Partition,
        #[arg(long, value_parser = parse_rect)]
        rect: Option<Rectangle>,
        #[arg(long, value_enum, default_value = "all")]
        method: EqMethodArg,
    },
    /// Shifted coefficient o, with l alongside.
    ShiftedLr {
        #[arg(long, value_parser = parse_strict)]
        lambda: StrictPartition,
        #[arg(long, value_parser = parse_strict)]
        mu: StrictPartition,
        #[arg(long, value_parser = parse_strict)]
        nu: StrictPartition,
        /// Staircase bound; defaults to the largest part.
        #[arg(long)]
        n: Option<u32>,
        #[arg(long, value_enum, default_value = "all")]
        method: ShiftedMethodArg,
    },
    /// d and D from edge-labeled shifted tableaux.
    DCoeff {
        #[arg(long, value_parser = parse_strict)]
        lambda: StrictPartition,
        #[arg(long, value_parser = parse_strict)]
        mu: StrictPartition,
        #[arg(long, value_parser = parse_strict)]
        nu: StrictPartition,
        #[arg(long)]
        n: Option<u32>,
    },
    /// The table of star products inside ρ_n.
    StarTable {
        #[arg(long, default_value_t = 3)]
        n: u32,
        #[arg(long, value_enum, default_value = "tableaux")]
        method: StarMethod,
    },
    /// Ring coefficients against tableau D for all triples inside ρ_n.
    AfCompare {
        #[arg(long, default_value_t = 3)]
        n: u32,
    },
    /// Direct nonvanishing against the Horn inequalities.
    Horn {
        #[arg(long, value_enum, default_value = "lr")]
        kind: KindArg,
        #[arg(long, default_value_t = 3)]
        r: u32,
        #[arg(long, default_value_t = 3)]
        max_entry: u32,
        /// Use only the inequalities whose witness coefficient is 1 (classical only).
        #[arg(long)]
        belkale: bool,
    },
    /// Nonvanishing under stretching by N.
    Saturation {
        #[arg(long, value_enum, default_value = "lr")]
        kind: SaturationKind,
        /// Bound for lr and eq.
        #[arg(long, value_parser = parse_rect)]
        rect: Option<Rectangle>,
        /// Staircase bound for shifted.
        #[arg(long, default_value_t = 3)]
        n: u32,
        #[arg(long, default_value_t = 3)]
        max_stretch: u32,
    },
    /// Closure of the nonvanishing triples under addition.
    Semigroup {
        #[arg(long, value_enum, default_value = "lr")]
        kind: KindArg,
        #[arg(long, default_value_t = 2)]
        r: u32,
        #[arg(long, default_value_t = 2)]
        max_entry: u32,
    },
    /// Saturated Newton polytopes of C in the β variables.
    Snp {
        #[arg(long, value_parser = parse_rect, default_value = "2x3")]
        rect: Rectangle,
    },
    /// Monical's inequalities for the Lagrangian Grassmannian against D.
    Monical {
        #[arg(long, default_value_t = 3)]
        n: u32,
    },
    /// Shifted Horn inequalities against direct o.
    PurbhooSottile {
        #[arg(long, default_value_t = 3)]
        n: u32,
    },
    /// Regression against the n=2 O/L table and the n=3 star table.
    Fixtures,
    /// Every acceptance check, one PASS/FAIL line each.
    VerifyAll,
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: eqlr::Error| e.to_string())
}

fn parse_strict(s: &str) -> Result<StrictPartition, String> {
    s.parse().map_err(|e: eqlr::Error| e.to_string())
}

fn parse_rect(s: &str) -> Result<Rectangle, String> {
    let (k, w) = s.split_once(['x', 'X']).ok_or_else(|| format!("expected KxW, got {s:?}"))?;
    let k = k.trim().parse().map_err(|_| format!("bad row count in {s:?}"))?;
    let w = w.trim().parse().map_err(|_| format!("bad width in {s:?}"))?;
    Ok(Rectangle::new(k, w))
}

/// What a run produced: exit status and the bytes for stdout and stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunResult {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `argv` (program name first) and runs the verb.
pub fn run<I, T>(argv: I) -> RunResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let status = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if status == 0 {
                RunResult { status, stdout: text, stderr: String::new() }
            } else {
                RunResult { status, stdout: String::new(), stderr: text }
            };
        }
    };
    if let Some(t) = cli.threads {
        if t == 0 {
            return RunResult { status: 2, stdout: String::new(), stderr: "error: --threads must be positive\n".into() };
        }
        eqlr::par::set_threads(t);
    }
    let exec = if cli.sequential { Exec::Sequential } else { Exec::Parallel };
    let mut warnings = Vec::new();
    match verbs::dispatch(&cli.command, exec, &mut warnings) {
        Ok(out) => {
            let format = cli.format.unwrap_or(match cli.command {
                Command::StarTable { .. } => Format::Csv,
                _ => Format::Text,
            });
            let body = out.render(format);
            let mut stderr: String = warnings.iter().map(|w| format!("warning: {w}\n")).collect();
            let stdout = match &cli.output {
                Some(path) => match std::fs::write(path, &body) {
                    Ok(()) => String::new(),
                    Err(e) => {
                        stderr.push_str(&format!("error: cannot write {}: {e}\n", path.display()));
                        return RunResult { status: 1, stdout: String::new(), stderr };
                    }
                },
                None => body,
            };
            RunResult { status: out.status, stdout, stderr }
        }
        Err(e) => RunResult { status: e.status, stdout: String::new(), stderr: format!("error: {}\n", e.message) },
    }
}

/// A failed run: 2 for bad input or bounds, 1 for internal failures.
#[derive(Debug)]
pub struct Failure {
    pub status: i32,
    pub message: String,
}

impl From<eqlr::Error> for Failure {
    fn from(e: eqlr::Error) -> Failure {
        use eqlr::Error::*;
        let status = match e {
            InvalidPartition(_) | MixedShapeKinds | NotContained { .. } | OutOfBounds { .. } | Parse(_)
            | Unsupported(_) => 2,
            _ => 1,
        };
        Failure { status, message: e.to_string() }
    }
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure { status: 2, message: message.into() }
    }
}
