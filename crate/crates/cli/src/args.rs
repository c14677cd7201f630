use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nlmult_core::enumeration::ErrorPolicy;

#[derive(Parser, Debug)]
#[command(name = "nlmult", version, about = "Exact normalized-Laplacian multiplicity classification")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Worker threads (defaults to every available core).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Classify every graph of a graph6 stream, one JSON record per line.
    Analyze(AnalyzeArgs),
    /// Compare the spectral and structural sets by exhaustive enumeration.
    Verify(ScanArgs),
    /// Look for cospectral mates of graphs whose largest eigenvalue has multiplicity n-3.
    Ds(ScanArgs),
    /// Sweep the supporting spectral and structural facts over all graphs.
    Lemmas(ScanArgs),
    /// Rediscover the exceptional catalog and write it as a fixture.
    Bootstrap(BootstrapArgs),
    /// Print every connected graph of one order as graph6.
    Enumerate(EnumerateArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Policy {
    Skip,
    Abort,
}

impl From<Policy> for ErrorPolicy {
    fn from(p: Policy) -> Self {
        match p {
            Policy::Skip => ErrorPolicy::Skip,
            Policy::Abort => ErrorPolicy::Abort,
        }
    }
}

#[derive(Args, Debug)]
pub struct AnalyzeArgs {
    /// graph6 file; standard input when absent.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "skip")]
    pub on_error: Policy,
    /// Catalog fixture stem (`STEM.g6` and `STEM.json`); the built-in one when absent.
    #[arg(long)]
    pub catalog: Option<PathBuf>,
    #[arg(long)]
    pub with_float_check: bool,
}

#[derive(Args, Debug)]
pub struct OrderSelection {
    #[arg(long, conflicts_with = "orders")]
    pub order: Option<usize>,
    /// Inclusive range such as `5..9`.
    #[arg(long, value_parser = parse_range)]
    pub orders: Option<RangeInclusive<usize>>,
}

impl OrderSelection {
    pub fn range(&self) -> Option<RangeInclusive<usize>> {
        match (&self.order, &self.orders) {
            (Some(n), None) => Some(*n..=*n),
            (None, Some(r)) => Some(r.clone()),
            _ => None,
        }
    }
}

#[derive(Args, Debug)]
pub struct ScanArgs {
    #[command(flatten)]
    pub select: OrderSelection,
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long)]
    pub catalog: Option<PathBuf>,
    #[arg(long)]
    pub with_float_check: bool,
}

#[derive(Args, Debug)]
pub struct BootstrapArgs {
    /// Largest order to enumerate.
    #[arg(long)]
    pub order: usize,
    /// Fixture stem to write (`STEM.g6`, `STEM.json`).
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub order: usize,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

/// `A..B` or `A..=B`, both inclusive, or a single order.
pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("bad order {t:?}: {e}"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let n = num(s)?;
            (n, n)
        }
    };
    if a > b {
        return Err(format!("empty range {s:?}"));
    }
    Ok(a..=b)
}
