use std::path::PathBuf;

use adjrank_core::seed::DEFAULT_SEED;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "adjrank", version, about = "Exact verification runs for bounded-rank matrix spaces")]
pub struct Cli {
    /// Report format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Radon–Hurwitz numbers of one order, or the table by 2-adic valuation.
    Rho(RhoArgs),
    /// Seeded verification suites.
    Verify(VerifyArgs),
    /// ψ or ψ_s of a matrix file, with its invertibility certificate.
    Psi(PsiArgs),
    /// Minimal rank of a subspace given by a manifest.
    Minrank(MinrankArgs),
    /// Build or re-certify a Hurwitz–Radon family.
    Hr(HrArgs),
}

#[derive(Args, Debug)]
pub struct RhoArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..), conflicts_with = "table", required_unless_present = "table")]
    pub n: Option<u64>,
    #[arg(long)]
    pub table: bool,
    #[arg(long, default_value_t = 2, requires = "table")]
    pub b_max: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Psi,
    Adjugate,
    Homotopy,
    Ktheory,
    Hr,
    All,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = SuiteArg::All)]
    pub suite: SuiteArg,
    /// Orders to sweep: `2..8` (inclusive), `8` or `8,16`. For the hr suite
    /// only even orders are used.
    #[arg(long, value_parser = parse_orders, default_value = "2..8")]
    pub n: Orders,
    /// Trials per order and class.
    #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
    pub trials: u64,
    /// Rank-deficient samples per order in the adjugate suite.
    #[arg(long, default_value_t = 100)]
    pub low_rank_trials: u64,
    #[arg(long, env = "ADJRANK_SEED", default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, default_value_t = 256, value_parser = clap::value_parser!(u64).range(1..))]
    pub n_max: u64,
    #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u32).range(1..))]
    pub d_max: u32,
}

#[derive(Args, Debug)]
pub struct PsiArgs {
    /// Matrix in text or JSON format.
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Homotopy parameter, a rational such as `1/2`.
    #[arg(long, default_value = "1")]
    pub s: String,
}

#[derive(Args, Debug)]
pub struct MinrankArgs {
    /// Subspace manifest.
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Exact decision; needs a real two-dimensional subspace.
    #[arg(long)]
    pub exact: bool,
    #[arg(long, default_value_t = 1000, conflicts_with = "exact", value_parser = clap::value_parser!(u64).range(1..))]
    pub trials: u64,
    #[arg(long, env = "ADJRANK_SEED", default_value_t = DEFAULT_SEED, conflicts_with = "exact")]
    pub seed: u64,
}

#[derive(Args, Debug)]
pub struct HrArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..), conflicts_with = "input", required_unless_present = "input")]
    pub n: Option<u64>,
    /// Write the certified family here.
    #[arg(long, requires = "n")]
    pub out: Option<PathBuf>,
    /// Re-certify a family file.
    #[arg(long = "in")]
    pub input: Option<PathBuf>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orders(pub Vec<usize>);

fn parse_orders(s: &str) -> Result<Orders, String> {
    let one = |t: &str| {
        t.trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n >= 1)
            .ok_or_else(|| format!("`{t}` is not a positive order"))
    };
    let mut out = Vec::new();
    for part in s.split(',') {
        if let Some((lo, hi)) = part.split_once("..") {
            let (lo, hi) = (one(lo)?, one(hi.trim_start_matches('='))?);
            if lo > hi {
                return Err(format!("empty range `{part}`"));
            }
            out.extend(lo..=hi);
        } else {
            out.push(one(part)?);
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(Orders(out))
}
