mod commands;
mod output;

use std::ops::RangeInclusive;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use regionum::DEFAULT_BUDGET;

/// Region crossing change on torus links.
#[derive(Debug, Parser)]
#[command(name = "regionum", version)]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    /// Output format.
    #[arg(long, short, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Handle-reduction step budget for unlink certification.
    #[arg(long, global = true, env = "REGIONUM_BUDGET", default_value_t = DEFAULT_BUDGET,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check whether K(p,q) is proper, by all three criteria.
    Proper { p: u64, q: u64 },
    /// List every construction that applies to K(p,q) and the smallest bound.
    Bound { p: u64, q: u64 },
    /// Print the explicit region schedule of a construction.
    Schedule {
        p: u64,
        q: u64,
        /// Construction id; defaults to the one giving the smallest bound.
        #[arg(long)]
        case: Option<String>,
    },
    /// Verify a bound end to end and print its certificate.
    Verify {
        p: u64,
        q: u64,
        #[arg(long)]
        case: Option<String>,
    },
    /// Exhaustive search for the region unknotting number of the standard diagram.
    Brute {
        p: u64,
        q: u64,
        /// Largest subset size tried; defaults to the best bound.
        #[arg(long)]
        max_k: Option<usize>,
        /// Stop between subset sizes after this many seconds.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        timeout: Option<u64>,
    },
    /// Jones polynomial of a braid closure, in powers of t^(1/2).
    Jones {
        /// Signed generator indices, e.g. `1 1 -2`.
        #[arg(required = true, num_args = 1.., allow_negative_numbers = true)]
        word: Vec<String>,
        #[arg(long)]
        strands: Option<usize>,
        /// Also run the unlink certificate.
        #[arg(long)]
        unlink: bool,
    },
    /// Print a named braid word.
    Word {
        #[command(subcommand)]
        family: WordFamily,
    },
    /// Bound grid over ranges of p and q.
    Table {
        /// p range, `a..b` (inclusive) or a single value.
        #[arg(long, value_parser = parse_range)]
        p: RangeInclusive<u64>,
        #[arg(long, value_parser = parse_range)]
        q: RangeInclusive<u64>,
        /// Also verify each bound.
        #[arg(long)]
        verify: bool,
    },
}

#[derive(Debug, Clone, Subcommand)]
pub enum WordFamily {
    /// (σ_1⋯σ_{p-1})^q.
    Toric { p: usize, q: usize },
    /// μ_i on p strands.
    Mu { p: usize, i: usize },
    /// ν_i on p strands.
    Nu { p: usize, i: usize },
    /// μ_1⋯μ_p, or ν_1⋯ν_p with --mirror.
    Unknot {
        p: usize,
        #[arg(long)]
        mirror: bool,
    },
    /// The three-block word for p ≡ 0, ±2 (mod 6).
    ThreeBlocks { p: usize },
    /// The eight-bracket word at index i.
    EightBrackets { i: usize, strands: usize },
    /// The word a construction leaves after its region changes.
    Target {
        p: u64,
        q: u64,
        #[arg(long)]
        case: Option<String>,
    },
}

fn parse_range(s: &str) -> Result<RangeInclusive<u64>, String> {
    let parse = |t: &str| t.trim().parse::<u64>().map_err(|e| format!("`{t}`: {e}"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
        None => {
            let v = parse(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range {s}"));
    }
    Ok(lo..=hi)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    commands::run(&cli)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("2..6").unwrap(), 2..=6);
        assert_eq!(parse_range("2..=6").unwrap(), 2..=6);
        assert_eq!(parse_range("4").unwrap(), 4..=4);
        assert!(parse_range("6..2").is_err());
        assert!(parse_range("x").is_err());
    }

    #[test]
    fn cli_shape() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
