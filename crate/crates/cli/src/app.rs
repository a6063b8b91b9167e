//! Subcommands of the `auction` binary.
//!
//! Exit codes: 0 success (and every check passed), 1 some check failed,
//! 2 bad input or usage.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use auction_core::oracles::{max_matching_size_oracle, max_uniform_size_oracle};
use auction_core::{
    fair_maximal_match, fair_maximal_match_two_pass, fairify, make_ir, produce_mm,
    relations::{sort_asks_desc, sort_bids_desc},
    uniform_match, Matching, OrderBook, Property,
};
use clap::{Parser, Subcommand, ValueEnum};

use crate::format::{parse_book, parse_trades, rejoin, save_trades, FormatError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;

/// Properties checked when `--properties` is omitted.
pub const DEFAULT_PROPERTIES: &str = "matching,ir,uniform,fair,maximal,uniform-maximal";

#[derive(Debug, Parser)]
#[command(
    name = "auction",
    version,
    about = "Run and audit double-sided auctions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Algo {
    /// Greedy maximum matching, each pair at its bid price
    Mm,
    /// Uniform-price uncross
    Um,
    /// Maximum matching made fair on both sides
    FairMm,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Match a book and write the trades
    Run {
        #[arg(long, value_enum)]
        algo: Algo,
        #[arg(long)]
        book: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Reprice every fill at the midpoint of its limits (ignored for um)
        #[arg(long)]
        ir: bool,
        /// fair-mm only: run the bid-side pass as well as the ask-side pass
        #[arg(long)]
        two_pass: bool,
    },
    /// Rewrite a trade file into a fair matching of the same size
    Fairify {
        #[arg(long)]
        book: PathBuf,
        #[arg(long)]
        trades: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check a trade file against a book
    Check {
        #[arg(long)]
        book: PathBuf,
        #[arg(long)]
        trades: PathBuf,
        /// Comma-separated list of properties
        #[arg(long, value_delimiter = ',', default_value = DEFAULT_PROPERTIES)]
        properties: Vec<Property>,
    },
    /// Print the maximum matching size and maximum uniform matching size
    Oracle {
        #[arg(long)]
        book: PathBuf,
    },
}

#[derive(Debug, thiserror::Error)]
enum AppError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Auction(#[from] auction_core::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Parses `args` (program name first), runs the subcommand, and returns the
/// process exit code. Normal output goes to `out`, diagnostics to `err`.
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                EXIT_INPUT_ERROR
            } else {
                let _ = write!(out, "{}", e.render());
                EXIT_OK
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT_ERROR
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, AppError> {
    match command {
        Command::Run {
            algo,
            book,
            out: path,
            ir,
            two_pass,
        } => {
            let book = parse_book(&book)?;
            let (matching, price) = run_algo(&book, algo, ir, two_pass)?;
            save_trades(&matching, &path)?;
            writeln!(out, "trades={}", matching.len())?;
            if let Algo::Um = algo {
                match price {
                    Some(p) => writeln!(out, "price={p}")?,
                    None => writeln!(out, "price=none")?,
                }
            }
            Ok(EXIT_OK)
        }
        Command::Fairify {
            book,
            trades,
            out: path,
        } => {
            let book = parse_book(&book)?;
            let m = rejoin(&book, &parse_trades(&trades)?)?;
            let fair = fairify(&book, &m)?;
            save_trades(&fair, &path)?;
            writeln!(out, "trades={}", fair.len())?;
            Ok(EXIT_OK)
        }
        Command::Check {
            book,
            trades,
            properties,
        } => {
            let book = parse_book(&book)?;
            let m = rejoin(&book, &parse_trades(&trades)?)?;
            let mut all_passed = true;
            for p in properties {
                let verdict = p.check(&book, &m);
                all_passed &= verdict.passed();
                writeln!(out, "{verdict}")?;
            }
            Ok(if all_passed {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            })
        }
        Command::Oracle { book } => {
            let book = parse_book(&book)?;
            writeln!(out, "max={}", max_matching_size_oracle(&book))?;
            writeln!(out, "uniform_max={}", max_uniform_size_oracle(&book))?;
            Ok(EXIT_OK)
        }
    }
}

fn run_algo(
    book: &OrderBook,
    algo: Algo,
    ir: bool,
    two_pass: bool,
) -> Result<(Matching, Option<auction_core::Price>), AppError> {
    let matching = match algo {
        Algo::Um => {
            let result = uniform_match(book);
            return Ok((result.matching, result.price));
        }
        Algo::Mm => produce_mm(&sort_bids_desc(book.bids()), &sort_asks_desc(book.asks()))?,
        Algo::FairMm if two_pass => fair_maximal_match_two_pass(book),
        Algo::FairMm => fair_maximal_match(book),
    };
    let matching = if ir { make_ir(&matching)? } else { matching };
    Ok((matching, None))
}
