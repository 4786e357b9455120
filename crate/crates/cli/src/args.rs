use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "licoef",
    version,
    about = "High-precision Li coefficients from zeta zero tables"
)]
pub struct Cli {
    #[command(flatten)]
    pub opts: GlobalOpts,

    #[command(subcommand)]
    pub command: Command,
}

/// Options shared by every command. Anything left unset falls back to the
/// `--config` file, then to the built-in default.
#[derive(Debug, Args, Default)]
pub struct GlobalOpts {
    /// Working precision in significant decimal digits (default 50).
    #[arg(long, global = true)]
    pub digits: Option<u32>,

    /// Largest n to compute (default 100).
    #[arg(long, global = true)]
    pub n_max: Option<u32>,

    /// direct, chebyshev, sin-squared, recurrence-t1, recurrence-t2 or all.
    #[arg(long, global = true)]
    pub method: Option<String>,

    /// Zero table: a file path, an http(s) URL, or "bundled".
    #[arg(long, global = true, conflicts_with = "synthetic")]
    pub zeros: Option<String>,

    /// Comma-separated complex literals such as "2,0.5+3i"; the set is
    /// closed under rho -> 1 - rho and conjugation before use.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub synthetic: Option<String>,

    /// Digits trusted from a zero table read from a file or URL (default 9).
    #[arg(long, global = true)]
    pub source_digits: Option<u32>,

    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Cache directory for downloaded tables.
    #[arg(long, global = true, env = "LICOEF_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,

    /// JSON file with any of the options above (explicit flags win).
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    /// Worker threads for the inner sums (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Reserved; analytic tail correction is not implemented.
    #[arg(long, global = true)]
    pub tail_correction: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute lambda_1..lambda_N.
    Compute,
    /// Check the increment identities and report residuals.
    Verify(VerifyArgs),
    /// Scan second differences for sign and size.
    Scan,
    /// Inspect, validate or download zero tables.
    Zeros {
        #[command(subcommand)]
        command: ZerosCommand,
    },
    /// Print the Euler constant, log 4 pi, 2 + gamma - log 4 pi and lambda_1.
    Constants(ConstantsArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Thm1,
    Thm2,
    Chebyshev,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum, default_value_t = Which::All)]
    pub which: Which,

    /// JSON-lines series from `compute --format json` to check instead of
    /// recomputing the coefficients.
    #[arg(long)]
    pub series: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum ZerosCommand {
    /// Compare ordinate counts with the Riemann-von Mangoldt estimate.
    Validate { path: Option<String> },
    /// Download a table into the cache.
    Fetch { url: String },
    /// Count, largest ordinate and trusted digits.
    Info { path: Option<String> },
}

#[derive(Debug, Args)]
pub struct ConstantsArgs {
    /// Print fixed decimal places instead of significant digits.
    #[arg(long)]
    pub decimals: Option<usize>,
}
