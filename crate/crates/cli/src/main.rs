//! `rouquier`: certificates for Rouquier dimension bounds of blow-ups of
//! projective spaces, plus direct access to the cohomology, quiver, and
//! duality engines behind them.

mod commands;
mod config;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "rouquier",
    version,
    about = "Rouquier dimension certificates for blow-ups of projective spaces"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Commands,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
pub enum Commands {
    /// Certify a blow-up tower described by a config file.
    ///
    /// Exit codes: 0 verified, 2 malformed config, 3 rule violation or
    /// unsupported geometry.
    Certify {
        /// Path to the tower config (JSON).
        #[arg(long)]
        config: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Evaluate the cohomology of a twisted form on projective space.
    Bott {
        /// The n of P^n.
        #[arg(long)]
        ambient: u32,
        /// Form degree p of Ω^p (0 = line bundle).
        #[arg(long)]
        form: u32,
        /// Twist t of Ω^p(t).
        #[arg(long)]
        twist: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Quiver engine: classification, positive roots, brute-force counts.
    Quiver {
        #[command(subcommand)]
        action: QuiverAction,
    },
    /// Run the exceptional-divisor vanishing suite for one ambient
    /// dimension: divisor-to-form Homs, divisor-to-skyscraper Homs, and
    /// truncation Homs over their full ranges.
    VerifyAppendix {
        /// Ambient dimension n of the blown-up variety (n >= 2).
        #[arg(long)]
        dim: u32,
    },
    /// Verify the dual-collection pairing on P^m: the verification matrix
    /// must be k[0] exactly on the diagonal.
    Dual {
        /// The m of P^m.
        #[arg(long)]
        dim: u32,
    },
}

#[derive(Subcommand)]
pub enum QuiverAction {
    /// Classify the star quiver with the given number of targets.
    Star {
        #[arg(long)]
        targets: usize,
    },
    /// Positive roots of the star quiver (reflection closure).
    Roots {
        #[arg(long)]
        targets: usize,
    },
    /// Count indecomposable representations over F_2 with the given
    /// dimension vector (source vertex first).
    Indecomposables {
        #[arg(long)]
        targets: usize,
        /// Comma-separated dimensions, e.g. 2,1,1,1.
        #[arg(long, value_delimiter = ',')]
        dims: Vec<u32>,
    },
}

fn main() -> ExitCode {
    ExitCode::from(commands::run(Cli::parse()))
}
