//! `xcyclic`: command-line front end for expanded cyclic codes.

mod commands;
mod parse;
mod report;
mod repro;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use report::Report;

/// Finite-field codes and their base-field images.
///
/// Default defining polynomials for GF(2^n): x^2+x+1, x^4+x+1, x^5+x^2+1,
/// x^6+x+1, x^8+x^4+x^3+x^2+1, x^10+x^3+1. Other fields use the smallest
/// primitive polynomial. Elements are written 0, 1 or a^k.
#[derive(Parser, Debug)]
#[command(name = "xcyclic", version, about, long_about = None)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Field characteristic.
    #[arg(short, long, global = true, default_value_t = 2)]
    pub p: u32,
    /// Extension degree of the field over GF(p).
    #[arg(short, long, global = true, default_value_t = 4)]
    pub n: u32,
    /// Base field order q = p^a (defaults to p).
    #[arg(short, long, global = true)]
    pub q: Option<u64>,
    /// Defining polynomial over GF(p), e.g. "x^5+x^2+1".
    #[arg(long, global = true)]
    pub poly: Option<String>,
    /// Basis over GF(q): "poly" or a comma list such as "1,a^5,a^1,a^6".
    #[arg(long, global = true, default_value = "poly")]
    pub basis: String,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Selected α-exponents γ_i = α^e, e.g. "1,4", "-1" or "18..22".
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub gammas: Option<String>,
    /// Subbasis as 1-based indices ("1,2,4") or basis elements ("1,a^17").
    #[arg(long, global = true)]
    pub subbasis: Option<String>,
    /// Brute-force enumeration cap (number of codewords). XCYCLIC_CAP sets
    /// the default.
    #[arg(long, global = true)]
    pub cap: Option<u128>,
    /// Permit --cap above the default.
    #[arg(long, global = true)]
    pub allow_large: bool,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Field data: subfields, conjugacy classes and minimal polynomials.
    Field,
    /// Symbol generator and parity-check matrices of a cyclic code.
    Code(commands::CodeArgs),
    /// Expanded GF(q) generator and parity-check matrices.
    Expand(commands::CodeArgs),
    /// Constant-weight report for the code generated by (x^N-1)/p_γ(x).
    Cw(commands::CwArgs),
    /// Subspace subcode dimension by the Γ and Θ formulas and the oracle.
    Subdim(commands::SubdimArgs),
    /// Minimum-distance lower bound, exact distance and low-weight witnesses.
    Dmin(commands::DminArgs),
    /// Re-run every worked example and compare against the golden files.
    Repro(repro::ReproArgs),
}

fn run(cli: Cli) -> Result<Report> {
    let g = &cli.global;
    if let Some(cap) = g.cap {
        if cap > xcyclic::enumerate::DEFAULT_CAP && !g.allow_large {
            bail!(
                "cap {cap} exceeds the default {}; pass --allow-large to confirm",
                xcyclic::enumerate::DEFAULT_CAP
            );
        }
    }
    match &cli.command {
        Command::Field => commands::field(g),
        Command::Code(a) => commands::code(g, a),
        Command::Expand(a) => commands::expand(g, a),
        Command::Cw(a) => commands::cw(g, a),
        Command::Subdim(a) => commands::subdim(g, a),
        Command::Dmin(a) => commands::dmin(g, a),
        Command::Repro(a) => repro::repro(g, a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.global.format;
    let out = cli.global.out.clone();
    match run(cli).and_then(|r| r.emit(format, out.as_deref()).map(|_| r.ok)) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("error: cross-check failed");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
