use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

#[derive(Debug, Parser)]
#[command(
    name = "deltaho",
    version,
    about = "Spectrum of the harmonic oscillator with a delta potential at the origin"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Energy-ordered levels for one coupling.
    Solve(SolveArgs),
    /// Five even levels for the tabulated couplings, with deviations from
    /// the reference values.
    Table(CommonArgs),
    /// CSV data for the eigenvalue-equation, ν(g) and wave-function plots.
    Figures(FiguresArgs),
    /// Root-finding levels against the finite-difference oracle.
    Compare(CommonArgs),
    /// Convert between physical and dimensionless units.
    Units(UnitsArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

/// Flags shared by every command. Unset flags fall back to the config file.
#[derive(Debug, Clone, Default, Args)]
pub struct CommonArgs {
    /// Dimensionless delta strength.
    #[arg(long, allow_negative_numbers = true)]
    pub g: Option<f64>,
    /// Number of levels.
    #[arg(long)]
    pub states: Option<usize>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Directory for output files; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Grid intervals (even).
    #[arg(long)]
    pub grid_n: Option<usize>,
    /// Grid half width.
    #[arg(long, allow_negative_numbers = true)]
    pub grid_l: Option<f64>,
    /// Root bracket tolerance on ν.
    #[arg(long)]
    pub tol: Option<f64>,
    /// Write 17 significant digits instead of 6.
    #[arg(long)]
    pub full_precision: bool,
    /// Add a generation timestamp to the metadata.
    #[arg(long)]
    pub stamp: bool,
    /// Spectrum method: analytic or finite-difference.
    #[arg(long)]
    pub method: Option<String>,
    /// Root refiner: illinois or bisection.
    #[arg(long)]
    pub root_method: Option<String>,
    /// Config file; defaults to $DELTAHO_CONFIG.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Also report gaps to the finite-difference oracle.
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Figure {
    EqSolution,
    NuVsG,
    Wavefunctions,
    All,
}

#[derive(Debug, Args)]
pub struct FiguresArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[arg(long, value_enum, default_value = "all")]
    pub which: Figure,
}

#[derive(Debug, Args)]
pub struct UnitsArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Particle mass.
    #[arg(long)]
    pub m: f64,
    /// Oscillator angular frequency.
    #[arg(long)]
    pub omega: f64,
    #[arg(long, default_value_t = 1.0)]
    pub hbar: f64,
    /// Delta strength in physical units.
    #[arg(long, allow_negative_numbers = true, default_value_t = 0.0)]
    pub alpha: f64,
    /// Report the energy for this quantum label.
    #[arg(long, allow_negative_numbers = true)]
    pub nu: Option<f64>,
}
