use crate::config::AxisSpec;
use crate::table::Format;
use clap::{Args, Parser, Subcommand, ValueEnum};
use fermiwire::{Statistics, UnitSystem};
use std::path::PathBuf;

/// Ideal quantum gases in thin wires: regime scans, oracles and self-checks.
#[derive(Debug, Parser)]
#[command(name = "fermiwire", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the built-in identity and property checks.
    Verify {
        /// JSON scan configuration; only its thresholds are used.
        #[arg(long)]
        config: Option<PathBuf>,
    },
    /// Classify every point of a (T or λ³/ν) × ν × σ̃ grid.
    Scan(ScanArgs),
    /// Write a table for plotting.
    Tabulate(TabulateArgs),
    /// Compare one discrete box sum with its continuum limits.
    Oracle(OracleArgs),
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Clone, Args)]
pub struct ScanArgs {
    /// Temperature axis, `min:max:points[:log]`.
    #[arg(long = "T", value_name = "AXIS")]
    pub temperature: Option<AxisSpec>,
    /// Degeneracy λ³/ν axis, used instead of `--T`.
    #[arg(long, value_name = "AXIS", conflicts_with = "temperature")]
    pub degeneracy: Option<AxisSpec>,
    /// Specific volume axis.
    #[arg(long, value_name = "AXIS")]
    pub nu: Option<AxisSpec>,
    /// Dimensionless cross-section axis σ̃ = σλ²/h².
    #[arg(long, value_name = "AXIS")]
    pub sigma: Option<AxisSpec>,
    /// Fugacity axis; skips the solve and takes z as given.
    #[arg(long, value_name = "AXIS")]
    pub z: Option<AxisSpec>,
    /// Statistics used to solve for z.
    #[arg(long)]
    pub stat: Option<Statistics>,
    #[arg(long)]
    pub units: Option<UnitSystem>,
    #[arg(long)]
    pub mass: Option<f64>,
    /// Fugacity above which a point counts as degenerate.
    #[arg(long)]
    pub z_degenerate: Option<f64>,
    /// Degeneracy below which a point counts as classical.
    #[arg(long)]
    pub deg_classical: Option<f64>,
    /// σ̃ below which the wire counts as thin.
    #[arg(long)]
    pub sigma_thin: Option<f64>,
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    /// n(βε) for all three statistics at fixed z.
    Occupation,
    /// Debye cutoff quantities against the Fermi level.
    Phonon,
    /// Box sums against continuum integrals.
    Oracle,
}

#[derive(Debug, Clone, Args)]
pub struct TabulateArgs {
    #[arg(long, value_enum)]
    pub kind: TableKind,
    /// Fugacity (occupation, oracle).
    #[arg(long)]
    pub z: Option<f64>,
    /// βε axis (occupation).
    #[arg(long, value_name = "AXIS", default_value = "0:10:101")]
    pub beta_eps: AxisSpec,
    /// Specific volume axis (phonon).
    #[arg(long, value_name = "AXIS", default_value = "1")]
    pub nu: AxisSpec,
    /// Sound speed axis (phonon).
    #[arg(long, value_name = "AXIS", default_value = "1")]
    pub c: AxisSpec,
    /// Longitudinal box length in units of λ (oracle).
    #[arg(long, value_name = "AXIS", default_value = "0.5:2.5:5")]
    pub long: AxisSpec,
    /// Transverse side in units of λ (oracle); equal to `--long` when absent.
    #[arg(long, value_name = "AXIS")]
    pub transverse: Option<AxisSpec>,
    #[arg(long, default_value = "mb")]
    pub stat: Statistics,
    #[arg(long, default_value = "reduced")]
    pub units: UnitSystem,
    #[arg(long)]
    pub mass: Option<f64>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct OracleArgs {
    /// Longitudinal length in units of λ.
    #[arg(long, default_value_t = 10.0)]
    pub long: f64,
    /// Transverse side in units of λ.
    #[arg(long, default_value_t = 10.0)]
    pub transverse: f64,
    #[arg(long, default_value_t = 0.1)]
    pub z: f64,
    #[arg(long, default_value = "mb")]
    pub stat: Statistics,
    /// Momentum cutoff per axis; chosen from βε ≥ 45 when absent.
    #[arg(long)]
    pub cutoff: Option<u32>,
    #[arg(long = "T")]
    pub temperature: Option<f64>,
    #[arg(long, default_value = "reduced")]
    pub units: UnitSystem,
    #[arg(long)]
    pub mass: Option<f64>,
    /// Also write the sorted level list (`nx,ny,nz,energy`) to this CSV.
    #[arg(long)]
    pub levels: Option<PathBuf>,
    #[command(flatten)]
    pub output: OutputArgs,
}
