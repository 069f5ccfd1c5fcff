use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "radial",
    version,
    about = "Radial Schrödinger equation with repulsive inverse-power potentials"
)]
#[command(allow_negative_numbers = true)]
pub struct RunRequest {
    /// Flat `key = value` file; explicit flags take precedence.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    /// Format of table artifacts.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Physical parameters to reduced units (κ, λ, scaled strengths).
    #[command(allow_negative_numbers = true)]
    Reduce(ReduceArgs),
    /// Near-origin parameters γ, δ, ω, p for a monomial potential.
    #[command(allow_negative_numbers = true)]
    Asym(AsymArgs),
    /// Series solution for even β: coefficient and wavefunction tables.
    #[command(allow_negative_numbers = true)]
    Series(SeriesArgs),
    /// Closed-form ground state of A/r⁴ + B/r³ + C/r² + D/r.
    #[command(allow_negative_numbers = true)]
    Ground(GroundArgs),
    /// Cross-check an analytic result against the numerical oracle.
    #[command(allow_negative_numbers = true)]
    Verify(VerifyArgs),
    /// Ground-state family over a range of D, one row per point.
    #[command(allow_negative_numbers = true)]
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Args, Default)]
pub struct PhysicalArgs {
    /// Treat strengths and energies as physical and reduce them first.
    #[arg(long)]
    pub physical: bool,
    #[arg(long)]
    pub m: Option<f64>,
    #[arg(long)]
    pub hbar: Option<f64>,
    #[arg(long = "E")]
    pub energy: Option<f64>,
    #[arg(long)]
    pub q: Option<i32>,
    #[arg(long)]
    pub l: Option<i32>,
}

#[derive(Debug, Args)]
pub struct ReduceArgs {
    #[arg(long)]
    pub m: Option<f64>,
    #[arg(long)]
    pub hbar: Option<f64>,
    #[arg(long = "E")]
    pub energy: Option<f64>,
    #[arg(long)]
    pub q: Option<i32>,
    #[arg(long)]
    pub l: Option<i32>,
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long)]
    pub beta: Option<f64>,
    #[arg(long = "A")]
    pub a: Option<f64>,
    #[arg(long = "B")]
    pub b: Option<f64>,
    #[arg(long = "C")]
    pub c: Option<f64>,
    #[arg(long = "D")]
    pub d: Option<f64>,
}

#[derive(Debug, Args)]
pub struct AsymArgs {
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long)]
    pub beta: Option<f64>,
    #[command(flatten)]
    pub physical: PhysicalArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    OneSided,
    Windowed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormArg {
    Exact,
    Literature,
}

#[derive(Debug, Clone, Args)]
pub struct GridArgs {
    #[arg(long = "r-min")]
    pub r_min: Option<f64>,
    #[arg(long = "r-max")]
    pub r_max: Option<f64>,
    #[arg(long)]
    pub points: Option<usize>,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long)]
    pub beta: Option<f64>,
    #[arg(long)]
    pub kappa: Option<f64>,
    #[arg(long)]
    pub lambda: Option<f64>,
    /// Branch sign ε = ±1.
    #[arg(long)]
    pub epsilon: Option<f64>,
    #[arg(long = "s-min")]
    pub s_min: Option<i64>,
    #[arg(long = "s-max")]
    pub s_max: Option<i64>,
    #[arg(long, value_enum)]
    pub strategy: Option<StrategyArg>,
    #[arg(long, value_enum)]
    pub form: Option<FormArg>,
    #[command(flatten)]
    pub grid: GridArgs,
    #[arg(long = "coefficients-out")]
    pub coefficients_out: Option<PathBuf>,
    #[arg(long = "wavefunction-out")]
    pub wavefunction_out: Option<PathBuf>,
    #[arg(long = "summary-out")]
    pub summary_out: Option<PathBuf>,
    #[command(flatten)]
    pub physical: PhysicalArgs,
}

#[derive(Debug, Args)]
pub struct GroundArgs {
    #[arg(long = "A")]
    pub a: Option<f64>,
    #[arg(long = "B")]
    pub b: Option<f64>,
    /// Optional C; reported against the value the solution requires.
    #[arg(long = "C")]
    pub c: Option<f64>,
    #[arg(long = "D")]
    pub d: Option<f64>,
    #[command(flatten)]
    pub grid: GridArgs,
    #[arg(long = "wavefunction-out")]
    pub wavefunction_out: Option<PathBuf>,
    #[arg(long)]
    pub physical: bool,
    #[arg(long)]
    pub m: Option<f64>,
    #[arg(long)]
    pub hbar: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Ground,
    Series,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub target: Option<Target>,
    #[arg(long = "A")]
    pub a: Option<f64>,
    #[arg(long = "B")]
    pub b: Option<f64>,
    #[arg(long = "C")]
    pub c: Option<f64>,
    #[arg(long = "D")]
    pub d: Option<f64>,
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long)]
    pub beta: Option<f64>,
    #[arg(long)]
    pub kappa: Option<f64>,
    #[arg(long)]
    pub lambda: Option<f64>,
    #[arg(long)]
    pub epsilon: Option<f64>,
    #[arg(long = "s-max")]
    pub s_max: Option<i64>,
    #[arg(long, value_enum)]
    pub form: Option<FormArg>,
    #[command(flatten)]
    pub grid: GridArgs,
    /// Residual threshold for the analytic check.
    #[arg(long)]
    pub tol: Option<f64>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long = "A")]
    pub a: Option<f64>,
    #[arg(long = "B")]
    pub b: Option<f64>,
    #[arg(long = "d-from")]
    pub d_from: Option<f64>,
    #[arg(long = "d-to")]
    pub d_to: Option<f64>,
    #[arg(long)]
    pub steps: Option<usize>,
    /// Also locate each energy with the shooting oracle.
    #[arg(long)]
    pub shoot: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}
