//! Command-line argument types.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "calabi",
    version,
    about = "Exact obstruction tests for projectively induced Kähler metrics"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run the obstruction test and report a verdict.
    Verify(VerifyArgs),
    /// Print the exact profile-function derivatives at the basepoint.
    Jet(JetArgs),
    /// Export the coefficient matrix over the monomial basis.
    Matrix(MatrixArgs),
    /// Tabulate diagonal derivatives of e^potential along one variable.
    Diag(DiagArgs),
    /// Reproduce the published values and flag each as MATCH or MISMATCH.
    PaperTable(PaperTableArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum MetricName {
    Flat,
    Fs,
    Lee2,
    Lee3,
    Taubnut,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Scan diagonal entries first, then eliminate.
    Diag,
    /// Run the full elimination test directly.
    Full,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args, Debug)]
pub struct MetricArgs {
    /// Catalog metric to test.
    #[arg(long, value_enum)]
    pub metric: MetricName,
    /// Family parameter n (lee2, lee3).
    #[arg(long)]
    pub n: Option<u32>,
    /// Complex dimension (flat, fs).
    #[arg(long)]
    pub dim: Option<usize>,
    /// Taub-NUT parameter as an exact fraction "p/q".
    #[arg(long)]
    pub m: Option<String>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub metric: MetricArgs,
    /// Truncation degree of the monomial basis.
    #[arg(long)]
    pub degree: u32,
    #[arg(long, value_enum, default_value_t = Mode::Diag)]
    pub mode: Mode,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Attach the floating-point cross-check to the report.
    #[arg(long)]
    pub oracle: bool,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct JetArgs {
    #[command(flatten)]
    pub metric: MetricArgs,
    /// Highest derivative order to print.
    #[arg(long)]
    pub order: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct MatrixArgs {
    #[command(flatten)]
    pub metric: MetricArgs,
    #[arg(long)]
    pub degree: u32,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct DiagArgs {
    #[command(flatten)]
    pub metric: MetricArgs,
    /// Highest order k of the derivative table.
    #[arg(long)]
    pub k: u32,
    /// 1-based index of the variable to differentiate.
    #[arg(long, default_value_t = 1)]
    pub var: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct PaperTableArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Corrupt one computed value to exercise the MISMATCH path (testing).
    #[arg(long, hide = true)]
    pub negative_control: bool,
}
