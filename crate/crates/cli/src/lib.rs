//! Command implementations behind the `calabi` binary.
//!
//! Exit codes: 0 when a verdict or table was computed, 1 for internal
//! failures or reproduction mismatches, 2 for usage errors.

pub mod args;
pub mod labels;
pub mod metric;
pub mod paper;
pub mod render;

use std::fmt;
use std::fs;
use std::path::Path;

use calabi::{
    calabi_matrix, diastasis_at_origin, extension, first_obstruction, lee2_ode, lee3_ode,
    monomial_basis, oracle_report, psd_check, slice_extension, solve_profile_jet, factorial_rat,
    MetricSpec, MultiIndex, Rational,
};
use serde_json::json;

use args::{Cli, Command, DiagArgs, Format, JetArgs, MatrixArgs, Mode, PaperTableArgs, VerifyArgs};
use render::VerifyReport;

/// Largest monomial basis the matrix exporter will assemble.
pub const MAX_BASIS: usize = 500;

#[derive(Debug)]
pub enum CliError {
    /// Bad arguments; exit 2.
    Usage(String),
    /// Internal failure; exit 1.
    Failure(String),
    /// Reproduction mismatch (report already printed); exit 1.
    Mismatch,
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
            CliError::Failure(msg) => write!(f, "error: {msg}"),
            CliError::Mismatch => write!(f, "reproduction mismatch"),
        }
    }
}

impl From<calabi::Error> for CliError {
    fn from(e: calabi::Error) -> Self {
        match e {
            calabi::Error::InvalidArgument(_) => CliError::Usage(e.to_string()),
            _ => CliError::Failure(e.to_string()),
        }
    }
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::Jet(args) => cmd_jet(args),
        Command::Matrix(args) => cmd_matrix(args),
        Command::Diag(args) => cmd_diag(args),
        Command::PaperTable(args) => cmd_paper_table(args),
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::Failure(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<(), CliError> {
    let spec = metric::resolve(&args.metric)?;
    if args.degree < 1 {
        return Err(CliError::Usage("--degree must be >= 1".into()));
    }
    let verdict = match args.mode {
        Mode::Diag => first_obstruction(&spec, args.degree)?,
        Mode::Full => {
            let d0 = diastasis_at_origin(&extension(&spec, args.degree)?);
            psd_check(&calabi_matrix(&d0, args.degree)?)
        }
    };
    let oracle = if args.oracle {
        let d0 = diastasis_at_origin(&extension(&spec, args.degree)?);
        let matrix = calabi_matrix(&d0, args.degree)?;
        Some(oracle_report(&spec, &matrix)?)
    } else {
        None
    };
    let report = VerifyReport {
        spec: &spec,
        degree: args.degree,
        mode: args.mode,
        verdict: &verdict,
        oracle: oracle.as_ref(),
    };
    emit(&render::render_verify(&report, args.format), args.out.as_deref())
}

fn cmd_jet(args: JetArgs) -> Result<(), CliError> {
    let spec = metric::resolve(&args.metric)?;
    if args.order < 1 {
        return Err(CliError::Usage("--order must be >= 1".into()));
    }
    let ode = match &spec {
        MetricSpec::LeeII { n } => lee2_ode(*n)?,
        MetricSpec::LeeIII { n } => lee3_ode(*n)?,
        _ => {
            return Err(CliError::Usage(
                "jet is defined for the profile families lee2 and lee3".into(),
            ))
        }
    };
    let jet = solve_profile_jet(&ode, args.order)?;
    let derivatives: Vec<Rational> = (1..=args.order).map(|k| jet.derivative(k)).collect();
    emit(
        &render::render_jet(&spec, args.order, &derivatives, args.format),
        args.out.as_deref(),
    )
}

fn cmd_matrix(args: MatrixArgs) -> Result<(), CliError> {
    let spec = metric::resolve(&args.metric)?;
    if args.degree < 1 {
        return Err(CliError::Usage("--degree must be >= 1".into()));
    }
    let basis_size = monomial_basis(spec.var_count(), args.degree).len();
    if basis_size > MAX_BASIS {
        return Err(CliError::Usage(format!(
            "basis has {basis_size} monomials, above the {MAX_BASIS} cap; lower --degree"
        )));
    }
    let d0 = diastasis_at_origin(&extension(&spec, args.degree)?);
    let matrix = calabi_matrix(&d0, args.degree)?;
    emit(
        &render::render_matrix(&spec, &matrix, args.format),
        args.out.as_deref(),
    )
}

fn cmd_diag(args: DiagArgs) -> Result<(), CliError> {
    let spec = metric::resolve(&args.metric)?;
    if args.k < 1 {
        return Err(CliError::Usage("--k must be >= 1".into()));
    }
    if args.var < 1 || args.var > spec.var_count() {
        return Err(CliError::Usage(format!(
            "--var must lie in 1..={}",
            spec.var_count()
        )));
    }
    let var = args.var - 1;
    // one slice at the top order serves every k
    let slice = slice_extension(&spec, var, args.k)?;
    let expanded = diastasis_at_origin(&slice)
        .exp()
        .map_err(|e| CliError::Failure(e.to_string()))?;
    let mut rows = Vec::new();
    for k in 1..=args.k {
        let index = MultiIndex::single(1, 0, k);
        let entry = expanded
            .coefficient(&index, &index)
            .map_err(|e| CliError::Failure(e.to_string()))?;
        let scale = factorial_rat(k) * factorial_rat(k);
        rows.push((k, entry.clone(), entry * scale));
    }
    emit(
        &render::render_diag(&spec, var, &rows, args.format),
        args.out.as_deref(),
    )
}

fn cmd_paper_table(args: PaperTableArgs) -> Result<(), CliError> {
    let rows = paper::build_rows(args.negative_control)?;
    let all_match = rows.iter().all(|r| r.matched);
    let text = match args.format {
        Format::Json => {
            let items: Vec<serde_json::Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "anchor": r.anchor,
                        "expected": r.expected,
                        "computed": r.computed,
                        "match": r.matched,
                    })
                })
                .collect();
            format!("{:#}\n", serde_json::Value::Array(items))
        }
        Format::Csv => {
            let mut out = String::from("anchor,expected,computed,match\n");
            for r in &rows {
                out += &format!("{},{},{},{}\n", r.anchor, r.expected, r.computed, r.matched);
            }
            out
        }
        Format::Text => {
            let width = rows.iter().map(|r| r.anchor.len()).max().unwrap_or(0);
            let mut out = String::new();
            for r in &rows {
                out += &format!(
                    "{}  {:width$}  expected {:>10}  computed {:>10}\n",
                    if r.matched { "MATCH   " } else { "MISMATCH" },
                    r.anchor,
                    r.expected,
                    r.computed,
                );
            }
            out += &format!(
                "{} of {} anchors match\n",
                rows.iter().filter(|r| r.matched).count(),
                rows.len()
            );
            out
        }
    };
    emit(&text, args.out.as_deref())?;
    if all_match {
        Ok(())
    } else {
        Err(CliError::Mismatch)
    }
}
