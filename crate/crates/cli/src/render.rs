//! Rendering of verdicts, jets, matrices, and derivative tables.
//!
//! Rationals always serialize as decimal-free `p/q` strings (plain integers
//! when the denominator is one); floats appear only in oracle fields.

use calabi::{CalabiMatrix, MetricSpec, NumericReport, Rational, Verdict};
use serde_json::json;

use crate::args::{Format, Mode};
use crate::labels::monomial_label;
use crate::metric::{metric_name, params_compact, params_json};

/// Fields shared by every verify report.
pub struct VerifyReport<'a> {
    pub spec: &'a MetricSpec,
    pub degree: u32,
    pub mode: Mode,
    pub verdict: &'a Verdict,
    pub oracle: Option<&'a NumericReport>,
}

fn mode_name(mode: Mode) -> &'static str {
    match mode {
        Mode::Diag => "diag",
        Mode::Full => "full",
    }
}

/// `(monomial!)^2 * entry`: the derivative of e^potential witnessing a
/// diagonal obstruction.
fn diagonal_derivative_value(monomial: &calabi::MultiIndex, entry: &Rational) -> Rational {
    let f = Rational::from_integer(monomial.factorial());
    entry.clone() * f.clone() * f
}

pub fn verdict_json(report: &VerifyReport) -> serde_json::Value {
    let labels = report.spec.var_labels();
    let verdict = match report.verdict {
        Verdict::ObstructedDiagonal { monomial, entry } => json!({
            "kind": "obstructed_diagonal",
            "monomial": monomial_label(monomial, &labels),
            "entry": entry.to_string(),
            "derivative": diagonal_derivative_value(monomial, entry).to_string(),
        }),
        Verdict::ObstructedMinor {
            minor_size,
            minor_value,
        } => json!({
            "kind": "obstructed_minor",
            "minor_size": minor_size,
            "minor_value": minor_value.to_string(),
        }),
        Verdict::NoObstructionUpTo { degree, rank } => json!({
            "kind": "no_obstruction_up_to",
            "degree": degree,
            "rank": rank,
        }),
    };
    let mut value = json!({
        "metric": metric_name(report.spec),
        "params": params_json(report.spec),
        "degree": report.degree,
        "mode": mode_name(report.mode),
        "verdict": verdict,
    });
    if let Some(oracle) = report.oracle {
        value["oracle"] = json!({
            "eigen_min": oracle.eigen_min,
            "consistent": oracle.consistent,
        });
    }
    value
}

pub fn render_verify(report: &VerifyReport, format: Format) -> String {
    match format {
        Format::Json => {
            format!("{:#}\n", verdict_json(report))
        }
        Format::Csv => {
            let labels = report.spec.var_labels();
            let mut fields = vec![
                "metric".to_string(),
                "params".into(),
                "degree".into(),
                "mode".into(),
                "kind".into(),
                "monomial".into(),
                "entry".into(),
                "derivative".into(),
                "minor_size".into(),
                "minor_value".into(),
                "rank".into(),
            ];
            let mut row = vec![
                metric_name(report.spec).to_string(),
                params_compact(report.spec),
                report.degree.to_string(),
                mode_name(report.mode).to_string(),
            ];
            match report.verdict {
                Verdict::ObstructedDiagonal { monomial, entry } => {
                    row.extend([
                        "obstructed_diagonal".to_string(),
                        monomial_label(monomial, &labels),
                        entry.to_string(),
                        diagonal_derivative_value(monomial, entry).to_string(),
                        String::new(),
                        String::new(),
                        String::new(),
                    ]);
                }
                Verdict::ObstructedMinor {
                    minor_size,
                    minor_value,
                } => {
                    row.extend([
                        "obstructed_minor".to_string(),
                        String::new(),
                        String::new(),
                        String::new(),
                        minor_size.to_string(),
                        minor_value.to_string(),
                        String::new(),
                    ]);
                }
                Verdict::NoObstructionUpTo { rank, .. } => {
                    row.extend([
                        "no_obstruction_up_to".to_string(),
                        String::new(),
                        String::new(),
                        String::new(),
                        String::new(),
                        String::new(),
                        rank.to_string(),
                    ]);
                }
            }
            if let Some(oracle) = report.oracle {
                fields.extend(["eigen_min".to_string(), "consistent".into()]);
                row.extend([oracle.eigen_min.to_string(), oracle.consistent.to_string()]);
            }
            format!("{}\n{}\n", fields.join(","), row.join(","))
        }
        Format::Text => {
            let labels = report.spec.var_labels();
            let mut out = format!(
                "metric {} ({}), degree {}, mode {}\n",
                metric_name(report.spec),
                params_compact(report.spec),
                report.degree,
                mode_name(report.mode)
            );
            match report.verdict {
                Verdict::ObstructedDiagonal { monomial, entry } => {
                    out += &format!(
                        "OBSTRUCTED: diagonal entry at {} is {} (derivative {})\n",
                        monomial_label(monomial, &labels),
                        entry,
                        diagonal_derivative_value(monomial, entry),
                    );
                    out += "the metric is not projectively induced\n";
                }
                Verdict::ObstructedMinor {
                    minor_size,
                    minor_value,
                } => {
                    out += &format!(
                        "OBSTRUCTED: negative principal minor of size {minor_size}: {minor_value}\n",
                    );
                    out += "the metric is not projectively induced\n";
                }
                Verdict::NoObstructionUpTo { degree, rank } => {
                    out += &format!(
                        "no obstruction up to degree {degree} (truncated rank {rank})\n"
                    );
                    out += "positive semidefinite so far; no truncation can certify an immersion\n";
                }
            }
            if let Some(oracle) = report.oracle {
                out += &format!(
                    "oracle: eigen_min {:.3e}, consistent {}\n",
                    oracle.eigen_min, oracle.consistent
                );
            }
            out
        }
    }
}

pub fn render_jet(
    spec: &MetricSpec,
    order: u32,
    derivatives: &[Rational],
    format: Format,
) -> String {
    match format {
        Format::Json => {
            let values: Vec<String> = derivatives.iter().map(|d| d.to_string()).collect();
            format!(
                "{:#}\n",
                json!({
                    "metric": metric_name(spec),
                    "params": params_json(spec),
                    "order": order,
                    "derivatives": values,
                })
            )
        }
        Format::Csv => {
            let mut out = String::from("k,derivative\n");
            for (i, d) in derivatives.iter().enumerate() {
                out += &format!("{},{}\n", i + 1, d);
            }
            out
        }
        Format::Text => {
            let mut out = format!(
                "profile derivatives at the basepoint for {} ({})\n",
                metric_name(spec),
                params_compact(spec)
            );
            for (i, d) in derivatives.iter().enumerate() {
                out += &format!("f^({})(1) = {}\n", i + 1, d);
            }
            out
        }
    }
}

pub fn render_matrix(spec: &MetricSpec, matrix: &CalabiMatrix, format: Format) -> String {
    let labels = spec.var_labels();
    let names: Vec<String> = matrix
        .basis()
        .iter()
        .map(|m| monomial_label(m, &labels))
        .collect();
    match format {
        Format::Json => {
            let entries: Vec<Vec<String>> = matrix
                .entries()
                .iter()
                .map(|row| row.iter().map(|e| e.to_string()).collect())
                .collect();
            format!(
                "{:#}\n",
                json!({
                    "metric": metric_name(spec),
                    "params": params_json(spec),
                    "degree": matrix.degree(),
                    "basis": names,
                    "entries": entries,
                })
            )
        }
        Format::Csv => {
            let mut out = String::new();
            out += &format!(",{}\n", names.join(","));
            for (j, row) in matrix.entries().iter().enumerate() {
                let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
                out += &format!("{},{}\n", names[j], cells.join(","));
            }
            out
        }
        Format::Text => {
            let mut cells: Vec<Vec<String>> = vec![];
            let mut header = vec![String::new()];
            header.extend(names.iter().cloned());
            cells.push(header);
            for (j, row) in matrix.entries().iter().enumerate() {
                let mut line = vec![names[j].clone()];
                line.extend(row.iter().map(|e| e.to_string()));
                cells.push(line);
            }
            let widths: Vec<usize> = (0..cells[0].len())
                .map(|c| cells.iter().map(|r| r[c].len()).max().unwrap_or(0))
                .collect();
            let mut out = String::new();
            for row in cells {
                let padded: Vec<String> = row
                    .iter()
                    .zip(&widths)
                    .map(|(cell, w)| format!("{cell:>w$}"))
                    .collect();
                out += &format!("{}\n", padded.join("  "));
            }
            out
        }
    }
}

/// `(k, entry, derivative)` rows of the diagonal-derivative table.
pub fn render_diag(
    spec: &MetricSpec,
    var: usize,
    rows: &[(u32, Rational, Rational)],
    format: Format,
) -> String {
    let var_name = spec.var_label(var);
    match format {
        Format::Json => {
            let items: Vec<serde_json::Value> = rows
                .iter()
                .map(|(k, entry, derivative)| {
                    json!({
                        "k": k,
                        "entry": entry.to_string(),
                        "derivative": derivative.to_string(),
                    })
                })
                .collect();
            format!(
                "{:#}\n",
                json!({
                    "metric": metric_name(spec),
                    "params": params_json(spec),
                    "var": var_name,
                    "rows": items,
                })
            )
        }
        Format::Csv => {
            let mut out = String::from("k,entry,derivative\n");
            for (k, entry, derivative) in rows {
                out += &format!("{k},{entry},{derivative}\n");
            }
            out
        }
        Format::Text => {
            let mut out = format!(
                "diagonal derivatives of e^potential along {var_name} for {} ({})\n",
                metric_name(spec),
                params_compact(spec)
            );
            for (k, entry, derivative) in rows {
                out += &format!("k={k}: matrix entry {entry}, derivative {derivative}\n");
            }
            out
        }
    }
}
