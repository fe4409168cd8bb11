//! Resolution of CLI metric arguments into catalog descriptors.

use calabi::{parse_rational, MetricSpec};
use num::Signed;

use crate::args::{MetricArgs, MetricName};
use crate::CliError;

pub fn resolve(args: &MetricArgs) -> Result<MetricSpec, CliError> {
    let spec = match args.metric {
        MetricName::Flat => MetricSpec::Flat {
            dim: require(args.dim, "--dim", "flat")?,
        },
        MetricName::Fs => MetricSpec::FubiniStudy {
            dim: require(args.dim, "--dim", "fs")?,
        },
        MetricName::Lee2 => MetricSpec::LeeII {
            n: require(args.n, "--n", "lee2")?,
        },
        MetricName::Lee3 => MetricSpec::LeeIII {
            n: require(args.n, "--n", "lee3")?,
        },
        MetricName::Taubnut => {
            let text = args
                .m
                .as_ref()
                .ok_or_else(|| CliError::Usage("taubnut requires --m p/q".into()))?;
            let m = parse_rational(text).map_err(|e| CliError::Usage(e.to_string()))?;
            if m.is_negative() {
                return Err(CliError::Usage("--m must be >= 0".into()));
            }
            MetricSpec::TaubNut { m }
        }
    };
    spec.validate()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(spec)
}

fn require<T: Copy>(value: Option<T>, flag: &str, metric: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("{metric} requires {flag}")))
}

/// Short name used in reports.
pub fn metric_name(spec: &MetricSpec) -> &'static str {
    match spec {
        MetricSpec::Flat { .. } => "flat",
        MetricSpec::FubiniStudy { .. } => "fs",
        MetricSpec::LeeII { .. } => "lee2",
        MetricSpec::LeeIII { .. } => "lee3",
        MetricSpec::TaubNut { .. } => "taubnut",
    }
}

/// Parameter map for reports, e.g. `{"n": 2}` or `{"m": "1/4"}`.
pub fn params_json(spec: &MetricSpec) -> serde_json::Value {
    match spec {
        MetricSpec::Flat { dim } | MetricSpec::FubiniStudy { dim } => {
            serde_json::json!({ "dim": dim })
        }
        MetricSpec::LeeII { n } | MetricSpec::LeeIII { n } => serde_json::json!({ "n": n }),
        MetricSpec::TaubNut { m } => serde_json::json!({ "m": m.to_string() }),
    }
}

/// Compact single-string form of the parameters, for CSV cells.
pub fn params_compact(spec: &MetricSpec) -> String {
    match spec {
        MetricSpec::Flat { dim } | MetricSpec::FubiniStudy { dim } => format!("dim={dim}"),
        MetricSpec::LeeII { n } | MetricSpec::LeeIII { n } => format!("n={n}"),
        MetricSpec::TaubNut { m } => format!("m={m}"),
    }
}
