//! One module per subcommand, each owning its clap argument struct and a
//! `run` function returning the overall pass/fail verdict.

pub mod lightspeed;
pub mod propagator;
pub mod quantum;
pub mod sweep;
pub mod transform;

use crate::report::ReportFormat;
use crate::scenario::OutputSection;
use crate::{CliError, Ctx};

/// Parse a tilt argument: either a single number (tilt along x̂) or three
/// comma-separated components.
pub fn parse_alpha(s: &str) -> Result<[f64; 3], String> {
    let parts: Vec<&str> = s.split(',').collect();
    match parts.len() {
        1 => Ok([num(parts[0])?, 0.0, 0.0]),
        3 => Ok([num(parts[0])?, num(parts[1])?, num(parts[2])?]),
        n => Err(format!("expected 1 or 3 comma-separated numbers, got {n}")),
    }
}

/// Parse a direction argument: exactly three comma-separated components.
pub fn parse_vec3(s: &str) -> Result<[f64; 3], String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(format!(
            "expected 3 comma-separated numbers, got {}",
            parts.len()
        ));
    }
    Ok([num(parts[0])?, num(parts[1])?, num(parts[2])?])
}

fn num(s: &str) -> Result<f64, String> {
    let s = s.trim();
    s.parse::<f64>()
        .map_err(|_| format!("`{s}` is not a number"))
}

/// A required inline flag, reported by name when absent.
pub fn require_flag<T>(name: &str, v: Option<T>) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::Input(format!("missing required flag `{name}`")))
}

/// Resolve the report format and optional file destination: the `--output`
/// flag wins over the scenario's `output.format`; the default is JSON. The
/// file path can only come from the scenario.
pub fn resolve_format(
    ctx: &Ctx,
    output: Option<&OutputSection>,
) -> Result<(ReportFormat, Option<std::path::PathBuf>), CliError> {
    let path = output.and_then(|o| o.path.clone());
    if let Some(f) = ctx.output {
        return Ok((f, path));
    }
    let format = match output.and_then(|o| o.format.as_deref()) {
        None | Some("json") => ReportFormat::Json,
        Some("csv") => ReportFormat::Csv,
        Some(other) => {
            return Err(CliError::Input(format!(
                "`output.format` must be \"csv\" or \"json\", got `{other}`"
            )))
        }
    };
    Ok((format, path))
}
