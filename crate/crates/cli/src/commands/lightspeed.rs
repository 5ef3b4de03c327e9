//! `synchrony lightspeed` — one-way light speeds along a direction under a
//! given tilt, plus the convention-free round trip.

use synchrony_core::metric::{directional_light_speed, MetricError};

use crate::fmt::{json_vec3, sig17};
use crate::CliError;

#[derive(clap::Args)]
pub struct LightspeedArgs {
    /// Tilt vector: one number (along x̂) or `ax,ay,az`.
    #[arg(long, value_parser = super::parse_alpha, allow_hyphen_values = true)]
    pub alpha: [f64; 3],
    /// Propagation direction `nx,ny,nz`; normalized before use and echoed
    /// in normalized form.
    #[arg(long, value_parser = super::parse_vec3, allow_hyphen_values = true, default_value = "1,0,0")]
    pub direction: [f64; 3],
}

fn speed(n: [f64; 3], alpha: [f64; 3]) -> Result<f64, CliError> {
    directional_light_speed(n, alpha).map_err(|e| match e {
        MetricError::Degenerate { .. } => CliError::Degenerate(e.to_string()),
        other => CliError::Input(other.to_string()),
    })
}

pub fn run(args: &LightspeedArgs) -> Result<bool, CliError> {
    let d = args.direction;
    let norm = (d[0] * d[0] + d[1] * d[1] + d[2] * d[2]).sqrt();
    // NaN is caught by the finiteness clause.
    if norm <= 0.0 || !norm.is_finite() {
        return Err(CliError::Input(
            "`--direction` must be a nonzero finite vector".into(),
        ));
    }
    let n = [d[0] / norm, d[1] / norm, d[2] / norm];
    let forward = speed(n, args.alpha)?;
    let backward = speed([-n[0], -n[1], -n[2]], args.alpha)?;
    // Signed leg durations over unit length; their sum is 2 in every
    // convention, which is the whole point of printing it.
    let round_trip = 1.0 / forward + 1.0 / backward;
    println!(
        "{{\"alpha\":{},\"direction\":{},\"forward\":{},\"backward\":{},\"round_trip\":{}}}",
        json_vec3(args.alpha),
        json_vec3(n),
        sig17(forward),
        sig17(backward),
        sig17(round_trip)
    );
    Ok(true)
}
