//! `synchrony sweep` — tabulate an operation over a range of x̂-tilts as a
//! CSV table on standard output, one row per tilt, ascending.

use std::cmp::Ordering;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use synchrony_core::kinematics::{coordinate_order, resynchronize, Event4, SyncParam};
use synchrony_core::metric::directional_light_speed;
use synchrony_core::quantum::{
    marginal_distribution, random_commuting_scenario, total_variation, MeasurementSetting,
};

use crate::fmt::sig17;
use crate::{CliError, Ctx};

#[derive(clap::Args)]
pub struct SweepArgs {
    /// Smallest tilt in the sweep.
    #[arg(long, allow_negative_numbers = true)]
    pub alpha_min: f64,
    /// Largest tilt in the sweep.
    #[arg(long, allow_negative_numbers = true)]
    pub alpha_max: f64,
    /// Number of evenly spaced tilts, endpoints included (≥ 2).
    #[arg(long)]
    pub steps: usize,
    /// Operation to tabulate; one of: lightspeed, nosignal.
    #[arg(long)]
    pub op: String,
}

fn grid(min: f64, max: f64, steps: usize) -> Vec<f64> {
    (0..steps)
        .map(|i| {
            if i == steps - 1 {
                max
            } else {
                min + (max - min) * i as f64 / (steps - 1) as f64
            }
        })
        .collect()
}

fn write_rows(header: &[&str], rows: &[Vec<String>]) -> Result<(), CliError> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(header)
        .and_then(|()| rows.iter().try_for_each(|r| w.write_record(r)))
        .map_err(|e| CliError::Input(format!("csv error: {e}")))?;
    let bytes = w
        .into_inner()
        .map_err(|e| CliError::Input(format!("csv error: {e}")))?;
    print!("{}", String::from_utf8(bytes).expect("csv output is utf-8"));
    Ok(())
}

fn lightspeed_rows(alphas: &[f64]) -> Result<Vec<Vec<String>>, CliError> {
    alphas
        .iter()
        .map(|&a| {
            let tilt = [a, 0.0, 0.0];
            let forward = directional_light_speed([1.0, 0.0, 0.0], tilt)
                .map_err(|e| CliError::Degenerate(format!("at alpha = {a}: {e}")))?;
            let backward = directional_light_speed([-1.0, 0.0, 0.0], tilt)
                .map_err(|e| CliError::Degenerate(format!("at alpha = {a}: {e}")))?;
            let round_trip = 1.0 / forward + 1.0 / backward;
            Ok(vec![
                sig17(a),
                sig17(forward),
                sig17(backward),
                sig17(round_trip),
            ])
        })
        .collect()
}

fn nosignal_rows(alphas: &[f64], seed: u64) -> Result<Vec<Vec<String>>, CliError> {
    // One fixed scenario per seed; the sweep varies only the convention.
    // The marginals are convention-independent, so the tv column is flat
    // by construction — the point is that it stays flat while the
    // coordinate order of the two measurements flips.
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let s = random_commuting_scenario(2, 2, &mut rng);
    let local = MeasurementSetting::computational_basis(2);
    let remote = MeasurementSetting::computational_basis(2);
    let with = marginal_distribution(&s, Some(&remote), &local)
        .map_err(|e| CliError::Input(format!("sweep scenario: {e}")))?;
    let without = marginal_distribution(&s, None, &local)
        .map_err(|e| CliError::Input(format!("sweep scenario: {e}")))?;
    let tv = total_variation(&with, &without);

    // Measurement events: A at the origin, B one unit away along x̂.
    let einstein = SyncParam::einstein();
    let event_a = Event4::new(s.t_a, 0.0, 0.0, 0.0, "einstein");
    let event_b = Event4::new(s.t_b, 1.0, 0.0, 0.0, "einstein");

    Ok(alphas
        .iter()
        .map(|&a| {
            let p = SyncParam::along_x(a, "tilted");
            let fa = resynchronize(&event_a, &einstein, &p);
            let fb = resynchronize(&event_b, &einstein, &p);
            let order = match coordinate_order(&fa, &fb, &p) {
                Ordering::Less => "A<B",
                Ordering::Equal => "A=B",
                Ordering::Greater => "B<A",
            };
            vec![
                sig17(a),
                sig17(fa.t),
                sig17(fb.t),
                order.to_string(),
                sig17(tv),
            ]
        })
        .collect())
}

pub fn run(ctx: &Ctx, args: &SweepArgs) -> Result<bool, CliError> {
    if args.steps < 2 {
        return Err(CliError::Input("`--steps` must be at least 2".into()));
    }
    if args.alpha_min > args.alpha_max || args.alpha_min.is_nan() || args.alpha_max.is_nan() {
        return Err(CliError::Input(
            "`--alpha-min` must not exceed `--alpha-max`".into(),
        ));
    }
    let alphas = grid(args.alpha_min, args.alpha_max, args.steps);
    match args.op.as_str() {
        "lightspeed" => write_rows(
            &["alpha", "forward", "backward", "round_trip"],
            &lightspeed_rows(&alphas)?,
        )?,
        "nosignal" => write_rows(
            &["alpha", "t_a_prime", "t_b_prime", "order", "tv_distance"],
            &nosignal_rows(&alphas, ctx.seed)?,
        )?,
        other => {
            return Err(CliError::Input(format!(
                "unknown op `{other}`; valid ops: lightspeed, nosignal"
            )))
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_is_ascending_and_hits_both_endpoints() {
        let g = grid(-0.9, 0.9, 7);
        assert_eq!(g.len(), 7);
        assert_eq!(g[0], -0.9);
        assert_eq!(g[6], 0.9);
        assert!(g.windows(2).all(|w| w[0] < w[1]));
    }
}
