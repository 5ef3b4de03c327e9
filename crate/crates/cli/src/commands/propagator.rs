//! `synchrony propagator` — randomized integrand-identity checks, with an
//! optional quadrature comparison across two tilts.

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use synchrony_core::propagator::{
    propagator_quadrature_1p1, random_identity_gaps, relative_gap,
};
use synchrony_core::tol;

use super::resolve_format;
use crate::fmt::sig17;
use crate::report::{emit, inputs_digest, Record, Report};
use crate::{CliError, Ctx};

/// Documented slow-quadrature grid: observation point (t=1, x=0.5),
/// m=1, ε=0.05, momentum cutoff 20, 512 points per axis, tilt 0.7.
const QUAD_POINT: (f64, f64) = (1.0, 0.5);
const QUAD_MASS: f64 = 1.0;
const QUAD_EPS: f64 = 0.05;
const QUAD_CUTOFF: f64 = 20.0;
const QUAD_POINTS: usize = 512;
const QUAD_TILT: f64 = 0.7;

#[derive(clap::Args)]
pub struct PropagatorArgs {
    /// Number of random sample points for the identity checks (≥ 1).
    #[arg(long, default_value_t = 1000)]
    pub samples: u64,
    /// Also run the slow 1+1-D quadrature at two tilts and compare.
    #[arg(long)]
    pub quadrature: bool,
    /// Expect the tolerance check to fail; inverts exit codes 0 and 1.
    #[arg(long)]
    pub expect_fail: bool,
}

pub fn run(ctx: &Ctx, args: &PropagatorArgs) -> Result<bool, CliError> {
    if args.samples == 0 {
        return Err(CliError::Input("`--samples` must be at least 1".into()));
    }
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    let gaps = random_identity_gaps(args.samples as usize, &mut rng);

    const OP: &str = "propagator.identity";
    let mut records = vec![
        Record::below(OP, "substitution_gap", gaps.max_identity_rel, tol::INTEGRAND_ABS),
        Record::below(OP, "middle_form_gap", gaps.max_middle_rel, tol::INTEGRAND_ABS),
    ];
    if args.quadrature {
        const QOP: &str = "propagator.quadrature";
        let (t, x) = QUAD_POINT;
        let base = propagator_quadrature_1p1(t, x, QUAD_MASS, QUAD_EPS, 0.0, QUAD_CUTOFF, QUAD_POINTS);
        let tilted =
            propagator_quadrature_1p1(t, x, QUAD_MASS, QUAD_EPS, QUAD_TILT, QUAD_CUTOFF, QUAD_POINTS);
        records.push(Record::info(QOP, "base_re", base.re));
        records.push(Record::info(QOP, "base_im", base.im));
        records.push(Record::info(QOP, "tilted_re", tilted.re));
        records.push(Record::info(QOP, "tilted_im", tilted.im));
        records.push(Record::below(
            QOP,
            "tilt_gap",
            relative_gap(base, tilted),
            tol::QUADRATURE_REL,
        ));
    }

    let report = Report {
        seed: ctx.seed,
        inputs_digest: inputs_digest(&[
            b"propagator",
            &args.samples.to_le_bytes(),
            &[args.quadrature as u8],
            &ctx.seed.to_le_bytes(),
        ]),
        records,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    };
    let (format, path) = resolve_format(ctx, None)?;
    emit(&report, format, path.as_deref())?;

    let pass = report.all_pass();
    if !pass {
        if let Some(w) = report.worst_failure() {
            eprintln!(
                "worst-case gap: {} {} = {} (declared tolerance {})",
                w.op,
                w.metric,
                sig17(w.value),
                sig17(w.tolerance.unwrap_or(f64::NAN))
            );
        }
    }
    if args.expect_fail {
        if pass {
            eprintln!("expected a tolerance failure, but every check passed");
        }
        return Ok(!pass);
    }
    Ok(pass)
}
