//! The flat metric in resynchronized coordinates, directional light speeds,
//! and wave-vector transforms.
//!
//! Relabelling clocks by `t' = t + a·x` leaves physics alone but changes the
//! coordinate form of the metric to
//!
//! ```text
//! g'₀₀ = 1,   g'₀ᵢ = −aᵢ,   g'ᵢⱼ = aᵢaⱼ − δᵢⱼ,
//! ```
//!
//! whose line element factors as `(dt' − a·dx')² − |dx'|²`. Light along the
//! unit direction `n̂` then travels at coordinate speed `1/(1 + a·n̂)`,
//! direction-dependent, while every round trip still averages to 1.
//!
//! Coordinates carry upper indices and wave vectors lower indices; the two
//! transform differently (`t' = t + a·x` but `k' = k + aω`), so they are
//! kept as distinct types and all contractions go through the explicit
//! metric rather than ad-hoc sign flipping, which is only valid at `a = 0`.

use crate::kinematics::SyncParam;
use crate::numeric::phase;
use crate::tol;
use nalgebra::{Matrix4, Vector4};
use thiserror::Error;

/// Errors from metric-level computations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum MetricError {
    /// A direction vector was not unit length.
    #[error("direction must be a unit vector; |n| = {norm} differs from 1 by more than {}", tol::UNIT_NORM_ABS)]
    NotUnit { norm: f64 },
    /// `1 + a·n = 0`: light along `n` lies in a simultaneity surface and
    /// has no finite coordinate speed.
    #[error("degenerate direction: 1 + a·n = 0 (a·n = {a_dot_n})")]
    Degenerate { a_dot_n: f64 },
    /// Two quantities that must share a convention did not.
    #[error("convention mismatch: wave vector is in {wave:?} but event is in {event:?}")]
    ConventionMismatch { wave: String, event: String },
}

/// The metric tensor of flat spacetime in a tilted-synchrony coordinate
/// system. Symmetric, determinant −1 (the relabelling is unimodular), and
/// equal to `diag(1, −1, −1, −1)` at `a = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricTensor {
    /// Components with index order (t, x, y, z).
    pub g: Matrix4<f64>,
}

impl MetricTensor {
    /// Build the metric for the convention with tilt `a`.
    pub fn from_alpha(a: [f64; 3]) -> Self {
        let mut g = Matrix4::zeros();
        g[(0, 0)] = 1.0;
        for i in 0..3 {
            g[(0, i + 1)] = -a[i];
            g[(i + 1, 0)] = -a[i];
            for j in 0..3 {
                let delta = if i == j { 1.0 } else { 0.0 };
                g[(i + 1, j + 1)] = a[i] * a[j] - delta;
            }
        }
        MetricTensor { g }
    }

    /// Contract a displacement with the metric: `g_{μν} dx^μ dx^ν`.
    pub fn contract(&self, dx: [f64; 4]) -> f64 {
        let v = Vector4::from_column_slice(&dx);
        v.dot(&(self.g * v))
    }

    /// Squared interval of a `(dt, dx)` displacement in this convention.
    pub fn line_element(&self, dt: f64, dx: [f64; 3]) -> f64 {
        self.contract([dt, dx[0], dx[1], dx[2]])
    }

    pub fn determinant(&self) -> f64 {
        self.g.determinant()
    }
}

/// Squared line element of the displacement `dx = (dt, dx¹, dx², dx³)` in
/// the convention with tilt `a`; algebraically `(dt − a·dx)² − |dx|²`, and
/// equal to the Einstein-frame interval of the same physical displacement.
pub fn line_element(dx: [f64; 4], a: [f64; 3]) -> f64 {
    MetricTensor::from_alpha(a).contract(dx)
}

/// Coordinate speed of light along the unit direction `n` in the convention
/// with tilt `a`: `1/(1 + a·n)`.
///
/// The result is a signed quantity — tilts with `a·n < −1` make light along
/// `n` move backwards in coordinate time. `1 + a·n = 0` is a degenerate
/// direction (the ray lies in one simultaneity surface) and is an error.
pub fn directional_light_speed(n: [f64; 3], a: [f64; 3]) -> Result<f64, MetricError> {
    let norm = (n[0] * n[0] + n[1] * n[1] + n[2] * n[2]).sqrt();
    if (norm - 1.0).abs() > tol::UNIT_NORM_ABS {
        return Err(MetricError::NotUnit { norm });
    }
    let a_dot_n = a[0] * n[0] + a[1] * n[1] + a[2] * n[2];
    let denom = 1.0 + a_dot_n;
    if denom == 0.0 {
        return Err(MetricError::Degenerate { a_dot_n });
    }
    Ok(1.0 / denom)
}

/// A plane-wave four-vector `(ω, k)` expressed in a named convention.
///
/// Wave vectors carry lower indices: under a convention change the spatial
/// part shifts by `aω` while ω — the frequency read off a single clock at a
/// point, which no relabelling of distant clocks can alter — is unchanged.
#[derive(Debug, Clone, PartialEq)]
pub struct WaveFourVector {
    pub omega: f64,
    pub k: [f64; 3],
    /// Label of the [`SyncParam`] the components refer to.
    pub convention: String,
}

impl WaveFourVector {
    pub fn new(omega: f64, k: [f64; 3], convention: impl Into<String>) -> Self {
        WaveFourVector {
            omega,
            k,
            convention: convention.into(),
        }
    }
}

/// Re-express a wave four-vector in another convention, routing through the
/// Einstein base: `k_base = k − a_from·ω`, then `k' = k_base + a_to·ω`;
/// ω is untouched. Equal tilts are a pure relabel (exact identity).
pub fn transform_wavevector(
    w: &WaveFourVector,
    from: &SyncParam,
    to: &SyncParam,
) -> WaveFourVector {
    debug_assert_eq!(w.convention, from.label);
    if from.a == to.a {
        let mut out = w.clone();
        out.convention = to.label.clone();
        return out;
    }
    let mut k = [0.0; 3];
    for (i, ki) in k.iter_mut().enumerate() {
        let k_base = f64::mul_add(-from.a[i], w.omega, w.k[i]);
        *ki = f64::mul_add(to.a[i], w.omega, k_base);
    }
    WaveFourVector {
        omega: w.omega,
        k,
        convention: to.label.clone(),
    }
}

/// The plane-wave phase `ω t − k·x` for a wave and an event in the same
/// convention. Invariant under simultaneous resynchronization of both
/// arguments — the `aω·x` picked up by `k·x` cancels the `ω a·x` picked up
/// by `ωt` — which is why mixing conventions is rejected as an error.
pub fn dot_kx(w: &WaveFourVector, e: &crate::kinematics::Event4) -> Result<f64, MetricError> {
    if w.convention != e.convention {
        return Err(MetricError::ConventionMismatch {
            wave: w.convention.clone(),
            event: e.convention.clone(),
        });
    }
    Ok(phase(w.omega, e.t, w.k, e.spatial()))
}

/// On-shell defect of a wave vector: `ω² − |k − aω|² − m²` where `a` is the
/// tilt of the convention `w` is expressed in. Zero (to rounding) exactly
/// when the underlying base-frame wave satisfies `ω² − |k_base|² = m²`, in
/// every convention.
pub fn dispersion_check(w: &WaveFourVector, p: &SyncParam, m: f64) -> f64 {
    debug_assert_eq!(w.convention, p.label);
    let mut k2 = 0.0;
    for i in 0..3 {
        let k_base = f64::mul_add(-p.a[i], w.omega, w.k[i]);
        k2 += k_base * k_base;
    }
    w.omega * w.omega - k2 - m * m
}
