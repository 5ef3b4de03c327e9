//! Event relabelling between clock-synchronization conventions, one-way
//! velocities, round-trip times, and coordinate-order questions.
//!
//! A convention is a 3-vector `a` (dimensionless, natural units): relative
//! to the Einstein-synchronized base frame, `t' = t + a·x` and `x' = x`.
//! There is deliberately **no** restriction `|a| < 1`; conventions that tilt
//! simultaneity past the light cone are fully supported, and the only
//! genuinely ill-defined situation — a worldline lying inside a surface of
//! simultaneity, `1 + a·v = 0` — is reported as an explicit error rather
//! than a NaN.

use crate::numeric::{add_dot3, sub_dot3};
use crate::tol;
use std::cmp::Ordering;
use thiserror::Error;

/// Errors from kinematic computations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum KinematicsError {
    /// `1 + a·v = 0`: in this convention the given worldline has no
    /// well-defined coordinate velocity (its events are all simultaneous).
    #[error("degenerate convention: 1 + a·v = 0 for a = {a}, v = {v}")]
    DegenerateConvention { a: f64, v: f64 },
    /// An input that must be strictly positive was not.
    #[error("{name} must be a positive finite number, got {value}")]
    NonpositiveInput { name: &'static str, value: f64 },
}

/// A synchronization convention: clocks at position `x` are offset by `a·x`
/// relative to the Einstein base frame. `a = 0` is the Einstein convention.
///
/// Components may be any finite reals; magnitudes at or above 1 are
/// legitimate (they reorder timelike-separated events in coordinates).
#[derive(Debug, Clone, PartialEq)]
pub struct SyncParam {
    /// Resynchronization vector (dimensionless; in 1+1-D problems only the
    /// first component is used).
    pub a: [f64; 3],
    /// Human-readable identifier, carried into the events it labels.
    pub label: String,
}

impl SyncParam {
    pub fn new(a: [f64; 3], label: impl Into<String>) -> Self {
        SyncParam {
            a,
            label: label.into(),
        }
    }

    /// The Einstein convention, `a = (0, 0, 0)`.
    pub fn einstein() -> Self {
        SyncParam::new([0.0; 3], "einstein")
    }

    /// A convention tilted along the x-axis only, the common 1+1-D case.
    pub fn along_x(a: f64, label: impl Into<String>) -> Self {
        SyncParam::new([a, 0.0, 0.0], label)
    }

    pub fn is_einstein(&self) -> bool {
        self.a == [0.0; 3]
    }
}

/// An event with coordinates expressed in a named convention.
#[derive(Debug, Clone, PartialEq)]
pub struct Event4 {
    pub t: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
    /// Label of the [`SyncParam`] these coordinates are expressed in.
    pub convention: String,
}

impl Event4 {
    pub fn new(t: f64, x: f64, y: f64, z: f64, convention: impl Into<String>) -> Self {
        Event4 {
            t,
            x,
            y,
            z,
            convention: convention.into(),
        }
    }

    /// Spatial part as an array, for dot products with `a`.
    pub fn spatial(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }
}

/// Causal character of a pair of events.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CausalKind {
    Timelike,
    Lightlike,
    Spacelike,
}

/// Interval classification: the squared interval `s² = dt_base² − |dx|²`
/// together with its sign class. `s²` is convention-invariant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CausalClass {
    pub kind: CausalKind,
    pub interval_squared: f64,
}

/// Re-express an event's coordinates in another convention.
///
/// The caller asserts that `e` is currently expressed in `from`. The map
/// routes through the Einstein base frame — `t_base = t − a_from·x`, then
/// `t' = t_base + a_to·x` — so that chaining any two conventions agrees with
/// the direct transform by construction. Spatial coordinates are unchanged.
///
/// Each dot-product-and-add is evaluated with one rounding, which keeps
/// to-and-back round trips bit-exact on representable products and within
/// one ulp in general.
pub fn resynchronize(e: &Event4, from: &SyncParam, to: &SyncParam) -> Event4 {
    debug_assert_eq!(
        e.convention, from.label,
        "event is labelled {:?} but `from` is {:?}",
        e.convention, from.label
    );
    if from.a == to.a {
        // Same convention (possibly under another name): relabel only, so
        // the identity is exact rather than exact-up-to-rounding.
        let mut out = e.clone();
        out.convention = to.label.clone();
        return out;
    }
    let x = e.spatial();
    let t_base = sub_dot3(e.t, from.a, x);
    Event4 {
        t: add_dot3(t_base, to.a, x),
        x: e.x,
        y: e.y,
        z: e.z,
        convention: to.label.clone(),
    }
}

/// Coordinate velocity of a uniformly moving body in a tilted convention.
///
/// `v` is the signed velocity in the Einstein convention (so light is
/// `v = ±1`), `a` the scalar tilt along the motion axis. Returns
/// `v' = v / (1 + a·v)`; for light this is `±1/(1 ± a)`, the
/// direction-dependent one-way speed.
///
/// When `1 + a·v = 0` the worldline coincides with a surface of
/// simultaneity and the coordinate velocity is undefined.
pub fn one_way_velocity(v: f64, a: f64) -> Result<f64, KinematicsError> {
    let denom = 1.0 + a * v;
    if denom == 0.0 {
        return Err(KinematicsError::DegenerateConvention { a, v });
    }
    Ok(v / denom)
}

/// Coordinate velocity of an x̂-directed body relabeled from one
/// convention to another.
///
/// Routing `v' = v/(1 + a·v)` through the Einstein base and back collapses
/// algebraically to a single application with the effective tilt
/// `a_to − a_from`, which is how it is computed here (one rounding of the
/// effective tilt instead of two chained divisions). Only the x̂ tilt
/// components matter for motion along x̂.
pub fn transform_velocity(
    v: f64,
    from: &SyncParam,
    to: &SyncParam,
) -> Result<f64, KinematicsError> {
    one_way_velocity(v, to.a[0] - from.a[0])
}

/// Time for a signal to cover length `L` out and back, given the two leg
/// speeds as magnitudes. All inputs must be strictly positive; for
/// conventions tilted past the light cone (`|a·v| ≥ 1`) the return leg's
/// coordinate duration is negative and must be summed signed instead — see
/// the signed-leg identity exercised in the tests.
pub fn round_trip_time(l: f64, v_out: f64, v_back: f64) -> Result<f64, KinematicsError> {
    for (name, value) in [("L", l), ("v_out", v_out), ("v_back", v_back)] {
        // NaN is caught by the finiteness clause.
        if value <= 0.0 || !value.is_finite() {
            return Err(KinematicsError::NonpositiveInput { name, value });
        }
    }
    Ok(l / v_out + l / v_back)
}

/// Winnie's ε parameterization of the same convention family: `ε = (1+a)/2`,
/// so ε = 1/2 is Einstein and 0 < ε < 1 corresponds to |a| < 1.
pub fn winnie_epsilon(a: f64) -> f64 {
    (1.0 + a) / 2.0
}

/// Inverse of [`winnie_epsilon`]: `a = 2ε − 1`.
pub fn epsilon_to_a(epsilon: f64) -> f64 {
    2.0 * epsilon - 1.0
}

/// Classify the separation of two events given in the same convention `p`.
///
/// The squared interval is computed through the metric for `p` (equivalently
/// `(dt − a·dx)² − |dx|²`), so the value is identical in every convention.
/// The lightlike band is relative: `|s²| < 1e-9·(dt² + |dx|²)`.
pub fn classify_separation(e1: &Event4, e2: &Event4, p: &SyncParam) -> CausalClass {
    debug_assert_eq!(e1.convention, e2.convention);
    debug_assert_eq!(e1.convention, p.label);
    let dt = e2.t - e1.t;
    let dx = [e2.x - e1.x, e2.y - e1.y, e2.z - e1.z];
    let g = crate::metric::MetricTensor::from_alpha(p.a);
    let s2 = g.line_element(dt, dx);
    let scale = dt * dt + dx[0] * dx[0] + dx[1] * dx[1] + dx[2] * dx[2];
    let kind = if s2.abs() < tol::LIGHTLIKE_BAND * scale {
        CausalKind::Lightlike
    } else if s2 > 0.0 {
        CausalKind::Timelike
    } else {
        CausalKind::Spacelike
    };
    CausalClass {
        kind,
        interval_squared: s2,
    }
}

/// Which of two events (in convention `p`) carries the smaller time
/// coordinate. `Less` means `e1` is coordinate-earlier.
///
/// For timelike pairs this ordering can flip between conventions once the
/// tilt is large enough; no causal claim is attached to it.
pub fn coordinate_order(e1: &Event4, e2: &Event4, p: &SyncParam) -> Ordering {
    debug_assert_eq!(e1.convention, p.label);
    debug_assert_eq!(e2.convention, p.label);
    e1.t.total_cmp(&e2.t)
}
