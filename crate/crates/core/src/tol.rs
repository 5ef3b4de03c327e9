//! Numerical tolerances used across the crate, with the reasoning behind
//! each. Every comparison in the library and its tests pulls from here so
//! that a tolerance is never invented twice with two different values.

/// Absolute tolerance for quantities assembled from a handful of f64
/// operations: metric contractions, interval invariance, determinant checks,
/// Hermiticity and norm checks, dispersion-relation invariance.
///
/// A chain of ~10 floating-point operations on O(1) inputs accumulates at
/// most a few times `f64::EPSILON` (≈2.2e-16) of error; 1e-12 leaves four
/// orders of magnitude of headroom while still catching any real defect,
/// which would show up at O(1) or at best O(1e-8).
pub const GEOMETRY_ABS: f64 = 1e-12;

/// Relative scale factor for deciding that a spacetime interval is lightlike.
///
/// The classification threshold is `LIGHTLIKE_BAND * (dt² + |dx|²)` so that
/// the band scales with the size of the interval itself: an interval built
/// from O(100) coordinates carries proportionally larger rounding error than
/// one built from O(1) coordinates.
pub const LIGHTLIKE_BAND: f64 = 1e-9;

/// Absolute tolerance on transition amplitudes and probability
/// distributions (total-variation distances, amplitude-ordering gaps).
///
/// Amplitudes come out of eigendecomposition-based matrix exponentials on
/// dimension ≤ 16 systems; the backward error of the symmetric eigensolver
/// is a small multiple of machine epsilon, and the unitary products keep it
/// there. Observed agreement on commuting scenarios is ≤ 1e-14; 1e-10 is a
/// safe ceiling that still fails loudly on any ordering dependence, which
/// appears at O(0.1).
pub const AMPLITUDE_ABS: f64 = 1e-10;

/// Absolute tolerance on CHSH combinations of correlators.
///
/// Each correlator is a quadratic form in the state with error near machine
/// epsilon; four of them summed stay below 1e-14. 1e-9 is comfortable and
/// still far below 2√2 − 2 ≈ 0.83, the margin that matters physically.
pub const CHSH_ABS: f64 = 1e-9;

/// Absolute tolerance for the propagator integrand identity checks
/// (resynchronized vs. base form, and the partially substituted middle form
/// against both ends).
///
/// The resynchronized form is evaluated by transforming back to base
/// coordinates and calling the base-form code, so that identity is exact by
/// construction. The middle form recomputes the phase from shifted
/// arguments; with compensated phase arithmetic the observed gap stays below
/// 9e-15 over millions of samples, so 1e-14 is attainable yet tight enough
/// that any term dropped from the algebra (which shifts the phase by O(aωx))
/// is an immediate failure.
pub const INTEGRAND_ABS: f64 = 1e-14;

/// Relative tolerance for quadrature-level propagator comparisons.
///
/// Midpoint quadrature over a fixed grid is deterministic, so convention
/// independence holds to near machine precision; 1e-6 generously covers the
/// accumulation error of ~260k compensated summands while remaining far
/// below any physical effect of interest.
pub const QUADRATURE_REL: f64 = 1e-6;

/// Minimum amplitude-ordering gap that counts as a demonstration that
/// operation order matters for an interacting pair. The bundled interacting
/// scenario produces a gap ≈ 0.373, so 0.01 is two orders of magnitude of
/// margin against quadrature noise while being unambiguous.
pub const COUNTEREXAMPLE_AMPLITUDE_MIN: f64 = 1e-2;

/// Minimum total-variation distance between remote-measurement and
/// no-remote-measurement marginals that counts as genuine signalling.
/// The bundled interacting scenario produces ≈ 0.0575.
pub const COUNTEREXAMPLE_SIGNAL_MIN: f64 = 1e-3;

/// Tolerance for the validity checks on measurement projectors
/// (Hermiticity, idempotence, mutual orthogonality, completeness). These
/// are typically written down exactly, so the bound is near machine level.
pub const PROJECTOR_ABS: f64 = 1e-12;

/// Tolerance on `|n| = 1` for direction vectors handed to directional
/// light-speed computations.
pub const UNIT_NORM_ABS: f64 = 1e-12;
