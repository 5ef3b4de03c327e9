//! Tools for studying how the choice of clock-synchronization convention
//! affects coordinate descriptions of physics — and how it provably does
//! not affect observables.
//!
//! A synchronization convention is labelled by a 3-vector `a`: relative to a
//! single Einstein-synchronized base frame, clocks at position `x` are offset
//! so that `t' = t + a·x` while spatial coordinates are untouched. The
//! modules here cover:
//!
//! * [`kinematics`] — event relabelling, one-way velocities, round-trip
//!   times, and causal-order questions under a convention change;
//! * [`metric`] — the flat metric in resynchronized coordinates, directional
//!   light speeds, and covariant wave-vector transforms;
//! * [`quantum`] — bipartite amplitude computations showing that measurement
//!   probabilities are independent of how spacelike-separated operations are
//!   time-ordered by coordinates, plus the interacting counterexample that
//!   fails when the operations genuinely influence one another;
//! * [`propagator`] — momentum-space propagator integrands in three
//!   algebraically equal forms, with numerical identity checks tight enough
//!   to distinguish "same function" from "same up to convention".
//!
//! Everything is in natural units with the two-way speed of light equal to 1.

pub mod kinematics;
pub mod metric;
mod numeric;
pub mod propagator;
pub mod quantum;
pub mod tol;
