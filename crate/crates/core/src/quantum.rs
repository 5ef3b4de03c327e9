//! Finite-dimensional bipartite quantum mechanics: transition amplitudes
//! under either insertion order of two local operations, factored and
//! Heisenberg-picture forms, measurement marginals, CHSH correlators, and
//! the interacting counterexample.
//!
//! The central fact exercised here: when the joint Hamiltonian splits as
//! `H = H_A⊗I + I⊗H_B` and the two operations act on disjoint tensor
//! factors, the amplitude
//!
//! ```text
//! ⟨ψ_out| U(t_out−t_later) O_later U(t_later−t_earlier) O_earlier U(t_earlier−t_in) |ψ_in⟩
//! ```
//!
//! does not depend on which operation is called "earlier" — so relabelling
//! clocks until the coordinate times swap changes nothing measurable. The
//! `order` argument of [`amplitude_ordered`] picks the insertion order
//! independently of the numeric times, which is exactly that relabelling
//! freedom. Adding an interaction term breaks the independence, and
//! [`marginal_distribution`] then shows actual signalling.
//!
//! ħ = 1 throughout; evolution operators come from Hermitian
//! eigendecomposition, so unitarity holds to rounding.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64 as C64;
use rand::Rng;
use rand_distr::StandardNormal;
use thiserror::Error;

use crate::tol;

/// A transition amplitude.
pub type Amplitude = C64;

/// Maximum joint dimension accepted by scenario validation; keeps every
/// eigendecomposition trivially cheap.
pub const MAX_JOINT_DIM: usize = 16;

/// Errors from quantum-scenario construction and evaluation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum QuantumError {
    #[error("{which} is not Hermitian (max |M − M†| entry = {defect:.3e})")]
    NotHermitian { which: &'static str, defect: f64 },
    #[error("{what}: expected dimension {expected}, got {got}")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("{which} is not normalized (|ψ| = {norm})")]
    NotNormalized { which: &'static str, norm: f64 },
    #[error(
        "times must satisfy t_in ≤ min(t_A, t_B) and max(t_A, t_B) ≤ t_out; \
         got t_in={t_in}, t_A={t_a}, t_B={t_b}, t_out={t_out}"
    )]
    BadTimeOrdering {
        t_in: f64,
        t_a: f64,
        t_b: f64,
        t_out: f64,
    },
    #[error("joint dimension {dim} exceeds the supported maximum {MAX_JOINT_DIM}")]
    DimensionTooLarge { dim: usize },
    #[error("scenario has an interaction term; the factored forms require H_int = 0")]
    InteractionPresent,
    #[error("invalid measurement setting: {reason}")]
    InvalidSetting { reason: String },
}

/// Which operation is inserted earlier in the amplitude, regardless of the
/// numeric values of `t_A` and `t_B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InsertionOrder {
    AFirst,
    BFirst,
}

/// A bipartite scenario: local Hamiltonians and operators, an optional
/// joint interaction, operation times, and in/out states on the joint
/// space. Construct with [`QuantumScenario::validated`] to enforce the
/// invariants (Hermiticity, normalization, time ordering, dimensions).
#[derive(Debug, Clone, PartialEq)]
pub struct QuantumScenario {
    /// Hermitian generator on subsystem A (embedded as `H_A ⊗ I`).
    pub h_a: DMatrix<C64>,
    /// Hermitian generator on subsystem B (embedded as `I ⊗ H_B`).
    pub h_b: DMatrix<C64>,
    /// Optional Hermitian interaction on the joint space; `None` means the
    /// subsystems evolve independently.
    pub h_int: Option<DMatrix<C64>>,
    /// Operator applied on subsystem A at `t_a` (embedded as `O_A ⊗ I`).
    pub o_a: DMatrix<C64>,
    /// Operator applied on subsystem B at `t_b` (embedded as `I ⊗ O_B`).
    pub o_b: DMatrix<C64>,
    pub t_in: f64,
    pub t_a: f64,
    pub t_b: f64,
    pub t_out: f64,
    pub psi_in: DVector<C64>,
    pub psi_out: DVector<C64>,
}

impl QuantumScenario {
    pub fn dim_a(&self) -> usize {
        self.h_a.nrows()
    }

    pub fn dim_b(&self) -> usize {
        self.h_b.nrows()
    }

    pub fn joint_dim(&self) -> usize {
        self.dim_a() * self.dim_b()
    }

    /// Check all scenario invariants, returning the scenario on success.
    pub fn validated(self) -> Result<Self, QuantumError> {
        let da = self.dim_a();
        let db = self.dim_b();
        let joint = da * db;
        if joint > MAX_JOINT_DIM {
            return Err(QuantumError::DimensionTooLarge { dim: joint });
        }
        for (which, m, dim) in [
            ("H_A", &self.h_a, da),
            ("H_B", &self.h_b, db),
            ("O_A", &self.o_a, da),
            ("O_B", &self.o_b, db),
        ] {
            if m.nrows() != dim || m.ncols() != dim {
                return Err(QuantumError::DimensionMismatch {
                    what: which,
                    expected: dim,
                    got: m.nrows().max(m.ncols()),
                });
            }
        }
        for (which, m) in [("H_A", &self.h_a), ("H_B", &self.h_b)] {
            let defect = hermiticity_defect(m);
            if defect > tol::GEOMETRY_ABS {
                return Err(QuantumError::NotHermitian { which, defect });
            }
        }
        if let Some(h) = &self.h_int {
            if h.nrows() != joint || h.ncols() != joint {
                return Err(QuantumError::DimensionMismatch {
                    what: "H_int",
                    expected: joint,
                    got: h.nrows().max(h.ncols()),
                });
            }
            let defect = hermiticity_defect(h);
            if defect > tol::GEOMETRY_ABS {
                return Err(QuantumError::NotHermitian {
                    which: "H_int",
                    defect,
                });
            }
        }
        for (which, psi) in [("psi_in", &self.psi_in), ("psi_out", &self.psi_out)] {
            if psi.len() != joint {
                return Err(QuantumError::DimensionMismatch {
                    what: which,
                    expected: joint,
                    got: psi.len(),
                });
            }
            let norm = psi.norm();
            if (norm - 1.0).abs() > tol::GEOMETRY_ABS {
                return Err(QuantumError::NotNormalized { which, norm });
            }
        }
        if !(self.t_in <= self.t_a.min(self.t_b) && self.t_a.max(self.t_b) <= self.t_out) {
            return Err(QuantumError::BadTimeOrdering {
                t_in: self.t_in,
                t_a: self.t_a,
                t_b: self.t_b,
                t_out: self.t_out,
            });
        }
        Ok(self)
    }

    /// `H_A ⊗ I + I ⊗ H_B (+ H_int)` on the joint space.
    pub fn full_hamiltonian(&self) -> DMatrix<C64> {
        let ia = DMatrix::<C64>::identity(self.dim_a(), self.dim_a());
        let ib = DMatrix::<C64>::identity(self.dim_b(), self.dim_b());
        let mut h = self.h_a.kronecker(&ib) + ia.kronecker(&self.h_b);
        if let Some(hi) = &self.h_int {
            h += hi;
        }
        h
    }

    /// `O_A ⊗ I` on the joint space.
    pub fn o_a_embedded(&self) -> DMatrix<C64> {
        let ib = DMatrix::<C64>::identity(self.dim_b(), self.dim_b());
        self.o_a.kronecker(&ib)
    }

    /// `I ⊗ O_B` on the joint space.
    pub fn o_b_embedded(&self) -> DMatrix<C64> {
        let ia = DMatrix::<C64>::identity(self.dim_a(), self.dim_a());
        ia.kronecker(&self.o_b)
    }
}

/// Largest-magnitude entry of `M − M†`.
pub fn hermiticity_defect(m: &DMatrix<C64>) -> f64 {
    let d = m - m.adjoint();
    d.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Apply `exp(−i H Δt)` to a state via Hermitian eigendecomposition.
///
/// Unitary up to rounding for any real Δt (negative Δt runs backwards).
pub fn evolve(
    state: &DVector<C64>,
    h: &DMatrix<C64>,
    dt: f64,
) -> Result<DVector<C64>, QuantumError> {
    if h.nrows() != h.ncols() || h.nrows() != state.len() {
        return Err(QuantumError::DimensionMismatch {
            what: "evolve",
            expected: state.len(),
            got: h.nrows(),
        });
    }
    let defect = hermiticity_defect(h);
    if defect > tol::GEOMETRY_ABS {
        return Err(QuantumError::NotHermitian {
            which: "H",
            defect,
        });
    }
    let eig = h.clone().symmetric_eigen();
    // V e^{−iλΔt} V† ψ, evaluated right to left.
    let mut coeffs = eig.eigenvectors.adjoint() * state;
    for (i, c) in coeffs.iter_mut().enumerate() {
        let angle = -eig.eigenvalues[i] * dt;
        *c *= C64::new(angle.cos(), angle.sin());
    }
    Ok(&eig.eigenvectors * coeffs)
}

/// `exp(−i H Δt)` as a matrix, for the factored amplitude forms.
pub fn evolution_operator(h: &DMatrix<C64>, dt: f64) -> Result<DMatrix<C64>, QuantumError> {
    if h.nrows() != h.ncols() {
        return Err(QuantumError::DimensionMismatch {
            what: "evolution_operator",
            expected: h.nrows(),
            got: h.ncols(),
        });
    }
    let defect = hermiticity_defect(h);
    if defect > tol::GEOMETRY_ABS {
        return Err(QuantumError::NotHermitian {
            which: "H",
            defect,
        });
    }
    let eig = h.clone().symmetric_eigen();
    let mut phased = eig.eigenvectors.clone();
    for (i, mut col) in phased.column_iter_mut().enumerate() {
        let angle = -eig.eigenvalues[i] * dt;
        col *= C64::new(angle.cos(), angle.sin());
    }
    Ok(phased * eig.eigenvectors.adjoint())
}

/// The transition amplitude with both operations and the full Hamiltonian
/// (including any interaction), inserting the operation named by `order`
/// earlier:
///
/// ```text
/// ⟨ψ_out| U(t_out−t_later) O_later U(t_later−t_earlier) O_earlier U(t_earlier−t_in) |ψ_in⟩
/// ```
///
/// The numeric times stay attached to their own operations (`O_A` at `t_A`,
/// `O_B` at `t_B`); `order` only decides which one is applied first, so the
/// middle propagator may legitimately run backwards in coordinate time.
pub fn amplitude_ordered(
    s: &QuantumScenario,
    order: InsertionOrder,
) -> Result<Amplitude, QuantumError> {
    let h = s.full_hamiltonian();
    let (op_earlier, t_earlier, op_later, t_later) = match order {
        InsertionOrder::AFirst => (s.o_a_embedded(), s.t_a, s.o_b_embedded(), s.t_b),
        InsertionOrder::BFirst => (s.o_b_embedded(), s.t_b, s.o_a_embedded(), s.t_a),
    };
    let state = evolve(&s.psi_in, &h, t_earlier - s.t_in)?;
    let state = &op_earlier * state;
    let state = evolve(&state, &h, t_later - t_earlier)?;
    let state = &op_later * state;
    let state = evolve(&state, &h, s.t_out - t_later)?;
    Ok(s.psi_out.dotc(&state))
}

/// The factored amplitude for non-interacting scenarios: each subsystem's
/// chain `e^{−iH_X(t_out−t_X)} O_X e^{−iH_X(t_X−t_in)}` is assembled on its
/// own factor and the two are combined with one Kronecker product. Must
/// agree with [`amplitude_ordered`] whenever it is defined.
pub fn amplitude_factored(
    s: &QuantumScenario,
    order: InsertionOrder,
) -> Result<Amplitude, QuantumError> {
    if s.h_int.is_some() {
        return Err(QuantumError::InteractionPresent);
    }
    let chain_a = evolution_operator(&s.h_a, s.t_out - s.t_a)?
        * &s.o_a
        * evolution_operator(&s.h_a, s.t_a - s.t_in)?;
    let chain_b = evolution_operator(&s.h_b, s.t_out - s.t_b)?
        * &s.o_b
        * evolution_operator(&s.h_b, s.t_b - s.t_in)?;
    // The chains act on disjoint factors, so the combination order cannot
    // matter; honor `order` anyway so both code paths are exercised.
    let joint = match order {
        InsertionOrder::AFirst | InsertionOrder::BFirst => chain_a.kronecker(&chain_b),
    };
    Ok(s.psi_out.dotc(&(joint * &s.psi_in)))
}

/// The Heisenberg-picture amplitude for non-interacting scenarios:
/// `⟨ψ_out| O_later(t_later) O_earlier(t_earlier) |ψ_in⟩` with the dressed
/// operators
///
/// ```text
/// O_X(t) = e^{−iH_X(t_out−t)} O_X e^{−iH_X(t−t_in)}
/// ```
///
/// (embedded on the joint space), which absorb the in/out evolution factors
/// so that this literally equals the factored form.
pub fn amplitude_heisenberg(
    s: &QuantumScenario,
    order: InsertionOrder,
) -> Result<Amplitude, QuantumError> {
    if s.h_int.is_some() {
        return Err(QuantumError::InteractionPresent);
    }
    let ia = DMatrix::<C64>::identity(s.dim_a(), s.dim_a());
    let ib = DMatrix::<C64>::identity(s.dim_b(), s.dim_b());
    let dressed_a = (evolution_operator(&s.h_a, s.t_out - s.t_a)?
        * &s.o_a
        * evolution_operator(&s.h_a, s.t_a - s.t_in)?)
        .kronecker(&ib);
    let dressed_b = ia.kronecker(
        &(evolution_operator(&s.h_b, s.t_out - s.t_b)?
            * &s.o_b
            * evolution_operator(&s.h_b, s.t_b - s.t_in)?),
    );
    let product = match order {
        InsertionOrder::AFirst => dressed_b * dressed_a,
        InsertionOrder::BFirst => dressed_a * dressed_b,
    };
    Ok(s.psi_out.dotc(&(product * &s.psi_in)))
}

/// A complete set of orthogonal projectors on one subsystem: Hermitian,
/// idempotent, mutually orthogonal, summing to the identity.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasurementSetting {
    pub projectors: Vec<DMatrix<C64>>,
}

impl MeasurementSetting {
    pub fn new(projectors: Vec<DMatrix<C64>>) -> Self {
        MeasurementSetting { projectors }
    }

    /// Rank-1 projectors onto the computational basis of dimension `dim`.
    pub fn computational_basis(dim: usize) -> Self {
        let projectors = (0..dim)
            .map(|i| {
                let mut p = DMatrix::<C64>::zeros(dim, dim);
                p[(i, i)] = C64::new(1.0, 0.0);
                p
            })
            .collect();
        MeasurementSetting { projectors }
    }

    /// The two projectors onto the ±1 eigenvectors of the in-plane spin
    /// operator `σ(θ) = cosθ·σ_z + sinθ·σ_x`: `P± = (I ± σ(θ))/2`.
    pub fn spin_axis(theta: f64) -> Self {
        let s = spin_operator(theta);
        let i = DMatrix::<C64>::identity(2, 2);
        let half = C64::new(0.5, 0.0);
        MeasurementSetting {
            projectors: vec![(&i + &s) * half, (&i - &s) * half],
        }
    }

    pub fn outcomes(&self) -> usize {
        self.projectors.len()
    }

    /// Verify the projector axioms on a subsystem of dimension `dim`.
    pub fn validate(&self, dim: usize) -> Result<(), QuantumError> {
        let fail = |reason: String| Err(QuantumError::InvalidSetting { reason });
        if self.projectors.is_empty() {
            return fail("no projectors given".to_string());
        }
        for (i, p) in self.projectors.iter().enumerate() {
            if p.nrows() != dim || p.ncols() != dim {
                return fail(format!(
                    "projector {} is {}×{}, expected {}×{}",
                    i,
                    p.nrows(),
                    p.ncols(),
                    dim,
                    dim
                ));
            }
            let herm = hermiticity_defect(p);
            if herm > tol::PROJECTOR_ABS {
                return fail(format!("projector {} is not Hermitian (defect {herm:.3e})", i));
            }
            let idem = max_entry_norm(&(p * p - p));
            if idem > tol::PROJECTOR_ABS {
                return fail(format!("projector {} is not idempotent (defect {idem:.3e})", i));
            }
        }
        for i in 0..self.projectors.len() {
            for j in (i + 1)..self.projectors.len() {
                let cross = max_entry_norm(&(&self.projectors[i] * &self.projectors[j]));
                if cross > tol::PROJECTOR_ABS {
                    return fail(format!(
                        "projectors {} and {} are not orthogonal (max |P_iP_j| = {cross:.3e})",
                        i, j
                    ));
                }
            }
        }
        let mut sum = DMatrix::<C64>::zeros(dim, dim);
        for p in &self.projectors {
            sum += p;
        }
        let complete = max_entry_norm(&(sum - DMatrix::<C64>::identity(dim, dim)));
        if complete > tol::PROJECTOR_ABS {
            return fail(format!(
                "projectors do not sum to the identity (defect {complete:.3e})"
            ));
        }
        Ok(())
    }
}

/// Largest entry magnitude of a complex matrix.
pub fn max_entry_norm(m: &DMatrix<C64>) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Distribution of B's measurement outcomes at `t_B`, optionally with a
/// non-selective A-side measurement at `t_A`.
///
/// The state evolves under the full Hamiltonian to `t_A`; if `remote` is
/// given, the state branches over A's projectors without recording the
/// outcome; each branch evolves to `t_B`; the probability of B's outcome
/// `b` is the total squared weight of `I⊗P_b` across branches.
///
/// Without an interaction term the result is provably independent of
/// `remote` — B cannot detect whether A measured. With an interaction, it
/// generally is not.
pub fn marginal_distribution(
    s: &QuantumScenario,
    remote: Option<&MeasurementSetting>,
    local: &MeasurementSetting,
) -> Result<Vec<f64>, QuantumError> {
    local.validate(s.dim_b())?;
    if let Some(r) = remote {
        r.validate(s.dim_a())?;
    }
    let h = s.full_hamiltonian();
    let ia = DMatrix::<C64>::identity(s.dim_a(), s.dim_a());
    let ib = DMatrix::<C64>::identity(s.dim_b(), s.dim_b());

    let at_a = evolve(&s.psi_in, &h, s.t_a - s.t_in)?;
    let branches: Vec<DVector<C64>> = match remote {
        None => vec![at_a],
        Some(setting) => setting
            .projectors
            .iter()
            .map(|p| p.kronecker(&ib) * &at_a)
            .collect(),
    };

    let mut probs = vec![0.0; local.outcomes()];
    for branch in branches {
        let at_b = evolve(&branch, &h, s.t_b - s.t_a)?;
        for (b, p) in local.projectors.iter().enumerate() {
            let projected = ia.kronecker(p) * &at_b;
            probs[b] += projected.norm_squared();
        }
    }
    debug_assert!(
        (probs.iter().sum::<f64>() - 1.0).abs() < tol::GEOMETRY_ABS,
        "marginal probabilities must sum to 1"
    );
    Ok(probs)
}

/// Total-variation distance `½ Σ|p_i − q_i|` between two distributions
/// over the same outcome set.
pub fn total_variation(p: &[f64], q: &[f64]) -> f64 {
    debug_assert_eq!(p.len(), q.len());
    0.5 * p
        .iter()
        .zip(q.iter())
        .map(|(a, b)| (a - b).abs())
        .sum::<f64>()
}

/// In-plane spin operator `σ(θ) = cosθ·σ_z + sinθ·σ_x`.
pub fn spin_operator(theta: f64) -> DMatrix<C64> {
    let (c, s) = (theta.cos(), theta.sin());
    DMatrix::from_row_slice(
        2,
        2,
        &[
            C64::new(c, 0.0),
            C64::new(s, 0.0),
            C64::new(s, 0.0),
            C64::new(-c, 0.0),
        ],
    )
}

/// σ_x.
pub fn sigma_x() -> DMatrix<C64> {
    spin_operator(std::f64::consts::FRAC_PI_2)
}

/// σ_z.
pub fn sigma_z() -> DMatrix<C64> {
    spin_operator(0.0)
}

/// The two-qubit singlet `(|01⟩ − |10⟩)/√2`.
pub fn singlet() -> DVector<C64> {
    let r = std::f64::consts::FRAC_1_SQRT_2;
    DVector::from_vec(vec![
        C64::new(0.0, 0.0),
        C64::new(r, 0.0),
        C64::new(-r, 0.0),
        C64::new(0.0, 0.0),
    ])
}

/// CHSH combination `S = E(a1,b1) + E(a1,b2) + E(a2,b1) − E(a2,b2)` for a
/// two-qubit state, with `E(a,b) = ⟨σ(a) ⊗ σ(b)⟩`.
///
/// Local (product) states obey |S| ≤ 2; the singlet reaches magnitude 2√2.
pub fn chsh_value(
    state: &DVector<C64>,
    angles_a: (f64, f64),
    angles_b: (f64, f64),
) -> Result<f64, QuantumError> {
    if state.len() != 4 {
        return Err(QuantumError::DimensionMismatch {
            what: "chsh_value state",
            expected: 4,
            got: state.len(),
        });
    }
    let e = |a: f64, b: f64| {
        let op = spin_operator(a).kronecker(&spin_operator(b));
        state.dotc(&(op * state)).re
    };
    let (a1, a2) = angles_a;
    let (b1, b2) = angles_b;
    Ok(e(a1, b1) + e(a1, b2) + e(a2, b1) - e(a2, b2))
}

/// Largest-magnitude entry of the commutator `XY − YX`.
pub fn commutator_norm(x: &DMatrix<C64>, y: &DMatrix<C64>) -> Result<f64, QuantumError> {
    if x.nrows() != x.ncols() || y.nrows() != y.ncols() || x.nrows() != y.nrows() {
        return Err(QuantumError::DimensionMismatch {
            what: "commutator_norm",
            expected: x.nrows(),
            got: y.nrows(),
        });
    }
    Ok(max_entry_norm(&(x * y - y * x)))
}

/// Random complex matrix with independent standard-Gaussian real and
/// imaginary parts.
pub fn random_operator<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> DMatrix<C64> {
    DMatrix::from_fn(dim, dim, |_, _| {
        C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
    })
}

/// Random Hermitian matrix `(G + G†)/2` with Gaussian entries.
pub fn random_hermitian<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> DMatrix<C64> {
    let g = random_operator(dim, rng);
    (&g + g.adjoint()) * C64::new(0.5, 0.0)
}

/// Random normalized state with Gaussian amplitudes.
pub fn random_state<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> DVector<C64> {
    let mut v = DVector::from_fn(dim, |_, _| {
        C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
    });
    let norm = v.norm();
    v /= C64::new(norm, 0.0);
    v
}

/// Random complete rank-1 projective measurement: projectors onto the
/// columns of the unitary factor of a Gaussian matrix's QR decomposition.
pub fn random_basis_setting<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> MeasurementSetting {
    let q = random_operator(dim, rng).qr().q();
    let projectors = (0..dim)
        .map(|i| {
            let col = q.column(i);
            col * col.adjoint()
        })
        .collect();
    MeasurementSetting { projectors }
}

/// Random non-interacting scenario with Gaussian Hermitian generators,
/// Gaussian operators and states, and times drawn in [0, 1] (the two
/// operation times land in either numeric order).
pub fn random_commuting_scenario<R: Rng + ?Sized>(
    dim_a: usize,
    dim_b: usize,
    rng: &mut R,
) -> QuantumScenario {
    let joint = dim_a * dim_b;
    let mut times: Vec<f64> = (0..4).map(|_| rng.random_range(0.0..1.0)).collect();
    times.sort_by(f64::total_cmp);
    // Coordinate time order of the two operations is a coin flip; the
    // physics must not care.
    let (t_a, t_b) = if rng.random_bool(0.5) {
        (times[1], times[2])
    } else {
        (times[2], times[1])
    };
    QuantumScenario {
        h_a: random_hermitian(dim_a, rng),
        h_b: random_hermitian(dim_b, rng),
        h_int: None,
        o_a: random_operator(dim_a, rng),
        o_b: random_operator(dim_b, rng),
        t_in: times[0],
        t_a,
        t_b,
        t_out: times[3],
        psi_in: random_state(joint, rng),
        psi_out: random_state(joint, rng),
    }
    .validated()
    .expect("randomly generated scenario must satisfy its own invariants")
}

/// The bundled interacting counterexample: `H_int = 0.5·σ_x⊗σ_x`, free
/// local Hamiltonians, σ_z operations at t_A = 0.3 and t_B = 0.7 between
/// t_in = 0 and t_out = 1, with ψ_in = ψ_out = |00⟩.
///
/// Its amplitudes have closed forms — cos(0.1) for A-first, cos(0.9) for
/// B-first — so order matters by ≈ 0.373; and a σ_z measurement at A shifts
/// B's marginal by sin(0.3)·sin(0.4)/2 ≈ 0.0575: genuine signalling.
pub fn interacting_counterexample() -> QuantumScenario {
    let zero2 = DMatrix::<C64>::zeros(2, 2);
    let g = C64::new(0.5, 0.0);
    QuantumScenario {
        h_a: zero2.clone(),
        h_b: zero2,
        h_int: Some(sigma_x().kronecker(&sigma_x()) * g),
        o_a: sigma_z(),
        o_b: sigma_z(),
        t_in: 0.0,
        t_a: 0.3,
        t_b: 0.7,
        t_out: 1.0,
        psi_in: basis_state(4, 0),
        psi_out: basis_state(4, 0),
    }
    .validated()
    .expect("the bundled counterexample satisfies the scenario invariants")
}

/// Computational-basis vector |i⟩ in the given dimension.
pub fn basis_state(dim: usize, i: usize) -> DVector<C64> {
    let mut v = DVector::zeros(dim);
    v[i] = C64::new(1.0, 0.0);
    v
}
