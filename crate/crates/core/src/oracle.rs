//! Variational certification of the closed-form measure.
//!
//! The geometric measure is *defined* as a minimum over all pure states;
//! the closed form evaluates it from the spectrum. This module performs
//! the minimization directly, with machinery deliberately disjoint from
//! the Jacobi eigensolver, so agreement between the two is a real check
//! rather than a tautology:
//!
//! - [`minimize_over_pure`] samples start states uniformly on the complex
//!   unit sphere and refines each with the shifted power map
//!   ψ ← normalize((ρ + 𝟙)ψ). The shift keeps the top eigenvector dominant
//!   for every ρ (all eigenvalues of ρ + 𝟙 lie in [1, 2]), and each step
//!   can only increase ⟨ψ|ρ|ψ⟩, i.e. decrease the objective.
//! - [`grid_minimize_qubit`] sweeps an exhaustive (θ, φ) grid over the
//!   qubit state sphere — no iteration, no randomness.
//!
//! Everything is deterministic given the seed; results are reproducible
//! bit for bit.

use num_complex::Complex64;

use crate::densmat::{DensityMatrix, PureState};
use crate::error::{Error, Result};
use crate::rng::SplitMix64;

pub const DEFAULT_RESTARTS: usize = 200;
pub const DEFAULT_REFINE_ITERS: usize = 500;
pub const DEFAULT_SEED: u64 = 42;

/// |closed form − oracle| below this certifies agreement (CLI PASS).
pub const DEFAULT_AGREEMENT_TOL: f64 = 1e-6;

/// The two routes through the objective must agree this tightly.
const OBJECTIVE_AGREEMENT_TOL: f64 = 1e-10;

/// Outcome of a variational minimization.
///
/// `d_estimate` can undershoot the true minimum only by round-off: every
/// evaluation is the exact objective of an actual pure state.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleResult {
    pub d_estimate: f64,
    pub best_state: PureState,
    pub restarts_used: usize,
    pub refinement_iterations: usize,
    pub seed: u64,
}

/// Uniform sample on the complex unit sphere: 2n independent standard
/// normals (real and imaginary parts), then normalization.
pub fn sample_pure_state(dim: usize, rng: &mut SplitMix64) -> PureState {
    assert!(dim >= 1, "dimension must be at least 1");
    loop {
        let mut amplitudes = Vec::with_capacity(dim);
        for _ in 0..dim {
            let (re, im) = rng.next_normal_pair();
            amplitudes.push(Complex64::new(re, im));
        }
        // the zero draw has probability zero but would kill normalization
        if let Ok(psi) = PureState::normalized(amplitudes) {
            return psi;
        }
    }
}

/// The objective Tr(ρ − |ψ⟩⟨ψ|)², evaluated along both algebraic routes:
///
/// 1. term-by-term, Tr ρ² + 1 − 2⟨ψ|ρ|ψ⟩, and
/// 2. directly, as the squared Hilbert-Schmidt distance to |ψ⟩⟨ψ|.
///
/// The routes must agree to 1e-10; a gap is an internal bug surfaced as
/// [`Error::InternalDisagreement`].
pub fn objective(rho: &DensityMatrix, psi: &PureState) -> Result<f64> {
    let decomposed = rho.purity() + 1.0 - 2.0 * rho.expectation(psi)?;
    let direct = rho.hs_distance_sq(&psi.projector())?;
    if (decomposed - direct).abs() > OBJECTIVE_AGREEMENT_TOL {
        return Err(Error::InternalDisagreement { decomposed, direct });
    }
    Ok(decomposed)
}

/// One shifted power-map step ψ ← normalize((ρ + 𝟙)ψ).
///
/// Monotone: the objective never increases across a step (up to
/// round-off), because the map contracts toward the top eigenspace of ρ.
pub fn refine_step(rho: &DensityMatrix, psi: &PureState) -> PureState {
    let n = rho.dim();
    let amps = psi.amplitudes();
    let mut next = Vec::with_capacity(n);
    for i in 0..n {
        let mut acc = amps[i];
        for j in 0..n {
            acc += rho.get(i, j) * amps[j];
        }
        next.push(acc);
    }
    PureState::normalized(next).expect("(rho + 1)psi cannot vanish for a PSD rho")
}

/// Minimize the objective over pure states by random restarts plus power
/// refinement. Restarts are ordered; the reported minimum is the earliest
/// restart achieving the smallest value, so the result is a deterministic
/// function of (ρ, restarts, refine_iters, seed).
pub fn minimize_over_pure(
    rho: &DensityMatrix,
    restarts: usize,
    refine_iters: usize,
    seed: u64,
) -> Result<OracleResult> {
    assert!(restarts >= 1, "at least one restart is required");
    let mut rng = SplitMix64::new(seed);
    let mut best: Option<(f64, PureState)> = None;

    for _ in 0..restarts {
        let mut psi = sample_pure_state(rho.dim(), &mut rng);
        for _ in 0..refine_iters {
            psi = refine_step(rho, &psi);
        }
        let value = objective(rho, &psi)?;
        let better = match &best {
            None => true,
            Some((current, _)) => value < *current,
        };
        if better {
            best = Some((value, psi));
        }
    }

    let (d_estimate, best_state) = best.expect("restarts >= 1");
    Ok(OracleResult {
        d_estimate,
        best_state,
        restarts_used: restarts,
        refinement_iterations: refine_iters,
        seed,
    })
}

/// Exhaustive qubit check on the grid ψ(θ, φ) = (cos θ/2, e^{iφ} sin θ/2),
/// θ ∈ [0, π] inclusive, φ ∈ [0, 2π) exclusive. Only defined for dim 2.
pub fn grid_minimize_qubit(
    rho: &DensityMatrix,
    theta_steps: usize,
    phi_steps: usize,
) -> Result<OracleResult> {
    if rho.dim() != 2 {
        return Err(Error::DimMismatch {
            left: rho.dim(),
            right: 2,
        });
    }
    assert!(
        theta_steps >= 2 && phi_steps >= 2,
        "grid needs at least two steps per angle"
    );

    let mut best: Option<(f64, PureState)> = None;
    for i in 0..theta_steps {
        let theta = std::f64::consts::PI * i as f64 / (theta_steps - 1) as f64;
        let (half_sin, half_cos) = (0.5 * theta).sin_cos();
        for j in 0..phi_steps {
            let phi = 2.0 * std::f64::consts::PI * j as f64 / phi_steps as f64;
            let psi = PureState::new(
                vec![
                    Complex64::new(half_cos, 0.0),
                    Complex64::from_polar(half_sin, phi),
                ],
                1e-12,
            )
            .expect("grid states are unit vectors by construction");
            let value = objective(rho, &psi)?;
            let better = match &best {
                None => true,
                Some((current, _)) => value < *current,
            };
            if better {
                best = Some((value, psi));
            }
        }
    }

    let (d_estimate, best_state) = best.expect("grid is nonempty");
    Ok(OracleResult {
        d_estimate,
        best_state,
        restarts_used: theta_steps * phi_steps,
        refinement_iterations: 0,
        seed: 0,
    })
}
