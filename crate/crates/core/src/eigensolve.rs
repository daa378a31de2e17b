//! Hermitian eigendecomposition via cyclic Jacobi rotations.
//!
//! Every mixedness measure except the linear entropy is a function of the
//! spectrum of ρ, and the pure state closest to ρ is its top eigenvector,
//! so the whole crate hinges on one reliable Hermitian solver. Cyclic
//! Jacobi is the right tool at desk scale: it is simple, numerically
//! robust, keeps the accumulated eigenvector matrix unitary to round-off,
//! and converges quadratically once the off-diagonal mass is small.
//!
//! Each rotation annihilates one off-diagonal pair (p, q). The complex
//! entry is split into magnitude and phase, the phase is absorbed into the
//! rotation, and the remaining real symmetric 2×2 block is diagonalized
//! with the classic stable tangent formula.

use num_complex::Complex64;

use crate::densmat::{DensityMatrix, PureState, SquareMatrix, DEFAULT_TOLERANCE};
use crate::error::{Error, Result};

/// Sweeps before the solver gives up; far beyond what n ≤ 64 needs.
pub const DEFAULT_MAX_SWEEPS: usize = 100;

/// Default convergence threshold as a fraction of the input Frobenius norm.
pub const DEFAULT_CONVERGENCE_SCALE: f64 = 1e-12;

/// Eigenvalues (descending) and orthonormal eigenvectors of a Hermitian
/// matrix. Column k of `eigenvectors` belongs to `eigenvalues[k]`; ties in
/// the sort keep their original diagonal order, so the output is
/// deterministic even for degenerate spectra.
#[derive(Debug, Clone)]
pub struct Spectrum {
    dim: usize,
    eigenvalues: Vec<f64>,
    eigenvectors: SquareMatrix,
}

impl Spectrum {
    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn eigenvectors(&self) -> &SquareMatrix {
        &self.eigenvectors
    }

    /// Unit eigenvector for eigenvalue k.
    pub fn eigenvector(&self, k: usize) -> PureState {
        let n = self.dim;
        let column: Vec<Complex64> = (0..n).map(|i| self.eigenvectors.get(i, k)).collect();
        PureState::normalized(column).expect("eigenvector columns are unit vectors")
    }

    /// Largest eigenvalue and its eigenvector: the pure state closest to
    /// the decomposed matrix. Under degeneracy any vector of the top
    /// eigenspace may come back; the value is what matters.
    pub fn max_eigpair(&self) -> (f64, PureState) {
        (self.eigenvalues[0], self.eigenvector(0))
    }

    /// V · diag(λ) · V†, for residual checks.
    pub fn reconstruct(&self) -> SquareMatrix {
        let n = self.dim;
        let v = &self.eigenvectors;
        let mut out = SquareMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Complex64::new(0.0, 0.0);
                for k in 0..n {
                    acc += v.get(i, k) * self.eigenvalues[k] * v.get(j, k).conj();
                }
                out.set(i, j, acc);
            }
        }
        out
    }
}

fn offdiag_norm(m: &SquareMatrix) -> f64 {
    let n = m.dim();
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += m.get(i, j).norm_sqr();
            }
        }
    }
    sum.sqrt()
}

/// Decompose a Hermitian matrix.
///
/// Sweeps cyclically over all (p, q) pairs until the off-diagonal
/// Frobenius norm drops below `convergence_threshold`. Inputs whose
/// hermiticity deviation exceeds the default tolerance are rejected;
/// within tolerance they are symmetrized first so round-off asymmetry
/// cannot feed back into the rotations.
pub fn hermitian_eig(
    m: &SquareMatrix,
    convergence_threshold: f64,
    max_sweeps: usize,
) -> Result<Spectrum> {
    let (row, col, dev) = m.hermiticity_deviation();
    if !(dev <= DEFAULT_TOLERANCE) {
        return Err(Error::NotHermitian {
            row,
            col,
            deviation: dev,
        });
    }
    jacobi(m.symmetrized(), convergence_threshold, max_sweeps)
}

/// [`hermitian_eig`] with the default threshold 1e-12·‖M‖_F and sweep cap.
pub fn hermitian_eig_default(m: &SquareMatrix) -> Result<Spectrum> {
    hermitian_eig(
        m,
        DEFAULT_CONVERGENCE_SCALE * m.frobenius_norm(),
        DEFAULT_MAX_SWEEPS,
    )
}

/// Core loop; expects `w` to be exactly Hermitian.
fn jacobi(mut w: SquareMatrix, convergence_threshold: f64, max_sweeps: usize) -> Result<Spectrum> {
    let n = w.dim();
    let mut v = SquareMatrix::identity(n);

    let mut sweeps = 0;
    loop {
        let off = offdiag_norm(&w);
        if off <= convergence_threshold {
            break;
        }
        if sweeps >= max_sweeps {
            return Err(Error::NoConvergence {
                sweeps,
                off_norm: off,
            });
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut w, &mut v, p, q);
            }
        }
        sweeps += 1;
    }

    // Sort indices by eigenvalue, descending; stable, so degenerate values
    // keep their diagonal order.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        w.get(b, b)
            .re
            .partial_cmp(&w.get(a, a).re)
            .expect("eigenvalues are finite")
    });

    let eigenvalues: Vec<f64> = order.iter().map(|&k| w.get(k, k).re).collect();
    let mut eigenvectors = SquareMatrix::zeros(n);
    for (dst, &src) in order.iter().enumerate() {
        for i in 0..n {
            eigenvectors.set(i, dst, v.get(i, src));
        }
    }

    Ok(Spectrum {
        dim: n,
        eigenvalues,
        eigenvectors,
    })
}

/// Annihilate w[p][q] with a unitary plane rotation; w stays Hermitian,
/// v accumulates the rotations.
fn rotate(w: &mut SquareMatrix, v: &mut SquareMatrix, p: usize, q: usize) {
    let g = w.get(p, q);
    let magnitude = g.norm();
    if magnitude == 0.0 {
        return;
    }
    // phase e^{iφ} of the pivot; absorbing it reduces the block to the
    // real symmetric case
    let phase = g / magnitude;
    let alpha = w.get(p, p).re;
    let beta = w.get(q, q).re;

    let tau = (beta - alpha) / (2.0 * magnitude);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    let phase_conj = phase.conj();

    let n = w.dim();
    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let wkp = w.get(k, p);
        let wkq = w.get(k, q);
        let new_kp = c * wkp - s * phase_conj * wkq;
        let new_kq = s * wkp + c * phase_conj * wkq;
        w.set(k, p, new_kp);
        w.set(p, k, new_kp.conj());
        w.set(k, q, new_kq);
        w.set(q, k, new_kq.conj());
    }

    let two_scg = 2.0 * s * c * magnitude;
    w.set(
        p,
        p,
        Complex64::new(c * c * alpha + s * s * beta - two_scg, 0.0),
    );
    w.set(
        q,
        q,
        Complex64::new(s * s * alpha + c * c * beta + two_scg, 0.0),
    );
    w.set(p, q, Complex64::new(0.0, 0.0));
    w.set(q, p, Complex64::new(0.0, 0.0));

    for k in 0..n {
        let vkp = v.get(k, p);
        let vkq = v.get(k, q);
        v.set(k, p, c * vkp - s * phase_conj * vkq);
        v.set(k, q, s * vkp + c * phase_conj * vkq);
    }
}

impl DensityMatrix {
    /// Spectrum of a validated density matrix, prepared for the measures:
    /// eigenvalues clamped into [0, 1] (violations within the admission
    /// tolerance are round-off, and a negative λ would poison λ ln λ), and
    /// renormalized to sum 1 only if clamping moved the sum beyond the
    /// trace tolerance.
    pub fn spectrum(&self) -> Result<Spectrum> {
        let tol = self.tolerances();
        let mut s = hermitian_eig_default(&self.matrix().symmetrized())?;
        for lambda in &mut s.eigenvalues {
            if *lambda < -tol.psd {
                return Err(Error::NotPositiveSemidefinite {
                    eigenvalue: *lambda,
                    tolerance: tol.psd,
                });
            }
            *lambda = lambda.clamp(0.0, 1.0);
        }
        let sum: f64 = s.eigenvalues.iter().sum();
        if (sum - 1.0).abs() > tol.trace {
            for lambda in &mut s.eigenvalues {
                *lambda /= sum;
            }
        }
        Ok(s)
    }
}
