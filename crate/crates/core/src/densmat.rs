//! Dense complex matrix core.
//!
//! Everything is stored dense and row-major; the matrices this crate deals
//! with are desk scale (n ≲ 64), so simplicity wins over structured
//! storage. [`SquareMatrix`] is the unvalidated carrier used for I/O and
//! intermediate results; [`DensityMatrix`] and [`PureState`] are the
//! validated containers whose invariants (Hermitian, unit trace, positive
//! semidefinite; unit norm) every downstream computation relies on.

use num_complex::Complex64;

use crate::eigensolve;
use crate::error::{Error, Result};

/// Validation tolerances. The defaults (1e-9 across the board) sit far
/// above double-precision round-off for the matrix sizes we handle and far
/// below any physically meaningful violation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Max allowed `|M[i][j] − conj(M[j][i])|`.
    pub herm: f64,
    /// Max allowed |Re Tr M − 1|.
    pub trace: f64,
    /// Eigenvalues may undershoot zero by this much.
    pub psd: f64,
    /// Max allowed |Σ|ψᵢ|² − 1| for state vectors.
    pub norm: f64,
}

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            herm: DEFAULT_TOLERANCE,
            trace: DEFAULT_TOLERANCE,
            psd: DEFAULT_TOLERANCE,
            norm: DEFAULT_TOLERANCE,
        }
    }
}

/// Assert that a nominally real quantity really is real and return its
/// real part. A violation means complex values leaked through an algebraic
/// identity, which is a bug in this crate rather than bad input.
pub(crate) fn real_within(z: Complex64, tol: f64, context: &str) -> f64 {
    assert!(
        z.im.abs() <= tol,
        "{context}: imaginary part {:e} exceeds tolerance {:e}",
        z.im,
        tol
    );
    z.re
}

/// Unvalidated n×n complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SquareMatrix {
    dim: usize,
    entries: Vec<Complex64>,
}

impl SquareMatrix {
    pub fn zeros(dim: usize) -> Self {
        assert!(dim >= 1, "matrix dimension must be at least 1");
        Self {
            dim,
            entries: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, Complex64::new(1.0, 0.0));
        }
        m
    }

    /// Build from a row-major entry buffer; the buffer length must be dim².
    pub fn from_entries(dim: usize, entries: Vec<Complex64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::MalformedMatrix(
                "dimension must be at least 1".into(),
            ));
        }
        if entries.len() != dim * dim {
            return Err(Error::MalformedMatrix(format!(
                "expected {} entries for dim {}, got {}",
                dim * dim,
                dim,
                entries.len()
            )));
        }
        Ok(Self { dim, entries })
    }

    /// Diagonal matrix from real values.
    pub fn from_real_diagonal(values: &[f64]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, &v) in values.iter().enumerate() {
            m.set(i, i, Complex64::new(v, 0.0));
        }
        m
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.dim + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: Complex64) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.set(j, i, self.get(i, j).conj());
            }
        }
        out
    }

    /// Standard matrix product.
    pub fn matmul(&self, other: &SquareMatrix) -> Result<SquareMatrix> {
        if self.dim != other.dim {
            return Err(Error::DimMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let aik = self.get(i, k);
                if aik == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    let v = out.get(i, j) + aik * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Worst deviation from hermiticity: (row, col, `|M[i][j] − conj(M[j][i])|`).
    /// Non-finite entries surface as a NaN deviation, which every caller
    /// treats as a violation.
    pub fn hermiticity_deviation(&self) -> (usize, usize, f64) {
        let mut worst = (0, 0, 0.0);
        for i in 0..self.dim {
            for j in i..self.dim {
                let dev = (self.get(i, j) - self.get(j, i).conj()).norm();
                if dev.is_nan() {
                    return (i, j, dev);
                }
                if dev > worst.2 {
                    worst = (i, j, dev);
                }
            }
        }
        worst
    }

    /// Hermitian part (M + M†)/2; the identity map for Hermitian input up
    /// to round-off.
    pub fn symmetrized(&self) -> Self {
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, 0.5 * (self.get(i, j) + self.get(j, i).conj()));
            }
        }
        out
    }
}

/// Validated density matrix: Hermitian, unit trace, positive semidefinite.
///
/// Instances only come out of [`DensityMatrix::validate`] or out of
/// constructors whose output satisfies the invariants by construction
/// (projectors, the maximally mixed state, Bloch parameterization). The
/// tolerances a matrix was admitted under travel with it and govern later
/// eigenvalue clamping.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: SquareMatrix,
    tol: Tolerances,
}

impl DensityMatrix {
    /// Check all three density-matrix axioms and wrap the matrix.
    ///
    /// The positivity check runs the Jacobi eigensolver on the symmetrized
    /// input. Eigenvalues inside [−tol.psd, 0) are tolerated here and
    /// clamped to zero whenever a spectrum is extracted later.
    pub fn validate(matrix: SquareMatrix, tol: Tolerances) -> Result<Self> {
        let (row, col, dev) = matrix.hermiticity_deviation();
        if !(dev <= tol.herm) {
            return Err(Error::NotHermitian {
                row,
                col,
                deviation: dev,
            });
        }

        let tr = matrix.trace();
        let dev = (tr - Complex64::new(1.0, 0.0)).norm();
        if !((tr.re - 1.0).abs() <= tol.trace && tr.im.abs() <= tol.herm) {
            return Err(Error::TraceNotOne {
                trace: tr.re,
                deviation: dev,
            });
        }

        let spectrum = eigensolve::hermitian_eig_default(&matrix.symmetrized())?;
        let min = spectrum
            .eigenvalues()
            .iter()
            .copied()
            .fold(f64::INFINITY, f64::min);
        if !(min >= -tol.psd) {
            return Err(Error::NotPositiveSemidefinite {
                eigenvalue: min,
                tolerance: tol.psd,
            });
        }

        Ok(Self { matrix, tol })
    }

    /// Wrap a matrix whose invariants hold by construction.
    pub(crate) fn new_unchecked(matrix: SquareMatrix, tol: Tolerances) -> Self {
        Self { matrix, tol }
    }

    /// The maximally mixed state 𝟙/n, the unique state farthest from every
    /// pure state.
    pub fn maximally_mixed(dim: usize) -> Self {
        assert!(dim >= 1, "dimension must be at least 1");
        let mut m = SquareMatrix::zeros(dim);
        let p = Complex64::new(1.0 / dim as f64, 0.0);
        for i in 0..dim {
            m.set(i, i, p);
        }
        Self::new_unchecked(m, Tolerances::default())
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.matrix.get(row, col)
    }

    pub fn matrix(&self) -> &SquareMatrix {
        &self.matrix
    }

    pub fn tolerances(&self) -> Tolerances {
        self.tol
    }

    /// Purity Tr ρ², in [1/n, 1]: 1 exactly for pure states, 1/n for the
    /// maximally mixed state. No eigendecomposition involved.
    pub fn purity(&self) -> f64 {
        let n = self.dim();
        let mut tr = Complex64::new(0.0, 0.0);
        for i in 0..n {
            for j in 0..n {
                tr += self.get(i, j) * self.get(j, i);
            }
        }
        real_within(tr, self.tol.herm, "purity")
    }

    /// Squared Hilbert-Schmidt distance Tr(ρ₁ − ρ₂)², clamped at zero from
    /// below against round-off.
    pub fn hs_distance_sq(&self, other: &DensityMatrix) -> Result<f64> {
        if self.dim() != other.dim() {
            return Err(Error::DimMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        let n = self.dim();
        let mut tr = Complex64::new(0.0, 0.0);
        for i in 0..n {
            for j in 0..n {
                let dij = self.get(i, j) - other.get(i, j);
                let dji = self.get(j, i) - other.get(j, i);
                tr += dij * dji;
            }
        }
        let d2 = real_within(tr, self.tol.herm.max(other.tol.herm), "hs_distance_sq");
        Ok(d2.max(0.0))
    }

    /// Expectation ⟨ψ|ρ|ψ⟩ = Tr(ρ|ψ⟩⟨ψ|), in [λ_min, λ_max] ⊆ [0, 1].
    pub fn expectation(&self, psi: &PureState) -> Result<f64> {
        if self.dim() != psi.dim() {
            return Err(Error::DimMismatch {
                left: self.dim(),
                right: psi.dim(),
            });
        }
        let n = self.dim();
        let amps = psi.amplitudes();
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 0..n {
            let mut row = Complex64::new(0.0, 0.0);
            for j in 0..n {
                row += self.get(i, j) * amps[j];
            }
            acc += amps[i].conj() * row;
        }
        Ok(real_within(acc, self.tol.herm, "expectation"))
    }
}

/// Unit-norm complex state vector |ψ⟩.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    amplitudes: Vec<Complex64>,
}

impl PureState {
    /// Wrap amplitudes that are already normalized within `tol_norm`.
    pub fn new(amplitudes: Vec<Complex64>, tol_norm: f64) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(Error::MalformedMatrix(
                "state vector must have at least one amplitude".into(),
            ));
        }
        let norm_sq: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        let dev = (norm_sq - 1.0).abs();
        if !(dev <= tol_norm) {
            return Err(Error::NotNormalized { deviation: dev });
        }
        Ok(Self { amplitudes })
    }

    /// Normalize arbitrary amplitudes to unit norm; fails on the zero vector.
    pub fn normalized(amplitudes: Vec<Complex64>) -> Result<Self> {
        let norm_sq: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if !(norm_sq > 0.0) || !norm_sq.is_finite() {
            return Err(Error::NotNormalized { deviation: 1.0 });
        }
        let inv = 1.0 / norm_sq.sqrt();
        Ok(Self {
            amplitudes: amplitudes.into_iter().map(|a| a * inv).collect(),
        })
    }

    /// Computational basis vector |k⟩.
    pub fn basis_state(dim: usize, k: usize) -> Self {
        assert!(k < dim, "basis index {k} out of range for dim {dim}");
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); dim];
        amplitudes[k] = Complex64::new(1.0, 0.0);
        Self { amplitudes }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes
            .iter()
            .map(|a| a.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Inner product ⟨self|other⟩.
    pub fn inner(&self, other: &PureState) -> Result<Complex64> {
        if self.dim() != other.dim() {
            return Err(Error::DimMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(self
            .amplitudes
            .iter()
            .zip(other.amplitudes.iter())
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// Rank-1 projector |ψ⟩⟨ψ|: idempotent, trace 1, the density matrix of
    /// the pure state ψ.
    pub fn projector(&self) -> DensityMatrix {
        let n = self.dim();
        let mut m = SquareMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, self.amplitudes[i] * self.amplitudes[j].conj());
            }
        }
        DensityMatrix::new_unchecked(m, Tolerances::default())
    }
}
