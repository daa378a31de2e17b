//! Scalar mixedness measures.
//!
//! Four numbers summarize how mixed a state is:
//!
//! - purity Tr ρ² (1 pure, 1/n maximally mixed),
//! - linear entropy S_L = 1 − Tr ρ², the only measure here that needs no
//!   eigenvalues,
//! - von Neumann entropy S = −Σ λᵢ ln λᵢ in nats (0 pure, ln n maximal),
//! - the geometric measure D = Σ λᵢ² + 1 − 2 λ_max, the squared
//!   Hilbert-Schmidt distance from ρ to the closest pure state, equal to
//!   the squared Euclidean distance from the eigenvalue vector to
//!   (1, 0, …, 0). Range: 0 (pure) to 1 − 1/n (maximally mixed).
//!
//! [`report`] computes the spectrum exactly once and derives everything
//! from it, so the measures in one report can never disagree about the
//! eigenvalues.

use serde::Serialize;

use crate::densmat::{DensityMatrix, DEFAULT_TOLERANCE};
use crate::eigensolve::Spectrum;
use crate::error::{Error, Result};

/// λ below this contributes 0·ln 0 = 0 to the entropy (continuity limit).
pub const ZERO_EIGENVALUE_CUTOFF: f64 = 1e-15;

/// All measures of one state, derived from a single eigendecomposition.
#[derive(Debug, Clone, Serialize)]
pub struct MixednessReport {
    pub dim: usize,
    pub purity: f64,
    pub von_neumann_entropy: f64,
    pub linear_entropy: f64,
    pub geometric_measure: f64,
    pub lambda_max: f64,
    pub eigenvalues: Vec<f64>,
}

/// Von Neumann entropy −Σ λᵢ ln λᵢ in nats.
///
/// Eigenvalues below [`ZERO_EIGENVALUE_CUTOFF`] (including round-off
/// negatives already inside the PSD tolerance) contribute zero; anything
/// more negative is a real violation and comes back as an error.
pub fn von_neumann_entropy(spectrum: &Spectrum) -> Result<f64> {
    if spectrum.eigenvalues().is_empty() {
        return Err(Error::EmptySpectrum);
    }
    let mut entropy = 0.0;
    for &lambda in spectrum.eigenvalues() {
        if lambda < -DEFAULT_TOLERANCE {
            return Err(Error::NegativeEigenvalue { eigenvalue: lambda });
        }
        if lambda > ZERO_EIGENVALUE_CUTOFF {
            entropy -= lambda * lambda.ln();
        }
    }
    Ok(entropy.max(0.0))
}

/// Linear entropy S_L = 1 − Tr ρ²; no eigendecomposition involved.
pub fn linear_entropy(rho: &DensityMatrix) -> f64 {
    1.0 - rho.purity()
}

/// Closed-form geometric measure of mixing D = Σ λᵢ² + 1 − 2 λ_max.
///
/// The equivalent grouping (1 − λ_max)² + Σ_{i≥2} λᵢ² is evaluated as
/// well; the two must agree to 1e-12 or something is broken internally.
pub fn geometric_mixing(spectrum: &Spectrum) -> Result<f64> {
    let lambdas = spectrum.eigenvalues();
    if lambdas.is_empty() {
        return Err(Error::EmptySpectrum);
    }
    let lambda_max = lambdas[0];
    let sum_sq: f64 = lambdas.iter().map(|l| l * l).sum();
    let direct = sum_sq + 1.0 - 2.0 * lambda_max;

    let residual: f64 = lambdas[1..].iter().map(|l| l * l).sum();
    let grouped = (1.0 - lambda_max) * (1.0 - lambda_max) + residual;
    assert!(
        (direct - grouped).abs() <= 1e-12,
        "geometric measure forms disagree: {direct} vs {grouped}"
    );

    Ok(direct.max(0.0))
}

/// Largest attainable D in dimension n: 1 − 1/n, reached only by 𝟙/n.
pub fn max_geometric_mixing(dim: usize) -> f64 {
    assert!(dim >= 1, "dimension must be at least 1");
    1.0 - 1.0 / dim as f64
}

/// Decompose once, fill every field.
///
/// Purity is computed both as Tr ρ² and as Σ λᵢ²; the two routes must
/// agree to 1e-10.
pub fn report(rho: &DensityMatrix) -> Result<MixednessReport> {
    let spectrum = rho.spectrum()?;
    let purity = rho.purity();
    let purity_from_spectrum: f64 = spectrum.eigenvalues().iter().map(|l| l * l).sum();
    assert!(
        (purity - purity_from_spectrum).abs() <= 1e-10,
        "trace purity {purity} disagrees with spectral purity {purity_from_spectrum}"
    );

    Ok(MixednessReport {
        dim: rho.dim(),
        purity,
        von_neumann_entropy: von_neumann_entropy(&spectrum)?,
        linear_entropy: 1.0 - purity,
        geometric_measure: geometric_mixing(&spectrum)?,
        lambda_max: spectrum.eigenvalues()[0],
        eigenvalues: spectrum.eigenvalues().to_vec(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::densmat::{PureState, SquareMatrix, Tolerances};
    use crate::eigensolve::hermitian_eig_default;

    fn spectrum_of(diag: &[f64]) -> Spectrum {
        hermitian_eig_default(&SquareMatrix::from_real_diagonal(diag)).unwrap()
    }

    #[test]
    fn entropy_of_pure_spectrum_is_zero() {
        let s = spectrum_of(&[1.0, 0.0, 0.0]);
        assert_eq!(von_neumann_entropy(&s).unwrap(), 0.0);
    }

    #[test]
    fn entropy_of_maximally_mixed_states_is_ln_n() {
        let s = spectrum_of(&[0.5, 0.5]);
        assert!((von_neumann_entropy(&s).unwrap() - std::f64::consts::LN_2).abs() < 1e-15);
        for n in [3usize, 5, 8] {
            let s = DensityMatrix::maximally_mixed(n).spectrum().unwrap();
            assert!((von_neumann_entropy(&s).unwrap() - (n as f64).ln()).abs() < 1e-14);
        }
    }

    #[test]
    fn entropy_of_three_level_example() {
        // frozen from a 40-digit evaluation of −Σ λ ln λ
        let s = spectrum_of(&[0.5, 0.3, 0.2]);
        assert!((von_neumann_entropy(&s).unwrap() - 1.029_653_014_064_573_4).abs() < 1e-12);
    }

    #[test]
    fn entropy_rejects_genuinely_negative_eigenvalues() {
        let s = spectrum_of(&[1.2, -0.2]);
        assert!(matches!(
            von_neumann_entropy(&s),
            Err(Error::NegativeEigenvalue { .. })
        ));
    }

    #[test]
    fn linear_entropy_examples() {
        let pure = PureState::basis_state(3, 1).projector();
        assert!(linear_entropy(&pure).abs() < 1e-12);

        for n in 2..=6 {
            let rho = DensityMatrix::maximally_mixed(n);
            assert!((linear_entropy(&rho) - (1.0 - 1.0 / n as f64)).abs() < 1e-14);
        }

        // qubit with Bloch length 0.6: purity 0.68
        let mut m = SquareMatrix::zeros(2);
        m.set(0, 0, num_complex::Complex64::new(0.5, 0.0));
        m.set(0, 1, num_complex::Complex64::new(0.3, 0.0));
        m.set(1, 0, num_complex::Complex64::new(0.3, 0.0));
        m.set(1, 1, num_complex::Complex64::new(0.5, 0.0));
        let rho = DensityMatrix::validate(m, Tolerances::default()).unwrap();
        assert!((linear_entropy(&rho) - 0.32).abs() < 1e-12);
    }

    #[test]
    fn geometric_mixing_examples() {
        let pure = spectrum_of(&[1.0, 0.0, 0.0, 0.0]);
        assert_eq!(geometric_mixing(&pure).unwrap(), 0.0);

        for n in 1..=8 {
            let rho = DensityMatrix::maximally_mixed(n);
            let d = geometric_mixing(&rho.spectrum().unwrap()).unwrap();
            assert!((d - max_geometric_mixing(n)).abs() < 1e-14);
        }

        let s = spectrum_of(&[0.5, 0.3, 0.2]);
        assert!((geometric_mixing(&s).unwrap() - 0.38).abs() < 1e-12);
    }

    #[test]
    fn max_geometric_mixing_formula() {
        assert_eq!(max_geometric_mixing(1), 0.0);
        assert_eq!(max_geometric_mixing(2), 0.5);
        assert_eq!(max_geometric_mixing(4), 0.75);
    }

    #[test]
    fn report_of_maximally_mixed_qubit() {
        let r = report(&DensityMatrix::maximally_mixed(2)).unwrap();
        assert_eq!(r.dim, 2);
        assert!((r.purity - 0.5).abs() < 1e-14);
        assert!((r.von_neumann_entropy - std::f64::consts::LN_2).abs() < 1e-14);
        assert!((r.linear_entropy - 0.5).abs() < 1e-14);
        assert!((r.geometric_measure - 0.5).abs() < 1e-14);
        assert!((r.lambda_max - 0.5).abs() < 1e-14);
    }

    #[test]
    fn report_of_pure_projector() {
        let psi = PureState::normalized(vec![
            num_complex::Complex64::new(1.0, -0.5),
            num_complex::Complex64::new(0.25, 2.0),
        ])
        .unwrap();
        let r = report(&psi.projector()).unwrap();
        assert!((r.purity - 1.0).abs() < 1e-12);
        assert!(r.von_neumann_entropy.abs() < 1e-7);
        assert!(r.linear_entropy.abs() < 1e-12);
        assert!(r.geometric_measure.abs() < 1e-12);
        assert!((r.lambda_max - 1.0).abs() < 1e-12);
    }

    #[test]
    fn report_of_bloch_qubit() {
        // Bloch length 0.6: purity 0.68, D = ½·0.4² = 0.08, λ_max = 0.8
        let mut m = SquareMatrix::zeros(2);
        m.set(0, 0, num_complex::Complex64::new(0.5, 0.0));
        m.set(0, 1, num_complex::Complex64::new(0.3, 0.0));
        m.set(1, 0, num_complex::Complex64::new(0.3, 0.0));
        m.set(1, 1, num_complex::Complex64::new(0.5, 0.0));
        let rho = DensityMatrix::validate(m, Tolerances::default()).unwrap();
        let r = report(&rho).unwrap();
        assert!((r.purity - 0.68).abs() < 1e-12);
        assert!((r.geometric_measure - 0.08).abs() < 1e-12);
        assert!((r.lambda_max - 0.8).abs() < 1e-12);
    }

    #[test]
    fn report_serializes_flat_json() {
        let r = report(&DensityMatrix::maximally_mixed(2)).unwrap();
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["dim"], 2);
        assert!(json["purity"].is_f64());
        assert!(json["eigenvalues"].is_array());
    }
}
