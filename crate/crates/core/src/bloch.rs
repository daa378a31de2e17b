//! Qubit states through the Bloch vector.
//!
//! A spin-1/2 density matrix is ρ = ½(1 + a·σ) with a real vector a,
//! |a| ≤ 1: the surface |a| = 1 is the sphere of pure states, the origin
//! is the maximally mixed state. Everything about such a state is a
//! function of the length a = |a| alone:
//!
//! - eigenvalues ½(1 + a) and ½(1 − a),
//! - purity ½(1 + a²),
//! - geometric measure D = ½(1 − a)², from 0 on the sphere up to ½ at
//!   the center.
//!
//! These analytic forms double as an end-to-end check of the generic
//! eigenvalue pipeline.

use num_complex::Complex64;

use crate::densmat::{DensityMatrix, SquareMatrix, Tolerances};
use crate::error::{Error, Result};

/// Excess over unit length accepted as round-off and renormalized away.
pub const LENGTH_SLACK: f64 = 1e-12;

/// Real 3-vector parameterizing a qubit state; physical iff |a| ≤ 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochVector {
    pub ax: f64,
    pub ay: f64,
    pub az: f64,
}

impl BlochVector {
    pub fn new(ax: f64, ay: f64, az: f64) -> Self {
        Self { ax, ay, az }
    }

    /// a = |a|.
    pub fn length(&self) -> f64 {
        (self.ax * self.ax + self.ay * self.ay + self.az * self.az).sqrt()
    }

    /// Vector of length `len` along `direction`; the direction must not be
    /// the zero vector.
    pub fn along(len: f64, direction: (f64, f64, f64)) -> Result<Self> {
        let (dx, dy, dz) = direction;
        let norm = (dx * dx + dy * dy + dz * dz).sqrt();
        if !(norm > 0.0) || !norm.is_finite() {
            return Err(Error::OutOfRange {
                value: norm,
                min: 0.0,
                max: f64::INFINITY,
            });
        }
        Ok(Self::new(len * dx / norm, len * dy / norm, len * dz / norm))
    }
}

pub fn pauli_x() -> SquareMatrix {
    let mut m = SquareMatrix::zeros(2);
    m.set(0, 1, Complex64::new(1.0, 0.0));
    m.set(1, 0, Complex64::new(1.0, 0.0));
    m
}

pub fn pauli_y() -> SquareMatrix {
    let mut m = SquareMatrix::zeros(2);
    m.set(0, 1, Complex64::new(0.0, -1.0));
    m.set(1, 0, Complex64::new(0.0, 1.0));
    m
}

pub fn pauli_z() -> SquareMatrix {
    let mut m = SquareMatrix::zeros(2);
    m.set(0, 0, Complex64::new(1.0, 0.0));
    m.set(1, 1, Complex64::new(-1.0, 0.0));
    m
}

/// ρ = ½(1 + a·σ) = ½ [[1+a_z, a_x − i a_y], [a_x + i a_y, 1 − a_z]].
///
/// Lengths within [`LENGTH_SLACK`] above 1 are renormalized to exactly 1;
/// anything longer is unphysical.
pub fn density_from_bloch(a: &BlochVector) -> Result<DensityMatrix> {
    let len = a.length();
    if !(len <= 1.0 + LENGTH_SLACK) {
        return Err(Error::UnphysicalBloch { length: len });
    }
    let scale = if len > 1.0 { 1.0 / len } else { 1.0 };
    let (ax, ay, az) = (a.ax * scale, a.ay * scale, a.az * scale);

    let mut m = SquareMatrix::zeros(2);
    m.set(0, 0, Complex64::new(0.5 * (1.0 + az), 0.0));
    m.set(0, 1, Complex64::new(0.5 * ax, -0.5 * ay));
    m.set(1, 0, Complex64::new(0.5 * ax, 0.5 * ay));
    m.set(1, 1, Complex64::new(0.5 * (1.0 - az), 0.0));
    Ok(DensityMatrix::new_unchecked(m, Tolerances::default()))
}

/// Inverse of [`density_from_bloch`]: a_k = Tr(ρ σ_k).
pub fn bloch_from_density(rho: &DensityMatrix) -> Result<BlochVector> {
    if rho.dim() != 2 {
        return Err(Error::DimMismatch {
            left: rho.dim(),
            right: 2,
        });
    }
    // traces of ρσ_k written out for the 2×2 case
    let ax = (rho.get(0, 1) + rho.get(1, 0)).re;
    let ay = (rho.get(1, 0) - rho.get(0, 1)).im;
    let az = (rho.get(0, 0) - rho.get(1, 1)).re;
    Ok(BlochVector::new(ax, ay, az))
}

fn check_length(a_len: f64) -> Result<f64> {
    if !(0.0..=1.0 + LENGTH_SLACK).contains(&a_len) {
        return Err(Error::OutOfRange {
            value: a_len,
            min: 0.0,
            max: 1.0,
        });
    }
    Ok(a_len.min(1.0))
}

/// Analytic eigenvalues (½(1 + a), ½(1 − a)), descending.
pub fn qubit_eigenvalues(a_len: f64) -> Result<(f64, f64)> {
    let a = check_length(a_len)?;
    Ok((0.5 * (1.0 + a), 0.5 * (1.0 - a)))
}

/// Analytic geometric measure D = ½(1 − a)².
pub fn qubit_geometric_mixing(a_len: f64) -> Result<f64> {
    let a = check_length(a_len)?;
    Ok(0.5 * (1.0 - a) * (1.0 - a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eigensolve::hermitian_eig_default;
    use crate::measures::geometric_mixing;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn origin_maps_to_maximally_mixed() {
        let rho = density_from_bloch(&BlochVector::new(0.0, 0.0, 0.0)).unwrap();
        assert_eq!(rho, DensityMatrix::maximally_mixed(2));
    }

    #[test]
    fn north_pole_maps_to_ground_projector() {
        let rho = density_from_bloch(&BlochVector::new(0.0, 0.0, 1.0)).unwrap();
        assert!((rho.get(0, 0) - c(1.0, 0.0)).norm() < 1e-15);
        assert!(rho.get(0, 1).norm() < 1e-15);
        assert!(rho.get(1, 1).norm() < 1e-15);
    }

    #[test]
    fn x_axis_state_by_hand() {
        let rho = density_from_bloch(&BlochVector::new(0.6, 0.0, 0.0)).unwrap();
        assert!((rho.get(0, 0) - c(0.5, 0.0)).norm() < 1e-15);
        assert!((rho.get(0, 1) - c(0.3, 0.0)).norm() < 1e-15);
        assert!((rho.get(1, 0) - c(0.3, 0.0)).norm() < 1e-15);
        assert!((rho.get(1, 1) - c(0.5, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn bloch_states_pass_validation() {
        let mut rng = crate::rng::SplitMix64::new(0xB10C);
        for _ in 0..50 {
            let (x, y) = rng.next_normal_pair();
            let (z, _) = rng.next_normal_pair();
            let len = rng.next_f64();
            let a = BlochVector::along(len, (x, y, z)).unwrap();
            let rho = density_from_bloch(&a).unwrap();
            assert!(DensityMatrix::validate(rho.matrix().clone(), Tolerances::default()).is_ok());
        }
    }

    #[test]
    fn too_long_vector_is_rejected() {
        let err = density_from_bloch(&BlochVector::new(1.01, 0.0, 0.0)).unwrap_err();
        assert!(matches!(err, Error::UnphysicalBloch { .. }));
    }

    #[test]
    fn tiny_round_off_excess_is_renormalized() {
        let a = BlochVector::new(1.0 + 5e-13, 0.0, 0.0);
        let rho = density_from_bloch(&a).unwrap();
        assert!((rho.purity() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn bloch_from_density_examples() {
        let mixed = bloch_from_density(&DensityMatrix::maximally_mixed(2)).unwrap();
        assert_eq!(mixed, BlochVector::new(0.0, 0.0, 0.0));

        let north =
            bloch_from_density(&density_from_bloch(&BlochVector::new(0.0, 0.0, 1.0)).unwrap())
                .unwrap();
        assert!((north.az - 1.0).abs() < 1e-15);

        // [[0.5, -0.25i], [0.25i, 0.5]] has a = (0, 0.5, 0)
        let mut m = SquareMatrix::zeros(2);
        m.set(0, 0, c(0.5, 0.0));
        m.set(0, 1, c(0.0, -0.25));
        m.set(1, 0, c(0.0, 0.25));
        m.set(1, 1, c(0.5, 0.0));
        let rho = DensityMatrix::validate(m, Tolerances::default()).unwrap();
        let a = bloch_from_density(&rho).unwrap();
        assert!(a.ax.abs() < 1e-15);
        assert!((a.ay - 0.5).abs() < 1e-15);
        assert!(a.az.abs() < 1e-15);
    }

    #[test]
    fn bloch_from_density_rejects_non_qubits() {
        let rho = DensityMatrix::maximally_mixed(3);
        assert!(matches!(
            bloch_from_density(&rho),
            Err(Error::DimMismatch { left: 3, right: 2 })
        ));
    }

    #[test]
    fn round_trip_is_identity() {
        let mut rng = crate::rng::SplitMix64::new(0x0B2);
        for _ in 0..100 {
            let (x, y) = rng.next_normal_pair();
            let (z, _) = rng.next_normal_pair();
            let a = BlochVector::along(rng.next_f64(), (x, y, z)).unwrap();
            let back = bloch_from_density(&density_from_bloch(&a).unwrap()).unwrap();
            assert!((a.ax - back.ax).abs() < 1e-12);
            assert!((a.ay - back.ay).abs() < 1e-12);
            assert!((a.az - back.az).abs() < 1e-12);
        }
    }

    #[test]
    fn analytic_eigenvalues() {
        assert_eq!(qubit_eigenvalues(0.0).unwrap(), (0.5, 0.5));
        assert_eq!(qubit_eigenvalues(1.0).unwrap(), (1.0, 0.0));
        let (l1, l2) = qubit_eigenvalues(0.6).unwrap();
        assert!((l1 - 0.8).abs() < 1e-15);
        assert!((l2 - 0.2).abs() < 1e-15);
        assert!(matches!(
            qubit_eigenvalues(1.5),
            Err(Error::OutOfRange { .. })
        ));
        assert!(matches!(
            qubit_eigenvalues(-0.1),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn analytic_geometric_measure() {
        assert_eq!(qubit_geometric_mixing(1.0).unwrap(), 0.0);
        assert_eq!(qubit_geometric_mixing(0.0).unwrap(), 0.5);
        assert!((qubit_geometric_mixing(0.5).unwrap() - 0.125).abs() < 1e-15);
    }

    #[test]
    fn pipeline_matches_analytic_formula_along_the_sweep() {
        // D must depend on the length alone, whatever the direction
        let mut rng = crate::rng::SplitMix64::new(0x5C4);
        for step in 0..=20 {
            let len = step as f64 / 20.0;
            for _ in 0..100 {
                let (x, y) = rng.next_normal_pair();
                let (z, _) = rng.next_normal_pair();
                let a = BlochVector::along(len, (x, y, z)).unwrap();
                let rho = density_from_bloch(&a).unwrap();
                let d = geometric_mixing(&rho.spectrum().unwrap()).unwrap();
                assert!(
                    (d - qubit_geometric_mixing(len).unwrap()).abs() < 1e-10,
                    "pipeline vs analytic at a={len}"
                );
            }
        }
    }

    #[test]
    fn purity_depends_only_on_length() {
        let mut rng = crate::rng::SplitMix64::new(0x9B1);
        for _ in 0..50 {
            let (x, y) = rng.next_normal_pair();
            let (z, _) = rng.next_normal_pair();
            let len = rng.next_f64();
            let a = BlochVector::along(len, (x, y, z)).unwrap();
            let rho = density_from_bloch(&a).unwrap();
            assert!((rho.purity() - 0.5 * (1.0 + len * len)).abs() < 1e-12);
        }
    }

    #[test]
    fn pauli_matrices_are_involutions() {
        for sigma in [pauli_x(), pauli_y(), pauli_z()] {
            let sq = sigma.matmul(&sigma).unwrap();
            let id = SquareMatrix::identity(2);
            for i in 0..2 {
                for j in 0..2 {
                    assert!((sq.get(i, j) - id.get(i, j)).norm() < 1e-15);
                }
            }
            assert!(sigma.trace().norm() < 1e-15);
        }
    }

    #[test]
    fn pipeline_eigenvalues_match_analytic_on_random_directions() {
        let mut rng = crate::rng::SplitMix64::new(0xAB1E);
        for _ in 0..30 {
            let (x, y) = rng.next_normal_pair();
            let (z, _) = rng.next_normal_pair();
            let len = rng.next_f64();
            let a = BlochVector::along(len, (x, y, z)).unwrap();
            let rho = density_from_bloch(&a).unwrap();
            let s = hermitian_eig_default(rho.matrix()).unwrap();
            let (l1, l2) = qubit_eigenvalues(len).unwrap();
            assert!((s.eigenvalues()[0] - l1).abs() < 1e-12);
            assert!((s.eigenvalues()[1] - l2).abs() < 1e-12);
        }
    }
}
