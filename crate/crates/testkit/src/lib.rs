//! Test-support kit: deterministic random quantum objects and independent
//! numerical oracles.
//!
//! Everything here exists to *check* the main crate, so the oracles take
//! different routes than the code under test: eigenvalues come from
//! bisection on the characteristic polynomial (LU determinants, no Jacobi
//! rotations), and the generators only touch the public constructors.

// NaN must read as a violation, hence the negated comparisons; index loops
// mirror the row/column structure of the math.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
#![allow(clippy::needless_range_loop)]

use num_complex::Complex64;

use qmix_core::densmat::{DensityMatrix, SquareMatrix, Tolerances};
use qmix_core::rng::SplitMix64;

/// Random density matrix: ρ = G·G† / Tr(G·G†) with i.i.d. complex Gaussian
/// G, admitted through the real validation path.
pub fn random_density(dim: usize, rng: &mut SplitMix64) -> DensityMatrix {
    let g = random_gaussian_matrix(dim, rng);
    let w = g.matmul(&g.adjoint()).expect("dims match");
    let trace = w.trace().re;
    let mut entries = Vec::with_capacity(dim * dim);
    for i in 0..dim {
        for j in 0..dim {
            entries.push(w.get(i, j) / trace);
        }
    }
    let m = SquareMatrix::from_entries(dim, entries).expect("square by construction");
    DensityMatrix::validate(m, Tolerances::default())
        .expect("normalized Wishart matrices are valid density matrices")
}

/// Haar-ish random unitary: complex Gaussian matrix orthonormalized by two
/// passes of modified Gram-Schmidt (twice keeps the Gram residual at
/// round-off level).
pub fn random_unitary(dim: usize, rng: &mut SplitMix64) -> SquareMatrix {
    let g = random_gaussian_matrix(dim, rng);
    let mut cols: Vec<Vec<Complex64>> = (0..dim)
        .map(|k| (0..dim).map(|i| g.get(i, k)).collect())
        .collect();

    for _pass in 0..2 {
        for k in 0..dim {
            for prev in 0..k {
                let overlap: Complex64 = (0..dim).map(|i| cols[prev][i].conj() * cols[k][i]).sum();
                for i in 0..dim {
                    let adjusted = cols[k][i] - overlap * cols[prev][i];
                    cols[k][i] = adjusted;
                }
            }
            let norm: f64 = cols[k].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            assert!(norm > 1e-12, "Gaussian columns are independent");
            for z in &mut cols[k] {
                *z /= norm;
            }
        }
    }

    let mut u = SquareMatrix::zeros(dim);
    for k in 0..dim {
        for i in 0..dim {
            u.set(i, k, cols[k][i]);
        }
    }
    u
}

/// UρU†, revalidated.
pub fn conjugate(rho: &DensityMatrix, u: &SquareMatrix) -> qmix_core::Result<DensityMatrix> {
    let rotated = u.matmul(rho.matrix())?.matmul(&u.adjoint())?;
    DensityMatrix::validate(rotated, rho.tolerances())
}

/// Depolarizing blend (1 − t)ρ + t·𝟙/n, revalidated.
pub fn depolarize(rho: &DensityMatrix, t: f64) -> qmix_core::Result<DensityMatrix> {
    let n = rho.dim();
    let uniform = 1.0 / n as f64;
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let id = if i == j { uniform } else { 0.0 };
            entries.push(rho.get(i, j) * (1.0 - t) + Complex64::new(t * id, 0.0));
        }
    }
    let m = SquareMatrix::from_entries(n, entries)?;
    DensityMatrix::validate(m, rho.tolerances())
}

fn random_gaussian_matrix(dim: usize, rng: &mut SplitMix64) -> SquareMatrix {
    let mut m = SquareMatrix::zeros(dim);
    for i in 0..dim {
        for j in 0..dim {
            let (re, im) = rng.next_normal_pair();
            m.set(i, j, Complex64::new(re, im));
        }
    }
    m
}

/// Determinant by LU with partial pivoting.
pub fn determinant(m: &SquareMatrix) -> Complex64 {
    let n = m.dim();
    let mut a: Vec<Complex64> = m.entries().to_vec();
    let mut det = Complex64::new(1.0, 0.0);
    for col in 0..n {
        let mut pivot = col;
        let mut best = a[col * n + col].norm();
        for row in (col + 1)..n {
            let candidate = a[row * n + col].norm();
            if candidate > best {
                best = candidate;
                pivot = row;
            }
        }
        if best == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if pivot != col {
            for c in 0..n {
                a.swap(col * n + c, pivot * n + c);
            }
            det = -det;
        }
        let diag = a[col * n + col];
        det *= diag;
        for row in (col + 1)..n {
            let factor = a[row * n + col] / diag;
            for c in col..n {
                let above = a[col * n + c];
                a[row * n + c] -= factor * above;
            }
        }
    }
    det
}

/// Eigenvalues of a Hermitian matrix by bisection on det(M − xI),
/// ascending. Completely independent of the Jacobi solver.
///
/// Scans the Gershgorin interval on a fine grid for sign changes of the
/// (real) characteristic polynomial and bisects each bracket. Fails if it
/// cannot isolate exactly n simple roots, which for the random matrices
/// used in tests does not happen.
pub fn charpoly_eigenvalues(m: &SquareMatrix) -> Result<Vec<f64>, String> {
    let n = m.dim();
    let (_, _, herm_dev) = m.hermiticity_deviation();
    if !(herm_dev <= 1e-9) {
        return Err(format!("matrix is not Hermitian (deviation {herm_dev:e})"));
    }

    // Gershgorin bounds with padding
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let center = m.get(i, i).re;
        let radius: f64 = (0..n).filter(|&j| j != i).map(|j| m.get(i, j).norm()).sum();
        lo = lo.min(center - radius);
        hi = hi.max(center + radius);
    }
    let pad = 1e-6 * (1.0 + hi.abs().max(lo.abs()));
    lo -= pad;
    hi += pad;

    let char_poly = |x: f64| {
        let mut shifted = m.clone();
        for i in 0..n {
            shifted.set(i, i, shifted.get(i, i) - Complex64::new(x, 0.0));
        }
        determinant(&shifted).re
    };

    let samples = 4000 * n;
    let step = (hi - lo) / samples as f64;
    let mut roots = Vec::new();
    let mut prev_x = lo;
    let mut prev_f = char_poly(lo);
    for k in 1..=samples {
        let x = lo + step * k as f64;
        let f = char_poly(x);
        if prev_f == 0.0 {
            roots.push(prev_x);
        } else if prev_f * f < 0.0 {
            // bisect the bracket
            let (mut a, mut b) = (prev_x, x);
            let mut fa = prev_f;
            for _ in 0..200 {
                let mid = 0.5 * (a + b);
                if b - a <= f64::EPSILON * (1.0 + mid.abs()) {
                    break;
                }
                let fm = char_poly(mid);
                if fm == 0.0 {
                    a = mid;
                    b = mid;
                    break;
                }
                if fa * fm < 0.0 {
                    b = mid;
                } else {
                    a = mid;
                    fa = fm;
                }
            }
            roots.push(0.5 * (a + b));
        }
        prev_x = x;
        prev_f = f;
    }

    if roots.len() != n {
        return Err(format!(
            "isolated {} roots, expected {n}; eigenvalues too clustered for the scan",
            roots.len()
        ));
    }
    roots.sort_by(|a, b| a.partial_cmp(b).expect("roots are finite"));
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_of_identity() {
        let id = SquareMatrix::identity(3);
        assert!((determinant(&id) - Complex64::new(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn determinant_of_diagonal() {
        let m = SquareMatrix::from_real_diagonal(&[2.0, -3.0, 0.5]);
        assert!((determinant(&m) - Complex64::new(-3.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn charpoly_recovers_diagonal_eigenvalues() {
        let m = SquareMatrix::from_real_diagonal(&[0.2, 0.3, 0.5]);
        let roots = charpoly_eigenvalues(&m).unwrap();
        for (root, expected) in roots.iter().zip([0.2, 0.3, 0.5]) {
            assert!((root - expected).abs() < 1e-10, "{root} vs {expected}");
        }
    }

    #[test]
    fn random_unitary_is_unitary() {
        let mut rng = SplitMix64::new(99);
        for n in [2usize, 3, 5] {
            let u = random_unitary(n, &mut rng);
            let gram = u.adjoint().matmul(&u).unwrap();
            let id = SquareMatrix::identity(n);
            for i in 0..n {
                for j in 0..n {
                    assert!((gram.get(i, j) - id.get(i, j)).norm() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn random_density_validates() {
        let mut rng = SplitMix64::new(100);
        for n in [1usize, 2, 4, 8] {
            let rho = random_density(n, &mut rng);
            assert_eq!(rho.dim(), n);
            assert!((rho.matrix().trace().re - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn depolarize_endpoints() {
        let mut rng = SplitMix64::new(101);
        let rho = random_density(3, &mut rng);
        let same = depolarize(&rho, 0.0).unwrap();
        assert!((same.purity() - rho.purity()).abs() < 1e-14);
        let mixed = depolarize(&rho, 1.0).unwrap();
        assert!((mixed.purity() - 1.0 / 3.0).abs() < 1e-14);
    }
}
