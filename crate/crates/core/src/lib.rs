//! Geometric measure of mixedness for quantum states.
//!
//! A mixed state is described by a density matrix ρ: Hermitian, unit trace,
//! positive semidefinite. This crate quantifies *how* mixed ρ is by the
//! minimal squared Hilbert-Schmidt distance from ρ to the set of pure
//! states,
//!
//! ```text
//! D(ρ) = min_ψ Tr(ρ − |ψ⟩⟨ψ|)² = Σᵢ λᵢ² + 1 − 2 λ_max ,
//! ```
//!
//! where λᵢ are the eigenvalues of ρ. The minimizing |ψ⟩ is the eigenvector
//! of ρ with maximal eigenvalue, so D is a function of the spectrum alone,
//! ranging from 0 (pure) to 1 − 1/n (maximally mixed). The crate computes D
//! in closed form together with purity Tr ρ², linear entropy 1 − Tr ρ² and
//! von Neumann entropy −Tr ρ ln ρ, and certifies the closed form against a
//! direct variational minimization over pure states that never touches the
//! eigensolver.
//!
//! # Example
//!
//! ```
//! use qmix_core::densmat::{DensityMatrix, SquareMatrix, Tolerances};
//! use qmix_core::{measures, oracle};
//!
//! # fn main() -> qmix_core::Result<()> {
//! let m = SquareMatrix::from_real_diagonal(&[0.5, 0.3, 0.2]);
//! let rho = DensityMatrix::validate(m, Tolerances::default())?;
//!
//! let report = measures::report(&rho)?;
//! assert!((report.geometric_measure - 0.38).abs() < 1e-12);
//!
//! // independent variational check of the same number
//! let direct = oracle::minimize_over_pure(&rho, 50, 300, 42)?;
//! assert!((direct.d_estimate - report.geometric_measure).abs() < 1e-6);
//! # Ok(())
//! # }
//! ```
//!
//! Modules:
//!
//! - [`densmat`] — dense complex matrices, density-matrix validation,
//!   traces, projectors and the squared Hilbert-Schmidt distance;
//! - [`eigensolve`] — self-contained cyclic Jacobi eigendecomposition for
//!   Hermitian matrices;
//! - [`measures`] — purity, entropies and the closed-form geometric
//!   measure, aggregated in a [`MixednessReport`];
//! - [`oracle`] — independent minimization over pure states (random
//!   restarts + shifted power iteration, exhaustive grid for qubits);
//! - [`bloch`] — qubit specialization via the Bloch vector, with analytic
//!   eigenvalues ½(1 ± a) and analytic measure ½(1 − a)²;
//! - [`io`] — the JSON matrix file format consumed by the CLI;
//! - [`rng`] — the small deterministic generator behind the oracle.

// Negated comparisons like `!(dev <= tol)` are deliberate: they treat NaN
// as a violation instead of letting it slip through a `>`.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
// Index loops mirror the row/column structure of the math.
#![allow(clippy::needless_range_loop)]

pub mod bloch;
pub mod densmat;
pub mod eigensolve;
pub mod error;
pub mod io;
pub mod measures;
pub mod oracle;
pub mod rng;

pub use bloch::BlochVector;
pub use densmat::{DensityMatrix, PureState, SquareMatrix, Tolerances};
pub use eigensolve::Spectrum;
pub use error::{Error, Result};
pub use measures::MixednessReport;
pub use oracle::OracleResult;

/// Complex scalar used throughout: double precision real and imaginary parts.
pub use num_complex::Complex64;
