//! Error type shared by all modules.
//!
//! The display strings start with the stable violation name
//! (`NotHermitian`, `TraceNotOne`, ...) followed by the worst offending
//! entry or eigenvalue; the CLI prints them verbatim, so scripts can match
//! on the leading token.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The matrix is not equal to its conjugate transpose within tolerance.
    #[error("NotHermitian: entry ({row},{col}) deviates from the conjugate of entry ({col},{row}) by {deviation:e}")]
    NotHermitian {
        row: usize,
        col: usize,
        deviation: f64,
    },

    /// The trace differs from one (or has a non-negligible imaginary part).
    #[error("TraceNotOne: trace {trace:e} deviates from 1 by {deviation:e}")]
    TraceNotOne { trace: f64, deviation: f64 },

    /// An eigenvalue is negative beyond tolerance.
    #[error("NotPositiveSemidefinite: eigenvalue {eigenvalue:e} is below -{tolerance:e}")]
    NotPositiveSemidefinite { eigenvalue: f64, tolerance: f64 },

    /// Two operands have different dimensions.
    #[error("DimMismatch: {left} vs {right}")]
    DimMismatch { left: usize, right: usize },

    /// A state vector does not have unit norm.
    #[error("NotNormalized: squared norm deviates from 1 by {deviation:e}")]
    NotNormalized { deviation: f64 },

    /// The Jacobi sweep limit was reached before the off-diagonal norm
    /// dropped below the convergence threshold.
    #[error("NoConvergence: off-diagonal norm {off_norm:e} after {sweeps} sweeps")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    /// A spectrum fed to the entropy still carries a negative eigenvalue.
    #[error("NegativeEigenvalue: {eigenvalue:e}")]
    NegativeEigenvalue { eigenvalue: f64 },

    /// A spectrum with no eigenvalues at all.
    #[error("EmptySpectrum: no eigenvalues")]
    EmptySpectrum,

    /// The two algebraic routes to the oracle objective disagree; this
    /// signals an internal bug, never bad user input.
    #[error(
        "InternalDisagreement: decomposed objective {decomposed:e} vs direct distance {direct:e}"
    )]
    InternalDisagreement { decomposed: f64, direct: f64 },

    /// A Bloch vector longer than 1 does not describe a physical state.
    #[error("UnphysicalBloch: length {length} exceeds 1")]
    UnphysicalBloch { length: f64 },

    /// A scalar argument lies outside its admissible interval.
    #[error("OutOfRange: {value} not in [{min}, {max}]")]
    OutOfRange { value: f64, min: f64, max: f64 },

    /// A matrix file (or raw entry buffer) failed structural validation.
    #[error("MalformedMatrix: {0}")]
    MalformedMatrix(String),
}
