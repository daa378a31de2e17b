//! JSON matrix file format.
//!
//! ```json
//! {"dim": 2, "re": [[0.5, 0.0], [0.0, 0.5]], "im": [[0.0, 0.0], [0.0, 0.0]]}
//! ```
//!
//! `re` and `im` are row-major n×n arrays of doubles; `im` may be omitted
//! for real matrices. Shape violations (ragged rows, wrong row count,
//! non-finite values) surface as [`Error::MalformedMatrix`], which the CLI
//! maps to its parse-failure exit code.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::densmat::SquareMatrix;
use crate::error::{Error, Result};

/// On-disk matrix representation.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixFile {
    pub dim: usize,
    pub re: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub im: Option<Vec<Vec<f64>>>,
}

impl MatrixFile {
    pub fn to_matrix(&self) -> Result<SquareMatrix> {
        let n = self.dim;
        if n == 0 {
            return Err(Error::MalformedMatrix("dim must be at least 1".into()));
        }
        check_grid(&self.re, n, "re")?;
        if let Some(im) = &self.im {
            check_grid(im, n, "im")?;
        }

        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let re = self.re[i][j];
                let im = self.im.as_ref().map_or(0.0, |rows| rows[i][j]);
                entries.push(Complex64::new(re, im));
            }
        }
        SquareMatrix::from_entries(n, entries)
    }

    pub fn from_matrix(m: &SquareMatrix) -> Self {
        let n = m.dim();
        let mut re = vec![vec![0.0; n]; n];
        let mut im = vec![vec![0.0; n]; n];
        let mut any_imaginary = false;
        for i in 0..n {
            for j in 0..n {
                let z = m.get(i, j);
                re[i][j] = z.re;
                im[i][j] = z.im;
                any_imaginary |= z.im != 0.0;
            }
        }
        Self {
            dim: n,
            re,
            im: any_imaginary.then_some(im),
        }
    }
}

fn check_grid(rows: &[Vec<f64>], n: usize, name: &str) -> Result<()> {
    if rows.len() != n {
        return Err(Error::MalformedMatrix(format!(
            "\"{name}\" has {} rows, expected {n}",
            rows.len()
        )));
    }
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::MalformedMatrix(format!(
                "\"{name}\" row {i} has {} columns, expected {n}",
                row.len()
            )));
        }
        for (j, value) in row.iter().enumerate() {
            if !value.is_finite() {
                return Err(Error::MalformedMatrix(format!(
                    "\"{name}\" entry ({i},{j}) is not finite"
                )));
            }
        }
    }
    Ok(())
}

/// Parse a matrix from JSON text.
pub fn matrix_from_json(text: &str) -> Result<SquareMatrix> {
    let file: MatrixFile =
        serde_json::from_str(text).map_err(|e| Error::MalformedMatrix(e.to_string()))?;
    file.to_matrix()
}

/// Serialize a matrix to JSON text (single line, `im` omitted when zero).
pub fn matrix_to_json(m: &SquareMatrix) -> String {
    serde_json::to_string(&MatrixFile::from_matrix(m)).expect("matrix serialization is infallible")
}
