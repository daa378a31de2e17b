//! `qmix` — mixedness measures for quantum states from the command line.
//!
//! Subcommands: `validate`, `analyze`, `distance`, `oracle`, `bloch`,
//! `bloch-sweep`. Matrices come in as JSON files (see `qmix_core::io`);
//! results go to stdout as JSON by default, CSV or aligned text on
//! request. Exit codes are part of the contract:
//!
//! - 0 success (and oracle PASS),
//! - 2 domain violation (failed validation, dimension mismatch, bad
//!   parameters),
//! - 3 parse failure (unreadable file, malformed JSON, ragged rows),
//! - 4 oracle FAIL (closed form and variational minimum disagree).

// NaN must read as a violation, hence the negated comparison below.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod output;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use qmix_core::bloch::{self, BlochVector};
use qmix_core::densmat::{DensityMatrix, Tolerances};
use qmix_core::error::Error as CoreError;
use qmix_core::measures::{self, MixednessReport};
use qmix_core::oracle;

use output::{render, Field, Format, Record};

const EXIT_DOMAIN: u8 = 2;
const EXIT_PARSE: u8 = 3;
const EXIT_ORACLE_FAIL: u8 = 4;

#[derive(Parser)]
#[command(
    name = "qmix",
    version,
    about = "Mixedness measures for quantum states: purity, entropies, and the \
             geometric measure (minimal squared Hilbert-Schmidt distance to a pure state)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Hermiticity tolerance for validation
    #[arg(long, global = true, default_value_t = qmix_core::densmat::DEFAULT_TOLERANCE)]
    tol_herm: f64,

    /// Unit-trace tolerance for validation
    #[arg(long, global = true, default_value_t = qmix_core::densmat::DEFAULT_TOLERANCE)]
    tol_trace: f64,

    /// Positive-semidefiniteness tolerance for validation
    #[arg(long, global = true, default_value_t = qmix_core::densmat::DEFAULT_TOLERANCE)]
    tol_psd: f64,
}

#[derive(Subcommand)]
enum Command {
    /// Check a matrix file against the density-matrix axioms
    Validate { file: PathBuf },

    /// Full mixedness report for one density matrix
    Analyze {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },

    /// Hilbert-Schmidt distance between two density matrices
    Distance {
        file1: PathBuf,
        file2: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },

    /// Certify the closed-form measure against direct variational
    /// minimization over pure states
    Oracle {
        file: PathBuf,
        #[arg(long, default_value_t = oracle::DEFAULT_RESTARTS)]
        restarts: usize,
        #[arg(long, default_value_t = oracle::DEFAULT_REFINE_ITERS)]
        refine_iters: usize,
        #[arg(long, default_value_t = oracle::DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },

    /// Report on the qubit state with the given Bloch vector length
    Bloch {
        /// Bloch vector length in [0, 1]
        #[arg(long)]
        a: f64,
        /// Bloch vector direction (normalized internally)
        #[arg(long, value_parser = parse_direction, default_value = "0,0,1")]
        dir: [f64; 3],
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },

    /// CSV sweep of Bloch lengths a = 0 … 1
    BlochSweep {
        /// Number of rows; a = k/(steps-1)
        #[arg(long)]
        steps: usize,
        #[arg(long, value_parser = parse_direction, default_value = "0,0,1")]
        dir: [f64; 3],
        /// Add a D_grid column from the exhaustive grid oracle
        #[arg(long)]
        grid_check: bool,
        #[arg(long, default_value_t = 721)]
        theta_steps: usize,
        #[arg(long, default_value_t = 1441)]
        phi_steps: usize,
    },
}

fn parse_direction(text: &str) -> Result<[f64; 3], String> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("expected x,y,z — got {text:?}"));
    }
    let mut dir = [0.0; 3];
    for (slot, part) in dir.iter_mut().zip(&parts) {
        *slot = part
            .trim()
            .parse::<f64>()
            .map_err(|e| format!("bad component {part:?}: {e}"))?;
    }
    Ok(dir)
}

struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn domain(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_DOMAIN,
            message: message.into(),
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        let code = match e {
            CoreError::MalformedMatrix(_) => EXIT_PARSE,
            _ => EXIT_DOMAIN,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let tol = Tolerances {
        herm: cli.tol_herm,
        trace: cli.tol_trace,
        psd: cli.tol_psd,
        ..Tolerances::default()
    };

    match cli.command {
        Command::Validate { file } => {
            let rho = load_density(&file, tol)?;
            println!("valid n={}", rho.dim());
            Ok(())
        }

        Command::Analyze { file, format } => {
            let rho = load_density(&file, tol)?;
            let report = measures::report(&rho)?;
            println!("{}", render(&report, format));
            Ok(())
        }

        Command::Distance {
            file1,
            file2,
            format,
        } => {
            let rho1 = load_density(&file1, tol)?;
            let rho2 = load_density(&file2, tol)?;
            let d_squared = rho1.hs_distance_sq(&rho2)?;
            let out = DistanceOutput {
                d_squared,
                d: d_squared.sqrt(),
            };
            println!("{}", render(&out, format));
            Ok(())
        }

        Command::Oracle {
            file,
            restarts,
            refine_iters,
            seed,
            format,
        } => {
            if restarts == 0 {
                return Err(CliError::domain("--restarts must be at least 1"));
            }
            let rho = load_density(&file, tol)?;
            let d_closed_form = measures::geometric_mixing(&rho.spectrum()?)?;
            let result = oracle::minimize_over_pure(&rho, restarts, refine_iters, seed)?;
            let gap = (result.d_estimate - d_closed_form).abs();
            let pass = gap <= oracle::DEFAULT_AGREEMENT_TOL;
            let out = OracleOutput {
                d_closed_form,
                d_estimate: result.d_estimate,
                gap,
                verdict: if pass { "PASS" } else { "FAIL" }.into(),
                restarts: result.restarts_used,
                refine_iters: result.refinement_iterations,
                seed: result.seed,
            };
            println!("{}", render(&out, format));
            if pass {
                Ok(())
            } else {
                Err(CliError {
                    code: EXIT_ORACLE_FAIL,
                    message: format!(
                        "oracle gap {gap:e} exceeds {:e}",
                        oracle::DEFAULT_AGREEMENT_TOL
                    ),
                })
            }
        }

        Command::Bloch { a, dir, format } => {
            check_direction(&dir)?;
            let vector = BlochVector::along(a, (dir[0], dir[1], dir[2]))?;
            let rho = bloch::density_from_bloch(&vector)?;
            let spectrum = rho.spectrum()?;
            let length = vector.length();
            let out = BlochOutput {
                a: length,
                direction: dir,
                lambda1: spectrum.eigenvalues()[0],
                lambda2: spectrum.eigenvalues()[1],
                purity: rho.purity(),
                linear_entropy: measures::linear_entropy(&rho),
                von_neumann_entropy: measures::von_neumann_entropy(&spectrum)?,
                d_closed: measures::geometric_mixing(&spectrum)?,
                d_analytic: bloch::qubit_geometric_mixing(length)?,
            };
            println!("{}", render(&out, format));
            Ok(())
        }

        Command::BlochSweep {
            steps,
            dir,
            grid_check,
            theta_steps,
            phi_steps,
        } => {
            if steps < 2 {
                return Err(CliError::domain("--steps must be at least 2"));
            }
            if grid_check && (theta_steps < 2 || phi_steps < 2) {
                return Err(CliError::domain("grid steps must be at least 2"));
            }
            check_direction(&dir)?;

            let mut header =
                "a,lambda1,lambda2,purity,linear_entropy,von_neumann_entropy,D_closed".to_string();
            if grid_check {
                header.push_str(",D_grid");
            }
            println!("{header}");

            for k in 0..steps {
                let a_len = k as f64 / (steps - 1) as f64;
                let vector = BlochVector::along(a_len, (dir[0], dir[1], dir[2]))?;
                let rho = bloch::density_from_bloch(&vector)?;
                let spectrum = rho.spectrum()?;
                let mut row = format!(
                    "{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}",
                    a_len,
                    spectrum.eigenvalues()[0],
                    spectrum.eigenvalues()[1],
                    rho.purity(),
                    measures::linear_entropy(&rho),
                    measures::von_neumann_entropy(&spectrum)?,
                    measures::geometric_mixing(&spectrum)?,
                );
                if grid_check {
                    let grid = oracle::grid_minimize_qubit(&rho, theta_steps, phi_steps)?;
                    row.push_str(&format!(",{:.16e}", grid.d_estimate));
                }
                println!("{row}");
            }
            Ok(())
        }
    }
}

fn check_direction(dir: &[f64; 3]) -> Result<(), CliError> {
    let norm_sq: f64 = dir.iter().map(|d| d * d).sum();
    if !(norm_sq > 0.0) || !norm_sq.is_finite() {
        return Err(CliError::domain(
            "direction vector must have nonzero finite length",
        ));
    }
    Ok(())
}

fn load_density(path: &Path, tol: Tolerances) -> Result<DensityMatrix, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError {
        code: EXIT_PARSE,
        message: format!("cannot read {}: {e}", path.display()),
    })?;
    let matrix = qmix_core::io::matrix_from_json(&text)?;
    Ok(DensityMatrix::validate(matrix, tol)?)
}

#[derive(Serialize)]
struct DistanceOutput {
    d_squared: f64,
    d: f64,
}

#[derive(Serialize)]
struct OracleOutput {
    d_closed_form: f64,
    d_estimate: f64,
    gap: f64,
    verdict: String,
    restarts: usize,
    refine_iters: usize,
    seed: u64,
}

#[derive(Serialize)]
struct BlochOutput {
    a: f64,
    direction: [f64; 3],
    lambda1: f64,
    lambda2: f64,
    purity: f64,
    linear_entropy: f64,
    von_neumann_entropy: f64,
    d_closed: f64,
    d_analytic: f64,
}

impl Record for MixednessReport {
    fn fields(&self) -> Vec<(&'static str, Field)> {
        vec![
            ("dim", Field::Int(self.dim as u64)),
            ("purity", Field::Float(self.purity)),
            (
                "von_neumann_entropy",
                Field::Float(self.von_neumann_entropy),
            ),
            ("linear_entropy", Field::Float(self.linear_entropy)),
            ("geometric_measure", Field::Float(self.geometric_measure)),
            ("lambda_max", Field::Float(self.lambda_max)),
            ("eigenvalues", Field::Floats(self.eigenvalues.clone())),
        ]
    }

    fn display_only_fields(&self) -> Vec<(&'static str, Field)> {
        // entropy stays in nats everywhere; bits are a reading aid
        vec![(
            "von_neumann_entropy_bits",
            Field::Float(self.von_neumann_entropy / std::f64::consts::LN_2),
        )]
    }
}

impl Record for DistanceOutput {
    fn fields(&self) -> Vec<(&'static str, Field)> {
        vec![
            ("d_squared", Field::Float(self.d_squared)),
            ("d", Field::Float(self.d)),
        ]
    }
}

impl Record for OracleOutput {
    fn fields(&self) -> Vec<(&'static str, Field)> {
        vec![
            ("d_closed_form", Field::Float(self.d_closed_form)),
            ("d_estimate", Field::Float(self.d_estimate)),
            ("gap", Field::Float(self.gap)),
            ("verdict", Field::Text(self.verdict.clone())),
            ("restarts", Field::Int(self.restarts as u64)),
            ("refine_iters", Field::Int(self.refine_iters as u64)),
            ("seed", Field::Int(self.seed)),
        ]
    }
}

impl Record for BlochOutput {
    fn fields(&self) -> Vec<(&'static str, Field)> {
        vec![
            ("a", Field::Float(self.a)),
            ("direction", Field::Floats(self.direction.to_vec())),
            ("lambda1", Field::Float(self.lambda1)),
            ("lambda2", Field::Float(self.lambda2)),
            ("purity", Field::Float(self.purity)),
            ("linear_entropy", Field::Float(self.linear_entropy)),
            (
                "von_neumann_entropy",
                Field::Float(self.von_neumann_entropy),
            ),
            ("d_closed", Field::Float(self.d_closed)),
            ("d_analytic", Field::Float(self.d_analytic)),
        ]
    }
}
