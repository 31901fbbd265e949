//! Dense linear-algebra primitives sized for small matrices (dim <= ~50).
//!
//! Everything here is allocation-per-call and row-major `Vec<f64>` storage;
//! no attempt is made at large-scale performance. All types are immutable
//! after construction and all operations are pure functions.

mod lu;
mod mat;
mod schur;
mod sym;

pub use lu::{condition_estimate, inverse, solve_linear, solve_linear_mat};
pub use mat::{dot, norm2, norm_inf, sub, Mat};
pub use schur::spectral_radius;
pub use sym::{factor_psd, sym_eigen, EigenDecomposition, PsdOutcome, SymMatrix};

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum NumError {
    #[error("matrix contains non-finite entries")]
    NonFinite,
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular or ill-conditioned (condition estimate {cond:.3e})")]
    SingularMatrix { cond: f64 },
    #[error("eigenvalue iteration did not converge")]
    IterationLimit,
}
