//! Dense kernels: exact integer matrices, real symmetric eigensolver and
//! orthonormal subspace arithmetic.

mod eigen;
mod matrix;
mod subspace;

pub use eigen::{sym_eig, EigenDecomposition, EigenGroup};
pub use matrix::{IntMatrix, Matrix};
pub use subspace::{contains, orth_complement, orthonormalize, project, subspace_sum, Subspace};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LinalgError {
    #[error("matrix is not symmetric: |m[{row}][{col}] - m[{col}][{row}]| = {gap:e}")]
    NotSymmetric { row: usize, col: usize, gap: f64 },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off:e})")]
    NonConvergence { sweeps: usize, off: f64 },
    #[error("eigen reconstruction error {error:e} exceeds {bound:e}")]
    Reconstruction { error: f64, bound: f64 },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("subspace is not contained in the enclosing space (residual {residual:e})")]
    NotContained { residual: f64 },
}

/// Base tolerances; both are scaled by `max(1, ‖M‖_max)` of the matrix at hand.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub tol: f64,
    pub grouping: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance { tol: 1e-9, grouping: 1e-6 }
    }
}

impl Tolerance {
    pub fn scaled_tol(&self, norm_max: f64) -> f64 {
        self.tol * norm_max.max(1.0)
    }

    pub fn scaled_grouping(&self, norm_max: f64) -> f64 {
        self.grouping * norm_max.max(1.0)
    }
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm(a: &[f64]) -> f64 {
    libm::sqrt(dot(a, a))
}

/// `y += alpha * x`
pub fn axpy(alpha: f64, x: &[f64], y: &mut [f64]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += alpha * xi;
    }
}

pub fn scale(alpha: f64, x: &mut [f64]) {
    for xi in x {
        *xi *= alpha;
    }
}

pub fn max_abs(a: &[f64]) -> f64 {
    a.iter().fold(0.0, |m, x| m.max(x.abs()))
}
