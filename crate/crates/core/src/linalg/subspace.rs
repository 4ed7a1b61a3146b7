use alloc::vec;
use alloc::vec::Vec;

use super::{axpy, dot, norm, scale, sym_eig, LinalgError, Matrix, Tolerance};

/// Orthonormal basis of a subspace of `R^ambient_dim`.
#[derive(Debug, Clone, PartialEq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<f64>>,
    tol: f64,
}

impl Subspace {
    pub fn zero(ambient_dim: usize, tol: f64) -> Self {
        Subspace { ambient_dim, basis: Vec::new(), tol }
    }

    /// The whole space, spanned by the unit vectors.
    pub fn full(ambient_dim: usize, tol: f64) -> Self {
        let basis = (0..ambient_dim)
            .map(|i| {
                let mut e = vec![0.0; ambient_dim];
                e[i] = 1.0;
                e
            })
            .collect();
        Subspace { ambient_dim, basis, tol }
    }

    /// Span of unit vectors at the given coordinates.
    pub fn coordinate(ambient_dim: usize, coords: &[usize], tol: f64) -> Self {
        let basis = coords
            .iter()
            .map(|&i| {
                let mut e = vec![0.0; ambient_dim];
                e[i] = 1.0;
                e
            })
            .collect();
        Subspace { ambient_dim, basis, tol }
    }

    /// Wraps vectors already known to be orthonormal, re-orthonormalizing to
    /// clean up rounding.
    pub fn from_orthonormal(ambient_dim: usize, vectors: Vec<Vec<f64>>, tol: f64) -> Self {
        orthonormalize(&vectors, ambient_dim, tol).unwrap_or(Subspace { ambient_dim, basis: vectors, tol })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn basis(&self) -> &[Vec<f64>] {
        &self.basis
    }

    pub fn into_basis(self) -> Vec<Vec<f64>> {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Orthogonal projector `Σ b bᵀ` as a dense matrix.
    pub fn projector(&self) -> Matrix {
        let n = self.ambient_dim;
        let mut p = Matrix::zeros(n, n);
        for b in &self.basis {
            for r in 0..n {
                if b[r] == 0.0 {
                    continue;
                }
                for c in 0..n {
                    p[(r, c)] += b[r] * b[c];
                }
            }
        }
        p
    }

    /// Coordinates of the projection of `v` in this basis.
    pub fn coordinates(&self, v: &[f64]) -> Vec<f64> {
        self.basis.iter().map(|b| dot(b, v)).collect()
    }

    /// `Σ coeffs[i] · basis[i]`
    pub fn combine(&self, coeffs: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.ambient_dim];
        for (b, &c) in self.basis.iter().zip(coeffs) {
            axpy(c, b, &mut out);
        }
        out
    }

    /// Restriction `Bᵀ M B` of an operator to this subspace.
    pub fn restrict(&self, apply: impl Fn(&[f64]) -> Vec<f64>) -> Matrix {
        let images: Vec<Vec<f64>> = self.basis.iter().map(|b| apply(b)).collect();
        let d = self.dim();
        let m = Matrix::from_fn(d, d, |r, c| dot(&self.basis[r], &images[c]));
        // Symmetrize away rounding noise; callers only restrict self-adjoint maps.
        Matrix::from_fn(d, d, |r, c| 0.5 * (m[(r, c)] + m[(c, r)]))
    }

    /// `‖v − P v‖`
    pub fn residual(&self, v: &[f64]) -> f64 {
        let mut r = v.to_vec();
        for b in &self.basis {
            axpy(-dot(b, v), b, &mut r);
        }
        norm(&r)
    }
}

/// Modified Gram–Schmidt with one reorthogonalization pass. A vector whose
/// residual falls below `tol · max column norm` is dropped.
pub fn orthonormalize(vectors: &[Vec<f64>], ambient_dim: usize, tol: f64) -> Result<Subspace, LinalgError> {
    let max_norm = vectors.iter().map(|v| norm(v)).fold(0.0, f64::max);
    let cutoff = tol * max_norm;
    let mut basis: Vec<Vec<f64>> = Vec::new();
    for v in vectors {
        if v.len() != ambient_dim {
            return Err(LinalgError::DimensionMismatch { expected: ambient_dim, got: v.len() });
        }
        let mut w = v.clone();
        for _ in 0..2 {
            for b in &basis {
                let c = dot(b, &w);
                axpy(-c, b, &mut w);
            }
        }
        let len = norm(&w);
        if len > cutoff && len > 0.0 {
            scale(1.0 / len, &mut w);
            basis.push(w);
        }
    }
    Ok(Subspace { ambient_dim, basis, tol })
}

/// Orthogonal complement of `s` inside `within`. Fails when `s ⊄ within`.
pub fn orth_complement(s: &Subspace, within: &Subspace) -> Result<Subspace, LinalgError> {
    if s.ambient_dim != within.ambient_dim {
        return Err(LinalgError::DimensionMismatch { expected: within.ambient_dim, got: s.ambient_dim });
    }
    let tol = within.tol.max(s.tol);
    for b in &s.basis {
        let residual = within.residual(b);
        if residual > tol {
            return Err(LinalgError::NotContained { residual });
        }
    }
    // With an orthonormal `within`, (I − P_s) restricted to it is a projector
    // of rank dim(within) − dim(s); its Gram matrix has eigenvalues 0 and 1.
    let residuals: Vec<Vec<f64>> = within
        .basis
        .iter()
        .map(|w| {
            let mut r = w.clone();
            for b in &s.basis {
                axpy(-dot(b, w), b, &mut r);
            }
            r
        })
        .collect();
    let m = residuals.len();
    let gram = Matrix::from_fn(m, m, |i, j| dot(&residuals[i], &residuals[j]));
    let eig = sym_eig(&gram, Tolerance { tol: tol.max(1e-9), grouping: 1e-6 })?;
    let mut basis = Vec::new();
    for g in eig.groups.iter().filter(|g| g.value > 0.5) {
        for coeffs in g.space.basis() {
            let mut v = vec![0.0; s.ambient_dim];
            for (c, r) in coeffs.iter().zip(&residuals) {
                axpy(*c, r, &mut v);
            }
            basis.push(v);
        }
    }
    let out = orthonormalize(&basis, s.ambient_dim, tol)?;
    Ok(Subspace { ambient_dim: s.ambient_dim, basis: out.basis, tol })
}

pub fn subspace_sum(a: &Subspace, b: &Subspace) -> Result<Subspace, LinalgError> {
    if a.ambient_dim != b.ambient_dim {
        return Err(LinalgError::DimensionMismatch { expected: a.ambient_dim, got: b.ambient_dim });
    }
    let vectors: Vec<Vec<f64>> = a.basis.iter().chain(&b.basis).cloned().collect();
    orthonormalize(&vectors, a.ambient_dim, a.tol.max(b.tol))
}

pub fn project(s: &Subspace, v: &[f64]) -> Result<Vec<f64>, LinalgError> {
    if v.len() != s.ambient_dim {
        return Err(LinalgError::DimensionMismatch { expected: s.ambient_dim, got: v.len() });
    }
    Ok(s.combine(&s.coordinates(v)))
}

/// `‖v − P v‖ ≤ tol · ‖v‖`
pub fn contains(s: &Subspace, v: &[f64], tol: f64) -> Result<bool, LinalgError> {
    if v.len() != s.ambient_dim {
        return Err(LinalgError::DimensionMismatch { expected: s.ambient_dim, got: v.len() });
    }
    Ok(s.residual(v) <= tol * norm(v))
}
