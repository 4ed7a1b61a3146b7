use alloc::vec::Vec;

use super::{LinalgError, Matrix, Subspace, Tolerance};

const MAX_SWEEPS: usize = 100;

/// One eigenvalue (mean of its cluster) with an orthonormal eigenbasis.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenGroup {
    pub value: f64,
    pub space: Subspace,
}

impl EigenGroup {
    pub fn multiplicity(&self) -> usize {
        self.space.dim()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EigenDecomposition {
    /// Groups sorted by increasing eigenvalue.
    pub groups: Vec<EigenGroup>,
    /// Raw eigenvalues, ascending, before grouping.
    pub values: Vec<f64>,
    /// `‖m − Σ λ P_λ‖_max` using the grouped eigenvalues.
    pub reconstruction_error: f64,
    /// Absolute grouping threshold that was applied.
    pub grouping_threshold: f64,
}

impl EigenDecomposition {
    pub fn dim(&self) -> usize {
        self.values.len()
    }

    /// Group whose eigenvalue is within the grouping threshold of `value`.
    pub fn group_of(&self, value: f64) -> Option<&EigenGroup> {
        self.groups.iter().find(|g| (g.value - value).abs() <= self.grouping_threshold)
    }
}

/// Eigendecomposition of a real symmetric matrix by cyclic Jacobi rotations.
///
/// Eigenvalues are clustered by single linkage: consecutive sorted values
/// closer than `tol.grouping · max(1, ‖m‖_max)` share a group.
pub fn sym_eig(m: &Matrix, tol: Tolerance) -> Result<EigenDecomposition, LinalgError> {
    let n = m.rows();
    if m.cols() != n {
        return Err(LinalgError::NotSquare { rows: n, cols: m.cols() });
    }
    let norm = m.max_abs();
    let sym_tol = tol.scaled_tol(norm);
    let (gap, row, col) = m.asymmetry();
    if gap > sym_tol {
        return Err(LinalgError::NotSymmetric { row, col, gap });
    }
    let mut a = Matrix::from_fn(n, n, |r, c| 0.5 * (m[(r, c)] + m[(c, r)]));
    let mut v = Matrix::identity(n);
    jacobi(&mut a, &mut v)?;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].total_cmp(&a[(j, j)]));
    let values: Vec<f64> = order.iter().map(|&i| a[(i, i)]).collect();

    let threshold = tol.scaled_grouping(norm);
    let mut groups = Vec::new();
    let mut start = 0;
    for end in 1..=n {
        if end == n || values[end] - values[end - 1] > threshold {
            let members = &order[start..end];
            let value = values[start..end].iter().sum::<f64>() / (end - start) as f64;
            let vectors: Vec<Vec<f64>> = members.iter().map(|&i| v.column(i)).collect();
            let space = Subspace::from_orthonormal(n, vectors, tol.tol);
            groups.push(EigenGroup { value, space });
            start = end;
        }
    }

    let mut rebuilt = Matrix::zeros(n, n);
    for g in &groups {
        for b in g.space.basis() {
            for r in 0..n {
                for c in 0..n {
                    rebuilt[(r, c)] += g.value * b[r] * b[c];
                }
            }
        }
    }
    let reconstruction_error = rebuilt.max_abs_diff(m);
    let bound = tol.scaled_tol(norm);
    if reconstruction_error > bound {
        return Err(LinalgError::Reconstruction { error: reconstruction_error, bound });
    }
    Ok(EigenDecomposition { groups, values, reconstruction_error, grouping_threshold: threshold })
}

fn off_diagonal(a: &Matrix) -> f64 {
    let n = a.rows();
    let mut s = 0.0;
    for r in 0..n {
        for c in (r + 1)..n {
            s += a[(r, c)] * a[(r, c)];
        }
    }
    libm::sqrt(s)
}

fn jacobi(a: &mut Matrix, v: &mut Matrix) -> Result<(), LinalgError> {
    let n = a.rows();
    let scale = a.max_abs().max(f64::MIN_POSITIVE);
    for _ in 0..MAX_SWEEPS {
        let off = off_diagonal(a);
        if off <= 1e-15 * scale * n as f64 {
            return Ok(());
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                if apq.abs() <= 1e-18 * scale {
                    a[(p, q)] = 0.0;
                    a[(q, p)] = 0.0;
                    continue;
                }
                let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + libm::sqrt(theta * theta + 1.0));
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / libm::sqrt(t * t + 1.0);
                let s = t * c;
                rotate(a, v, p, q, c, s);
            }
        }
    }
    let off = off_diagonal(a);
    if off <= 1e-12 * scale * n as f64 {
        Ok(())
    } else {
        Err(LinalgError::NonConvergence { sweeps: MAX_SWEEPS, off })
    }
}

// Applies a ← Jᵀ a J and v ← v J for the rotation J in the (p, q) plane.
fn rotate(a: &mut Matrix, v: &mut Matrix, p: usize, q: usize, c: f64, s: f64) {
    let n = a.rows();
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = c * akp - s * akq;
        a[(k, q)] = s * akp + c * akq;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = c * apk - s * aqk;
        a[(q, k)] = s * apk + c * aqk;
    }
    a[(p, q)] = 0.0;
    a[(q, p)] = 0.0;
    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = c * vkp - s * vkq;
        v[(k, q)] = s * vkp + c * vkq;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn octahedron() -> Matrix {
        // K_{2,2,2}: vertices i and i^1 are the non-adjacent pairs.
        Matrix::from_fn(6, 6, |r, c| if r != c && r / 2 != c / 2 { 1.0 } else { 0.0 })
    }

    #[test]
    fn identity_is_one_group() {
        let e = sym_eig(&Matrix::identity(3), Tolerance::default()).unwrap();
        assert_eq!(e.groups.len(), 1);
        assert!((e.groups[0].value - 1.0).abs() < 1e-12);
        assert_eq!(e.groups[0].multiplicity(), 3);
    }

    #[test]
    fn octahedron_spectrum() {
        let e = sym_eig(&octahedron(), Tolerance::default()).unwrap();
        let got: Vec<(i64, usize)> = e.groups.iter().map(|g| (libm::round(g.value) as i64, g.multiplicity())).collect();
        assert_eq!(got, vec![(-2, 2), (0, 3), (4, 1)]);
        for g in &e.groups {
            assert!((g.value - libm::round(g.value)).abs() < 1e-9);
        }
    }

    #[test]
    fn near_degenerate_values_merge() {
        let m = Matrix::diagonal(&[2.0, 2.0 + 1e-12]);
        let e = sym_eig(&m, Tolerance { tol: 1e-9, grouping: 1e-9 }).unwrap();
        assert_eq!(e.groups.len(), 1);
    }

    #[test]
    fn rejects_asymmetric() {
        let mut m = Matrix::identity(2);
        m[(0, 1)] = 1.0;
        assert!(matches!(sym_eig(&m, Tolerance::default()), Err(LinalgError::NotSymmetric { .. })));
    }

    #[test]
    fn projectors_are_idempotent_and_resolve_identity() {
        let m = octahedron();
        let e = sym_eig(&m, Tolerance::default()).unwrap();
        let mut total = Matrix::zeros(6, 6);
        for g in &e.groups {
            let p = g.space.projector();
            let p2 = &p * &p;
            assert!(p2.max_abs_diff(&p) < 1e-8);
            total = &total + &p;
        }
        assert!(total.max_abs_diff(&Matrix::identity(6)) < 1e-8);
    }
}
