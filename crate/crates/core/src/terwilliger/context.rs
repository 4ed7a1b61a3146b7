use alloc::vec;
use alloc::vec::Vec;
use thiserror::Error;

use crate::drg::Scheme;
use crate::linalg::IntMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ContextError {
    #[error("base vertex {0} is out of range")]
    BadVertex(usize),
    #[error("(A_{i})[{u}][{v}] disagrees with the distance function")]
    DistanceMatrix { i: usize, u: usize, v: usize },
    #[error("dual idempotents do not sum to the identity at vertex {0}")]
    DualSum(usize),
    #[error("E*_{i} E*_{j} is not δ_ij E*_i")]
    DualProduct { i: usize, j: usize },
    #[error("A != L + R at ({0}, {1})")]
    LoweringRaising(usize, usize),
    #[error("L != Rᵀ at ({0}, {1})")]
    LoweringTranspose(usize, usize),
}

/// Base-vertex data: layers `Γ_i(x)`, dual idempotents (as a layer index per
/// vertex) and the lowering/raising matrices.
#[derive(Debug, Clone)]
pub struct TContext<'a> {
    scheme: &'a Scheme,
    x: usize,
    layer: Vec<usize>,
    layers: Vec<Vec<usize>>,
    lower: IntMatrix,
    raise: IntMatrix,
}

/// Builds the context at `x` and verifies its defining identities exactly.
pub fn build_context(scheme: &Scheme, x: usize) -> Result<TContext<'_>, ContextError> {
    let n = scheme.vertex_count();
    if x >= n {
        return Err(ContextError::BadVertex(x));
    }
    let d = scheme.diameter();
    let layer: Vec<usize> = (0..n).map(|v| scheme.dist(x, v)).collect();
    let mut layers = vec![Vec::new(); d + 1];
    for (v, &l) in layer.iter().enumerate() {
        layers[l].push(v);
    }
    let g = scheme.graph();
    let raise = IntMatrix::from_fn(n, n, |z, y| (g.is_adjacent(z, y) && layer[z] == layer[y] + 1) as i64);
    let lower = IntMatrix::from_fn(n, n, |z, y| (g.is_adjacent(z, y) && layer[z] + 1 == layer[y]) as i64);
    let ctx = TContext { scheme, x, layer, layers, lower, raise };
    ctx.verify()?;
    Ok(ctx)
}

impl<'a> TContext<'a> {
    fn verify(&self) -> Result<(), ContextError> {
        let n = self.vertex_count();
        let d = self.diameter();
        for (i, a_i) in self.scheme.distance_matrices().iter().enumerate() {
            for u in 0..n {
                for v in 0..n {
                    if (a_i[(u, v)] == 1) != (self.scheme.dist(u, v) == i) {
                        return Err(ContextError::DistanceMatrix { i, u, v });
                    }
                }
            }
        }
        let diagonals: Vec<Vec<i64>> = (0..=d).map(|i| self.dual_idempotent(i)).collect();
        for v in 0..n {
            if diagonals.iter().map(|e| e[v]).sum::<i64>() != 1 {
                return Err(ContextError::DualSum(v));
            }
        }
        for i in 0..=d {
            for j in 0..=d {
                let ok = (0..n).all(|v| diagonals[i][v] * diagonals[j][v] == if i == j { diagonals[i][v] } else { 0 });
                if !ok {
                    return Err(ContextError::DualProduct { i, j });
                }
            }
        }
        let a = &self.scheme.distance_matrices()[1];
        let sum = &self.lower + &self.raise;
        if let Some((r, c)) = sum.first_mismatch(a) {
            return Err(ContextError::LoweringRaising(r, c));
        }
        if let Some((r, c)) = self.lower.first_mismatch(&self.raise.transpose()) {
            return Err(ContextError::LoweringTranspose(r, c));
        }
        Ok(())
    }

    pub fn scheme(&self) -> &'a Scheme {
        self.scheme
    }

    pub fn base_vertex(&self) -> usize {
        self.x
    }

    pub fn vertex_count(&self) -> usize {
        self.layer.len()
    }

    pub fn diameter(&self) -> usize {
        self.layers.len() - 1
    }

    pub fn layer_of(&self, v: usize) -> usize {
        self.layer[v]
    }

    /// `Γ_i(x)` in increasing vertex order; empty outside `0..=D`.
    pub fn layer(&self, i: usize) -> &[usize] {
        self.layers.get(i).map_or(&[], Vec::as_slice)
    }

    /// Diagonal of `E*_i` as a 0/1 vector.
    pub fn dual_idempotent(&self, i: usize) -> Vec<i64> {
        self.layer.iter().map(|&l| (l == i) as i64).collect()
    }

    pub fn dual_idempotent_matrix(&self, i: usize) -> IntMatrix {
        let n = self.vertex_count();
        IntMatrix::from_fn(n, n, |r, c| (r == c && self.layer[r] == i) as i64)
    }

    pub fn lowering(&self) -> &IntMatrix {
        &self.lower
    }

    pub fn raising(&self) -> &IntMatrix {
        &self.raise
    }

    /// `Σ_i E*_i` as a dense matrix.
    pub fn dual_sum(&self) -> IntMatrix {
        (0..=self.diameter()).fold(IntMatrix::zeros(self.vertex_count(), self.vertex_count()), |acc, i| {
            &acc + &self.dual_idempotent_matrix(i)
        })
    }

    /// `E*_2` restricted to its columns: an `n × k_2` block with a 1 at
    /// `(y, col(y))` for every `y ∈ Γ_2(x)`.
    pub fn second_subconstituent_block(&self) -> IntMatrix {
        let cols = self.layer(2);
        IntMatrix::from_fn(self.vertex_count(), cols.len(), |r, c| (cols[c] == r) as i64)
    }

    /// `R · M` using the sparse structure of `R`.
    pub fn raise_block(&self, m: &IntMatrix) -> IntMatrix {
        self.neighbor_sum(m, |lz, lw| lw + 1 == lz)
    }

    /// `L · M` using the sparse structure of `L`.
    pub fn lower_block(&self, m: &IntMatrix) -> IntMatrix {
        self.neighbor_sum(m, |lz, lw| lz + 1 == lw)
    }

    pub fn raise_pow_block(&self, m: &IntMatrix, power: usize) -> IntMatrix {
        (0..power).fold(m.clone(), |acc, _| self.raise_block(&acc))
    }

    fn neighbor_sum(&self, m: &IntMatrix, keep: impl Fn(usize, usize) -> bool) -> IntMatrix {
        let g = self.scheme.graph();
        let mut out = IntMatrix::zeros(m.rows(), m.cols());
        for z in 0..m.rows() {
            for &w in g.neighbors(z) {
                if keep(self.layer[z], self.layer[w]) {
                    for c in 0..m.cols() {
                        out[(z, c)] += m[(w, c)];
                    }
                }
            }
        }
        out
    }

    /// `E*_i A_j E*_2` restricted to the columns of `Γ_2(x)`.
    pub fn dual_distance_block(&self, i: usize, j: usize) -> IntMatrix {
        let cols = self.layer(2);
        IntMatrix::from_fn(self.vertex_count(), cols.len(), |z, c| {
            (self.layer[z] == i && self.scheme.dist(z, cols[c]) == j) as i64
        })
    }

    pub fn raise_vec(&self, v: &[f64]) -> Vec<f64> {
        self.neighbor_sum_vec(v, |lz, lw| lw + 1 == lz)
    }

    pub fn lower_vec(&self, v: &[f64]) -> Vec<f64> {
        self.neighbor_sum_vec(v, |lz, lw| lz + 1 == lw)
    }

    fn neighbor_sum_vec(&self, v: &[f64], keep: impl Fn(usize, usize) -> bool) -> Vec<f64> {
        let g = self.scheme.graph();
        (0..v.len())
            .map(|z| g.neighbors(z).iter().filter(|&&w| keep(self.layer[z], self.layer[w])).map(|&w| v[w]).sum())
            .collect()
    }

    /// `E*_i v`
    pub fn project_layer(&self, i: usize, v: &[f64]) -> Vec<f64> {
        v.iter().zip(&self.layer).map(|(&x, &l)| if l == i { x } else { 0.0 }).collect()
    }

    /// `E*_i A_j v`
    pub fn dual_distance_vec(&self, i: usize, j: usize, v: &[f64]) -> Vec<f64> {
        let n = self.vertex_count();
        (0..n)
            .map(|z| {
                if self.layer[z] != i {
                    return 0.0;
                }
                (0..n).filter(|&w| self.scheme.dist(z, w) == j).map(|w| v[w]).sum()
            })
            .collect()
    }

    /// Unit vector `ŷ`.
    pub fn unit(&self, y: usize) -> Vec<f64> {
        let mut e = vec![0.0; self.vertex_count()];
        e[y] = 1.0;
        e
    }

    /// `s_i = Σ_{y ∈ Γ_i(x)} ŷ`
    pub fn layer_indicator(&self, i: usize) -> Vec<f64> {
        self.layer.iter().map(|&l| (l == i) as i64 as f64).collect()
    }
}
