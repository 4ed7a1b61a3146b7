use alloc::vec;
use alloc::vec::Vec;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use thiserror::Error;

use crate::linalg::{axpy, dot, norm, orthonormalize, scale, sym_eig, LinalgError, Matrix, Subspace, Tolerance};
use crate::terwilliger::{IsoClass, TContext, TModuleRecord};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenericError {
    #[error("decomposition stalled at dimension {covered} of {total} after {rounds} rounds")]
    NonConvergence { covered: usize, total: usize, rounds: usize },
    #[error("module of dimension {dim} could not be split after {attempts} attempts")]
    Unsplittable { dim: usize, attempts: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Census key of one module: endpoint, diameter, slice dimensions, thinness
/// and the spectrum of `E*_eA_2E*_e` on the endpoint slice.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct CensusEntry {
    pub endpoint: usize,
    pub diameter: usize,
    pub dim: usize,
    pub thin: bool,
    pub key: Vec<f64>,
}

impl CensusEntry {
    fn order(&self, other: &Self) -> core::cmp::Ordering {
        (self.endpoint, self.diameter, self.dim, self.thin)
            .cmp(&(other.endpoint, other.diameter, other.dim, other.thin))
            .then_with(|| {
                for (a, b) in self.key.iter().zip(&other.key) {
                    match a.total_cmp(b) {
                        core::cmp::Ordering::Equal => {}
                        o => return o,
                    }
                }
                self.key.len().cmp(&other.key.len())
            })
    }

    pub fn matches(&self, other: &Self, tol: f64) -> bool {
        (self.endpoint, self.diameter, self.dim, self.thin) == (other.endpoint, other.diameter, other.dim, other.thin)
            && self.key.len() == other.key.len()
            && self.key.iter().zip(&other.key).all(|(a, b)| (a - b).abs() <= tol)
    }

    /// Sorts both multisets and compares them entry by entry.
    pub fn same_multiset(a: &[CensusEntry], b: &[CensusEntry], tol: f64) -> bool {
        let mut a = a.to_vec();
        let mut b = b.to_vec();
        a.sort_by(CensusEntry::order);
        b.sort_by(CensusEntry::order);
        a.len() == b.len() && a.iter().zip(&b).all(|(x, y)| x.matches(y, tol))
    }
}

/// Census entry of any module record, computed from its basis.
pub fn census_key(ctx: &TContext<'_>, record: &TModuleRecord, tol: Tolerance) -> Result<CensusEntry, LinalgError> {
    let n = ctx.vertex_count();
    let e = record.endpoint;
    let slice: Vec<Vec<f64>> = record.basis.basis().iter().map(|v| ctx.project_layer(e, v)).collect();
    let slice = orthonormalize(&slice, n, tol.tol)?;
    let m = slice.restrict(|v| ctx.dual_distance_vec(e, 2, v));
    let mut key = sym_eig(&m, tol)?.values;
    key.sort_by(f64::total_cmp);
    Ok(CensusEntry { endpoint: e, diameter: record.diameter, dim: record.dim(), thin: record.thin, key })
}

#[derive(Debug, Clone, PartialEq)]
pub struct GenericDecomposition {
    pub seed: u64,
    pub records: Vec<TModuleRecord>,
    pub census: Vec<CensusEntry>,
    /// Every module passed both irreducibility certificates.
    pub certified: bool,
    pub total_dim: usize,
}

/// Module as orthonormal bases of its slices `E*_iW`.
#[derive(Clone)]
struct Sliced {
    slices: Vec<Vec<Vec<f64>>>,
}

impl Sliced {
    fn dim(&self) -> usize {
        self.slices.iter().map(Vec::len).sum()
    }

    fn vectors(&self) -> Vec<Vec<f64>> {
        self.slices.iter().flatten().cloned().collect()
    }
}

const CLOSURE_TOL: f64 = 1e-8;
const SPLIT_ATTEMPTS: usize = 8;
const CERTIFICATE_VECTORS: usize = 3;

fn random_coefficient(rng: &mut ChaCha8Rng) -> f64 {
    // Nonzero integers in [−9, 9].
    let r = (rng.next_u64() % 18) as i64 - 9;
    (if r >= 0 { r + 1 } else { r }) as f64
}

/// A random self-adjoint element of `T` built from short words:
/// `E*_i`, `E*_iAE*_{i+1} + E*_{i+1}AE*_i`, `AE*_iA` and `A`.
fn random_hermitian(ctx: &TContext<'_>, rng: &mut ChaCha8Rng) -> Matrix {
    let n = ctx.vertex_count();
    let d = ctx.diameter();
    let a = ctx.scheme().distance_matrices()[1].to_f64();
    let layer: Vec<usize> = (0..n).map(|v| ctx.layer_of(v)).collect();
    let diag: Vec<f64> = (0..=d).map(|_| random_coefficient(rng)).collect();
    let edge: Vec<f64> = (0..d).map(|_| random_coefficient(rng)).collect();
    let through: Vec<f64> = (0..=d).map(|_| random_coefficient(rng)).collect();
    let whole = random_coefficient(rng);
    let mut h = Matrix::from_fn(n, n, |r, c| {
        let mut v = whole * a[(r, c)];
        if r == c {
            v += diag[layer[r]];
        }
        if a[(r, c)] != 0.0 {
            v += edge[layer[r].min(layer[c])];
        }
        v
    });
    // Σ_i t_i A E*_i A: entry (r, c) = Σ_w A_rw t_{layer(w)} A_wc.
    let g = ctx.scheme().graph();
    for r in 0..n {
        for &w in g.neighbors(r) {
            let t = through[layer[w]];
            for &c in g.neighbors(w) {
                h[(r, c)] += t;
            }
        }
    }
    h
}

fn remove_components(v: &mut [f64], basis: &[Vec<f64>]) {
    for _ in 0..2 {
        for b in basis {
            let c = dot(b, v);
            axpy(-c, b, v);
        }
    }
}

/// Smallest subspace containing `start` that is closed under every `E*_i`,
/// `L` and `R`, built slice by slice.
fn closure(ctx: &TContext<'_>, start: &[Vec<f64>]) -> Sliced {
    let d = ctx.diameter();
    let mut slices: Vec<Vec<Vec<f64>>> = vec![Vec::new(); d + 1];
    let mut queue: Vec<(usize, Vec<f64>)> = Vec::new();
    let add = |slices: &mut Vec<Vec<Vec<f64>>>, queue: &mut Vec<(usize, Vec<f64>)>, i: usize, mut w: Vec<f64>| {
        let scale_in = norm(&w).max(1.0);
        remove_components(&mut w, &slices[i]);
        let len = norm(&w);
        if len > CLOSURE_TOL * scale_in {
            scale(1.0 / len, &mut w);
            slices[i].push(w.clone());
            queue.push((i, w));
        }
    };
    for v in start {
        for i in 0..=d {
            add(&mut slices, &mut queue, i, ctx.project_layer(i, v));
        }
    }
    while let Some((i, b)) = queue.pop() {
        if i < d {
            add(&mut slices, &mut queue, i + 1, ctx.raise_vec(&b));
        }
        if i > 0 {
            add(&mut slices, &mut queue, i - 1, ctx.lower_vec(&b));
        }
    }
    Sliced { slices }
}

/// Orthonormal basis of the commutant of `T` restricted to `w`, as
/// block-diagonal matrices `X_i` acting on the slice coordinates.
fn commutant(ctx: &TContext<'_>, w: &Sliced, tol: Tolerance) -> Result<Vec<Vec<Matrix>>, LinalgError> {
    let dims: Vec<usize> = w.slices.iter().map(Vec::len).collect();
    let mut offsets = vec![0; dims.len() + 1];
    for i in 0..dims.len() {
        offsets[i + 1] = offsets[i] + dims[i] * dims[i];
    }
    let unknowns = offsets[dims.len()];
    let var = |i: usize, r: usize, c: usize| offsets[i] + r * dims[i] + c;
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for i in 0..dims.len().saturating_sub(1) {
        let (p, q) = (dims[i], dims[i + 1]);
        if p == 0 || q == 0 {
            continue;
        }
        // R_i = B_{i+1}ᵀ R B_i, a q × p block.
        let raised: Vec<Vec<f64>> = w.slices[i].iter().map(|b| ctx.raise_vec(b)).collect();
        let r_blk = Matrix::from_fn(q, p, |a, b| dot(&w.slices[i + 1][a], &raised[b]));
        // R_i X_i − X_{i+1} R_i = 0.
        for a in 0..q {
            for b in 0..p {
                let mut row = vec![0.0; unknowns];
                for t in 0..p {
                    row[var(i, t, b)] += r_blk[(a, t)];
                }
                for t in 0..q {
                    row[var(i + 1, a, t)] -= r_blk[(t, b)];
                }
                rows.push(row);
            }
        }
        // Rᵢᵀ X_{i+1} − X_i Rᵢᵀ = 0.
        for a in 0..p {
            for b in 0..q {
                let mut row = vec![0.0; unknowns];
                for t in 0..q {
                    row[var(i + 1, t, b)] += r_blk[(t, a)];
                }
                for t in 0..p {
                    row[var(i, a, t)] -= r_blk[(b, t)];
                }
                rows.push(row);
            }
        }
    }
    let normal = Matrix::from_fn(unknowns, unknowns, |a, b| rows.iter().map(|r| r[a] * r[b]).sum());
    let scale_n = normal.max_abs().max(1.0);
    let eig = sym_eig(&normal, tol)?;
    let mut out = Vec::new();
    for g in eig.groups.iter().filter(|g| g.value.abs() <= 1e-8 * scale_n) {
        for v in g.space.basis() {
            out.push(
                (0..dims.len())
                    .map(|i| Matrix::from_fn(dims[i], dims[i], |r, c| v[var(i, r, c)]))
                    .collect::<Vec<Matrix>>(),
            );
        }
    }
    Ok(out)
}

/// Splits `w` into irreducible pieces, certifying each by a one-dimensional
/// commutant.
fn split_irreducible(
    ctx: &TContext<'_>,
    w: Sliced,
    rng: &mut ChaCha8Rng,
    tol: Tolerance,
    out: &mut Vec<Sliced>,
) -> Result<(), GenericError> {
    let comm = commutant(ctx, &w, tol)?;
    if comm.len() <= 1 {
        out.push(w);
        return Ok(());
    }
    let n = ctx.vertex_count();
    for _ in 0..SPLIT_ATTEMPTS {
        let coeffs: Vec<f64> = comm.iter().map(|_| random_coefficient(rng)).collect();
        // Symmetrized random commutant element, assembled in ambient space.
        let mut blocks: Vec<Matrix> = comm[0].iter().map(|m| Matrix::zeros(m.rows(), m.cols())).collect();
        for (cf, elem) in coeffs.iter().zip(&comm) {
            for (acc, m) in blocks.iter_mut().zip(elem) {
                let s = Matrix::from_fn(m.rows(), m.cols(), |r, c| cf * (m[(r, c)] + m[(c, r)]));
                *acc = &*acc + &s;
            }
        }
        let basis = w.vectors();
        let mut big = Matrix::zeros(basis.len(), basis.len());
        let mut off = 0;
        for blk in &blocks {
            for r in 0..blk.rows() {
                for c in 0..blk.cols() {
                    big[(off + r, off + c)] = blk[(r, c)];
                }
            }
            off += blk.rows();
        }
        let eig = sym_eig(&big, tol)?;
        if eig.groups.len() < 2 {
            continue;
        }
        for g in &eig.groups {
            let vecs: Vec<Vec<f64>> = g
                .space
                .basis()
                .iter()
                .map(|coeffs| {
                    let mut v = vec![0.0; n];
                    for (c, b) in coeffs.iter().zip(&basis) {
                        axpy(*c, b, &mut v);
                    }
                    v
                })
                .collect();
            let slices = (0..=ctx.diameter())
                .map(|i| {
                    let proj: Vec<Vec<f64>> = vecs.iter().map(|v| ctx.project_layer(i, v)).collect();
                    orthonormalize(&proj, n, CLOSURE_TOL).map(Subspace::into_basis)
                })
                .collect::<Result<Vec<_>, _>>()?;
            split_irreducible(ctx, Sliced { slices }, rng, tol, out)?;
        }
        return Ok(());
    }
    Err(GenericError::Unsplittable { dim: w.dim(), attempts: SPLIT_ATTEMPTS })
}

/// Random vectors of `w` each generate all of `w`.
fn generated_by_random_vectors(ctx: &TContext<'_>, w: &Sliced, rng: &mut ChaCha8Rng) -> bool {
    let basis = w.vectors();
    (0..CERTIFICATE_VECTORS).all(|_| {
        let mut v = vec![0.0; ctx.vertex_count()];
        for b in &basis {
            axpy(random_coefficient(rng), b, &mut v);
        }
        closure(ctx, &[v]).dim() == w.dim()
    })
}

/// Decomposes the standard module at the context's base vertex into
/// irreducible modules. Deterministic for a given `seed`.
pub fn generic_decompose(ctx: &TContext<'_>, seed: u64, tol: Tolerance) -> Result<GenericDecomposition, GenericError> {
    let n = ctx.vertex_count();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (ctx.base_vertex() as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    let mut found: Vec<Sliced> = Vec::new();
    let mut covered: Vec<Vec<f64>> = Vec::new();
    let mut rounds = 0;
    while covered.len() < n {
        rounds += 1;
        if rounds > 4 {
            return Err(GenericError::NonConvergence { covered: covered.len(), total: n, rounds });
        }
        let h = random_hermitian(ctx, &mut rng);
        let eig = sym_eig(&h, tol)?;
        for g in &eig.groups {
            for v in g.space.basis() {
                let mut v = v.clone();
                remove_components(&mut v, &covered);
                if norm(&v) <= libm::sqrt(CLOSURE_TOL) {
                    continue;
                }
                let w = closure(ctx, &[v]);
                let mut pieces = Vec::new();
                split_irreducible(ctx, w, &mut rng, tol, &mut pieces)?;
                for p in pieces {
                    covered.extend(p.vectors());
                    found.push(p);
                }
            }
        }
    }
    let mut certified = true;
    let mut records = Vec::with_capacity(found.len());
    for w in &found {
        certified &= generated_by_random_vectors(ctx, w, &mut rng);
        let dims: Vec<usize> = w.slices.iter().map(Vec::len).collect();
        let basis = Subspace::from_orthonormal(n, w.vectors(), tol.tol);
        records.push(TModuleRecord::from_slices(dims, basis, IsoClass::Generic(0), None));
    }
    let mut census = Vec::with_capacity(records.len());
    for r in &records {
        census.push(census_key(ctx, r, tol)?);
    }
    // Class labels: equal census keys share a label.
    let mut labels: Vec<CensusEntry> = Vec::new();
    for (r, c) in records.iter_mut().zip(&census) {
        let idx = match labels.iter().position(|l| l.matches(c, tol.grouping)) {
            Some(i) => i,
            None => {
                labels.push(c.clone());
                labels.len() - 1
            }
        };
        r.iso_class = IsoClass::Generic(idx);
        if r.endpoint == 2 && r.thin {
            r.local_eigenvalue = c.key.first().copied();
        }
    }
    let total_dim = records.iter().map(TModuleRecord::dim).sum();
    Ok(GenericDecomposition { seed, records, census, certified, total_dim })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drg::Scheme;
    use crate::graph::{generate_bipartite_double, generate_hypercube, generate_petersen};
    use crate::terwilliger::build_context;

    #[test]
    fn q4_census() {
        let s = Scheme::certify(generate_hypercube(4).unwrap()).unwrap();
        let ctx = build_context(&s, 0).unwrap();
        let dec = generic_decompose(&ctx, 0, Tolerance::default()).unwrap();
        assert_eq!(dec.total_dim, 16);
        assert!(dec.certified);
        let count = |e: usize, dim: usize| dec.census.iter().filter(|c| c.endpoint == e && c.dim == dim).count();
        assert_eq!(count(0, 5), 1);
        assert_eq!(dec.census.iter().filter(|c| c.endpoint == 0).count(), 1);
        assert_eq!(count(1, 3), 3);
        assert_eq!(dec.census.iter().filter(|c| c.endpoint == 2).count(), 2);
        assert!(dec.census.iter().all(|c| c.thin));
    }

    #[test]
    fn seed_invariant_census() {
        let s = Scheme::certify(generate_bipartite_double(&generate_petersen()).unwrap()).unwrap();
        let ctx = build_context(&s, 2).unwrap();
        let a = generic_decompose(&ctx, 0, Tolerance::default()).unwrap();
        let b = generic_decompose(&ctx, 1, Tolerance::default()).unwrap();
        assert_eq!(a.total_dim, 20);
        assert!(CensusEntry::same_multiset(&a.census, &b.census, 1e-6));
        let again = generic_decompose(&ctx, 0, Tolerance::default()).unwrap();
        assert_eq!(a, again);
    }
}
