use alloc::vec;
use alloc::vec::Vec;
use thiserror::Error;

use super::context::TContext;
use super::recurrence::{phi_omega, PhiOmegaSequences};
use super::spectrum::LocalSpectrum;
use crate::linalg::{axpy, dot, norm, orth_complement, orthonormalize, scale, LinalgError, Subspace, Tolerance};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModuleError {
    #[error("endpoint-1 seed {seed} does not generate a thin module (residual {residual:e})")]
    EndpointOneNotThin { seed: usize, residual: f64 },
    #[error("endpoint-1 module {seed} has diameter {got}, expected {expected}")]
    EndpointOneDiameter { seed: usize, expected: usize, got: usize },
    #[error("primary module check failed: {0}")]
    Primary(&'static str),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind", content = "index", rename_all = "snake_case"))]
pub enum IsoClass {
    Primary,
    EndpointOne,
    /// Index into the `Φ₂` classes of the local spectrum.
    LocalEigenvalue(usize),
    /// Class label assigned by the generic decomposition.
    Generic(usize),
}

/// One irreducible module.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct TModuleRecord {
    pub endpoint: usize,
    pub diameter: usize,
    pub thin: bool,
    pub local_eigenvalue: Option<f64>,
    /// `dim E*_i W` for `0 ≤ i ≤ D`.
    pub slice_dims: Vec<usize>,
    pub iso_class: IsoClass,
    #[cfg_attr(feature = "serde", serde(skip))]
    pub basis: Subspace,
}

impl TModuleRecord {
    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub(crate) fn from_slices(
        slice_dims: Vec<usize>,
        basis: Subspace,
        iso_class: IsoClass,
        local_eigenvalue: Option<f64>,
    ) -> Self {
        let endpoint = slice_dims.iter().position(|&d| d > 0).unwrap_or(0);
        let diameter = slice_dims.iter().filter(|&&d| d > 0).count().saturating_sub(1);
        let thin = slice_dims.iter().all(|&d| d <= 1);
        TModuleRecord { endpoint, diameter, thin, local_eigenvalue, slice_dims, iso_class, basis }
    }
}

/// Normalized vectors `w_j ∝ R^j u` starting at a seed `u`.
#[derive(Debug, Clone, PartialEq)]
pub struct Ladder {
    pub vectors: Vec<Vec<f64>>,
    /// Worst `‖L w_j − ⟨L w_j, w_{j−1}⟩ w_{j−1}‖`, with `‖L w_0‖` at `j = 0`.
    pub residual: f64,
    pub thin: bool,
}

impl Ladder {
    pub fn diameter(&self) -> usize {
        self.vectors.len() - 1
    }
}

/// Raises `seed` until `‖R w‖ < tol`, checking at every rung that `L` maps
/// back into the previous rung.
pub fn ladder(ctx: &TContext<'_>, seed: &[f64], tol: f64) -> Ladder {
    let mut w0 = seed.to_vec();
    scale(1.0 / norm(seed), &mut w0);
    let mut residual = norm(&ctx.lower_vec(&w0));
    let mut thin = residual <= tol;
    let mut vectors = vec![w0];
    while vectors.len() <= ctx.diameter() {
        let mut r = ctx.raise_vec(vectors.last().unwrap());
        let len = norm(&r);
        if len < tol {
            break;
        }
        scale(1.0 / len, &mut r);
        let mut l = ctx.lower_vec(&r);
        let prev = vectors.last().unwrap();
        let scale_l = norm(&l).max(1.0);
        axpy(-dot(&l, prev), prev, &mut l);
        let res = norm(&l);
        residual = residual.max(res);
        if res > tol * scale_l {
            thin = false;
        }
        vectors.push(r);
    }
    Ladder { vectors, residual, thin }
}

fn ladder_record(
    ctx: &TContext<'_>,
    ladder: &Ladder,
    iso_class: IsoClass,
    eta: Option<f64>,
    tol: f64,
) -> TModuleRecord {
    let mut slice_dims = vec![0; ctx.diameter() + 1];
    let endpoint =
        (0..=ctx.diameter()).find(|&i| ctx.project_layer(i, &ladder.vectors[0]).iter().any(|v| v.abs() > tol));
    for j in 0..ladder.vectors.len() {
        slice_dims[endpoint.unwrap_or(0) + j] = 1;
    }
    let basis = Subspace::from_orthonormal(ctx.vertex_count(), ladder.vectors.clone(), tol);
    TModuleRecord::from_slices(slice_dims, basis, iso_class, eta)
}

/// The module spanned by `s_0..s_D`; its invariance under `A` is checked in
/// exact arithmetic.
pub fn primary_module(ctx: &TContext<'_>, tol: f64) -> Result<TModuleRecord, ModuleError> {
    let d = ctx.diameter();
    let ia = ctx.scheme().ia();
    let s: Vec<Vec<f64>> = (0..=d).map(|i| ctx.layer_indicator(i)).collect();
    for i in 0..=d {
        if dot(&s[i], &s[i]) != ia.k(i) as f64 {
            return Err(ModuleError::Primary("‖s_i‖² != k_i"));
        }
        for j in 0..i {
            if dot(&s[i], &s[j]) != 0.0 {
                return Err(ModuleError::Primary("s_i not orthogonal"));
            }
        }
        // A s_i = b_{i−1} s_{i−1} + c_{i+1} s_{i+1}, exact for 0/1 integer data.
        let a_s: Vec<f64> = ctx.scheme().apply_distance(1, &s[i]);
        let mut expected = vec![0.0; ctx.vertex_count()];
        if i > 0 {
            axpy(ia.b(i - 1) as f64, &s[i - 1], &mut expected);
        }
        if i < d {
            axpy(ia.c(i + 1) as f64, &s[i + 1], &mut expected);
        }
        if a_s != expected {
            return Err(ModuleError::Primary("A s_i != b_{i−1} s_{i−1} + c_{i+1} s_{i+1}"));
        }
    }
    let basis: Vec<Vec<f64>> = s
        .into_iter()
        .map(|mut v| {
            let len = norm(&v);
            scale(1.0 / len, &mut v);
            v
        })
        .collect();
    Ok(TModuleRecord::from_slices(
        vec![1; d + 1],
        Subspace::from_orthonormal(ctx.vertex_count(), basis, tol),
        IsoClass::Primary,
        None,
    ))
}

#[derive(Debug, Clone, PartialEq)]
pub struct Endpoint1Space {
    pub space: Subspace,
    pub records: Vec<TModuleRecord>,
}

/// The `k − 1` endpoint-1 modules, one per seed in `E*_1V ⊖ span{s_1}`.
pub fn endpoint1_space(ctx: &TContext<'_>, tol: f64) -> Result<Endpoint1Space, ModuleError> {
    let n = ctx.vertex_count();
    let d = ctx.diameter();
    let e1 = Subspace::coordinate(n, ctx.layer(1), tol);
    let s1 = orthonormalize(&[ctx.layer_indicator(1)], n, tol)?;
    let seeds = orth_complement(&s1, &e1)?;
    let mut records = Vec::new();
    let mut all = Vec::new();
    for (seed, u) in seeds.basis().iter().enumerate() {
        let l = ladder(ctx, u, tol);
        if !l.thin {
            return Err(ModuleError::EndpointOneNotThin { seed, residual: l.residual });
        }
        if l.diameter() != d - 2 {
            return Err(ModuleError::EndpointOneDiameter { seed, expected: d - 2, got: l.diameter() });
        }
        all.extend(l.vectors.iter().cloned());
        records.push(ladder_record(ctx, &l, IsoClass::EndpointOne, None, tol));
    }
    Ok(Endpoint1Space { space: orthonormalize(&all, n, tol)?, records })
}

/// Worst-case error of a family of numerical identities at one level.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct NumericCheck {
    pub name: &'static str,
    pub level: usize,
    pub max_error: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct NonThinSeed {
    pub class: usize,
    pub vector: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Endpoint2Census {
    pub records: Vec<TModuleRecord>,
    /// Worst `‖LRu − (c_2η + k)u‖ / max(1, |c_2η + k|)` over eigenvectors in `U`.
    pub eigenvalue_map_error: f64,
    /// Worst `‖Lu‖` and `‖RLu‖` over the same vectors.
    pub lower_residual: f64,
    pub non_thin: Vec<NonThinSeed>,
    /// Sum of endpoint slices of the thin records equals `dim U`.
    pub exhausted: bool,
    /// Recurrence data per `Φ₂` class.
    pub recurrences: Vec<PhiOmegaSequences>,
    pub checks: Vec<NumericCheck>,
}

impl Endpoint2Census {
    pub fn class_count(&self) -> usize {
        let mut classes: Vec<IsoClass> = self.records.iter().map(|r| r.iso_class).collect();
        classes.sort();
        classes.dedup();
        classes.len()
    }

    pub fn all_thin(&self) -> bool {
        self.non_thin.is_empty() && self.records.iter().all(|r| r.thin)
    }
}

/// Tolerance used for the relative identity checks on realized modules.
const RELATIVE_CHECK: f64 = 1e-6;

/// Generates the module of every eigenvector of `E*_2A_2E*_2` in `U` and
/// checks the identities that hold on thin endpoint-2 modules.
pub fn endpoint2_modules(ctx: &TContext<'_>, spectrum: &LocalSpectrum, tol: Tolerance) -> Endpoint2Census {
    let ia = ctx.scheme().ia();
    let (c2, k) = (ia.c(2) as f64, ia.valency() as f64);
    let mut census = Endpoint2Census {
        records: Vec::new(),
        eigenvalue_map_error: 0.0,
        lower_residual: 0.0,
        non_thin: Vec::new(),
        exhausted: false,
        recurrences: spectrum.phi2.iter().map(|c| phi_omega(ia, c.value)).collect(),
        checks: Vec::new(),
    };
    let mut acc = CheckAccumulator::default();
    for (class, phi) in spectrum.phi2.iter().enumerate() {
        let lambda = c2 * phi.value + k;
        for u in &phi.vectors {
            let lu = ctx.lower_vec(u);
            let ru = ctx.raise_vec(u);
            let mut lru = ctx.lower_vec(&ru);
            let rlu = ctx.raise_vec(&lu);
            axpy(-lambda, u, &mut lru);
            census.eigenvalue_map_error = census.eigenvalue_map_error.max(norm(&lru) / lambda.abs().max(1.0));
            census.lower_residual = census.lower_residual.max(norm(&lu)).max(norm(&rlu));

            let l = ladder(ctx, u, tol.tol);
            if !l.thin {
                census.non_thin.push(NonThinSeed { class, vector: u.clone() });
                continue;
            }
            record_module_checks(ctx, u, &census.recurrences[class], &mut acc);
            census.records.push(ladder_record(ctx, &l, IsoClass::LocalEigenvalue(class), Some(phi.value), tol.tol));
        }
    }
    census.exhausted = census.non_thin.is_empty() && census.records.len() == spectrum.u.dim();
    census.checks = acc.finish();
    census
}

#[derive(Default)]
struct CheckAccumulator {
    entries: Vec<NumericCheck>,
}

impl CheckAccumulator {
    fn add(&mut self, name: &'static str, level: usize, error: f64, scale: f64) {
        let passed = error <= RELATIVE_CHECK * scale.max(1.0);
        match self.entries.iter_mut().find(|c| c.name == name && c.level == level) {
            Some(c) => {
                c.max_error = c.max_error.max(error);
                c.passed &= passed;
            }
            None => self.entries.push(NumericCheck { name, level, max_error: error, passed }),
        }
    }

    fn finish(mut self) -> Vec<NumericCheck> {
        self.entries.sort_by(|a, b| a.name.cmp(b.name).then(a.level.cmp(&b.level)));
        self.entries
    }
}

fn diff_norm(a: &[f64], b: &[f64], sb: f64) -> f64 {
    let mut r = a.to_vec();
    axpy(-sb, b, &mut r);
    norm(&r)
}

fn record_module_checks(ctx: &TContext<'_>, u: &[f64], rec: &PhiOmegaSequences, acc: &mut CheckAccumulator) {
    let ia = ctx.scheme().ia();
    let d = ctx.diameter();
    let plus = |i: usize| if i >= 2 { ctx.dual_distance_vec(i, i - 2, u) } else { vec![0.0; u.len()] };
    let mut raised = u.to_vec();
    for i in 2..=d {
        if i > 2 {
            raised = ctx.raise_vec(&raised);
        }
        let vp = plus(i);
        let c = ia.c_product(i - 2) as f64;
        acc.add("E*_i A_{i-2} u = R^{i-2} u / (c_1..c_{i-2})", i, diff_norm(&vp, &raised, 1.0 / c), norm(&vp));
        if i + 2 <= d {
            let mut lhs = ctx.dual_distance_vec(i, i + 2, u);
            let mid = ctx.dual_distance_vec(i, i, u);
            axpy(1.0, &vp, &mut lhs);
            axpy(1.0, &mid, &mut lhs);
            acc.add("E*_i (A_{i-2} + A_i + A_{i+2}) u = 0", i, norm(&lhs), norm(&mid).max(norm(&vp)));
        }
    }
    for i in 2..=d.saturating_sub(2) {
        let vp = plus(i);
        let vm = ctx.dual_distance_vec(i, i + 2, u);
        if let Some(phi) = rec.phi(i) {
            acc.add("v_i^- = phi_i v_i^+", i, diff_norm(&vm, &vp, phi), norm(&vm).max(norm(&vp)));
        }
        if let Some(omega) = rec.omega(i) {
            let lv = ctx.lower_vec(&plus(i + 1));
            acc.add("L v_{i+1}^+ = omega_i v_i^+", i, diff_norm(&lv, &vp, omega), norm(&lv).max(norm(&vp)));
        }
    }
}

/// Largest `|⟨b, b'⟩|` between basis vectors of records in different classes.
pub fn max_cross_class_overlap(records: &[&TModuleRecord]) -> f64 {
    let mut worst: f64 = 0.0;
    for (i, a) in records.iter().enumerate() {
        for b in &records[i + 1..] {
            if a.iso_class == b.iso_class {
                continue;
            }
            for va in a.basis.basis() {
                for vb in b.basis.basis() {
                    worst = worst.max(dot(va, vb).abs());
                }
            }
        }
    }
    worst
}
