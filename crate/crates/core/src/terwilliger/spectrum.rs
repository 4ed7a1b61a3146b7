use alloc::vec::Vec;
use thiserror::Error;

use super::context::TContext;
use super::modules::{Endpoint1Space, TModuleRecord};
use crate::linalg::{axpy, orth_complement, orthonormalize, sym_eig, LinalgError, Matrix, Subspace, Tolerance};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectrumError {
    #[error("dim U = {got}, expected k_2 − k = {expected}")]
    UDimension { expected: usize, got: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// One element of `Φ₂` with an orthonormal eigenbasis inside `U`.
#[derive(Debug, Clone, PartialEq)]
pub struct Phi2Class {
    pub value: f64,
    pub vectors: Vec<Vec<f64>>,
}

impl Phi2Class {
    pub fn multiplicity(&self) -> usize {
        self.vectors.len()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LocalSpectrum {
    /// Eigenvalues of the local graph on `Γ_2(x)`, descending, with repeats.
    pub eta_all: Vec<f64>,
    /// Grouped `(value, multiplicity)` of `eta_all`, descending.
    pub full: Vec<(f64, usize)>,
    /// `Φ₂`, descending.
    pub phi2: Vec<Phi2Class>,
    pub u: Subspace,
    pub grouping_threshold: f64,
    /// `η_1 = p²_22` within the grouping threshold.
    pub eta1_is_p222: bool,
    /// Multiplicity of `b_3 − 1` in the full local spectrum.
    pub b3_minus_one_multiplicity: usize,
    /// Full spectrum equals `{p²_22} ∪ {b_3 − 1}^{k−1} ∪ Φ₂`.
    pub union_consistent: bool,
}

impl LocalSpectrum {
    pub fn u_is_trivial(&self) -> bool {
        self.u.is_zero()
    }

    pub fn phi2_values(&self) -> Vec<(f64, usize)> {
        self.phi2.iter().map(|c| (c.value, c.multiplicity())).collect()
    }
}

/// `U = E*_2V ⊖ (E*_2V_0 + E*_2V_1)` and the spectrum of `E*_2A_2E*_2` on it.
pub fn local_spectrum(
    ctx: &TContext<'_>,
    primary: &TModuleRecord,
    endpoint1: &Endpoint1Space,
    tol: Tolerance,
) -> Result<LocalSpectrum, SpectrumError> {
    let n = ctx.vertex_count();
    let ia = ctx.scheme().ia();
    let second = ctx.layer(2);
    let e2 = Subspace::coordinate(n, second, tol.tol);
    let slices: Vec<Vec<f64>> =
        primary.basis.basis().iter().chain(endpoint1.space.basis()).map(|v| ctx.project_layer(2, v)).collect();
    let s = orthonormalize(&slices, n, tol.tol)?;
    let u = orth_complement(&s, &e2)?;
    let expected = (ia.k(2) - ia.valency()) as usize;
    if u.dim() != expected {
        return Err(SpectrumError::UDimension { expected, got: u.dim() });
    }

    let m = second.len();
    let local = Matrix::from_fn(m, m, |a, b| (ctx.scheme().dist(second[a], second[b]) == 2) as i64 as f64);
    let full_eig = sym_eig(&local, tol)?;
    let threshold = full_eig.grouping_threshold;
    let mut eta_all = full_eig.values.clone();
    eta_all.reverse();
    let full: Vec<(f64, usize)> = full_eig.groups.iter().rev().map(|g| (g.value, g.multiplicity())).collect();

    let restricted = u.restrict(|v| ctx.dual_distance_vec(2, 2, v));
    let mut phi2 = Vec::new();
    if !u.is_zero() {
        let eig = sym_eig(&restricted, tol)?;
        for g in eig.groups.iter().rev() {
            let vectors = g
                .space
                .basis()
                .iter()
                .map(|coeffs| {
                    let mut v = alloc::vec![0.0; n];
                    for (c, b) in coeffs.iter().zip(u.basis()) {
                        axpy(*c, b, &mut v);
                    }
                    v
                })
                .collect();
            phi2.push(Phi2Class { value: g.value, vectors });
        }
    }

    let p222 = ia.p(2, 2, 2) as f64;
    let b3m1 = (ia.b(3) - 1) as f64;
    let eta1_is_p222 = eta_all.first().is_some_and(|&e| (e - p222).abs() <= threshold);
    let b3_minus_one_multiplicity = full_eig.group_of(b3m1).map_or(0, |g| g.multiplicity());

    let mut predicted: Vec<f64> = Vec::with_capacity(m);
    predicted.push(p222);
    predicted.extend(core::iter::repeat_n(b3m1, ia.valency() as usize - 1));
    for c in &phi2 {
        predicted.extend(core::iter::repeat_n(c.value, c.multiplicity()));
    }
    predicted.sort_by(|a, b| b.total_cmp(a));
    let union_consistent =
        predicted.len() == eta_all.len() && predicted.iter().zip(&eta_all).all(|(a, b)| (a - b).abs() <= threshold);

    Ok(LocalSpectrum {
        eta_all,
        full,
        phi2,
        u,
        grouping_threshold: threshold,
        eta1_is_p222,
        b3_minus_one_multiplicity,
        union_consistent,
    })
}
