use alloc::vec::Vec;
use num_traits::Zero;

use super::fit::{fit_affine, AffineFit};
use super::triples::collect_triples;
use crate::drg::{IntersectionArray, Scheme};
use crate::rational::Rational;
use crate::terwilliger::{delta, Endpoint2Census, LocalSpectrum};

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ConditionI {
    pub holds: bool,
    #[cfg_attr(feature = "serde", serde(with = "crate::rational::serde_rational"))]
    pub delta2: Rational,
    /// Fits for `2 ≤ i ≤ D−2`.
    pub fits: Vec<AffineFit>,
    pub vacuous_levels: Vec<usize>,
}

impl ConditionI {
    pub fn from_fits(ia: &IntersectionArray, fits: Vec<AffineFit>) -> Self {
        let delta2 = delta(ia, 2).unwrap_or_else(|_| Rational::zero());
        let holds = delta2 > Rational::zero() && fits.iter().all(AffineFit::holds);
        let vacuous_levels = fits.iter().filter(|f| f.points.is_empty()).map(|f| f.i).collect();
        ConditionI { holds, delta2, fits, vacuous_levels }
    }

    pub fn fit(&self, i: usize) -> Option<&AffineFit> {
        self.fits.iter().find(|f| f.i == i)
    }
}

/// Pools triples from every base vertex and fits each level.
pub fn condition_i(scheme: &Scheme) -> ConditionI {
    let d = scheme.diameter();
    let fits = (2..=d.saturating_sub(2))
        .map(|i| fit_affine(i, &collect_triples(scheme.graph(), scheme.distances(), i)))
        .collect();
    ConditionI::from_fits(scheme.ia(), fits)
}

/// Endpoint-2 data of one base vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct VertexSummary {
    pub x: usize,
    pub classes: usize,
    pub all_thin: bool,
    pub exhausted: bool,
    pub u_trivial: bool,
}

impl VertexSummary {
    pub fn from_census(x: usize, spectrum: &LocalSpectrum, census: &Endpoint2Census) -> Self {
        VertexSummary {
            x,
            classes: census.class_count(),
            all_thin: census.all_thin(),
            exhausted: census.exhausted,
            u_trivial: spectrum.u_is_trivial(),
        }
    }

    pub fn satisfied(&self) -> bool {
        self.all_thin && self.exhausted && self.classes == 2
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ConditionII {
    pub holds: bool,
    /// Every vertex of the graph was evaluated.
    pub complete: bool,
    pub vertices: Vec<VertexSummary>,
}

pub fn condition_ii(vertices: Vec<VertexSummary>, vertex_count: usize) -> ConditionII {
    let holds = !vertices.is_empty() && vertices.iter().all(VertexSummary::satisfied);
    ConditionII { holds, complete: vertices.len() == vertex_count, vertices }
}
