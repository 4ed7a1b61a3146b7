use alloc::vec::Vec;
use num_traits::Zero;

use super::triples::TripleCountSample;
use crate::rational::{int, nullspace, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind", rename_all = "snake_case"))]
pub enum FitKind {
    /// No triples exist at this level.
    Vacuous,
    /// A single point `(g1, g2)`: every `(α, β)` with `α + β·g1 = g2` fits.
    Family,
    Unique {
        #[cfg_attr(feature = "serde", serde(with = "crate::rational::serde_rational"))]
        alpha: Rational,
        #[cfg_attr(feature = "serde", serde(with = "crate::rational::serde_rational"))]
        beta: Rational,
    },
    /// Points are not collinear, or lie on a vertical line.
    None,
}

/// Exact affine fit `α + β·g1 = g2` over the distinct sample points.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct AffineFit {
    pub i: usize,
    pub kind: FitKind,
    pub points: Vec<(i64, i64)>,
}

impl AffineFit {
    pub fn holds(&self) -> bool {
        !matches!(self.kind, FitKind::None)
    }

    pub fn admits(&self, alpha: Rational, beta: Rational) -> bool {
        self.holds() && self.points.iter().all(|&(g1, g2)| alpha + beta * int(g1) == int(g2))
    }

    /// Scalars to use downstream: the unique solution, or for a family the
    /// preferred pair when it fits and `(g2, 0)` otherwise.
    pub fn representative(&self, preferred: Option<(Rational, Rational)>) -> Option<(Rational, Rational)> {
        match &self.kind {
            FitKind::Unique { alpha, beta } => Some((*alpha, *beta)),
            FitKind::Family => match preferred {
                Some((a, b)) if self.admits(a, b) => Some((a, b)),
                _ => Some((int(self.points[0].1), int(0))),
            },
            FitKind::Vacuous | FitKind::None => None,
        }
    }
}

fn distinct_points(samples: &[TripleCountSample]) -> Vec<(i64, i64)> {
    let mut points: Vec<(i64, i64)> = samples.iter().map(|s| (s.g1, s.g2)).collect();
    points.sort_unstable();
    points.dedup();
    points
}

pub fn fit_affine(i: usize, samples: &[TripleCountSample]) -> AffineFit {
    let points = distinct_points(samples);
    let kind = match points.as_slice() {
        [] => FitKind::Vacuous,
        [_] => FitKind::Family,
        [first, rest @ ..] => match rest.iter().find(|p| p.0 != first.0) {
            None => FitKind::None,
            Some(second) => {
                let beta = Rational::new(second.1 - first.1, second.0 - first.0);
                let alpha = int(first.1) - beta * int(first.0);
                if points.iter().all(|&(g1, g2)| alpha + beta * int(g1) == int(g2)) {
                    FitKind::Unique { alpha, beta }
                } else {
                    FitKind::None
                }
            }
        },
    };
    AffineFit { i, kind, points }
}

/// Solutions `(α, β, γ)` of `α + β·g1 + γ·g2 = 0` over the sample points.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ThreeScalarFit {
    pub i: usize,
    #[cfg_attr(feature = "serde", serde(skip))]
    pub basis: Vec<[Rational; 3]>,
    pub dimension: usize,
    /// Every nonzero solution has `γ ≠ 0`.
    pub gamma_nonzero: bool,
    /// `(α, β)` after scaling the unique ray to `γ = −1`.
    #[cfg_attr(feature = "serde", serde(with = "crate::rational::serde_rational::option_pair"))]
    pub normalized: Option<(Rational, Rational)>,
}

pub fn three_scalar_fit(i: usize, samples: &[TripleCountSample]) -> ThreeScalarFit {
    let rows: Vec<Vec<Rational>> =
        distinct_points(samples).into_iter().map(|(g1, g2)| alloc::vec![int(1), int(g1), int(g2)]).collect();
    let basis: Vec<[Rational; 3]> = nullspace(&rows, 3).into_iter().map(|v| [v[0], v[1], v[2]]).collect();
    // In dimension ≥ 2 some combination always kills γ.
    let gamma_nonzero = basis.len() == 1 && !basis[0][2].is_zero();
    let normalized = gamma_nonzero.then(|| {
        let g = -basis[0][2];
        (basis[0][0] / g, basis[0][1] / g)
    });
    ThreeScalarFit { i, dimension: basis.len(), basis, gamma_nonzero, normalized }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn samples(points: &[(i64, i64)]) -> Vec<TripleCountSample> {
        points.iter().map(|&(g1, g2)| TripleCountSample { i: 3, g1, g2, witness: (0, 0, 0) }).collect()
    }

    #[test]
    fn identity_line() {
        let f = fit_affine(2, &samples(&[(1, 1), (0, 0), (1, 1)]));
        assert_eq!(f.kind, FitKind::Unique { alpha: int(0), beta: int(1) });
        assert_eq!(f.points, [(0, 0), (1, 1)]);
        let t = three_scalar_fit(2, &samples(&[(1, 1), (0, 0)]));
        assert_eq!(t.dimension, 1);
        assert!(t.gamma_nonzero);
        assert_eq!(t.normalized, Some((int(0), int(1))));
    }

    #[test]
    fn vertical_noncollinear_and_degenerate() {
        assert_eq!(fit_affine(3, &samples(&[(1, 1), (1, 2)])).kind, FitKind::None);
        assert_eq!(fit_affine(3, &samples(&[(0, 0), (1, 1), (2, 3)])).kind, FitKind::None);
        assert_eq!(fit_affine(3, &[]).kind, FitKind::Vacuous);
        let fam = fit_affine(3, &samples(&[(1, 2), (1, 2)]));
        assert_eq!(fam.kind, FitKind::Family);
        assert!(fam.admits(int(0), int(2)) && fam.admits(int(1), int(1)));
        assert_eq!(fam.representative(Some((int(5), int(5)))), Some((int(2), int(0))));
        assert_eq!(fam.representative(Some((int(0), int(2)))), Some((int(0), int(2))));
        let t = three_scalar_fit(3, &samples(&[(1, 2)]));
        assert_eq!(t.dimension, 2);
        assert!(!t.gamma_nonzero);
        // Vertical points force γ = 0.
        let v = three_scalar_fit(3, &samples(&[(1, 1), (1, 2)]));
        assert_eq!((v.dimension, v.gamma_nonzero), (1, false));
    }

    #[test]
    fn fractional_slope() {
        let f = fit_affine(4, &samples(&[(0, 1), (2, 2), (4, 3)]));
        assert_eq!(f.kind, FitKind::Unique { alpha: int(1), beta: ratio(1, 2) });
    }
}
