use alloc::string::String;
use alloc::vec::Vec;
use num_traits::Zero;
use thiserror::Error;

use crate::characterization::{AffineFit, FitKind};
use crate::drg::IntersectionArray;
use crate::rational::{int, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ZeroAlphaError {
    #[error("α_{0} = 0 below the minimal zero level")]
    DivisionByZero(usize),
    #[error("no scalars for level {0}")]
    MissingLevel(usize),
    #[error("ℓ = {0} outside 3..=D−2")]
    BadLevel(usize),
}

/// Scalars chosen at one level.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LevelScalars {
    pub i: usize,
    pub alpha: Rational,
    pub beta: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ZeroAlphaQuantities {
    pub ell: usize,
    /// `t_3..t_ℓ`
    #[cfg_attr(feature = "serde", serde(with = "crate::rational::serde_rational::seq"))]
    pub t: Vec<Rational>,
    /// `σ_1..σ_{ℓ−2}`
    #[cfg_attr(feature = "serde", serde(with = "crate::rational::serde_rational::seq"))]
    pub sigma: Vec<Rational>,
    #[cfg_attr(feature = "serde", serde(with = "crate::rational::serde_rational::seq"))]
    pub rho: Vec<Rational>,
    /// `λ_i` from the defining recurrence with the given `λ_1`.
    #[cfg_attr(feature = "serde", serde(with = "crate::rational::serde_rational::seq"))]
    pub lambda_seq: Vec<Rational>,
}

impl ZeroAlphaQuantities {
    pub fn t(&self, i: usize) -> Rational {
        self.t[i - 3]
    }

    /// `λ_i = σ_i λ_1 + ρ_i` for every index.
    pub fn linear_in_lambda(&self) -> bool {
        let l1 = self.lambda_seq[0];
        self.lambda_seq.iter().zip(self.sigma.iter().zip(&self.rho)).all(|(l, (s, r))| *l == *s * l1 + *r)
    }

    pub fn sigma_partial_sums_nonzero(&self) -> bool {
        let mut acc = Rational::zero();
        self.sigma.iter().all(|s| {
            acc += *s;
            !acc.is_zero()
        })
    }

    /// The `λ` solving `c_ℓ(λ_1 + ⋯ + λ_{ℓ−2}) + t_ℓ = 0`.
    pub fn forced_lambda(&self, ia: &IntersectionArray) -> Option<Rational> {
        let ss: Rational = self.sigma.iter().copied().sum();
        let rs: Rational = self.rho.iter().copied().sum();
        if ss.is_zero() {
            return None;
        }
        Some(-(self.t(self.ell) / int(ia.c(self.ell)) + rs) / ss)
    }
}

fn t_value(ia: &IntersectionArray, s: &LevelScalars) -> Rational {
    let i = s.i;
    let (c, b) = (|j| int(ia.c(j)), |j| int(ia.b(j)));
    let sum: Rational = (1..i).map(|j| b(j - 1) * c(j)).sum();
    c(i) * c(i - 1) * (s.beta * c(2) + b(i)) + (s.alpha - c(i)) * sum
}

/// `t_i`, `σ_i`, `ρ_i` and `λ_i` for a given `ℓ` and `λ_1`. `scalars` must
/// cover `3..=ℓ`.
pub fn zero_alpha_quantities(
    ia: &IntersectionArray,
    scalars: &[LevelScalars],
    ell: usize,
    lambda1: Rational,
) -> Result<ZeroAlphaQuantities, ZeroAlphaError> {
    if ell < 3 || ell + 2 > ia.diameter() {
        return Err(ZeroAlphaError::BadLevel(ell));
    }
    let at = |i: usize| scalars.iter().find(|s| s.i == i).ok_or(ZeroAlphaError::MissingLevel(i));
    let t = (3..=ell).map(|i| at(i).map(|s| t_value(ia, s))).collect::<Result<Vec<_>, _>>()?;
    let mut sigma = alloc::vec![int(1)];
    let mut rho = alloc::vec![int(0)];
    let mut lambda_seq = alloc::vec![lambda1];
    for i in 2..=ell - 2 {
        let s = at(i + 1)?;
        if s.alpha.is_zero() {
            return Err(ZeroAlphaError::DivisionByZero(i + 1));
        }
        let pre = (int(ia.c(i + 1)) - s.alpha) / s.alpha;
        let tt = t[i + 1 - 3] / s.alpha;
        sigma.push(pre * sigma.iter().copied().sum::<Rational>());
        rho.push(pre * rho.iter().copied().sum::<Rational>() + tt);
        lambda_seq.push(pre * lambda_seq.iter().copied().sum::<Rational>() + tt);
    }
    Ok(ZeroAlphaQuantities { ell, t, sigma, rho, lambda_seq })
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(tag = "status", rename_all = "snake_case"))]
pub enum AlphaZeroBranch {
    /// No level `3 ≤ ℓ ≤ D−2` admits `α_ℓ = 0`.
    NotExercised {
        all_alpha_nonzero: bool,
    },
    Exercised {
        quantities: ZeroAlphaQuantities,
        #[cfg_attr(feature = "serde", serde(with = "crate::rational::serde_rational::option"))]
        lambda: Option<Rational>,
        sigma_partial_sums_nonzero: bool,
        delta2_zero: bool,
        phi2_at_most_one: bool,
        /// `λ = c_2η + k` for every observed local eigenvalue in `Φ₂`.
        lambda_matches_phi2: bool,
    },
    Inconsistent {
        reason: String,
    },
}

impl AlphaZeroBranch {
    pub fn consistent(&self) -> bool {
        match self {
            AlphaZeroBranch::NotExercised { .. } => true,
            AlphaZeroBranch::Exercised {
                lambda,
                sigma_partial_sums_nonzero,
                delta2_zero,
                phi2_at_most_one,
                lambda_matches_phi2,
                ..
            } => {
                lambda.is_some()
                    && *sigma_partial_sums_nonzero
                    && *delta2_zero
                    && *phi2_at_most_one
                    && *lambda_matches_phi2
            }
            AlphaZeroBranch::Inconsistent { .. } => false,
        }
    }

    pub fn scalars_used(&self) -> Option<usize> {
        match self {
            AlphaZeroBranch::Exercised { quantities, .. } => Some(quantities.ell),
            _ => None,
        }
    }
}

/// A member of the fit with `α = 0`, if there is one.
pub(crate) fn zero_alpha_member(fit: &AffineFit) -> Option<Rational> {
    match &fit.kind {
        FitKind::Unique { alpha, beta } if alpha.is_zero() => Some(*beta),
        FitKind::Family => {
            let (g1, g2) = fit.points[0];
            match (g1, g2) {
                (0, 0) => Some(int(0)),
                (0, _) => None,
                _ => Some(Rational::new(g2, g1)),
            }
        }
        _ => None,
    }
}

/// Looks for the minimal `ℓ ≥ 3` whose fit admits `α_ℓ = 0` and, if found,
/// checks that `Δ_2 = 0`, `|Φ₂| ≤ 1` and `c_2η + k = λ` for the forced `λ`.
///
/// `representatives` supplies the scalars for levels below `ℓ`; `phi2` is
/// every local eigenvalue of `Φ₂` seen at any base vertex, and
/// `max_phi2_size` the largest `|Φ₂|` at a vertex.
pub fn check_alpha_zero_branch(
    ia: &IntersectionArray,
    fits: &[AffineFit],
    representatives: &[Option<(Rational, Rational)>],
    delta2: Rational,
    phi2: &[f64],
    max_phi2_size: usize,
    tol: f64,
) -> AlphaZeroBranch {
    let d = ia.diameter();
    let levels: Vec<usize> = (3..=d.saturating_sub(2)).collect();
    let fit_at = |i: usize| fits.iter().position(|f| f.i == i);
    let ell = levels.iter().copied().find(|&i| fit_at(i).is_some_and(|p| zero_alpha_member(&fits[p]).is_some()));
    let Some(ell) = ell else {
        let all_alpha_nonzero = levels.iter().all(|&i| {
            fit_at(i).and_then(|p| representatives.get(p).copied().flatten()).is_some_and(|(a, _)| !a.is_zero())
        });
        return AlphaZeroBranch::NotExercised { all_alpha_nonzero };
    };
    let mut scalars = Vec::new();
    for i in 3..ell {
        match fit_at(i).and_then(|p| representatives.get(p).copied().flatten()) {
            Some((alpha, beta)) if !alpha.is_zero() => scalars.push(LevelScalars { i, alpha, beta }),
            _ => {
                return AlphaZeroBranch::Inconsistent {
                    reason: alloc::format!("level {i} below ℓ = {ell} has no scalars with α ≠ 0"),
                }
            }
        }
    }
    let beta = zero_alpha_member(&fits[fit_at(ell).unwrap()]).unwrap();
    scalars.push(LevelScalars { i: ell, alpha: int(0), beta });
    let quantities = match zero_alpha_quantities(ia, &scalars, ell, int(0)) {
        Ok(q) => q,
        Err(e) => return AlphaZeroBranch::Inconsistent { reason: alloc::format!("{e}") },
    };
    let lambda = quantities.forced_lambda(ia);
    let (c2, k) = (ia.c(2) as f64, ia.valency() as f64);
    let lambda_matches_phi2 = lambda.is_some_and(|l| {
        let lf = *l.numer() as f64 / *l.denom() as f64;
        phi2.iter().all(|&eta| (c2 * eta + k - lf).abs() <= tol * lf.abs().max(1.0))
    });
    AlphaZeroBranch::Exercised {
        sigma_partial_sums_nonzero: quantities.sigma_partial_sums_nonzero(),
        quantities,
        lambda,
        delta2_zero: delta2.is_zero(),
        phi2_at_most_one: max_phi2_size <= 1,
        lambda_matches_phi2,
    }
}
