use num_traits::Zero;
use thiserror::Error;

use crate::drg::IntersectionArray;
use crate::rational::{int, Rational};
use crate::terwilliger::{delta, DeltaIndexError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ClosedFormError {
    #[error("Δ_{0} = 0, closed-form scalars undefined")]
    DeltaZero(usize),
    #[error(transparent)]
    Index(#[from] DeltaIndexError),
}

/// Closed-form `(α_i, β_i)`, both with denominator `c_2 Δ_i`.
pub fn closed_form_alpha_beta(ia: &IntersectionArray, i: usize) -> Result<(Rational, Rational), ClosedFormError> {
    let d = delta(ia, i)?;
    if d.is_zero() {
        return Err(ClosedFormError::DeltaZero(i));
    }
    let (c, b) = (|j| ia.c(j), |j| ia.b(j));
    let den = int(c(2)) * d;
    let alpha = c(i) * (c(i) - 1) * (b(i - 1) - c(2)) - c(i) * c(i - 1) * (b(i) - 1) * (c(2) - 1);
    let beta = c(i) * (c(i + 1) - c(i)) * (b(i - 1) - 1) - b(i) * (c(i + 1) - 1) * (c(i) - c(i - 1));
    Ok((int(alpha) / den, int(beta) / den))
}
