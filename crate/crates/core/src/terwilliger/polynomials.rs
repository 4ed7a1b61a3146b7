use alloc::vec;
use alloc::vec::Vec;
use thiserror::Error;

use crate::drg::{IntersectionArray, Scheme};
use crate::linalg::IntMatrix;
use crate::rational::{int, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("(c_1⋯c_{i}) A_{i} != u_{i}(A) at ({row}, {col}): {got} vs {expected}")]
pub struct PolynomialMismatch {
    pub i: usize,
    pub row: usize,
    pub col: usize,
    pub got: i64,
    pub expected: i64,
}

/// Coefficients (lowest degree first) of `v_0..v_D`, where
/// `c_{j+1} v_{j+1} = λ v_j − b_{j−1} v_{j−1}`.
pub fn v_polynomials(ia: &IntersectionArray) -> Vec<Vec<Rational>> {
    scaled_v_polynomials(ia)
        .into_iter()
        .enumerate()
        .map(|(i, u)| {
            let denom = int(ia.c_product(i));
            u.into_iter().map(|a| int(a) / denom).collect()
        })
        .collect()
}

/// Integer polynomials `u_j = (c_1⋯c_j) v_j`, which satisfy
/// `u_{j+1} = λ u_j − b_{j−1} c_j u_{j−1}`.
pub fn scaled_v_polynomials(ia: &IntersectionArray) -> Vec<Vec<i64>> {
    let d = ia.diameter();
    let mut out: Vec<Vec<i64>> = vec![vec![1]];
    if d >= 1 {
        out.push(vec![0, 1]);
    }
    for j in 1..d {
        let mut next = vec![0; j + 2];
        for (e, &a) in out[j].iter().enumerate() {
            next[e + 1] += a;
        }
        let s = ia.b(j - 1) * ia.c(j);
        for (e, &a) in out[j - 1].iter().enumerate() {
            next[e] -= s * a;
        }
        out.push(next);
    }
    out
}

/// Checks `(c_1⋯c_i) A_i = u_i(A)` entrywise for `0 ≤ i ≤ D`.
pub fn check_ai_eq_vi_of_a(scheme: &Scheme) -> Result<(), PolynomialMismatch> {
    let ia = scheme.ia();
    let n = scheme.vertex_count();
    let a = &scheme.distance_matrices()[1];
    let mut prev = IntMatrix::identity(n);
    let mut cur = a.clone();
    for i in 0..=scheme.diameter() {
        let u_i = if i == 0 { prev.clone() } else { cur.clone() };
        let expected = scheme.distance_matrices()[i].scaled(ia.c_product(i));
        if let Some((row, col)) = u_i.first_mismatch(&expected) {
            return Err(PolynomialMismatch { i, row, col, got: u_i[(row, col)], expected: expected[(row, col)] });
        }
        if i >= 1 {
            let next = &(a * &cur) - &prev.scaled(ia.b(i - 1) * ia.c(i));
            prev = core::mem::replace(&mut cur, next);
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate_bipartite_double, generate_hypercube, generate_petersen};
    use crate::rational::ratio;

    #[test]
    fn low_degree_polynomials() {
        let s = Scheme::certify(generate_hypercube(4).unwrap()).unwrap();
        let v = v_polynomials(s.ia());
        assert_eq!(v[0], vec![int(1)]);
        assert_eq!(v[1], vec![int(0), int(1)]);
        assert_eq!(v[2], vec![int(-2), int(0), ratio(1, 2)]);
        assert_eq!(v.len(), 5);
    }

    #[test]
    fn distance_matrices_are_polynomials_in_a() {
        for g in [generate_hypercube(4).unwrap(), generate_bipartite_double(&generate_petersen()).unwrap()] {
            let s = Scheme::certify(g).unwrap();
            assert_eq!(check_ai_eq_vi_of_a(&s), Ok(()));
        }
    }
}
