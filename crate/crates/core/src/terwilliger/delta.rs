use thiserror::Error;

use crate::drg::IntersectionArray;
use crate::rational::{int, ratio, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("index {i} outside {lo}..={hi}")]
pub struct DeltaIndexError {
    pub i: usize,
    pub lo: usize,
    pub hi: usize,
}

/// `p^i_{2i} = (c_i(b_{i−1} − 1) + b_i(c_{i+1} − 1)) / c_2` for `1 ≤ i ≤ D−1`.
pub fn p_i_2i(ia: &IntersectionArray, i: usize) -> Result<Rational, DeltaIndexError> {
    let d = ia.diameter();
    if i < 1 || i + 1 > d {
        return Err(DeltaIndexError { i, lo: 1, hi: d.saturating_sub(1) });
    }
    Ok(ratio(ia.c(i) * (ia.b(i - 1) - 1) + ia.b(i) * (ia.c(i + 1) - 1), ia.c(2)))
}

/// `Δ_i = (b_{i−1} − 1)(c_{i+1} − 1) − (c_2 − 1) p^i_{2i}` for `2 ≤ i ≤ D−1`.
pub fn delta(ia: &IntersectionArray, i: usize) -> Result<Rational, DeltaIndexError> {
    let d = ia.diameter();
    if i < 2 || i + 1 > d {
        return Err(DeltaIndexError { i, lo: 2, hi: d.saturating_sub(1) });
    }
    let p = p_i_2i(ia, i)?;
    Ok(int((ia.b(i - 1) - 1) * (ia.c(i + 1) - 1)) - int(ia.c(2) - 1) * p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drg::Scheme;
    use crate::graph::{generate_bipartite_double, generate_hypercube, generate_kneser, generate_petersen};

    #[test]
    fn corpus_deltas() {
        let q4 = Scheme::certify(generate_hypercube(4).unwrap()).unwrap();
        assert_eq!(delta(q4.ia(), 2), Ok(int(0)));
        assert!(delta(q4.ia(), 4).is_err());
        assert!(delta(q4.ia(), 1).is_err());
        let des = Scheme::certify(generate_bipartite_double(&generate_petersen()).unwrap()).unwrap();
        assert_eq!(delta(des.ia(), 2), Ok(int(1)));
        let odd = Scheme::certify(generate_bipartite_double(&generate_kneser(7, 3).unwrap()).unwrap()).unwrap();
        assert_eq!(delta(odd.ia(), 2), Ok(int(2)));
    }

    #[test]
    fn p_i_2i_matches_counted_tensor() {
        let odd = Scheme::certify(generate_bipartite_double(&generate_kneser(7, 3).unwrap()).unwrap()).unwrap();
        let ia = odd.ia();
        for i in 1..ia.diameter() {
            assert_eq!(p_i_2i(ia, i).unwrap(), int(ia.p(i, 2, i)), "i = {i}");
        }
    }
}
