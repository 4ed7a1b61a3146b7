//! Exact rational arithmetic and small dense linear systems over `Q`.

use alloc::vec::Vec;
use num_traits::{One, Zero};

pub type Rational = num_rational::Ratio<i64>;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n)
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num, den)
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(rows: &mut [Vec<Rational>]) -> Vec<usize> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= inv;
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c];
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x -= f * *p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// Basis of `{v : M v = 0}` for an `r × cols` matrix `M`, one vector per free
/// column (that entry set to 1).
pub fn nullspace(rows: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = alloc::vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (row, &p) in m.iter().zip(&pivots) {
                v[p] = -row[f];
            }
            v
        })
        .collect()
}

/// Unique solution of a square system, or `None` when singular.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let n = a.len();
    let mut aug: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, &rhs)| {
            let mut r = row.clone();
            r.push(rhs);
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    Some(aug.iter().map(|r| r[n]).collect())
}

#[cfg(feature = "serde")]
pub mod serde_rational {
    //! Serializes rationals as `{"num": .., "den": ..}`.
    use super::Rational;
    use serde::ser::SerializeStruct;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Rational", 2)?;
        st.serialize_field("num", q.numer())?;
        st.serialize_field("den", q.denom())?;
        st.end()
    }

    pub mod option {
        use super::Rational;
        use serde::Serializer;

        pub fn serialize<S: Serializer>(q: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
            match q {
                Some(q) => super::serialize(q, s),
                None => s.serialize_none(),
            }
        }
    }

    pub mod option_pair {
        //! `Option<(α, β)>` as `{"alpha": .., "beta": ..}` or `null`.
        use super::Rational;
        use serde::Serializer;

        #[derive(serde::Serialize)]
        struct Pair<'a> {
            #[serde(with = "super")]
            alpha: &'a Rational,
            #[serde(with = "super")]
            beta: &'a Rational,
        }

        pub fn serialize<S: Serializer>(q: &Option<(Rational, Rational)>, s: S) -> Result<S::Ok, S::Error> {
            match q {
                Some((alpha, beta)) => s.serialize_some(&Pair { alpha, beta }),
                None => s.serialize_none(),
            }
        }
    }

    pub mod seq {
        use super::Rational;
        use serde::ser::SerializeSeq;
        use serde::Serializer;

        #[derive(serde::Serialize)]
        struct Wrapped<'a>(#[serde(with = "super")] &'a Rational);

        pub fn serialize<S: Serializer>(qs: &[Rational], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(qs.len()))?;
            for q in qs {
                seq.serialize_element(&Wrapped(q))?;
            }
            seq.end()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn nullspace_of_rank_one_row() {
        let rows = vec![vec![int(1), int(2), int(3)]];
        let ns = nullspace(&rows, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert_eq!(v[0] + int(2) * v[1] + int(3) * v[2], int(0));
        }
    }

    #[test]
    fn solves_two_by_two() {
        let a = vec![vec![int(1), int(1)], vec![int(1), int(-1)]];
        let x = solve(&a, &[int(3), int(1)]).unwrap();
        assert_eq!(x, vec![int(2), int(1)]);
        let singular = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        assert!(solve(&singular, &[int(1), int(2)]).is_none());
    }

    #[test]
    fn rank_counts_pivots() {
        let rows = vec![vec![ratio(1, 2), int(1)], vec![int(1), int(2)], vec![int(0), int(1)]];
        assert_eq!(rank(&rows), 2);
    }
}
