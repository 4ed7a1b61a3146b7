use alloc::vec::Vec;

use super::fit::AffineFit;
use crate::drg::{distance_partition, DistancePartition, Scheme};
use crate::rational::{int, Rational};

/// `w_ij(x, y)` as the cells `D^i_j`, plus the entries of `w⁺_ii` and `w⁻_ii`
/// aligned with `D^i_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WVectors {
    pub x: usize,
    pub y: usize,
    pub partition: DistancePartition,
    /// `plus[i][t] = |Γ_{i−1}(z) ∩ D^1_1|` for the `t`-th `z ∈ D^i_i`.
    pub plus: Vec<Vec<i64>>,
    /// `minus[i][t] = |Γ(z) ∩ D^{i−1}_{i−1}|`.
    pub minus: Vec<Vec<i64>>,
}

impl WVectors {
    /// `‖w_ij‖²`
    pub fn norm_sq(&self, i: usize, j: usize) -> i64 {
        self.partition.len(i, j) as i64
    }

    pub fn plus_dot_w(&self, i: usize) -> i64 {
        self.plus[i].iter().sum()
    }

    pub fn plus_norm_sq(&self, i: usize) -> i64 {
        self.plus[i].iter().map(|v| v * v).sum()
    }

    pub fn minus_dot_w(&self, i: usize) -> i64 {
        self.minus[i].iter().sum()
    }

    pub fn minus_dot_plus(&self, i: usize) -> i64 {
        self.minus[i].iter().zip(&self.plus[i]).map(|(a, b)| a * b).sum()
    }
}

/// Builds the vectors for `∂(x, y) = 2`; `None` otherwise.
pub fn w_vectors(scheme: &Scheme, x: usize, y: usize) -> Option<WVectors> {
    let partition = distance_partition(scheme.distances(), x, y).ok()?;
    let g = scheme.graph();
    let d = scheme.diameter();
    let d11 = partition.cell(1, 1).to_vec();
    let mut plus = Vec::with_capacity(d + 1);
    let mut minus = Vec::with_capacity(d + 1);
    for i in 0..=d {
        let cell = partition.cell(i, i);
        if i == 0 {
            plus.push(alloc::vec![0; cell.len()]);
            minus.push(alloc::vec![0; cell.len()]);
            continue;
        }
        plus.push(cell.iter().map(|&z| d11.iter().filter(|&&v| scheme.dist(z, v) == i - 1).count() as i64).collect());
        minus.push(
            cell.iter()
                .map(|&z| {
                    g.neighbors(z).iter().filter(|&&v| scheme.dist(x, v) == i - 1 && scheme.dist(y, v) == i - 1).count()
                        as i64
                })
                .collect(),
        );
    }
    Some(WVectors { x, y, partition, plus, minus })
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct LemmaFailure {
    pub x: usize,
    pub y: usize,
    #[cfg_attr(feature = "serde", serde(with = "crate::rational::serde_rational"))]
    pub counted: Rational,
    #[cfg_attr(feature = "serde", serde(with = "crate::rational::serde_rational"))]
    pub formula: Rational,
}

/// One identity at one level, checked over every pair at distance 2.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct LemmaCheck {
    pub lemma: &'static str,
    pub level: usize,
    pub pairs: usize,
    pub failures: usize,
    pub first_failure: Option<LemmaFailure>,
}

impl LemmaCheck {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

struct Checks {
    list: Vec<LemmaCheck>,
}

impl Checks {
    fn record(&mut self, lemma: &'static str, level: usize, x: usize, y: usize, counted: Rational, formula: Rational) {
        let pos = match self.list.iter().position(|c| c.lemma == lemma && c.level == level) {
            Some(p) => p,
            None => {
                self.list.push(LemmaCheck { lemma, level, pairs: 0, failures: 0, first_failure: None });
                self.list.len() - 1
            }
        };
        let c = &mut self.list[pos];
        c.pairs += 1;
        if counted != formula {
            c.failures += 1;
            c.first_failure.get_or_insert(LemmaFailure { x, y, counted, formula });
        }
    }
}

/// Counted inner products of the `w` vectors against their closed formulas,
/// plus the definitional identities, for every ordered pair at distance 2.
pub fn w_inner_products_check(scheme: &Scheme) -> Vec<LemmaCheck> {
    let ia = scheme.ia();
    let d = scheme.diameter();
    let (k, c, b, ki) = (ia.valency(), |j| ia.c(j), |j| ia.b(j), |j| ia.k(j));
    let kk1 = k * (k - 1);
    let k2 = ki(2);
    let n = scheme.vertex_count();
    let mut checks = Checks { list: Vec::new() };
    for x in 0..n {
        for y in (0..n).filter(|&y| scheme.dist(x, y) == 2) {
            let w = w_vectors(scheme, x, y).expect("distance 2");
            for i in 0..=d {
                let off = (0..=d).filter(|&j| w.norm_sq(i, j) != ia.p(2, i, j)).count();
                checks.record("|w_ij|^2 = p2_ij for all j", i, x, y, int(off as i64), int(0));
            }
            for i in 2..=d {
                let f = Rational::new(ki(i) * c(i) * c(i - 1), kk1);
                checks.record("p2_{i-2,i}", i, x, y, int(w.norm_sq(i - 2, i)), f);
                checks.record("p2_{i,i-2}", i, x, y, int(w.norm_sq(i, i - 2)), f);
            }
            for i in 1..d {
                let f = Rational::new(ki(i) * (c(i) * (b(i - 1) - 1) + b(i) * (c(i + 1) - 1)), kk1);
                checks.record("p2_ii", i, x, y, int(w.norm_sq(i, i)), f);
            }
            checks.record("p2_DD", d, x, y, int(w.norm_sq(d, d)), Rational::new(ki(d) * (b(d - 1) - 1), k - 1));
            for i in 2..d {
                let ci = c(i);
                checks.record("<w+,w>", i, x, y, int(w.plus_dot_w(i)), Rational::new(ki(i) * ci * (b(i - 1) - 1), k2));
                checks.record(
                    "|w+|^2",
                    i,
                    x,
                    y,
                    int(w.plus_norm_sq(i)),
                    Rational::new(ki(i) * ci * (c(2) * (b(i - 1) - 1) - (c(2) - 1) * b(i)), k2),
                );
                checks.record(
                    "<w-,w>",
                    i,
                    x,
                    y,
                    int(w.minus_dot_w(i)),
                    Rational::new(ci * ki(i) * (ci * b(i - 1) + c(i - 1) * b(i) - k), kk1),
                );
                checks.record(
                    "<w-,w+>",
                    i,
                    x,
                    y,
                    int(w.minus_dot_plus(i)),
                    Rational::new(ki(i) * ci * (b(i) * (b(i) - b(i - 1)) + ci * (b(i - 1) - 1)), k2),
                );
            }
            let mismatches =
                |a: &[i64], f: &dyn Fn(usize) -> i64| a.iter().enumerate().filter(|&(t, &v)| v != f(t)).count() as i64;
            checks.record("w11+ = w11", 1, x, y, int(mismatches(&w.plus[1], &|_| 1)), int(0));
            checks.record("w11- = 0", 1, x, y, int(mismatches(&w.minus[1], &|_| 0)), int(0));
            checks.record("wDD+ = c2 wDD", d, x, y, int(mismatches(&w.plus[d], &|_| c(2))), int(0));
            checks.record("wDD- = k wDD", d, x, y, int(mismatches(&w.minus[d], &|_| k)), int(0));
            checks.record("w22+ = w22-", 2, x, y, int(mismatches(&w.plus[2], &|t| w.minus[2][t])), int(0));
        }
    }
    checks.list.sort_by(|a, b| a.lemma.cmp(b.lemma).then(a.level.cmp(&b.level)));
    checks.list
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(tag = "status", rename_all = "snake_case"))]
pub enum VectorFormCheck {
    Passed {
        level: usize,
        pairs: usize,
    },
    /// No scalars to test (the level has no valid fit).
    Skipped {
        level: usize,
    },
    Failed {
        level: usize,
        x: usize,
        y: usize,
        z: usize,
    },
}

impl VectorFormCheck {
    pub fn failed(&self) -> bool {
        matches!(self, VectorFormCheck::Failed { .. })
    }
}

/// `α_i w_ii + β_i w⁺_ii = w⁻_ii` for every pair at distance 2, using the
/// scalars each fit provides.
pub fn vector_form_check(scheme: &Scheme, fits: &[(AffineFit, Option<(Rational, Rational)>)]) -> Vec<VectorFormCheck> {
    let n = scheme.vertex_count();
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|x| (0..n).filter(move |&y| scheme.dist(x, y) == 2).map(move |y| (x, y))).collect();
    let ws: Vec<WVectors> = pairs.iter().map(|&(x, y)| w_vectors(scheme, x, y).expect("distance 2")).collect();
    fits.iter()
        .map(|(fit, scalars)| {
            let level = fit.i;
            let Some((alpha, beta)) = *scalars else {
                return VectorFormCheck::Skipped { level };
            };
            for w in &ws {
                let cell = w.partition.cell(level, level);
                for (t, &z) in cell.iter().enumerate() {
                    if alpha + beta * int(w.plus[level][t]) != int(w.minus[level][t]) {
                        return VectorFormCheck::Failed { level, x: w.x, y: w.y, z };
                    }
                }
            }
            VectorFormCheck::Passed { level, pairs: ws.len() }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characterization::fit::FitKind;
    use crate::graph::{generate_bipartite_double, generate_hypercube, generate_petersen};

    #[test]
    fn q4_lemmas_and_definitions() {
        let s = Scheme::certify(generate_hypercube(4).unwrap()).unwrap();
        let checks = w_inner_products_check(&s);
        assert!(checks.iter().all(LemmaCheck::passed), "{:?}", checks.iter().find(|c| !c.passed()));
        let dd = checks.iter().find(|c| c.lemma == "p2_DD").unwrap();
        assert_eq!(dd.pairs, 16 * 6);
        let w = w_vectors(&s, 0, 3).unwrap();
        assert_eq!(w.norm_sq(4, 4), 0);
        assert_eq!(w.norm_sq(2, 2), 4);
        assert!(w_vectors(&s, 0, 1).is_none());
    }

    #[test]
    fn desargues_lemmas_and_vector_form() {
        let s = Scheme::certify(generate_bipartite_double(&generate_petersen()).unwrap()).unwrap();
        assert!(w_inner_products_check(&s).iter().all(LemmaCheck::passed));
        let fit = |i, a, b| {
            (
                AffineFit { i, kind: FitKind::Unique { alpha: int(a), beta: int(b) }, points: Vec::new() },
                Some((int(a), int(b))),
            )
        };
        let out = vector_form_check(&s, &[fit(2, 0, 1), fit(3, 2, -1)]);
        assert!(out.iter().all(|c| matches!(c, VectorFormCheck::Passed { .. })), "{out:?}");
        let bad = vector_form_check(&s, &[fit(3, 1, 0)]);
        assert!(bad[0].failed());
    }
}
