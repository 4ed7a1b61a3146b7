use alloc::vec;
use alloc::vec::Vec;

use crate::drg::Scheme;
use crate::linalg::IntMatrix;
use crate::rational::{int, Rational};
use crate::terwilliger::TContext;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct EntryFailure {
    pub z: usize,
    pub y: usize,
    #[cfg_attr(feature = "serde", serde(with = "crate::rational::serde_rational"))]
    pub got: Rational,
    #[cfg_attr(feature = "serde", serde(with = "crate::rational::serde_rational"))]
    pub expected: Rational,
}

/// Outcome of an entrywise identity at one level.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct IdentityCheckResult {
    pub lemma: &'static str,
    pub level: usize,
    pub entries: usize,
    pub failures: usize,
    pub first_failure: Option<EntryFailure>,
}

impl IdentityCheckResult {
    fn new(lemma: &'static str, level: usize) -> Self {
        IdentityCheckResult { lemma, level, entries: 0, failures: 0, first_failure: None }
    }

    fn compare(&mut self, z: usize, y: usize, got: Rational, expected: Rational) {
        self.entries += 1;
        if got != expected {
            self.failures += 1;
            self.first_failure.get_or_insert(EntryFailure { z, y, got, expected });
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    /// Merges a result for the same identity from another base vertex.
    pub fn absorb(&mut self, other: &IdentityCheckResult) {
        self.entries += other.entries;
        self.failures += other.failures;
        if self.first_failure.is_none() {
            self.first_failure = other.first_failure;
        }
    }
}

/// Products of `L` and `R` applied to `E*_2`, as `n × k_2` columns.
struct Words<'c, 'a> {
    ctx: &'c TContext<'a>,
    e2: IntMatrix,
}

impl<'c, 'a> Words<'c, 'a> {
    fn new(ctx: &'c TContext<'a>) -> Self {
        Words { ctx, e2: ctx.second_subconstituent_block() }
    }

    fn r_pow(&self, m: usize) -> IntMatrix {
        self.ctx.raise_pow_block(&self.e2, m)
    }

    /// `R^a L R^b E*_2`
    fn rlr(&self, a: usize, b: usize) -> IntMatrix {
        self.ctx.raise_pow_block(&self.ctx.lower_block(&self.r_pow(b)), a)
    }
}

fn for_layer_entries(ctx: &TContext<'_>, i: usize, mut f: impl FnMut(usize, usize, usize)) {
    let cols = ctx.layer(2).to_vec();
    for &z in ctx.layer(i) {
        for (c, &y) in cols.iter().enumerate() {
            f(z, c, y);
        }
    }
}

/// Every `(z, y)` entry, `y ∈ Γ_2(x)`, `z ∈ Γ_i(x)`, of `LR^{i−1}`, `R^{i−1}L`
/// and `R^{i−2}` against the case formulas, for `2 ≤ i ≤ D−2`.
pub fn check_entry_lemmas(ctx: &TContext<'_>) -> Vec<IdentityCheckResult> {
    let scheme = ctx.scheme();
    let ia = scheme.ia();
    let g = scheme.graph();
    let x = ctx.base_vertex();
    let words = Words::new(ctx);
    let mut out = Vec::new();
    for i in 2..=ctx.diameter().saturating_sub(2) {
        let lr = words.rlr(0, i - 1);
        let rl = words.rlr(i - 1, 0);
        let r = words.r_pow(i - 2);
        let cp = ia.c_product(i - 1);
        let mut res = [
            IdentityCheckResult::new("(LR^{i-1})_zy", i),
            IdentityCheckResult::new("(R^{i-1}L)_zy", i),
            IdentityCheckResult::new("(R^{i-2})_zy", i),
        ];
        for_layer_entries(ctx, i, |z, c, y| {
            let d = scheme.dist(z, y);
            let g1 =
                g.neighbors(x).iter().filter(|&&w| g.is_adjacent(w, y) && scheme.dist(w, z) == i - 1).count() as i64;
            let g2 =
                g.neighbors(z).iter().filter(|&&w| scheme.dist(w, x) == i - 1 && scheme.dist(w, y) == i - 1).count()
                    as i64;
            let (e_lr, e_rl, e_r) = if d + 2 == i {
                (ia.b(i) * cp, ia.c(2) * cp, ia.c_product(i - 2))
            } else if d == i {
                ((ia.c(i) - g2) * cp, g1 * cp, 0)
            } else {
                (0, 0, 0)
            };
            res[0].compare(z, y, int(lr[(z, c)]), int(e_lr));
            res[1].compare(z, y, int(rl[(z, c)]), int(e_rl));
            res[2].compare(z, y, int(r[(z, c)]), int(e_r));
        });
        out.extend(res);
    }
    out
}

/// `(c_1⋯c_{i−2}) E*_iA_{i−2}E*_2 = E*_iR^{i−2}E*_2` and the expansion of
/// `(c_1⋯c_i) E*_iA_iE*_2` in words of `L` and `R`, for `2 ≤ i ≤ D`.
pub fn check_distance_word_expansions(ctx: &TContext<'_>) -> Vec<IdentityCheckResult> {
    let ia = ctx.scheme().ia();
    let words = Words::new(ctx);
    let mut out = Vec::new();
    for i in 2..=ctx.diameter() {
        let lhs1 = ctx.dual_distance_block(i, i - 2).scaled(ia.c_product(i - 2));
        let rhs1 = words.r_pow(i - 2);
        let lhs2 = ctx.dual_distance_block(i, i).scaled(ia.c_product(i));
        let mut rhs2 = IntMatrix::zeros(lhs2.rows(), lhs2.cols());
        for a in 0..i {
            rhs2 = &rhs2 + &words.rlr(a, i - 1 - a);
        }
        let s: i64 = (1..i).map(|j| ia.b(j - 1) * ia.c(j)).sum();
        rhs2 = &rhs2 - &rhs1.scaled(s);
        let mut r1 = IdentityCheckResult::new("E*_i A_{i-2} E*_2 via R^{i-2}", i);
        let mut r2 = IdentityCheckResult::new("E*_i A_i E*_2 via L,R words", i);
        for_layer_entries(ctx, i, |z, c, y| {
            r1.compare(z, y, int(lhs1[(z, c)]), int(rhs1[(z, c)]));
            r2.compare(z, y, int(lhs2[(z, c)]), int(rhs2[(z, c)]));
        });
        out.push(r1);
        out.push(r2);
    }
    out
}

/// Both matrix dependencies at level `i` for the given scalars.
pub fn check_matrix_dependencies(
    ctx: &TContext<'_>,
    i: usize,
    alpha: Rational,
    beta: Rational,
) -> [IdentityCheckResult; 2] {
    let ia = ctx.scheme().ia();
    let words = Words::new(ctx);
    let (c, b) = (|j| int(ia.c(j)), |j| int(ia.b(j)));
    let lr = words.rlr(0, i - 1);
    let rl = words.rlr(i - 1, 0);
    let r = words.r_pow(i - 2);
    let ai = ctx.dual_distance_block(i, i);
    let mut mixed = IntMatrix::zeros(lr.rows(), lr.cols());
    for a in 1..i {
        mixed = &mixed + &words.rlr(a, i - 1 - a);
    }
    let s: i64 = (1..i).map(|j| ia.b(j - 1) * ia.c(j)).sum();
    let cp = int(ia.c_product(i - 1));
    let k1 = cp * (c(i) - alpha);
    let k2 = c(i - 1) * (b(i) + beta * c(2));
    let t = c(i) * c(i - 1) * (beta * c(2) + b(i)) + (alpha - c(i)) * int(s);
    let mut r0 = IdentityCheckResult::new("LR^{i-1} via A_i, R^{i-1}L, R^{i-2}", i);
    let mut r1 = IdentityCheckResult::new("alpha LR^{i-1} via mixed words", i);
    for z in 0..lr.rows() {
        if ctx.layer_of(z) != i {
            continue;
        }
        for (col, &y) in ctx.layer(2).iter().enumerate() {
            let e = |m: &IntMatrix| int(m[(z, col)]);
            r0.compare(z, y, e(&lr), k1 * e(&ai) - beta * e(&rl) + k2 * e(&r));
            r1.compare(z, y, alpha * e(&lr), (c(i) - alpha) * e(&mixed) - c(i) * beta * e(&rl) + t * e(&r));
        }
    }
    [r0, r1]
}

/// Walk counts by explicit enumeration, compared with entries of `R^m`,
/// `R^mL` and `LR^m` on the columns of `Γ_2(x)`.
pub fn check_walk_counts(ctx: &TContext<'_>) -> Vec<IdentityCheckResult> {
    let d = ctx.diameter();
    let words = Words::new(ctx);
    let n = ctx.vertex_count();
    let mut out = Vec::new();
    for m in 1..d {
        let mut shapes: Vec<(&'static str, IntMatrix, Vec<usize>)> = Vec::new();
        if 2 + m <= d {
            shapes.push(("walks R^m", words.r_pow(m), (1..=m).map(|j| 2 + j).collect()));
            shapes.push(("walks LR^m", words.rlr(0, m), (1..=m).map(|j| 2 + j).chain([1 + m]).collect()));
        }
        if m < d {
            shapes.push(("walks R^mL", words.rlr(m, 0), core::iter::once(1).chain(2..=m + 1).collect()));
        }
        for (name, block, layers) in shapes {
            let mut res = IdentityCheckResult::new(name, m);
            for (col, &y) in ctx.layer(2).iter().enumerate() {
                let mut tally = vec![0i64; n];
                count_walks(ctx, y, &layers, &mut tally);
                for z in 0..n {
                    res.compare(z, y, int(block[(z, col)]), int(tally[z]));
                }
            }
            out.push(res);
        }
    }
    out
}

/// Depth-first enumeration of walks from `start` whose `j`-th step lands in
/// `Γ_{layers[j−1]}(x)`; increments `tally[end]` per walk.
fn count_walks(ctx: &TContext<'_>, start: usize, layers: &[usize], tally: &mut [i64]) {
    let g = ctx.scheme().graph();
    let mut stack = vec![(start, 0usize)];
    while let Some((v, depth)) = stack.pop() {
        if depth == layers.len() {
            tally[v] += 1;
            continue;
        }
        for &w in g.neighbors(v) {
            if ctx.layer_of(w) == layers[depth] {
                stack.push((w, depth + 1));
            }
        }
    }
}

/// `A_iA_j = Σ_h p^h_ij A_h` entrywise; one result per `(i, j)` with level
/// `i·(D+1) + j`.
pub fn count_vs_matrix_crosscheck(scheme: &Scheme) -> Vec<IdentityCheckResult> {
    let d = scheme.diameter();
    let ia = scheme.ia();
    let a = scheme.distance_matrices();
    let n = scheme.vertex_count();
    let mut out = Vec::new();
    for i in 0..=d {
        for j in i..=d {
            let prod = &a[i] * &a[j];
            let mut res = IdentityCheckResult::new("A_i A_j = sum_h p^h_ij A_h", i * (d + 1) + j);
            for u in 0..n {
                for v in 0..n {
                    let h = scheme.dist(u, v);
                    res.compare(v, u, int(prod[(u, v)]), int(ia.p(h, i, j)));
                }
            }
            out.push(res);
        }
    }
    out
}
