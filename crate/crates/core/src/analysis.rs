//! Whole-graph pipeline: global fits, per-base-vertex module analysis and
//! the comparison of every verdict, with each failed check recorded as a
//! discrepancy.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use num_traits::Zero;

use crate::characterization::{
    closed_form_alpha_beta, condition_i, condition_ii, three_scalar_fit, vector_form_check, w_inner_products_check,
    AffineFit, ConditionI, ConditionII, FitKind, LemmaCheck, ThreeScalarFit, VectorFormCheck, VertexSummary,
};
use crate::drg::Scheme;
use crate::linalg::Tolerance;
use crate::oracle::{
    census_key, check_alpha_zero_branch, check_distance_word_expansions, check_entry_lemmas, check_matrix_dependencies,
    check_walk_counts, count_vs_matrix_crosscheck, generic_decompose, AlphaZeroBranch, CensusEntry,
    IdentityCheckResult,
};
use crate::rational::{int, Rational};
use crate::terwilliger::{
    build_context, check_ai_eq_vi_of_a, delta, endpoint1_space, endpoint2_modules, local_spectrum,
    max_cross_class_overlap, primary_module, psi, IsoClass, NumericCheck, PhiOmegaSequences, Psi, TModuleRecord,
};

/// Number of seeds the generic decomposition is run with.
pub const ORACLE_SEEDS: u64 = 3;
/// Relative tolerance for the realized-module numerical checks.
pub const RELATIVE_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum CheckLevel {
    All,
    /// Skips the generic decomposition and the walk enumeration.
    Fast,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnalysisConfig {
    pub tol: Tolerance,
    pub seed: u64,
    pub checks: CheckLevel,
}

impl Default for AnalysisConfig {
    fn default() -> Self {
        AnalysisConfig { tol: Tolerance::default(), seed: 0, checks: CheckLevel::All }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Discrepancy {
    pub check: String,
    pub vertex: Option<usize>,
    pub detail: String,
}

fn discrepancy(check: &str, vertex: Option<usize>, detail: String) -> Discrepancy {
    Discrepancy { check: check.to_string(), vertex, detail }
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct LevelRational {
    pub i: usize,
    #[cfg_attr(feature = "serde", serde(with = "crate::rational::serde_rational"))]
    pub value: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct LevelScalarsReport {
    pub i: usize,
    #[cfg_attr(feature = "serde", serde(with = "crate::rational::serde_rational::option_pair"))]
    pub closed_form: Option<(Rational, Rational)>,
    /// Scalars used downstream (unique fit, or canonical family member).
    #[cfg_attr(feature = "serde", serde(with = "crate::rational::serde_rational::option_pair"))]
    pub representative: Option<(Rational, Rational)>,
    /// Every scalar pair the matrix dependencies were checked with.
    #[cfg_attr(feature = "serde", serde(skip))]
    pub checked: Vec<(Rational, Rational)>,
}

/// Data shared by every base vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct GlobalPrep {
    pub deltas: Vec<LevelRational>,
    pub condition_i: ConditionI,
    pub scalars: Vec<LevelScalarsReport>,
    pub three_scalar: Vec<ThreeScalarFit>,
}

pub fn prepare(scheme: &Scheme) -> GlobalPrep {
    let ia = scheme.ia();
    let d = scheme.diameter();
    let deltas = (2..d).map(|i| LevelRational { i, value: delta(ia, i).expect("level in range") }).collect();
    let cond = condition_i(scheme);
    let scalars = cond
        .fits
        .iter()
        .map(|fit| {
            let closed_form = closed_form_alpha_beta(ia, fit.i).ok();
            let representative = fit.representative(closed_form);
            let mut checked: Vec<(Rational, Rational)> = representative.into_iter().collect();
            if let FitKind::Family = fit.kind {
                let (g1, g2) = fit.points[0];
                if g1 != 0 {
                    checked.push((int(0), Rational::new(g2, g1)));
                }
            }
            checked.dedup();
            LevelScalarsReport { i: fit.i, closed_form, representative, checked }
        })
        .collect();
    let three_scalar = (2..=d.saturating_sub(2))
        .map(|i| {
            let samples = crate::characterization::collect_triples(scheme.graph(), scheme.distances(), i);
            three_scalar_fit(i, &samples)
        })
        .collect();
    GlobalPrep { deltas, condition_i: cond, scalars, three_scalar }
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ModuleSummary {
    pub endpoint: usize,
    pub diameter: usize,
    pub dim: usize,
    pub thin: bool,
    pub local_eigenvalue: Option<f64>,
    pub iso_class: IsoClass,
}

impl From<&TModuleRecord> for ModuleSummary {
    fn from(r: &TModuleRecord) -> Self {
        ModuleSummary {
            endpoint: r.endpoint,
            diameter: r.diameter,
            dim: r.dim(),
            thin: r.thin,
            local_eigenvalue: r.local_eigenvalue,
            iso_class: r.iso_class,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct RecurrenceReport {
    pub sequences: PhiOmegaSequences,
    pub psi: Psi,
    /// Some thin module realizes this local eigenvalue.
    pub realized: bool,
    pub omega_positive: bool,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct OracleReport {
    pub seeds: Vec<u64>,
    pub total_dim: usize,
    pub certified: bool,
    pub seed_invariant: bool,
    /// Endpoint ≤ 2 part of the census equals the structured one.
    pub matches_structured: bool,
    pub census: Vec<CensusEntry>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct LocalSpectrumReport {
    /// `(value, multiplicity)`, descending.
    pub full: Vec<(f64, usize)>,
    pub phi2: Vec<(f64, usize)>,
    pub dim_u: usize,
    pub u_trivial: bool,
    pub grouping_threshold: f64,
    pub eta1_is_p222: bool,
    pub b3_minus_one_multiplicity: usize,
    pub union_consistent: bool,
    pub eigenvalue_map_error: f64,
    pub lower_residual: f64,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct VertexAnalysis {
    pub x: usize,
    pub spectrum: LocalSpectrumReport,
    pub modules: Vec<ModuleSummary>,
    pub summary: VertexSummary,
    pub recurrences: Vec<RecurrenceReport>,
    pub cross_class_overlap: f64,
    pub oracle: Option<OracleReport>,
    #[cfg_attr(feature = "serde", serde(skip))]
    pub identities: Vec<IdentityCheckResult>,
    #[cfg_attr(feature = "serde", serde(skip))]
    pub module_checks: Vec<NumericCheck>,
    pub discrepancies: Vec<Discrepancy>,
}

/// Everything computed at one base vertex. Errors from the structured
/// construction are returned as text; they signal a contradiction with a
/// result the pipeline relies on.
pub fn analyze_vertex(
    scheme: &Scheme,
    x: usize,
    prep: &GlobalPrep,
    config: &AnalysisConfig,
) -> Result<VertexAnalysis, String> {
    let tol = config.tol;
    let ia = scheme.ia();
    let d = scheme.diameter();
    let ctx = build_context(scheme, x).map_err(|e| e.to_string())?;
    let primary = primary_module(&ctx, tol.tol).map_err(|e| e.to_string())?;
    let e1 = endpoint1_space(&ctx, tol.tol).map_err(|e| e.to_string())?;
    let ls = local_spectrum(&ctx, &primary, &e1, tol).map_err(|e| e.to_string())?;
    let census = endpoint2_modules(&ctx, &ls, tol);
    let mut disc = Vec::new();
    let here = Some(x);

    if !ls.eta1_is_p222 {
        disc.push(discrepancy(
            "local spectrum",
            here,
            format!("largest local eigenvalue {:?} != p2_22", ls.eta_all.first()),
        ));
    }
    if ls.b3_minus_one_multiplicity < ia.valency() as usize - 1 {
        disc.push(discrepancy("local spectrum", here, format!("b3-1 multiplicity {}", ls.b3_minus_one_multiplicity)));
    }
    if !ls.union_consistent {
        disc.push(discrepancy("local spectrum", here, "full spectrum != {p2_22} + {b3-1}^(k-1) + Phi2".to_string()));
    }
    if census.eigenvalue_map_error > RELATIVE_TOL || census.lower_residual > RELATIVE_TOL {
        disc.push(discrepancy(
            "LR eigenvalue map",
            here,
            format!("relative error {:e}, lower residual {:e}", census.eigenvalue_map_error, census.lower_residual),
        ));
    }
    for c in census.checks.iter().filter(|c| !c.passed) {
        disc.push(discrepancy(
            "thin module identity",
            here,
            format!("{} at level {}: {:e}", c.name, c.level, c.max_error),
        ));
    }
    for r in &census.records {
        if !(d.saturating_sub(4)..=d - 2).contains(&r.diameter) {
            disc.push(discrepancy("endpoint-2 diameter", here, format!("thin module of diameter {}", r.diameter)));
        }
    }

    let recurrences: Vec<RecurrenceReport> = census
        .recurrences
        .iter()
        .enumerate()
        .map(|(class, seq)| {
            let realized = census.records.iter().any(|r| r.iso_class == IsoClass::LocalEigenvalue(class));
            let omega_positive = seq.omega_positive(d, tol.tol);
            RecurrenceReport { psi: psi(ia, seq.eta), sequences: seq.clone(), realized, omega_positive }
        })
        .collect();
    for r in recurrences.iter().filter(|r| r.realized && !r.omega_positive) {
        disc.push(discrepancy(
            "omega positivity",
            here,
            format!("eta = {}: omega = {:?}", r.sequences.eta, r.sequences.omega),
        ));
    }

    let mut all_records: Vec<&TModuleRecord> = Vec::new();
    all_records.push(&primary);
    all_records.extend(&e1.records);
    all_records.extend(&census.records);
    let overlap = max_cross_class_overlap(&all_records);
    if overlap > RELATIVE_TOL {
        disc.push(discrepancy("orthogonality", here, format!("nonisomorphic modules overlap {overlap:e}")));
    }

    let mut identities = check_entry_lemmas(&ctx);
    identities.extend(check_distance_word_expansions(&ctx));
    if config.checks == CheckLevel::All {
        identities.extend(check_walk_counts(&ctx));
    }
    for s in &prep.scalars {
        for &(alpha, beta) in &s.checked {
            identities.extend(check_matrix_dependencies(&ctx, s.i, alpha, beta));
        }
    }
    for r in identities.iter().filter(|r| !r.passed()) {
        disc.push(discrepancy("identity", here, format!("{} at level {}: {:?}", r.lemma, r.level, r.first_failure)));
    }

    let oracle = (config.checks == CheckLevel::All).then(|| {
        let structured: Result<Vec<CensusEntry>, _> = all_records.iter().map(|r| census_key(&ctx, r, tol)).collect();
        run_oracle(&ctx, config, structured.ok(), census.all_thin() && census.exhausted)
    });
    if let Some(o) = &oracle {
        if let Some(e) = &o.error {
            disc.push(discrepancy("generic decomposition", here, e.clone()));
        } else {
            if !o.certified || o.total_dim != scheme.vertex_count() {
                disc.push(discrepancy(
                    "generic decomposition",
                    here,
                    format!("certified {} dim {}", o.certified, o.total_dim),
                ));
            }
            if !o.seed_invariant {
                disc.push(discrepancy("generic decomposition", here, "census depends on the seed".to_string()));
            }
            if !o.matches_structured {
                disc.push(discrepancy("oracle vs structured", here, "endpoint <= 2 census differs".to_string()));
            }
        }
    }

    Ok(VertexAnalysis {
        x,
        spectrum: LocalSpectrumReport {
            full: ls.full.clone(),
            phi2: ls.phi2_values(),
            dim_u: ls.u.dim(),
            u_trivial: ls.u_is_trivial(),
            grouping_threshold: ls.grouping_threshold,
            eta1_is_p222: ls.eta1_is_p222,
            b3_minus_one_multiplicity: ls.b3_minus_one_multiplicity,
            union_consistent: ls.union_consistent,
            eigenvalue_map_error: census.eigenvalue_map_error,
            lower_residual: census.lower_residual,
        },
        modules: all_records.iter().map(|r| ModuleSummary::from(*r)).collect(),
        summary: VertexSummary::from_census(x, &ls, &census),
        recurrences,
        cross_class_overlap: overlap,
        oracle,
        identities,
        module_checks: census.checks,
        discrepancies: disc,
    })
}

fn run_oracle(
    ctx: &crate::terwilliger::TContext<'_>,
    config: &AnalysisConfig,
    structured: Option<Vec<CensusEntry>>,
    structured_complete: bool,
) -> OracleReport {
    let seeds: Vec<u64> = (0..ORACLE_SEEDS).map(|s| config.seed.wrapping_add(s)).collect();
    let mut report = OracleReport {
        seeds: seeds.clone(),
        total_dim: 0,
        certified: true,
        seed_invariant: true,
        matches_structured: false,
        census: Vec::new(),
        error: None,
    };
    for (t, &seed) in seeds.iter().enumerate() {
        match generic_decompose(ctx, seed, config.tol) {
            Ok(dec) => {
                report.certified &= dec.certified;
                if t == 0 {
                    report.total_dim = dec.total_dim;
                    report.census = dec.census;
                } else {
                    report.seed_invariant &=
                        CensusEntry::same_multiset(&report.census, &dec.census, config.tol.grouping);
                }
            }
            Err(e) => {
                report.error = Some(format!("seed {seed}: {e}"));
                return report;
            }
        }
    }
    let low: Vec<CensusEntry> = report.census.iter().filter(|c| c.endpoint <= 2).cloned().collect();
    report.matches_structured = match structured {
        Some(s) if structured_complete => CensusEntry::same_multiset(&low, &s, config.tol.grouping),
        // Non-thin endpoint-2 seeds: only endpoints 0 and 1 are comparable.
        Some(s) => {
            let a: Vec<CensusEntry> = low.iter().filter(|c| c.endpoint < 2).cloned().collect();
            let b: Vec<CensusEntry> = s.into_iter().filter(|c| c.endpoint < 2).collect();
            CensusEntry::same_multiset(&a, &b, config.tol.grouping)
        }
        None => false,
    };
    report
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct DeltaPhiCheck {
    pub x: usize,
    pub delta2_zero: bool,
    pub phi2_at_most_one: bool,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct GraphAnalysis {
    pub deltas: Vec<LevelRational>,
    pub condition_i: ConditionI,
    pub condition_ii: ConditionII,
    pub equivalence_holds: bool,
    pub scalars: Vec<LevelScalarsReport>,
    pub three_scalar: Vec<ThreeScalarFit>,
    pub delta_phi: Vec<DeltaPhiCheck>,
    pub alpha_zero_branch: AlphaZeroBranch,
    pub lemma_checks: Vec<LemmaCheck>,
    pub vector_form: Vec<VectorFormCheck>,
    pub polynomial_check: Option<String>,
    pub product_checks: Vec<IdentityCheckResult>,
    /// Identity results merged over base vertices.
    pub identity_summary: Vec<IdentityCheckResult>,
    pub module_check_summary: Vec<NumericCheck>,
    pub vertices: Vec<VertexAnalysis>,
    pub discrepancies: Vec<Discrepancy>,
}

/// Runs the per-vertex analyses sequentially and combines them.
pub fn analyze(scheme: &Scheme, base_vertices: &[usize], config: &AnalysisConfig) -> GraphAnalysis {
    let prep = prepare(scheme);
    let outcomes = base_vertices.iter().map(|&x| (x, analyze_vertex(scheme, x, &prep, config))).collect();
    finish(scheme, prep, outcomes, config)
}

/// Global checks and the comparison of both conditions.
pub fn finish(
    scheme: &Scheme,
    prep: GlobalPrep,
    outcomes: Vec<(usize, Result<VertexAnalysis, String>)>,
    config: &AnalysisConfig,
) -> GraphAnalysis {
    let ia = scheme.ia();
    let d = scheme.diameter();
    let mut disc = Vec::new();
    let mut vertices = Vec::new();
    for (x, o) in outcomes {
        match o {
            Ok(v) => vertices.push(v),
            Err(e) => disc.push(discrepancy("structured decomposition", Some(x), e)),
        }
    }
    vertices.sort_by_key(|v| v.x);
    for v in &vertices {
        disc.extend(v.discrepancies.iter().cloned());
    }
    let evaluated_all = disc.iter().all(|d| d.check != "structured decomposition");
    let mut summaries: Vec<VertexSummary> = vertices.iter().map(|v| v.summary).collect();
    if !evaluated_all {
        // A vertex whose decomposition failed cannot satisfy condition (ii).
        summaries.push(VertexSummary {
            x: usize::MAX,
            classes: 0,
            all_thin: false,
            exhausted: false,
            u_trivial: false,
        });
    }
    let mut cond_ii = condition_ii(summaries, scheme.vertex_count());
    cond_ii.vertices.retain(|v| v.x != usize::MAX);
    let cond_i = prep.condition_i.clone();

    let equivalence_holds = cond_i.holds == cond_ii.holds;
    if !equivalence_holds {
        disc.push(discrepancy(
            "equivalence",
            None,
            format!("condition (i) = {}, condition (ii) = {}", cond_i.holds, cond_ii.holds),
        ));
    }

    for dl in prep.deltas.iter().filter(|dl| dl.value < Rational::zero()) {
        disc.push(discrepancy("delta sign", None, format!("Delta_{} = {}", dl.i, dl.value)));
    }
    let delta2_zero = cond_i.delta2.is_zero();
    let delta_phi: Vec<DeltaPhiCheck> = vertices
        .iter()
        .map(|v| DeltaPhiCheck { x: v.x, delta2_zero, phi2_at_most_one: v.spectrum.phi2.len() <= 1 })
        .collect();
    for c in delta_phi.iter().filter(|c| c.delta2_zero != c.phi2_at_most_one) {
        disc.push(discrepancy(
            "Delta_2 vs |Phi_2|",
            Some(c.x),
            format!("Delta_2 = 0: {}, |Phi_2| <= 1: {}", c.delta2_zero, c.phi2_at_most_one),
        ));
    }

    check_fit_agreement(&cond_i.fits, &prep.three_scalar, &mut disc);
    if cond_ii.holds {
        for t in prep.three_scalar.iter().filter(|t| !t.gamma_nonzero) {
            disc.push(discrepancy(
                "gamma nonzero",
                None,
                format!("level {}: solution space of dimension {}", t.i, t.dimension),
            ));
        }
    }
    if cond_i.holds && cond_ii.holds {
        for s in &prep.scalars {
            let fit = cond_i.fit(s.i).expect("fit per level");
            match (s.closed_form, &fit.kind) {
                (None, _) => {
                    disc.push(discrepancy("closed form", None, format!("Delta_{} = 0 under both conditions", s.i)))
                }
                (Some((a, b)), FitKind::Unique { alpha, beta }) if (a, b) != (*alpha, *beta) => disc.push(discrepancy(
                    "closed form",
                    None,
                    format!("level {}: fit ({alpha}, {beta}) vs closed form ({a}, {b})", s.i),
                )),
                (Some((a, b)), FitKind::Family) if !fit.admits(a, b) => disc.push(discrepancy(
                    "closed form",
                    None,
                    format!("level {}: closed form ({a}, {b}) not in family", s.i),
                )),
                _ => {}
            }
        }
    }

    let reps: Vec<Option<(Rational, Rational)>> = prep.scalars.iter().map(|s| s.representative).collect();
    let phi2_values: Vec<f64> = vertices.iter().flat_map(|v| v.spectrum.phi2.iter().map(|p| p.0)).collect();
    let max_phi2 = vertices.iter().map(|v| v.spectrum.phi2.len()).max().unwrap_or(0);
    let branch = check_alpha_zero_branch(ia, &cond_i.fits, &reps, cond_i.delta2, &phi2_values, max_phi2, RELATIVE_TOL);
    if !branch.consistent() {
        disc.push(discrepancy("alpha = 0 branch", None, format!("{branch:?}")));
    }
    if !delta2_zero && cond_i.holds {
        if let AlphaZeroBranch::NotExercised { all_alpha_nonzero: false } = branch {
            disc.push(discrepancy("alpha nonzero", None, "some alpha_i = 0 with Delta_2 > 0".to_string()));
        }
    }

    let lemma_checks = w_inner_products_check(scheme);
    for c in lemma_checks.iter().filter(|c| !c.passed()) {
        disc.push(discrepancy(
            "inner product lemma",
            None,
            format!("{} at level {}: {:?}", c.lemma, c.level, c.first_failure),
        ));
    }
    let fits_with_scalars: Vec<(AffineFit, Option<(Rational, Rational)>)> =
        cond_i.fits.iter().cloned().zip(reps.iter().copied()).collect();
    let vector_form = vector_form_check(scheme, &fits_with_scalars);
    for c in vector_form.iter().filter(|c| c.failed()) {
        disc.push(discrepancy("vector form", None, format!("{c:?}")));
    }
    let polynomial_check = check_ai_eq_vi_of_a(scheme).err().map(|e| e.to_string());
    if let Some(e) = &polynomial_check {
        disc.push(discrepancy("distance polynomials", None, e.clone()));
    }
    let product_checks = count_vs_matrix_crosscheck(scheme);
    for r in product_checks.iter().filter(|r| !r.passed()) {
        disc.push(discrepancy("A_i A_j products", None, format!("index {}: {:?}", r.level, r.first_failure)));
    }

    let identity_summary = merge_identities(vertices.iter().flat_map(|v| v.identities.iter()));
    let module_check_summary = merge_numeric(vertices.iter().flat_map(|v| v.module_checks.iter()));
    let _ = (d, config);

    GraphAnalysis {
        deltas: prep.deltas,
        condition_i: cond_i,
        condition_ii: cond_ii,
        equivalence_holds,
        scalars: prep.scalars,
        three_scalar: prep.three_scalar,
        delta_phi,
        alpha_zero_branch: branch,
        lemma_checks,
        vector_form,
        polynomial_check,
        product_checks,
        identity_summary,
        module_check_summary,
        vertices,
        discrepancies: disc,
    }
}

/// Unique affine fits and γ-normalized three-scalar rays describe the same
/// solutions; degenerate cases have the matching solution dimension.
fn check_fit_agreement(fits: &[AffineFit], three: &[ThreeScalarFit], disc: &mut Vec<Discrepancy>) {
    for (f, t) in fits.iter().zip(three) {
        let ok = match &f.kind {
            FitKind::Unique { alpha, beta } => t.normalized == Some((*alpha, *beta)),
            FitKind::Family => t.dimension == 2,
            FitKind::Vacuous => t.dimension == 3,
            FitKind::None => t.dimension == 0 || (t.dimension == 1 && !t.gamma_nonzero),
        };
        if !ok {
            disc.push(discrepancy("fit agreement", None, format!("level {}: {:?} vs {:?}", f.i, f.kind, t.normalized)));
        }
    }
}

fn merge_identities<'a>(items: impl Iterator<Item = &'a IdentityCheckResult>) -> Vec<IdentityCheckResult> {
    let mut out: Vec<IdentityCheckResult> = Vec::new();
    for r in items {
        match out.iter_mut().find(|o| o.lemma == r.lemma && o.level == r.level) {
            Some(o) => o.absorb(r),
            None => out.push(r.clone()),
        }
    }
    out.sort_by(|a, b| a.lemma.cmp(b.lemma).then(a.level.cmp(&b.level)));
    out
}

fn merge_numeric<'a>(items: impl Iterator<Item = &'a NumericCheck>) -> Vec<NumericCheck> {
    let mut out: Vec<NumericCheck> = Vec::new();
    for c in items {
        match out.iter_mut().find(|o| o.name == c.name && o.level == c.level) {
            Some(o) => {
                o.max_error = o.max_error.max(c.max_error);
                o.passed &= c.passed;
            }
            None => out.push(c.clone()),
        }
    }
    out.sort_by(|a, b| a.name.cmp(b.name).then(a.level.cmp(&b.level)));
    out
}
