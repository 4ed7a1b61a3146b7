//! Acceptance criteria 1-8 over the built-in corpus. Prints one line per
//! criterion and exits nonzero if any criterion fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use terwilliger::commands::cmd_verify_corpus;
use terwilliger::report::{CorpusEntry, ReportDocument};
use terwilliger::AnalysisOptions;
use terwilliger_core::analysis::{CheckLevel, GraphAnalysis};
use terwilliger_core::characterization::FitKind;
use terwilliger_core::oracle::AlphaZeroBranch;
use terwilliger_core::rational::int;
use terwilliger_core::terwilliger::build_context;
use terwilliger_core::{IntersectionArray, Scheme};

const TIME_BUDGET: Duration = Duration::from_secs(120);
const RELATIVE_TOL: f64 = 1e-6;
const GROUPING: f64 = 1e-6;
const CORPUS: [&str; 5] =
    ["hypercube-4", "hypercube-5", "hypercube-6", "bipartite-double-petersen", "bipartite-double-kneser-7-3"];

struct Graded {
    ok: bool,
    detail: String,
}

fn grade(ok: bool, summary: String, bad: &[String]) -> Graded {
    let detail = if bad.is_empty() { summary } else { format!("{summary}; failing: {}", bad.join("; ")) };
    Graded { ok, detail }
}

struct Run<'a> {
    report: &'a ReportDocument,
    scheme: Scheme,
}

impl Run<'_> {
    fn a(&self) -> &GraphAnalysis {
        &self.report.analysis
    }
    fn ia(&self) -> &IntersectionArray {
        self.scheme.ia()
    }
    fn name(&self) -> &str {
        &self.report.graph.name
    }
}

fn criterion1(runs: &[Run], elapsed: Duration) -> Graded {
    let mut bad = Vec::new();
    for r in runs {
        let a = r.a();
        if a.condition_i.holds != a.condition_ii.holds || !a.condition_ii.complete || !a.discrepancies.is_empty() {
            bad.push(format!("{} ({} discrepancies)", r.name(), a.discrepancies.len()));
        }
    }
    let names: Vec<&str> = runs.iter().map(|r| r.name()).collect();
    let ok = bad.is_empty() && names == CORPUS && elapsed < TIME_BUDGET;
    let verdicts: Vec<String> = runs.iter().map(|r| format!("{}={}", r.name(), r.a().condition_i.holds)).collect();
    grade(ok, format!("{} in {:.1}s", verdicts.join(" "), elapsed.as_secs_f64()), &bad)
}

fn criterion2(runs: &[Run]) -> Graded {
    let mut checked = 0;
    let mut bad = Vec::new();
    for r in runs {
        let delta2_zero = r.a().condition_i.delta2 == int(0);
        for v in &r.a().vertices {
            checked += 1;
            let phi_small = v.spectrum.phi2.len() <= 1;
            // E*_2 A_2 E*_2 is a 0/1 matrix, so the scaled threshold is the grouping constant.
            if delta2_zero != phi_small || (v.spectrum.grouping_threshold - GROUPING).abs() > 1e-15 {
                bad.push(format!("{} x={}", r.name(), v.x));
            }
        }
        for d in r.a().deltas.iter().filter(|d| d.value < int(0)) {
            bad.push(format!("{} Delta_{} = {}", r.name(), d.i, d.value));
        }
    }
    grade(bad.is_empty() && checked > 0, format!("{checked} base vertices"), &bad)
}

fn criterion3(runs: &[Run]) -> Graded {
    let mut unique = 0;
    let mut family = 0;
    let mut bad = Vec::new();
    for r in runs.iter().filter(|r| r.a().condition_i.holds && r.a().condition_ii.holds) {
        let d = r.ia().diameter();
        for s in &r.a().scalars {
            let fit = r.a().condition_i.fit(s.i).expect("fit per level");
            match (&fit.kind, s.closed_form) {
                (FitKind::Unique { alpha, beta }, Some(cf)) if (*alpha, *beta) == cf => unique += 1,
                (FitKind::Family, Some((a, b))) if fit.admits(a, b) => family += 1,
                (FitKind::Vacuous, _) => {}
                other => bad.push(format!("{} level {}: {other:?}", r.name(), s.i)),
            }
        }
        for d in r.a().deltas.iter().filter(|x| (2..=d - 2).contains(&x.i)) {
            if d.value <= int(0) {
                bad.push(format!("{} Delta_{} = {}", r.name(), d.i, d.value));
            }
        }
    }
    grade(bad.is_empty() && unique > 0, format!("{unique} unique and {family} family levels match"), &bad)
}

fn criterion4(runs: &[Run]) -> Graded {
    let required = [
        "(LR^{i-1})_zy",
        "(R^{i-1}L)_zy",
        "(R^{i-2})_zy",
        "E*_i A_{i-2} E*_2 via R^{i-2}",
        "E*_i A_i E*_2 via L,R words",
        "LR^{i-1} via A_i, R^{i-1}L, R^{i-2}",
        "alpha LR^{i-1} via mixed words",
    ];
    let mut entries = 0usize;
    let mut bad = Vec::new();
    for r in runs {
        let a = r.a();
        for v in &a.vertices {
            // Builds E*, L, R and checks the sum, A = L+R, L = R^T and A_i against distances exactly.
            if let Err(e) = build_context(&r.scheme, v.x) {
                bad.push(format!("{} x={}: {e}", r.name(), v.x));
            }
        }
        if a.polynomial_check.is_some() {
            bad.push(format!("{}: A_i = v_i(A)", r.name()));
        }
        for c in a.identity_summary.iter().chain(&a.product_checks) {
            entries += c.entries;
            if !c.passed() {
                bad.push(format!("{}: {} level {}", r.name(), c.lemma, c.level));
            }
        }
        for name in required {
            if !a.identity_summary.iter().any(|c| c.lemma == name && c.entries > 0) {
                bad.push(format!("{}: {name} never exercised", r.name()));
            }
        }
        if a.product_checks.is_empty() {
            bad.push(format!("{}: A_i A_j not checked", r.name()));
        }
    }
    grade(bad.is_empty(), format!("{entries} entries compared"), &bad)
}

fn criterion5(runs: &[Run]) -> Graded {
    let mut pairs = 0;
    let mut bad = Vec::new();
    for r in runs {
        for c in &r.a().lemma_checks {
            pairs += c.pairs;
            if !c.passed() || c.pairs == 0 {
                bad.push(format!("{}: {} level {} ({} pairs)", r.name(), c.lemma, c.level, c.pairs));
            }
        }
        if r.a().lemma_checks.is_empty() {
            bad.push(format!("{}: no lemma checks", r.name()));
        }
        for f in r.a().vector_form.iter().filter(|f| f.failed()) {
            bad.push(format!("{}: {f:?}", r.name()));
        }
    }
    grade(bad.is_empty(), format!("{pairs} (x,y) evaluations"), &bad)
}

fn criterion6(runs: &[Run]) -> Graded {
    let mut worst: f64 = 0.0;
    let mut bad = Vec::new();
    for r in runs {
        let ia = r.ia();
        for v in &r.a().vertices {
            let s = &v.spectrum;
            worst = worst.max(s.eigenvalue_map_error);
            let ok = s.eta1_is_p222
                && s.b3_minus_one_multiplicity as i64 >= ia.valency() - 1
                && s.dim_u as i64 == ia.k(2) - ia.valency()
                && s.eigenvalue_map_error <= RELATIVE_TOL
                && s.lower_residual <= RELATIVE_TOL;
            if !ok {
                bad.push(format!("{} x={}", r.name(), v.x));
            }
        }
    }
    grade(bad.is_empty(), format!("max relative error {worst:.2e}"), &bad)
}

fn criterion7(runs: &[Run]) -> Graded {
    let mut vertices = 0;
    let mut bad = Vec::new();
    for r in runs {
        for v in &r.a().vertices {
            vertices += 1;
            let Some(o) = &v.oracle else {
                bad.push(format!("{} x={}: no oracle run", r.name(), v.x));
                continue;
            };
            let mut thin_per_eta: BTreeMap<i64, usize> = BTreeMap::new();
            for c in o.census.iter().filter(|c| c.endpoint == 2 && c.thin) {
                *thin_per_eta.entry((c.key[0] * 1e6).round() as i64).or_default() += 1;
            }
            let expected: BTreeMap<i64, usize> =
                v.spectrum.phi2.iter().map(|&(e, m)| ((e * 1e6).round() as i64, m)).collect();
            let ok = o.seeds.len() == 3
                && o.error.is_none()
                && o.certified
                && o.seed_invariant
                && o.matches_structured
                && o.total_dim == r.scheme.vertex_count()
                && thin_per_eta == expected;
            if !ok {
                bad.push(format!("{} x={}", r.name(), v.x));
            }
        }
    }
    grade(bad.is_empty() && vertices > 0, format!("{vertices} base vertices x 3 seeds"), &bad)
}

fn criterion8(runs: &[Run]) -> Graded {
    let mut alphas = 0;
    let mut omegas = 0;
    let mut bad = Vec::new();
    for r in runs {
        let a = r.a();
        let d = r.ia().diameter();
        if a.condition_i.delta2 != int(0) && a.condition_i.holds {
            for s in a.scalars.iter().filter(|s| (3..=d - 2).contains(&s.i)) {
                alphas += 1;
                if s.representative.is_none_or(|(alpha, _)| alpha == int(0)) {
                    bad.push(format!("{}: alpha_{} = 0", r.name(), s.i));
                }
            }
            if !matches!(a.alpha_zero_branch, AlphaZeroBranch::NotExercised { all_alpha_nonzero: true }) {
                bad.push(format!("{}: {:?}", r.name(), a.alpha_zero_branch));
            }
        }
        for v in &a.vertices {
            for rec in v.recurrences.iter().filter(|rec| rec.realized) {
                for i in 2..=d.saturating_sub(3) {
                    omegas += 1;
                    if rec.sequences.omega(i).is_none_or(|w| w <= 0.0) {
                        bad.push(format!("{} x={} eta={}: omega_{i}", r.name(), v.x, rec.sequences.eta));
                    }
                }
            }
        }
    }
    grade(bad.is_empty() && alphas > 0, format!("{alphas} alpha_i and {omegas} omega_i checked"), &bad)
}

fn main() -> ExitCode {
    let options = AnalysisOptions { checks: CheckLevel::All, ..AnalysisOptions::default() };
    let start = Instant::now();
    let corpus = cmd_verify_corpus(None, &options).expect("built-in corpus");
    let elapsed = start.elapsed();
    let runs: Vec<Run> = corpus
        .graphs
        .iter()
        .map(|entry| match entry {
            CorpusEntry::Analyzed { report, .. } => {
                let graph = terwilliger_core::format::parse_graph6(&report.graph.graph6).expect("report graph6");
                Run { report, scheme: Scheme::certify(graph).expect("corpus graph certifies") }
            }
            CorpusEntry::InputError { name, message } => panic!("{name}: {message}"),
        })
        .collect();

    let results = [
        ("equivalence of conditions (i) and (ii)", criterion1(&runs, elapsed)),
        ("Delta_2 = 0 iff |Phi_2| <= 1, Delta_i >= 0", criterion2(&runs)),
        ("closed-form scalars", criterion3(&runs)),
        ("exact identity suites", criterion4(&runs)),
        ("inner-product lemmas", criterion5(&runs)),
        ("local spectrum structure", criterion6(&runs)),
        ("oracle census vs structured census", criterion7(&runs)),
        ("alpha_i != 0 and omega_i > 0", criterion8(&runs)),
    ];
    let mut all = true;
    for (n, (title, g)) in results.iter().enumerate() {
        all &= g.ok;
        println!("criterion {} [{}] {title}: {}", n + 1, if g.ok { "PASS" } else { "FAIL" }, g.detail);
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
