//! Frozen corpus values. The reference numbers were produced by a separate
//! networkx/numpy script (intersection arrays, Γ₂² spectra, brute-force
//! triple counts) and are not computed by this crate.

use terwilliger_core::analysis::{analyze, AnalysisConfig, CheckLevel};
use terwilliger_core::characterization::FitKind;
use terwilliger_core::graph::{generate_bipartite_double, generate_hypercube, generate_kneser, generate_petersen};
use terwilliger_core::rational::{int, Rational};
use terwilliger_core::terwilliger::delta;
use terwilliger_core::{admissibility_gate, Graph, Scheme};

struct Expected {
    b: &'static [i64],
    c: &'static [i64],
    deltas: &'static [i64],
    /// Φ₂ at vertex 0, descending, as (value, multiplicity).
    phi2: &'static [(f64, usize)],
    /// Unique fits `(α, β)` per level 2..=D−2; `None` marks a one-point family.
    fits: &'static [Option<(i64, i64)>],
    holds: bool,
}

fn corpus() -> Vec<(&'static str, Graph, Expected)> {
    vec![
        (
            "q4",
            generate_hypercube(4).unwrap(),
            Expected {
                b: &[4, 3, 2, 1],
                c: &[1, 2, 3, 4],
                deltas: &[0, 0],
                phi2: &[(-2.0, 2)],
                fits: &[None],
                holds: false,
            },
        ),
        (
            "q5",
            generate_hypercube(5).unwrap(),
            Expected {
                b: &[5, 4, 3, 2, 1],
                c: &[1, 2, 3, 4, 5],
                deltas: &[0, 0, 0],
                phi2: &[(-2.0, 5)],
                fits: &[None, None],
                holds: false,
            },
        ),
        (
            "q6",
            generate_hypercube(6).unwrap(),
            Expected {
                b: &[6, 5, 4, 3, 2, 1],
                c: &[1, 2, 3, 4, 5, 6],
                deltas: &[0, 0, 0, 0],
                phi2: &[(-2.0, 9)],
                fits: &[None, None, None],
                holds: false,
            },
        ),
        (
            "desargues",
            generate_bipartite_double(&generate_petersen()).unwrap(),
            Expected {
                b: &[3, 2, 2, 1, 1],
                c: &[1, 1, 2, 2, 3],
                deltas: &[1, 1, 0],
                phi2: &[(1.0, 1), (-2.0, 2)],
                fits: &[Some((0, 1)), Some((2, -1))],
                holds: true,
            },
        ),
        (
            "odd",
            generate_bipartite_double(&generate_kneser(7, 3).unwrap()).unwrap(),
            Expected {
                b: &[4, 3, 3, 2, 2, 1, 1],
                c: &[1, 1, 2, 2, 3, 3, 4],
                deltas: &[2, 2, 2, 2, 0],
                phi2: &[(2.0, 2), (-2.0, 6)],
                fits: &[Some((0, 1)), Some((2, -1)), Some((1, 1)), Some((3, -1))],
                holds: true,
            },
        ),
    ]
}

#[test]
fn intersection_arrays_and_deltas() {
    for (name, g, e) in corpus() {
        let s = Scheme::certify(g).unwrap();
        let ia = s.ia();
        assert!(admissibility_gate(ia).passed(), "{name}");
        let d = ia.diameter();
        assert_eq!((0..d).map(|i| ia.b(i)).collect::<Vec<_>>(), e.b, "{name}");
        assert_eq!((1..=d).map(|i| ia.c(i)).collect::<Vec<_>>(), e.c, "{name}");
        let deltas: Vec<Rational> = (2..d).map(|i| delta(ia, i).unwrap()).collect();
        assert_eq!(deltas, e.deltas.iter().map(|&v| int(v)).collect::<Vec<_>>(), "{name}");
    }
}

#[test]
fn corpus_verdicts_fits_and_spectra() {
    let config = AnalysisConfig { checks: CheckLevel::Fast, ..AnalysisConfig::default() };
    for (name, g, e) in corpus() {
        let s = Scheme::certify(g).unwrap();
        let a = analyze(&s, &[0, 1], &config);
        assert!(a.discrepancies.is_empty(), "{name}: {:?}", a.discrepancies);
        assert_eq!(a.condition_i.holds, e.holds, "{name}");
        assert_eq!(a.condition_ii.holds, e.holds, "{name}");
        assert!(!a.condition_ii.complete, "{name}: only two base vertices");
        let phi2 = &a.vertices[0].spectrum.phi2;
        assert_eq!(phi2.len(), e.phi2.len(), "{name}");
        for (&(v, m), &(ev, em)) in phi2.iter().zip(e.phi2) {
            assert!((v - ev).abs() < 1e-8 && m == em, "{name}: {phi2:?}");
        }
        for (fit, exp) in a.condition_i.fits.iter().zip(e.fits) {
            match (exp, &fit.kind) {
                (Some((al, be)), FitKind::Unique { alpha, beta }) => {
                    assert_eq!((*alpha, *beta), (int(*al), int(*be)), "{name}")
                }
                (None, FitKind::Family) => {}
                other => panic!("{name} level {}: {other:?}", fit.i),
            }
        }
        for s in a.scalars.iter().filter(|_| e.holds) {
            assert_eq!(s.closed_form, s.representative, "{name}");
        }
    }
}

#[test]
fn q4_structured_census() {
    let s = Scheme::certify(generate_hypercube(4).unwrap()).unwrap();
    let a = analyze(&s, &[3], &AnalysisConfig::default());
    let v = &a.vertices[0];
    let shape: Vec<(usize, usize, usize)> = v.modules.iter().map(|m| (m.endpoint, m.diameter, m.dim)).collect();
    assert_eq!(shape, vec![(0, 4, 5), (1, 2, 3), (1, 2, 3), (1, 2, 3), (2, 0, 1), (2, 0, 1)]);
    let full = &v.spectrum.full;
    assert_eq!(full.iter().map(|f| f.1).collect::<Vec<_>>(), vec![1, 3, 2]);
    for (f, e) in full.iter().zip([4.0, 0.0, -2.0]) {
        assert!((f.0 - e).abs() < 1e-9, "{full:?}");
    }
    assert_eq!(v.spectrum.dim_u, 2);
    let oracle = v.oracle.as_ref().unwrap();
    assert!(oracle.matches_structured && oracle.certified && oracle.seed_invariant);
}
