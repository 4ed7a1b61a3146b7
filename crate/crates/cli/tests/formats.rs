use std::fs;

use terwilliger::commands::{cmd_generate, read_graph_file};
use terwilliger::corpus::Family;
use terwilliger::{cmd_analyze, AnalysisOptions, BaseVertices, CliError, RunConfig, Source};
use terwilliger_core::analysis::CheckLevel;
use terwilliger_core::format::write_graph6;

fn fast(base: &[usize]) -> AnalysisOptions {
    AnalysisOptions {
        base_vertices: BaseVertices::List(base.to_vec()),
        checks: CheckLevel::Fast,
        ..AnalysisOptions::default()
    }
}

#[test]
fn graph6_and_adjacency_inputs_agree() {
    let dir = tempfile::tempdir().unwrap();
    let g = Family::BipartiteDoublePetersen.build(None).unwrap();
    let g6 = dir.path().join("desargues.g6");
    fs::write(&g6, format!(">>graph6<<{}\n", write_graph6(&g))).unwrap();
    let adj = dir.path().join("desargues.txt");
    cmd_generate("file", None, Some(&g6), &adj).unwrap();
    assert_eq!(read_graph_file(&g6).unwrap(), g);
    assert_eq!(read_graph_file(&adj).unwrap(), g);

    let reports: Vec<_> = [g6, adj]
        .into_iter()
        .map(|p| cmd_analyze(&RunConfig { source: Source::File(p), options: fast(&[0, 1]), out: None }).unwrap())
        .collect();
    assert_eq!(reports[0].graph.graph6, reports[1].graph.graph6);
    assert!(reports.iter().all(|r| r.verdict.condition_i && r.verdict.condition_ii && r.passed()));
}

#[test]
fn q4_round_trip_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("q4.txt");
    let g = cmd_generate("hypercube", Some(4), None, &path).unwrap();
    let back = read_graph_file(&path).unwrap();
    assert_eq!(back, g);
    assert_eq!(back.vertex_count(), 16);
    assert!((0..16).all(|v| back.degree(v) == 4));
}

#[test]
fn malformed_inputs_are_input_errors() {
    let dir = tempfile::tempdir().unwrap();
    for (name, text) in [
        ("loop.txt", "0:0\n"),
        ("syntax.txt", "0 1\n1 0\n"),
        ("two.g6", "Bg\nBg\n"),
        ("short.g6", "C\n"),
        ("empty.txt", "# nothing\n"),
    ] {
        let p = dir.path().join(name);
        fs::write(&p, text).unwrap();
        assert!(matches!(read_graph_file(&p), Err(CliError::Input(_))), "{name}");
    }
}

#[test]
fn non_drg_input_fails_the_gate() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("path.txt");
    fs::write(&p, "0:1\n1:0,2\n2:1\n").unwrap();
    let r = cmd_analyze(&RunConfig { source: Source::File(p), options: AnalysisOptions::default(), out: None });
    assert!(matches!(r, Err(CliError::Gate(_))));
}
