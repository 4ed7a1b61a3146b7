use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Serialize;
use terwilliger_core::analysis::{analyze_vertex, finish, prepare};
use terwilliger_core::format::{load_graph, write_adjacency_list};
use terwilliger_core::{admissibility_gate, GateVerdict, Graph, Scheme};
use thiserror::Error;

use crate::config::{AnalysisOptions, RunConfig, Source};
use crate::corpus::{default_corpus, Family};
use crate::report::{CorpusEntry, CorpusReport, ReportDocument};
use crate::{EXIT_DISCREPANCY, EXIT_INPUT, EXIT_OK};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage error: {0}")]
    Usage(String),
    #[error("input error: {0}")]
    Input(String),
    #[error("admissibility gate: {0}")]
    Gate(String),
    #[error("i/o error on {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        EXIT_INPUT
    }

    fn io(path: &Path, source: std::io::Error) -> Self {
        CliError::Io { path: path.to_path_buf(), source }
    }
}

pub fn read_graph_file(path: &Path) -> Result<Graph, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    load_graph(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Display name and graph for an input source.
pub fn load_source(source: &Source) -> Result<(String, String, Graph), CliError> {
    match source {
        Source::File(path) => {
            let name =
                path.file_stem().map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned());
            Ok((name, path.display().to_string(), read_graph_file(path)?))
        }
        Source::Family { family, n } => {
            let label = family.label(*n);
            Ok((label.clone(), format!("family:{label}"), family.build(*n)?))
        }
    }
}

/// Writes the adjacency list of a family member, or normalizes a graph
/// file (either format) when `family` is `file`.
pub fn cmd_generate(family: &str, n: Option<u32>, input: Option<&Path>, out: &Path) -> Result<Graph, CliError> {
    let graph = match (family, input) {
        ("file", Some(path)) => read_graph_file(path)?,
        ("file", None) => return Err(CliError::Usage("family file needs --input".into())),
        (_, Some(_)) => return Err(CliError::Usage("--input is only valid with family file".into())),
        (name, None) => name.parse::<Family>()?.build(n)?,
    };
    let label = match input {
        Some(p) => p.display().to_string(),
        None => family.to_string() + &n.map(|n| format!(" {n}")).unwrap_or_default(),
    };
    let text = format!(
        "# {label}: {} vertices, {} edges\n{}",
        graph.vertex_count(),
        graph.edge_count(),
        write_adjacency_list(&graph)
    );
    fs::write(out, text).map_err(|e| CliError::io(out, e))?;
    Ok(graph)
}

/// Distance-regularity certification followed by the admissibility gate.
pub fn certify(graph: Graph) -> Result<Scheme, CliError> {
    let scheme = Scheme::certify(graph).map_err(|e| CliError::Gate(e.to_string()))?;
    if let GateVerdict::Fail(reason) = admissibility_gate(scheme.ia()) {
        return Err(CliError::Gate(reason));
    }
    Ok(scheme)
}

/// Full analysis of one graph, base vertices in parallel.
pub fn analyze_graph(
    name: &str,
    source: &str,
    graph: Graph,
    options: &AnalysisOptions,
) -> Result<ReportDocument, CliError> {
    let scheme = certify(graph)?;
    let vertices = options.base_vertices.resolve(scheme.vertex_count())?;
    let config = options.analysis_config();
    let prep = prepare(&scheme);
    let outcomes: Vec<_> = vertices.par_iter().map(|&x| (x, analyze_vertex(&scheme, x, &prep, &config))).collect();
    let analysis = finish(&scheme, prep, outcomes, &config);
    Ok(ReportDocument::new(name, source, &scheme, options, analysis))
}

pub fn cmd_analyze(config: &RunConfig) -> Result<ReportDocument, CliError> {
    let (name, source, graph) = load_source(&config.source)?;
    analyze_graph(&name, &source, graph, &config.options)
}

/// Sorted graph files of a corpus directory.
pub fn corpus_files(dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    if dir.as_os_str().is_empty() {
        return Err(CliError::Usage("empty corpus path".into()));
    }
    let entries = fs::read_dir(dir).map_err(|e| CliError::io(dir, e))?;
    let mut files = Vec::new();
    for entry in entries {
        let path = entry.map_err(|e| CliError::io(dir, e))?.path();
        if path.is_file() {
            files.push(path);
        }
    }
    files.sort();
    if files.is_empty() {
        return Err(CliError::Usage(format!("corpus directory {} has no files", dir.display())));
    }
    Ok(files)
}

/// Analyzes the built-in corpus, or every file of `dir`. Per-graph input and
/// gate errors are recorded in the report instead of aborting the run.
pub fn cmd_verify_corpus(dir: Option<&Path>, options: &AnalysisOptions) -> Result<CorpusReport, CliError> {
    let jobs: Vec<(String, String, Result<Graph, CliError>)> = match dir {
        None => default_corpus().into_iter().map(|(name, g)| (name.clone(), format!("family:{name}"), Ok(g))).collect(),
        Some(dir) => corpus_files(dir)?
            .into_iter()
            .map(|p| {
                let name = p.file_name().map_or_else(String::new, |s| s.to_string_lossy().into_owned());
                (name, p.display().to_string(), read_graph_file(&p))
            })
            .collect(),
    };
    let entries: Vec<CorpusEntry> = jobs
        .into_par_iter()
        .map(|(name, source, graph)| match graph.and_then(|g| analyze_graph(&name, &source, g, options)) {
            Ok(report) => CorpusEntry::Analyzed { name, report: Box::new(report) },
            Err(e) => CorpusEntry::InputError { name, message: e.to_string() },
        })
        .collect();
    Ok(CorpusReport::new(options, entries))
}

pub fn exit_code_for(passed: bool) -> i32 {
    if passed {
        EXIT_OK
    } else {
        EXIT_DISCREPANCY
    }
}

pub fn corpus_exit_code(report: &CorpusReport) -> i32 {
    if report.input_errors > 0 {
        EXIT_INPUT
    } else {
        exit_code_for(report.discrepancies == 0)
    }
}

/// Pretty JSON with a trailing newline, to `out` or stdout.
pub fn write_json<T: Serialize>(value: &T, out: Option<&Path>) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(value).expect("report types serialize");
    text.push('\n');
    match out {
        Some(path) => fs::write(path, text).map_err(|e| CliError::io(path, e)),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| CliError::io(Path::new("<stdout>"), e)),
    }
}
