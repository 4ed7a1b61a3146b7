//! JSON report documents, schema version 1.

use serde::Serialize;
use terwilliger_core::analysis::{CheckLevel, GraphAnalysis};
use terwilliger_core::format::write_graph6;
use terwilliger_core::{IntersectionArray, Scheme};

use crate::config::{AnalysisOptions, BaseVertices};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct Generator {
    pub name: &'static str,
    pub version: &'static str,
}

impl Default for Generator {
    fn default() -> Self {
        Generator { name: env!("CARGO_PKG_NAME"), version: env!("CARGO_PKG_VERSION") }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GraphMeta {
    pub name: String,
    pub source: String,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub diameter: usize,
    pub valency: i64,
    pub graph6: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct IntersectionArrayReport {
    /// `b_0..b_{D−1}`
    pub b: Vec<i64>,
    /// `c_1..c_D`
    pub c: Vec<i64>,
    pub k: Vec<i64>,
}

impl From<&IntersectionArray> for IntersectionArrayReport {
    fn from(ia: &IntersectionArray) -> Self {
        let d = ia.diameter();
        IntersectionArrayReport {
            b: (0..d).map(|i| ia.b(i)).collect(),
            c: (1..=d).map(|i| ia.c(i)).collect(),
            k: (0..=d).map(|i| ia.k(i)).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ConfigEcho {
    pub base_vertices: BaseVertices,
    pub tol: f64,
    pub grouping: f64,
    pub seed: u64,
    pub checks: CheckLevel,
}

impl From<&AnalysisOptions> for ConfigEcho {
    fn from(o: &AnalysisOptions) -> Self {
        ConfigEcho {
            base_vertices: o.base_vertices.clone(),
            tol: o.tol.tol,
            grouping: o.tol.grouping,
            seed: o.seed,
            checks: o.checks,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub condition_i: bool,
    pub condition_ii: bool,
    /// Condition (ii) was evaluated at every vertex.
    pub condition_ii_complete: bool,
    pub equivalence: bool,
    pub discrepancies: usize,
    pub passed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub generator: Generator,
    pub graph: GraphMeta,
    pub intersection_array: IntersectionArrayReport,
    pub config: ConfigEcho,
    pub verdict: Verdict,
    pub analysis: GraphAnalysis,
}

impl ReportDocument {
    pub fn new(name: &str, source: &str, scheme: &Scheme, options: &AnalysisOptions, analysis: GraphAnalysis) -> Self {
        let g = scheme.graph();
        let ia = scheme.ia();
        let verdict = Verdict {
            condition_i: analysis.condition_i.holds,
            condition_ii: analysis.condition_ii.holds,
            condition_ii_complete: analysis.condition_ii.complete,
            equivalence: analysis.equivalence_holds,
            discrepancies: analysis.discrepancies.len(),
            passed: analysis.discrepancies.is_empty(),
        };
        ReportDocument {
            schema_version: SCHEMA_VERSION,
            generator: Generator::default(),
            graph: GraphMeta {
                name: name.to_string(),
                source: source.to_string(),
                vertex_count: g.vertex_count(),
                edge_count: g.edge_count(),
                diameter: ia.diameter(),
                valency: ia.valency(),
                graph6: write_graph6(g),
            },
            intersection_array: ia.into(),
            config: options.into(),
            verdict,
            analysis,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict.passed
    }

    /// One human-readable line derived from the report.
    pub fn summary_line(&self) -> String {
        let v = &self.verdict;
        format!(
            "{}: n={} D={} condition_i={} condition_ii={}{} equivalence={} discrepancies={}",
            self.graph.name,
            self.graph.vertex_count,
            self.graph.diameter,
            v.condition_i,
            v.condition_ii,
            if v.condition_ii_complete { "" } else { " (partial)" },
            if v.equivalence { "ok" } else { "FAIL" },
            v.discrepancies,
        )
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CorpusEntry {
    Analyzed { name: String, report: Box<ReportDocument> },
    InputError { name: String, message: String },
}

impl CorpusEntry {
    pub fn name(&self) -> &str {
        match self {
            CorpusEntry::Analyzed { name, .. } | CorpusEntry::InputError { name, .. } => name,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CorpusReport {
    pub schema_version: u32,
    pub generator: Generator,
    pub config: ConfigEcho,
    pub graphs: Vec<CorpusEntry>,
    pub input_errors: usize,
    pub discrepancies: usize,
    pub passed: bool,
}

impl CorpusReport {
    pub fn new(options: &AnalysisOptions, graphs: Vec<CorpusEntry>) -> Self {
        let input_errors = graphs.iter().filter(|g| matches!(g, CorpusEntry::InputError { .. })).count();
        let discrepancies = graphs
            .iter()
            .map(|g| match g {
                CorpusEntry::Analyzed { report, .. } => report.verdict.discrepancies,
                CorpusEntry::InputError { .. } => 0,
            })
            .sum();
        CorpusReport {
            schema_version: SCHEMA_VERSION,
            generator: Generator::default(),
            config: options.into(),
            passed: input_errors == 0 && discrepancies == 0,
            graphs,
            input_errors,
            discrepancies,
        }
    }
}
