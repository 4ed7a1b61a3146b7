//! Corpus generation, graph loading, analysis runs and JSON reports for the
//! `terwilliger` binary.

pub mod commands;
pub mod config;
pub mod corpus;
pub mod report;

pub use commands::{cmd_analyze, cmd_generate, cmd_verify_corpus, CliError};
pub use config::{AnalysisOptions, BaseVertices, RunConfig, Source};
pub use report::{CorpusReport, ReportDocument, SCHEMA_VERSION};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DISCREPANCY: i32 = 2;
pub const EXIT_INPUT: i32 = 3;
