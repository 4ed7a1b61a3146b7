use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use terwilliger::commands::{corpus_exit_code, exit_code_for, write_json};
use terwilliger::corpus::Family;
use terwilliger::{
    cmd_analyze, cmd_generate, cmd_verify_corpus, AnalysisOptions, BaseVertices, CliError, RunConfig, Source,
};
use terwilliger::{EXIT_INPUT, EXIT_OK};
use terwilliger_core::analysis::CheckLevel;

/// Terwilliger algebra analysis of bipartite distance-regular graphs.
///
/// Exit codes: 0 all checks pass, 2 discrepancy found, 3 input or gate error.
#[derive(Parser)]
#[command(name = "terwilliger", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a corpus graph as an adjacency list.
    Generate {
        /// hypercube, bipartite-double-petersen, bipartite-double-kneser-7-3 or file
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: Option<u32>,
        /// Graph file to normalize (family file only)
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Analyze one graph and emit a JSON report.
    Analyze {
        /// Adjacency-list or graph6 file
        #[arg(long, conflicts_with_all = ["family", "n"], required_unless_present = "family")]
        input: Option<PathBuf>,
        #[arg(long)]
        family: Option<String>,
        #[arg(long, requires = "family")]
        n: Option<u32>,
        #[command(flatten)]
        options: OptionArgs,
    },
    /// Analyze every corpus graph (built-in, or the files of a directory).
    VerifyCorpus {
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[command(flatten)]
        options: OptionArgs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Checks {
    All,
    Fast,
}

#[derive(Args)]
struct OptionArgs {
    /// all, or a comma-separated list such as 0,5,7
    #[arg(long, default_value = "all")]
    base_vertices: String,
    /// Numerical tolerance (default 1e-9)
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Report path; stdout when absent
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "all")]
    checks: Checks,
}

impl OptionArgs {
    fn resolve(&self) -> Result<AnalysisOptions, CliError> {
        let checks = match self.checks {
            Checks::All => CheckLevel::All,
            Checks::Fast => CheckLevel::Fast,
        };
        let base_vertices: BaseVertices = self.base_vertices.parse()?;
        AnalysisOptions { base_vertices, seed: self.seed, checks, ..AnalysisOptions::default() }.with_tol(self.tol)
    }
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Generate { family, n, input, out } => {
            let g = cmd_generate(&family, n, input.as_deref(), &out)?;
            eprintln!("wrote {} ({} vertices, {} edges)", out.display(), g.vertex_count(), g.edge_count());
            Ok(EXIT_OK)
        }
        Command::Analyze { input, family, n, options } => {
            let source = match (input, family) {
                (Some(path), _) => Source::File(path),
                (None, Some(name)) => Source::Family { family: name.parse::<Family>()?, n },
                (None, None) => return Err(CliError::Usage("one of --input or --family is required".into())),
            };
            let config = RunConfig { source, options: options.resolve()?, out: options.out.clone() };
            let report = cmd_analyze(&config)?;
            write_json(&report, config.out.as_deref())?;
            eprintln!("{}", report.summary_line());
            Ok(exit_code_for(report.passed()))
        }
        Command::VerifyCorpus { corpus, options } => {
            let opts = options.resolve()?;
            let report = cmd_verify_corpus(corpus.as_deref(), &opts)?;
            write_json(&report, options.out.as_deref())?;
            for entry in &report.graphs {
                match entry {
                    terwilliger::report::CorpusEntry::Analyzed { report, .. } => eprintln!("{}", report.summary_line()),
                    terwilliger::report::CorpusEntry::InputError { name, message } => eprintln!("{name}: {message}"),
                }
            }
            Ok(corpus_exit_code(&report))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(EXIT_INPUT as u8);
        }
    };
    let code = run(cli).unwrap_or_else(|e| {
        eprintln!("error: {e}");
        e.exit_code()
    });
    ExitCode::from(code as u8)
}
