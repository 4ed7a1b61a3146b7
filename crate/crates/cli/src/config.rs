use std::path::PathBuf;
use std::str::FromStr;

use serde::Serialize;
use terwilliger_core::analysis::{AnalysisConfig, CheckLevel};
use terwilliger_core::linalg::Tolerance;

use crate::commands::CliError;
use crate::corpus::Family;

#[derive(Debug, Clone, PartialEq)]
pub enum Source {
    File(PathBuf),
    Family { family: Family, n: Option<u32> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BaseVertices {
    All,
    List(Vec<usize>),
}

impl BaseVertices {
    /// Sorted, deduplicated vertex list for a graph on `n` vertices.
    pub fn resolve(&self, n: usize) -> Result<Vec<usize>, CliError> {
        match self {
            BaseVertices::All => Ok((0..n).collect()),
            BaseVertices::List(v) => {
                if let Some(&bad) = v.iter().find(|&&x| x >= n) {
                    return Err(CliError::Usage(format!("base vertex {bad} out of range for {n} vertices")));
                }
                let mut v = v.clone();
                v.sort_unstable();
                v.dedup();
                Ok(v)
            }
        }
    }
}

impl FromStr for BaseVertices {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        if s.trim() == "all" {
            return Ok(BaseVertices::All);
        }
        let list: Result<Vec<usize>, _> = s.split(',').map(|t| t.trim().parse::<usize>()).collect();
        match list {
            Ok(v) if !v.is_empty() => Ok(BaseVertices::List(v)),
            _ => Err(CliError::Usage(format!("--base-vertices expects 'all' or a list like 0,5,7, got {s:?}"))),
        }
    }
}

/// Settings shared by `analyze` and `verify-corpus`.
#[derive(Debug, Clone, PartialEq)]
pub struct AnalysisOptions {
    pub base_vertices: BaseVertices,
    pub tol: Tolerance,
    pub seed: u64,
    pub checks: CheckLevel,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            base_vertices: BaseVertices::All,
            tol: Tolerance::default(),
            seed: 0,
            checks: CheckLevel::All,
        }
    }
}

impl AnalysisOptions {
    pub fn with_tol(mut self, tol: Option<f64>) -> Result<Self, CliError> {
        if let Some(t) = tol {
            if !(t.is_finite() && t > 0.0 && t < 1e-2) {
                return Err(CliError::Usage(format!("--tol must be in (0, 1e-2), got {t}")));
            }
            self.tol.tol = t;
        }
        Ok(self)
    }

    pub fn analysis_config(&self) -> AnalysisConfig {
        AnalysisConfig { tol: self.tol, seed: self.seed, checks: self.checks }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub source: Source,
    pub options: AnalysisOptions,
    pub out: Option<PathBuf>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_vertex_lists() {
        assert_eq!("all".parse::<BaseVertices>().unwrap(), BaseVertices::All);
        let list: BaseVertices = "7, 0,5,5".parse().unwrap();
        assert_eq!(list.resolve(8).unwrap(), vec![0, 5, 7]);
        assert!(list.resolve(7).is_err());
        assert!("".parse::<BaseVertices>().is_err());
        assert!("0,x".parse::<BaseVertices>().is_err());
    }

    #[test]
    fn tolerance_override() {
        let o = AnalysisOptions::default().with_tol(Some(1e-10)).unwrap();
        assert_eq!(o.tol.tol, 1e-10);
        assert_eq!(o.tol.grouping, 1e-6);
        assert!(AnalysisOptions::default().with_tol(Some(-1.0)).is_err());
        assert!(AnalysisOptions::default().with_tol(Some(f64::NAN)).is_err());
    }
}
