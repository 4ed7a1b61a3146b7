use std::fmt;
use std::str::FromStr;

use terwilliger_core::graph::{generate_bipartite_double, generate_hypercube, generate_kneser, generate_petersen};
use terwilliger_core::Graph;

use crate::commands::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Hypercube,
    BipartiteDoublePetersen,
    BipartiteDoubleKneser73,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Hypercube, Family::BipartiteDoublePetersen, Family::BipartiteDoubleKneser73];

    pub fn name(self) -> &'static str {
        match self {
            Family::Hypercube => "hypercube",
            Family::BipartiteDoublePetersen => "bipartite-double-petersen",
            Family::BipartiteDoubleKneser73 => "bipartite-double-kneser-7-3",
        }
    }

    /// Hypercubes need `n`; the other families are single graphs.
    pub fn build(self, n: Option<u32>) -> Result<Graph, CliError> {
        let graph = match (self, n) {
            (Family::Hypercube, Some(n)) => generate_hypercube(n),
            (Family::Hypercube, None) => return Err(CliError::Usage("family hypercube needs --n".into())),
            (_, Some(_)) => return Err(CliError::Usage(format!("family {} takes no --n", self.name()))),
            (Family::BipartiteDoublePetersen, None) => generate_bipartite_double(&generate_petersen()),
            (Family::BipartiteDoubleKneser73, None) => {
                generate_kneser(7, 3).and_then(|k| generate_bipartite_double(&k))
            }
        };
        graph.map_err(|e| CliError::Usage(e.to_string()))
    }

    pub fn label(self, n: Option<u32>) -> String {
        match n {
            Some(n) => format!("{}-{n}", self.name()),
            None => self.name().to_string(),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        Family::ALL.into_iter().find(|f| f.name() == s).ok_or_else(|| {
            let known: Vec<&str> = Family::ALL.iter().map(|f| f.name()).collect();
            CliError::Usage(format!("unknown family {s:?} (known: {}, file)", known.join(", ")))
        })
    }
}

/// The built-in corpus: Q4, Q5, Q6, the Desargues graph and the doubled Odd
/// graph on 3-subsets of a 7-set.
pub fn default_corpus() -> Vec<(String, Graph)> {
    let entries = [
        (Family::Hypercube, Some(4)),
        (Family::Hypercube, Some(5)),
        (Family::Hypercube, Some(6)),
        (Family::BipartiteDoublePetersen, None),
        (Family::BipartiteDoubleKneser73, None),
    ];
    entries.into_iter().map(|(f, n)| (f.label(n), f.build(n).expect("built-in corpus parameters are valid"))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_sizes() {
        assert_eq!(Family::Hypercube.build(Some(4)).unwrap().vertex_count(), 16);
        assert_eq!(Family::BipartiteDoublePetersen.build(None).unwrap().vertex_count(), 20);
        assert_eq!(Family::BipartiteDoubleKneser73.build(None).unwrap().vertex_count(), 70);
        assert!(Family::Hypercube.build(None).is_err());
        assert!(Family::BipartiteDoublePetersen.build(Some(3)).is_err());
        assert!("cube".parse::<Family>().is_err());
    }

    #[test]
    fn corpus_labels() {
        let names: Vec<String> = default_corpus().into_iter().map(|c| c.0).collect();
        assert_eq!(
            names,
            ["hypercube-4", "hypercube-5", "hypercube-6", "bipartite-double-petersen", "bipartite-double-kneser-7-3"]
        );
    }
}
