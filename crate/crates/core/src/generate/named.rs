use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::Graph;

/// Small named families with fixed vertex numbering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "snake_case")]
pub enum NamedGraph {
    /// `0 - 1 - ... - (n-1)`.
    Path {
        n: usize,
    },
    /// Path plus the edge `(0, n-1)`; needs `n >= 3`.
    Cycle {
        n: usize,
    },
    /// Center 0 with leaves `1..=leaves`.
    Star {
        leaves: usize,
    },
    Complete {
        n: usize,
    },
    /// Sides `0..a` and `a..a+b`.
    CompleteBipartite {
        a: usize,
        b: usize,
    },
    /// Outer 5-cycle `0..5`, spokes `i - i+5`, inner pentagram on `5..10`.
    Petersen,
}

/// Builds a named graph.
pub fn gen_named(spec: NamedGraph) -> Result<Graph, Error> {
    match spec {
        NamedGraph::Path { n } => Graph::from_edges(n, (1..n).map(|i| (i - 1, i))),
        NamedGraph::Cycle { n } => {
            if n < 3 {
                return Err(Error::InvalidParameter(format!(
                    "cycle needs n >= 3, got {n}"
                )));
            }
            Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        NamedGraph::Star { leaves } => Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))),
        NamedGraph::Complete { n } => {
            Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        }
        NamedGraph::CompleteBipartite { a, b } => {
            Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
        }
        NamedGraph::Petersen => Graph::from_edges(
            10,
            (0..5).flat_map(|i| [(i, (i + 1) % 5), (i, i + 5), (i + 5, (i + 2) % 5 + 5)]),
        ),
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            NamedGraph::Path { n } => write!(f, "path:{n}"),
            NamedGraph::Cycle { n } => write!(f, "cycle:{n}"),
            NamedGraph::Star { leaves } => write!(f, "star:{leaves}"),
            NamedGraph::Complete { n } => write!(f, "complete:{n}"),
            NamedGraph::CompleteBipartite { a, b } => write!(f, "complete_bipartite:{a},{b}"),
            NamedGraph::Petersen => write!(f, "petersen"),
        }
    }
}

/// Parses `path:4`, `cycle:5`, `star:3`, `complete:4`,
/// `complete_bipartite:3,3` and `petersen`.
impl FromStr for NamedGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidParameter(format!("unknown named graph `{s}`"));
        let (name, args) = s.split_once(':').unwrap_or((s, ""));
        let nums: Vec<usize> = if args.is_empty() {
            Vec::new()
        } else {
            args.split(',')
                .map(|a| a.trim().parse().map_err(|_| bad()))
                .collect::<Result<_, _>>()?
        };
        Ok(match (name, nums.as_slice()) {
            ("path", &[n]) => NamedGraph::Path { n },
            ("cycle", &[n]) => NamedGraph::Cycle { n },
            ("star", &[leaves]) => NamedGraph::Star { leaves },
            ("complete", &[n]) => NamedGraph::Complete { n },
            ("complete_bipartite", &[a, b]) => NamedGraph::CompleteBipartite { a, b },
            ("petersen", &[]) => NamedGraph::Petersen,
            _ => return Err(bad()),
        })
    }
}
