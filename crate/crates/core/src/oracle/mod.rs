//! Exhaustive solvers used as ground truth.
//!
//! Every search is bounded by an [`OracleBudget`] and fails with
//! [`BudgetError`](crate::BudgetError) instead of running unbounded. Vertex
//! subsets are visited in order of size, then by bitmask value, and the first
//! optimum found is reported; edge subsets are visited lexicographically.

mod augment;
mod bits;
mod lreduction;
mod spanning;
mod vertex;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{BudgetError, Error};

pub use augment::exact_min_edge_addition;
pub use lreduction::{verify_l_reduction, LReductionInstance, MappedSolution};
pub use spanning::{
    exact_max_minimal_spanning_dd2, exact_min_spanning_dd2, minimal_spanning_dd2_subgraphs,
};
pub use vertex::{
    exact_gamma, exact_gamma2, exact_has_dd2_pair, exact_max_independent_set,
    exact_max_min_vertex_cover, exact_min_vertex_cover, exact_min_weight_tdom,
    maximal_independent_sets, minimal_vertex_covers,
};

/// Limits on exhaustive enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleBudget {
    pub max_vertices: usize,
    pub max_edges: usize,
    /// Cap on candidates examined (subsets or search nodes).
    pub max_subsets: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        Self {
            max_vertices: 20,
            max_edges: 22,
            max_subsets: 1 << 22,
        }
    }
}

impl OracleBudget {
    /// A roomier budget sized for the reduction gadgets.
    pub fn large() -> Self {
        Self {
            max_vertices: 24,
            max_edges: 64,
            max_subsets: 1 << 28,
        }
    }

    pub fn check_vertices(&self, n: usize) -> Result<(), BudgetError> {
        if n > self.max_vertices {
            return Err(BudgetError::Vertices {
                actual: n,
                limit: self.max_vertices,
            });
        }
        Ok(())
    }

    pub fn check_edges(&self, m: usize) -> Result<(), BudgetError> {
        if m > self.max_edges {
            return Err(BudgetError::Edges {
                actual: m,
                limit: self.max_edges,
            });
        }
        Ok(())
    }
}

impl fmt::Display for OracleBudget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{},{}",
            self.max_vertices, self.max_edges, self.max_subsets
        )
    }
}

/// Parses `vertices,edges,subsets`.
impl FromStr for OracleBudget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let bad = || Error::InvalidParameter(format!("oracle budget `{s}`; expected `v,e,s`"));
        let [v, e, k] = parts.as_slice() else {
            return Err(bad());
        };
        Ok(Self {
            max_vertices: v.parse().map_err(|_| bad())?,
            max_edges: e.parse().map_err(|_| bad())?,
            max_subsets: k.parse().map_err(|_| bad())?,
        })
    }
}

/// Optimum value, a witness achieving it and the number of candidates examined.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleResult<W> {
    pub value: u64,
    pub witness: W,
    pub explored: u64,
}

/// Counts examined candidates against the budget.
pub(crate) struct Meter {
    pub explored: u64,
    limit: u64,
}

impl Meter {
    pub fn new(budget: &OracleBudget) -> Self {
        Self {
            explored: 0,
            limit: budget.max_subsets,
        }
    }

    pub fn tick(&mut self) -> Result<(), BudgetError> {
        self.explored += 1;
        if self.explored > self.limit {
            return Err(BudgetError::Subsets { limit: self.limit });
        }
        Ok(())
    }
}
