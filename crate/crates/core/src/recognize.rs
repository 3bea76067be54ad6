//! Polynomial-time DD2 recognition.
//!
//! A graph without isolated vertices is a DD2-graph exactly when every weak
//! support `s` has a neighbor that is neither a leaf nor a support vertex.
//! The test is local, so disconnected graphs are handled component-wise for
//! free.

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, Vertex};

/// Why a graph fails to be a DD2-graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "vertex", rename_all = "snake_case")]
pub enum Witness {
    Isolated(Vertex),
    /// A weak support whose neighbors are all leaves or supports.
    WeakSupport(Vertex),
}

impl Witness {
    pub fn vertex(self) -> Vertex {
        match self {
            Witness::Isolated(v) | Witness::WeakSupport(v) => v,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecognitionReport {
    pub is_dd2: bool,
    pub witness: Option<Witness>,
}

/// Recognizes DD2-graphs; the witness is the smallest-id violating vertex.
pub fn is_dd2(g: &Graph) -> RecognitionReport {
    let witness = first_violation(g.adjacency());
    RecognitionReport {
        is_dd2: witness.is_none(),
        witness,
    }
}

pub(crate) fn violation_at(adj: &[Vec<Vertex>], v: Vertex) -> Option<Witness> {
    let nb = &adj[v];
    if nb.is_empty() {
        return Some(Witness::Isolated(v));
    }
    let pendants = nb.iter().filter(|&&w| adj[w].len() == 1).count();
    if pendants != 1 {
        return None;
    }
    let certified = nb
        .iter()
        .any(|&x| adj[x].len() >= 2 && !adj[x].iter().any(|&y| adj[y].len() == 1));
    (!certified).then_some(Witness::WeakSupport(v))
}

pub(crate) fn first_violation(adj: &[Vec<Vertex>]) -> Option<Witness> {
    (0..adj.len()).find_map(|v| violation_at(adj, v))
}

/// Mutable adjacency used by the deletion and augmentation loops.
#[derive(Clone, Debug)]
pub(crate) struct WorkingGraph {
    adj: Vec<Vec<Vertex>>,
}

impl WorkingGraph {
    pub fn new(g: &Graph) -> Self {
        Self {
            adj: g.adjacency().to_vec(),
        }
    }

    pub fn adjacency(&self) -> &[Vec<Vertex>] {
        &self.adj
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) {
        for (a, b) in [(u, v), (v, u)] {
            if let Err(pos) = self.adj[a].binary_search(&b) {
                self.adj[a].insert(pos, b);
            }
        }
    }

    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) {
        for (a, b) in [(u, v), (v, u)] {
            if let Ok(pos) = self.adj[a].binary_search(&b) {
                self.adj[a].remove(pos);
            }
        }
    }

    pub fn first_violation(&self) -> Option<Witness> {
        first_violation(&self.adj)
    }

    /// Vertices within distance two of `u` or `v`, sorted.
    fn ball2(&self, u: Vertex, v: Vertex) -> Vec<Vertex> {
        let mut out = vec![u, v];
        for s in [u, v] {
            for &x in &self.adj[s] {
                out.push(x);
                out.extend_from_slice(&self.adj[x]);
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Whether deleting `uv` keeps the graph DD2. Assumes the current graph is
    /// DD2: a deletion only changes leaf/support status within distance two of
    /// its endpoints, so only that region is re-examined. The graph is left
    /// unchanged.
    pub fn deletion_keeps_dd2(&mut self, u: Vertex, v: Vertex) -> bool {
        let region = self.ball2(u, v);
        self.remove_edge(u, v);
        let ok = region.iter().all(|&x| violation_at(&self.adj, x).is_none());
        self.add_edge(u, v);
        ok
    }
}
