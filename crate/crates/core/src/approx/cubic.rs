use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::{canonical, Edge, Graph, Vertex};
use crate::subgraph::{minimalize, DeletionOrder, SpanningSubgraph};

/// Intermediate sets of the cubic Min-DD2 algorithm. `result_edges` is the
/// edge set before the final minimalization pass.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CubicTrace {
    pub induced_matching: Vec<Edge>,
    pub matched_vertices: Vec<Vertex>,
    pub leftover: Vec<Vertex>,
    pub removed_edges: Vec<Edge>,
    pub result_edges: Vec<Edge>,
    pub a: usize,
    pub t: usize,
}

/// Greedy maximal induced matching: take the smallest remaining edge, then
/// delete the closed neighborhoods of both endpoints.
pub fn maximal_induced_matching(g: &Graph) -> Vec<Edge> {
    let mut alive = vec![true; g.n()];
    let mut matching = Vec::new();
    for &(u, v) in g.edges() {
        if alive[u] && alive[v] {
            matching.push((u, v));
            for x in [u, v] {
                alive[x] = false;
                for &w in g.neighbors(x) {
                    alive[w] = false;
                }
            }
        }
    }
    matching
}

/// 1.8-approximation for 3-regular graphs.
///
/// Matched vertices and the untouched leftover `T` form the dominating side;
/// each leftover vertex drops its smallest incident edge so that every
/// dominating vertex keeps exactly two edges. A minimalization pass follows.
pub fn approx_min_dd2_cubic(g: &Graph) -> Result<(SpanningSubgraph<'_>, CubicTrace), Error> {
    if g.n() == 0 || !g.is_regular(3) {
        return Err(Error::NotCubic);
    }
    let matching = maximal_induced_matching(g);
    let mut in_a = vec![false; g.n()];
    let mut touched = vec![false; g.n()];
    for &(u, v) in &matching {
        for x in [u, v] {
            in_a[x] = true;
            touched[x] = true;
            for &w in g.neighbors(x) {
                touched[w] = true;
            }
        }
    }
    let matched_vertices: Vec<Vertex> = g.vertices().filter(|&v| in_a[v]).collect();
    let leftover: Vec<Vertex> = g.vertices().filter(|&v| !touched[v]).collect();
    for &t in &leftover {
        in_a[t] = true;
    }
    let mut removed_edges: Vec<Edge> = leftover
        .iter()
        .map(|&t| canonical(t, g.neighbors(t)[0]))
        .collect();
    removed_edges.sort_unstable();
    let result_edges: Vec<Edge> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| in_a[u] != in_a[v] && removed_edges.binary_search(&(u, v)).is_err())
        .collect();

    let trace = CubicTrace {
        induced_matching: matching,
        a: matched_vertices.len(),
        t: leftover.len(),
        matched_vertices,
        leftover,
        removed_edges,
        result_edges,
    };
    let h = g.subgraph_with_edges(&trace.result_edges)?;
    let minimal = minimalize(&h, &DeletionOrder::Lexicographic)?;
    let out = SpanningSubgraph::new(g, minimal.kept().iter().copied())?;
    Ok((out, trace))
}
