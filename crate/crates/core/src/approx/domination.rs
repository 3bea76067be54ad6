use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::{Graph, Vertex};

/// Weighted `T`-domination: find `D` meeting `N[v]` for every `v` in `targets`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightedTDomInstance {
    pub graph: Graph,
    pub weights: Vec<u64>,
    pub targets: Vec<Vertex>,
}

impl WeightedTDomInstance {
    pub fn new(graph: Graph, weights: Vec<u64>, mut targets: Vec<Vertex>) -> Result<Self, Error> {
        if weights.len() != graph.n() {
            return Err(Error::InvalidParameter(format!(
                "{} weights for {} vertices",
                weights.len(),
                graph.n()
            )));
        }
        if weights.contains(&0) {
            return Err(Error::InvalidParameter("weights must be positive".into()));
        }
        targets.sort_unstable();
        targets.dedup();
        if let Some(&v) = targets.iter().find(|&&v| v >= graph.n()) {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: graph.n(),
            });
        }
        Ok(Self {
            graph,
            weights,
            targets,
        })
    }

    pub fn is_feasible(&self, set: &[Vertex]) -> bool {
        let mut chosen = vec![false; self.graph.n()];
        for &v in set {
            chosen[v] = true;
        }
        self.targets
            .iter()
            .all(|&v| chosen[v] || self.graph.neighbors(v).iter().any(|&w| chosen[w]))
    }

    pub fn weight(&self, set: &[Vertex]) -> u64 {
        set.iter().map(|&v| self.weights[v]).sum()
    }
}

/// `H_n = 1 + 1/2 + ... + 1/n`.
pub fn harmonic(n: usize) -> f64 {
    (1..=n).map(|k| 1.0 / k as f64).sum()
}

/// Greedy weighted dominating set: repeatedly take the vertex with the lowest
/// weight per newly covered vertex (smaller id on ties). Weight is within
/// `H_n` of optimum.
pub fn greedy_weighted_dominating_set(g: &Graph, weights: &[u64]) -> Vec<Vertex> {
    assert_eq!(weights.len(), g.n(), "one weight per vertex");
    let mut covered = vec![false; g.n()];
    let mut remaining = g.n();
    let mut chosen = Vec::new();
    let gain = |v: Vertex, covered: &[bool]| {
        usize::from(!covered[v]) + g.neighbors(v).iter().filter(|&&w| !covered[w]).count()
    };
    while remaining > 0 {
        let mut best: Option<(Vertex, u64, u64)> = None;
        for v in g.vertices() {
            let c = gain(v, &covered) as u64;
            if c == 0 {
                continue;
            }
            let better = match best {
                None => true,
                // w(v)/c < w(b)/cb, cross-multiplied
                Some((_, wb, cb)) => {
                    (weights[v] as u128 * cb as u128).cmp(&(wb as u128 * c as u128))
                        == Ordering::Less
                }
            };
            if better {
                best = Some((v, weights[v], c));
            }
        }
        let (v, _, _) = best.expect("an uncovered vertex covers itself");
        chosen.push(v);
        for x in std::iter::once(v).chain(g.neighbors(v).iter().copied()) {
            if !covered[x] {
                covered[x] = true;
                remaining -= 1;
            }
        }
    }
    chosen.sort_unstable();
    chosen
}

/// Result of [`approx_weighted_tdom`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TDomSolution {
    /// The `T`-dominating set of the input graph.
    pub set: Vec<Vertex>,
    pub weight: u64,
    /// Minimal dominating set of the auxiliary graph; contains the hub `t`.
    pub auxiliary_set: Vec<Vertex>,
    pub auxiliary_weight: u64,
}

fn dominates(g: &Graph, chosen: &[bool]) -> bool {
    g.vertices()
        .all(|v| chosen[v] || g.neighbors(v).iter().any(|&w| chosen[w]))
}

/// Weighted `T`-domination through plain weighted domination.
///
/// Adds a hub `t` (weight 1) adjacent to every non-target and to two guards
/// `p`, `q` (weight `|V|`), so that a dominating set of the auxiliary graph
/// containing `t` is a `T`-dominating set plus `t`. The hub, guards get ids
/// `n`, `n+1`, `n+2`.
pub fn approx_weighted_tdom(inst: &WeightedTDomInstance) -> TDomSolution {
    let n = inst.graph.n();
    let (t, p, q) = (n, n + 1, n + 2);
    let mut is_target = vec![false; n];
    for &v in &inst.targets {
        is_target[v] = true;
    }
    let mut edges = inst.graph.edges().to_vec();
    edges.extend((0..n).filter(|&v| !is_target[v]).map(|v| (v, t)));
    edges.push((t, p));
    edges.push((t, q));
    let aux = Graph::from_edges(n + 3, edges).expect("auxiliary graph is simple");
    let mut weights = inst.weights.clone();
    let guard = n.max(1) as u64;
    weights.extend([1, guard, guard]);

    let mut chosen = vec![false; n + 3];
    for v in greedy_weighted_dominating_set(&aux, &weights) {
        chosen[v] = true;
    }
    if chosen[p] || chosen[q] {
        chosen[p] = false;
        chosen[q] = false;
        chosen[t] = true;
    }
    debug_assert!(chosen[t], "p is only dominated by itself or t");

    // Drop redundant vertices, heaviest first, never the hub.
    let mut order: Vec<Vertex> = (0..n).filter(|&v| chosen[v]).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(weights[v]), v));
    for v in order {
        chosen[v] = false;
        if !dominates(&aux, &chosen) {
            chosen[v] = true;
        }
    }

    let auxiliary_set: Vec<Vertex> = (0..n + 3).filter(|&v| chosen[v]).collect();
    let auxiliary_weight = auxiliary_set.iter().map(|&v| weights[v]).sum();
    let set: Vec<Vertex> = auxiliary_set.iter().copied().filter(|&v| v < n).collect();
    let weight = inst.weight(&set);
    TDomSolution {
        set,
        weight,
        auxiliary_set,
        auxiliary_weight,
    }
}
