use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::domination::{approx_weighted_tdom, WeightedTDomInstance};
use crate::error::Error;
use crate::graph::{canonical, Edge, Graph, Vertex};
use crate::recognize::{first_violation, is_dd2, violation_at, Witness, WorkingGraph};

/// New edges that turn a non-DD2 graph into a DD2-graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeAdditionPlan {
    pub additions: Vec<Edge>,
}

impl EdgeAdditionPlan {
    pub fn new(additions: impl IntoIterator<Item = Edge>) -> Self {
        let mut additions: Vec<Edge> = additions
            .into_iter()
            .map(|(u, v)| canonical(u, v))
            .collect();
        additions.sort_unstable();
        additions.dedup();
        Self { additions }
    }

    pub fn len(&self) -> usize {
        self.additions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.additions.is_empty()
    }

    /// `g` plus the planned edges; fails if a planned edge already exists.
    pub fn apply(&self, g: &Graph) -> Result<Graph, Error> {
        if let Some(&(u, v)) = self.additions.iter().find(|&&(u, v)| g.has_edge(u, v)) {
            return Err(Error::EdgeAlreadyPresent(u, v));
        }
        g.with_added_edges(&self.additions)
    }

    /// Disjoint from `E(g)` and the augmented graph is DD2.
    pub fn is_feasible_for(&self, g: &Graph) -> bool {
        self.apply(g).map(|h| is_dd2(&h).is_dd2).unwrap_or(false)
    }

    /// `k` followed by `k` lines `u v`.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.additions.len());
        for (u, v) in &self.additions {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, Error> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let bad = |what: &str| Error::InvalidParameter(format!("edge addition plan: {what}"));
        let k: usize = lines
            .next()
            .and_then(|l| l.parse().ok())
            .ok_or_else(|| bad("missing count line"))?;
        let mut additions = Vec::with_capacity(k);
        for line in lines {
            let mut it = line.split_whitespace().map(str::parse::<Vertex>);
            match (it.next(), it.next(), it.next()) {
                (Some(Ok(u)), Some(Ok(v)), None) if u != v => additions.push(canonical(u, v)),
                _ => return Err(bad(&format!("malformed line `{line}`"))),
            }
        }
        if additions.len() != k {
            return Err(bad(&format!(
                "expected {k} pairs, found {}",
                additions.len()
            )));
        }
        let plan = Self::new(additions);
        if plan.len() != k {
            return Err(bad("duplicate pair"));
        }
        Ok(plan)
    }
}

/// Intermediate sets of the edge-addition algorithm.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinToDd2Trace {
    /// Weak supports already certified by a neighbor outside `L ∪ S`.
    pub u: Vec<Vertex>,
    /// Failing weak supports.
    pub a: Vec<Vertex>,
    /// Strong supports adjacent to `a`.
    pub b: Vec<Vertex>,
    /// `aux_vertices[i]` is the input vertex behind vertex `i` of `aux_instance`.
    pub aux_vertices: Vec<Vertex>,
    pub aux_instance: WeightedTDomInstance,
    pub chosen_supports: Vec<Vertex>,
    pub support_weight: u64,
    pub pendant_pool: Vec<Vertex>,
    pub plan: EdgeAdditionPlan,
    pub fallback_used: bool,
}

/// Joins `x` to the first non-neighbor that makes the whole graph DD2, or to
/// the first non-neighbor at all when none does.
fn partner_search(wg: &mut WorkingGraph, x: Vertex) -> Result<Edge, Error> {
    let n = wg.adjacency().len();
    let candidates: Vec<Vertex> = (0..n).filter(|&y| y != x && !wg.has_edge(x, y)).collect();
    let Some(&fallback) = candidates.first() else {
        return Err(Error::Infeasible(format!("vertex {x} has no non-neighbor")));
    };
    for &y in &candidates {
        wg.add_edge(x, y);
        let ok = wg.first_violation().is_none();
        wg.remove_edge(x, y);
        if ok {
            wg.add_edge(x, y);
            return Ok(canonical(x, y));
        }
    }
    wg.add_edge(x, fallback);
    Ok(canonical(x, fallback))
}

/// O(log n)-approximation for the fewest new edges making `g` DD2.
///
/// Failing weak supports `A` must be fixed either by turning their own pendant
/// into a non-leaf or by de-supporting an adjacent strong support, which
/// costs its pendant count. Choosing which supports to "open" is a weighted
/// `T`-domination problem on `A` and the adjacent strong supports; the
/// pendants of the chosen supports are then paired up with new edges.
pub fn approx_min_to_dd2(g: &Graph) -> Result<(EdgeAdditionPlan, MinToDd2Trace), Error> {
    if let Some(v) = g.vertices().find(|&v| g.degree(v) == 0) {
        return Err(Error::IsolatedVertex(v));
    }
    if is_dd2(g).is_dd2 {
        return Err(Error::AlreadyDd2);
    }
    let cls = g.classify_vertices();
    let outside = |x: Vertex| g.degree(x) >= 2 && !cls.is_support(x);
    let (u, a): (Vec<Vertex>, Vec<Vertex>) = cls
        .weak_supports
        .iter()
        .copied()
        .partition(|&s| g.neighbors(s).iter().any(|&x| outside(x)));
    let mut b: Vec<Vertex> = a
        .iter()
        .flat_map(|&s| g.neighbors(s).iter().copied())
        .filter(|&x| cls.is_strong_support(x))
        .collect();
    b.sort_unstable();
    b.dedup();

    let mut aux_vertices: Vec<Vertex> = a.iter().chain(&b).copied().collect();
    aux_vertices.sort_unstable();
    let local = |v: Vertex| aux_vertices.binary_search(&v).ok();
    let in_b = |v: Vertex| b.binary_search(&v).is_ok();
    let aux_edges: Vec<Edge> = g
        .edges()
        .iter()
        .filter(|&&(x, y)| !(in_b(x) && in_b(y)))
        .filter_map(|&(x, y)| Some((local(x)?, local(y)?)))
        .collect();
    let aux_graph = Graph::from_edges(aux_vertices.len(), aux_edges)?;
    let weights: Vec<u64> = aux_vertices
        .iter()
        .map(|&v| cls.pendants[v].len() as u64)
        .collect();
    let targets: Vec<Vertex> = a.iter().filter_map(|&v| local(v)).collect();
    let aux_instance = WeightedTDomInstance::new(aux_graph, weights, targets)?;
    let solution = approx_weighted_tdom(&aux_instance);
    let chosen_supports: Vec<Vertex> = solution.set.iter().map(|&i| aux_vertices[i]).collect();

    let mut pool: Vec<Vertex> = chosen_supports
        .iter()
        .flat_map(|&s| cls.pendants[s].iter().copied())
        .collect();
    pool.sort_unstable();
    pool.dedup();

    let mut wg = WorkingGraph::new(g);
    let mut additions = Vec::new();
    let mut fallback_used = false;
    let k = pool.len();
    let mut paired = vec![false; k];
    for i in 0..k {
        if paired[i] {
            continue;
        }
        if let Some(j) = (i + 1..k).find(|&j| !paired[j] && !g.has_edge(pool[i], pool[j])) {
            paired[i] = true;
            paired[j] = true;
            wg.add_edge(pool[i], pool[j]);
            additions.push(canonical(pool[i], pool[j]));
        }
    }
    let leftover: Vec<usize> = (0..k).filter(|&i| !paired[i]).collect();
    for i in leftover {
        let x = pool[i];
        let partner = if k >= 3 {
            (0..k).find(|&j| j != i && paired[j] && !wg.has_edge(x, pool[j]))
        } else {
            None
        };
        match partner {
            Some(j) => {
                wg.add_edge(x, pool[j]);
                additions.push(canonical(x, pool[j]));
            }
            None => {
                fallback_used = true;
                additions.push(partner_search(&mut wg, x)?);
            }
        }
        paired[i] = true;
    }

    while let Some(witness) = wg.first_violation() {
        fallback_used = true;
        let Witness::WeakSupport(s) = witness else {
            unreachable!("adding edges cannot isolate a vertex");
        };
        let adj = wg.adjacency();
        let leaf = adj[s]
            .iter()
            .copied()
            .find(|&w| adj[w].len() == 1)
            .expect("weak support has a pendant");
        debug_assert!(violation_at(adj, s).is_some());
        additions.push(partner_search(&mut wg, leaf)?);
    }
    debug_assert!(first_violation(wg.adjacency()).is_none());

    let plan = EdgeAdditionPlan::new(additions);
    let trace = MinToDd2Trace {
        u,
        a,
        b,
        aux_vertices,
        aux_instance,
        chosen_supports,
        support_weight: solution.weight,
        pendant_pool: pool,
        plan: plan.clone(),
        fallback_used,
    };
    Ok((plan, trace))
}
