//! Reduction gadgets with forward and backward solution maps.
//!
//! * `MinVc`: 3-regular `G` to a Min-DD2 instance. Every edge is subdivided
//!   by `e_uv` and each vertex `v_i` gets a 4-cycle `p q r s` with a tail
//!   `s - t - v_i`.
//! * `MaxIs`: the same subdivision with a path `p - q - r - s - v_i` per
//!   vertex.
//! * `MaxMinVc`: any `G` to a Max-Min-to-DD2 instance. Each vertex gets
//!   `m + 1` pendants `a_i^j`, each edge vertex `e_uv` a pendant `l_uv`, and a
//!   hub joins all original vertices.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::approx::EdgeAdditionPlan;
use crate::error::Error;
use crate::graph::{canonical, Edge, Graph, Vertex};
use crate::oracle::{
    exact_max_independent_set, exact_max_minimal_spanning_dd2, exact_min_spanning_dd2,
    exact_min_vertex_cover, minimal_spanning_dd2_subgraphs, verify_l_reduction, LReductionInstance,
    MappedSolution, OracleBudget,
};
use crate::recognize::{is_dd2, WorkingGraph};
use crate::subgraph::{is_minimal_by_deletion, SpanningSubgraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GadgetKind {
    MinVc,
    MaxIs,
    MaxMinVc,
}

/// Where each named vertex of the construction lives in the target graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexTables {
    /// `v_i`, always `i`.
    pub originals: Vec<Vertex>,
    /// `e_uv`, indexed by the rank of `uv` in the source edge list.
    pub edge_vertices: Vec<Vertex>,
    /// `l_uv` (MaxMinVc only), indexed like `edge_vertices`.
    pub edge_pendants: Vec<Vertex>,
    /// Names of the per-vertex gadget slots, e.g. `p q r s t`.
    pub gadget_labels: Vec<String>,
    /// `gadgets[i][k]` is slot `gadget_labels[k]` of the gadget on `v_i`.
    pub gadgets: Vec<Vec<Vertex>>,
    /// The hub `p` (MaxMinVc only).
    pub hub: Option<Vertex>,
}

/// A reduction instance with its correspondence tables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetMap {
    pub kind: GadgetKind,
    pub source: Graph,
    pub target: Graph,
    pub vertex_tables: VertexTables,
}

impl GadgetMap {
    /// `e_uv` for a source edge.
    pub fn edge_vertex(&self, u: Vertex, v: Vertex) -> Option<Vertex> {
        let rank = self.source.edges().binary_search(&canonical(u, v)).ok()?;
        Some(self.vertex_tables.edge_vertices[rank])
    }

    fn slot(&self, i: Vertex, label: usize) -> Vertex {
        self.vertex_tables.gadgets[i][label]
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("gadget maps serialize")
    }

    fn expect_kind(&self, kind: GadgetKind) -> Result<(), Error> {
        if self.kind != kind {
            return Err(Error::InvalidParameter(format!(
                "expected a {kind:?} gadget, got {:?}",
                self.kind
            )));
        }
        Ok(())
    }
}

const P: usize = 0;
const Q: usize = 1;
const R: usize = 2;
const S: usize = 3;
const T: usize = 4;

fn subdivided_build(
    g: &Graph,
    kind: GadgetKind,
    labels: &[&str],
    gadget_edges: impl Fn(&[Vertex], Vertex) -> Vec<Edge>,
) -> Result<GadgetMap, Error> {
    if !g.is_regular(3) || g.n() == 0 {
        return Err(Error::NotCubic);
    }
    let (n, m) = (g.n(), g.m());
    let edge_vertices: Vec<Vertex> = (0..m).map(|k| n + k).collect();
    let gadgets: Vec<Vec<Vertex>> = (0..n)
        .map(|i| {
            (0..labels.len())
                .map(|k| n + m + labels.len() * i + k)
                .collect()
        })
        .collect();
    let mut edges = Vec::new();
    for (k, &(u, v)) in g.edges().iter().enumerate() {
        edges.push((u, n + k));
        edges.push((v, n + k));
    }
    for (i, slots) in gadgets.iter().enumerate() {
        edges.extend(gadget_edges(slots, i));
    }
    let target = Graph::from_edges(n + m + labels.len() * n, edges)?;
    Ok(GadgetMap {
        kind,
        source: g.clone(),
        target,
        vertex_tables: VertexTables {
            originals: (0..n).collect(),
            edge_vertices,
            edge_pendants: Vec::new(),
            gadget_labels: labels.iter().map(|s| s.to_string()).collect(),
            gadgets,
            hub: None,
        },
    })
}

/// Min-VC gadget on a 3-regular graph: `n + m + 5n` vertices, `2m + 6n` edges.
pub fn gen_minvc_gadget(g: &Graph) -> Result<GadgetMap, Error> {
    subdivided_build(g, GadgetKind::MinVc, &["p", "q", "r", "s", "t"], |x, v| {
        vec![
            (x[P], x[Q]),
            (x[Q], x[R]),
            (x[R], x[S]),
            (x[S], x[P]),
            (x[S], x[T]),
            (x[T], v),
        ]
    })
}

/// Max-IS gadget on a 3-regular graph: `n + m + 4n` vertices, `2m + 4n` edges.
pub fn gen_maxis_gadget(g: &Graph) -> Result<GadgetMap, Error> {
    subdivided_build(g, GadgetKind::MaxIs, &["p", "q", "r", "s"], |x, v| {
        vec![(x[P], x[Q]), (x[Q], x[R]), (x[R], x[S]), (x[S], v)]
    })
}

fn is_vertex_cover(g: &Graph, set: &[bool]) -> bool {
    g.edges().iter().all(|&(u, v)| set[u] || set[v])
}

fn membership(n: usize, set: &[Vertex]) -> Result<Vec<bool>, Error> {
    let mut mark = vec![false; n];
    for &v in set {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        if mark[v] {
            return Err(Error::InvalidParameter(format!("vertex {v} listed twice")));
        }
        mark[v] = true;
    }
    Ok(mark)
}

fn is_minimal_cover(g: &Graph, mark: &[bool]) -> bool {
    is_vertex_cover(g, mark)
        && g.vertices()
            .filter(|&v| mark[v])
            .all(|v| g.neighbors(v).iter().any(|&w| !mark[w]))
}

/// For each vertex of `order`, its edge vertices whose other endpoint does
/// not appear earlier in `order`.
fn js_edges(map: &GadgetMap, order: &[Vertex]) -> Vec<Edge> {
    let g = &map.source;
    let mut earlier = vec![false; g.n()];
    let mut out = Vec::new();
    for &v in order {
        for &x in g.neighbors(v) {
            if !earlier[x] {
                out.push((v, map.edge_vertex(v, x).expect("source edge")));
            }
        }
        earlier[v] = true;
    }
    out
}

/// Forward map for the Min-VC gadget: a minimal vertex cover `S`, in the
/// given order, becomes a minimal spanning DD2 subgraph with
/// `11n/2 + |S|` edges.
pub fn vc_to_min_subgraph<'a>(
    map: &'a GadgetMap,
    cover: &[Vertex],
) -> Result<SpanningSubgraph<'a>, Error> {
    map.expect_kind(GadgetKind::MinVc)?;
    let g = &map.source;
    let mark = membership(g.n(), cover)?;
    if !is_minimal_cover(g, &mark) {
        return Err(Error::InvalidParameter("not a minimal vertex cover".into()));
    }
    let mut kept = js_edges(map, cover);
    for i in g.vertices() {
        let x = &map.vertex_tables.gadgets[i];
        if mark[i] {
            kept.extend([
                (x[P], x[Q]),
                (x[Q], x[R]),
                (x[R], x[S]),
                (x[S], x[P]),
                (x[T], i),
            ]);
        } else {
            kept.extend([(x[P], x[Q]), (x[Q], x[R]), (i, x[T]), (x[T], x[S])]);
        }
    }
    SpanningSubgraph::new(&map.target, kept)
}

/// Result of a backward map: the source solution and the normalized edge
/// set it was read from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BackwardMap {
    pub set: Vec<Vertex>,
    pub normalized: Vec<Edge>,
}

fn component_of(wg: &WorkingGraph, start: Vertex) -> Vec<bool> {
    let adj = wg.adjacency();
    let mut seen = vec![false; adj.len()];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(x) = stack.pop() {
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen
}

fn edges_of(wg: &WorkingGraph) -> Vec<Edge> {
    wg.adjacency()
        .iter()
        .enumerate()
        .flat_map(|(u, nb)| nb.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
        .collect()
}

fn require_minimal(map: &GadgetMap, h: &SpanningSubgraph<'_>) -> Result<(), Error> {
    if h.parent() != &map.target {
        return Err(Error::InvalidParameter(
            "subgraph is not over the gadget graph".into(),
        ));
    }
    if !is_minimal_by_deletion(h) {
        return Err(Error::InvalidParameter(
            "not a minimal spanning DD2 subgraph".into(),
        ));
    }
    Ok(())
}

/// Backward map for the Min-VC gadget.
///
/// Reads off `S' = {v_i : the 4-cycle of v_i is kept}` and, while some
/// source edge `v_i v_j` is uncovered (smallest first), closes the 4-cycle of
/// `v_i`, cuts `s_i t_i` and detaches `v_i`'s edge vertices from their other
/// endpoints inside `v_i`'s component. Each round adds `v_i` to `S'` without
/// growing the edge set.
pub fn minvc_subgraph_to_vc(
    map: &GadgetMap,
    h: &SpanningSubgraph<'_>,
) -> Result<BackwardMap, Error> {
    map.expect_kind(GadgetKind::MinVc)?;
    require_minimal(map, h)?;
    let g = &map.source;
    let target = h.to_graph();
    let mut wg = WorkingGraph::new(&target);
    let mut in_s: Vec<bool> = g
        .vertices()
        .map(|i| {
            let x = &map.vertex_tables.gadgets[i];
            [(x[P], x[Q]), (x[Q], x[R]), (x[R], x[S]), (x[S], x[P])]
                .iter()
                .all(|&(a, b)| wg.has_edge(a, b))
        })
        .collect();
    for _ in 0..g.n() {
        let Some(&(vi, vj)) = g.edges().iter().find(|&&(u, v)| !in_s[u] && !in_s[v]) else {
            break;
        };
        let comp = component_of(&wg, vi);
        let (p, r, s, t) = (
            map.slot(vi, P),
            map.slot(vi, R),
            map.slot(vi, S),
            map.slot(vi, T),
        );
        wg.add_edge(p, s);
        wg.add_edge(r, s);
        wg.remove_edge(s, t);
        let e_ij = map.edge_vertex(vi, vj).expect("source edge");
        wg.remove_edge(e_ij, vj);
        for &vk in g.neighbors(vi) {
            if vk != vj && comp[vk] {
                let e_ik = map.edge_vertex(vi, vk).expect("source edge");
                wg.remove_edge(e_ik, vk);
            }
        }
        in_s[vi] = true;
    }
    if !is_vertex_cover(g, &in_s) {
        return Err(Error::Infeasible(
            "update loop did not reach a vertex cover".into(),
        ));
    }
    Ok(BackwardMap {
        set: g.vertices().filter(|&v| in_s[v]).collect(),
        normalized: edges_of(&wg),
    })
}

/// Forward map for the Max-IS gadget: a maximal independent set `I` becomes
/// a minimal spanning DD2 subgraph with `9n/2 + |I|` edges. Vertices outside
/// `I` are processed in ascending order.
pub fn is_to_max_subgraph<'a>(
    map: &'a GadgetMap,
    independent: &[Vertex],
) -> Result<SpanningSubgraph<'a>, Error> {
    map.expect_kind(GadgetKind::MaxIs)?;
    let g = &map.source;
    let mark = membership(g.n(), independent)?;
    let independent_ok = g.edges().iter().all(|&(u, v)| !(mark[u] && mark[v]));
    let maximal = g
        .vertices()
        .all(|v| mark[v] || g.neighbors(v).iter().any(|&w| mark[w]));
    if !(independent_ok && maximal) {
        return Err(Error::InvalidParameter(
            "not a maximal independent set".into(),
        ));
    }
    let outside: Vec<Vertex> = g.vertices().filter(|&v| !mark[v]).collect();
    let mut kept = js_edges(map, &outside);
    for i in g.vertices() {
        let x = &map.vertex_tables.gadgets[i];
        kept.extend([(x[P], x[Q]), (x[Q], x[R]), (x[S], i)]);
        if mark[i] {
            kept.push((x[R], x[S]));
        }
    }
    SpanningSubgraph::new(&map.target, kept)
}

/// Backward map for the Max-IS gadget.
///
/// Each 5-vertex component `s_i v_i e v_j s_j` (with `i < j`) is rewired to
/// `p_i q_i r_i s_i v_i` plus `e v_j s_j`; then
/// `I' = {v_i : p_i q_i r_i s_i v_i is a component}`.
pub fn maxis_subgraph_to_is(
    map: &GadgetMap,
    h: &SpanningSubgraph<'_>,
) -> Result<BackwardMap, Error> {
    map.expect_kind(GadgetKind::MaxIs)?;
    require_minimal(map, h)?;
    let g = &map.source;
    let target = h.to_graph();
    let mut wg = WorkingGraph::new(&target);
    for &(vi, vj) in g.edges() {
        let e = map.edge_vertex(vi, vj).expect("source edge");
        let (si, sj) = (map.slot(vi, S), map.slot(vj, S));
        let path = [(si, vi), (vi, e), (e, vj), (vj, sj)];
        let degrees_ok = wg.adjacency()[vi].len() == 2
            && wg.adjacency()[vj].len() == 2
            && wg.adjacency()[si].len() == 1
            && wg.adjacency()[sj].len() == 1;
        if degrees_ok && path.iter().all(|&(a, b)| wg.has_edge(a, b)) {
            wg.add_edge(map.slot(vi, R), si);
            wg.remove_edge(vi, e);
        }
    }
    let is_p5_component = |i: Vertex| {
        let (p, q, r, s) = (
            map.slot(i, P),
            map.slot(i, Q),
            map.slot(i, R),
            map.slot(i, S),
        );
        let adj = wg.adjacency();
        adj[p] == [q]
            && adj[q].len() == 2
            && adj[r].len() == 2
            && wg.has_edge(q, r)
            && wg.has_edge(r, s)
            && adj[s].len() == 2
            && wg.has_edge(s, i)
            && adj[i] == [s]
    };
    let mut chosen = vec![false; g.n()];
    for i in g.vertices() {
        if is_p5_component(i) && !g.neighbors(i).iter().any(|&w| chosen[w]) {
            chosen[i] = true;
        }
    }
    Ok(BackwardMap {
        set: g.vertices().filter(|&v| chosen[v]).collect(),
        normalized: edges_of(&wg),
    })
}

/// Max-Min-VC gadget: `n + n(m+1) + 2m + 1` vertices. Ids: originals, then
/// `e_k = n + k`, `l_k = n + m + k`, `a_i^j = n + 2m + i(m+1) + j`, hub last.
pub fn gen_maxmin_gadget(g: &Graph) -> Result<GadgetMap, Error> {
    let (n, m) = (g.n(), g.m());
    let edge_vertices: Vec<Vertex> = (0..m).map(|k| n + k).collect();
    let edge_pendants: Vec<Vertex> = (0..m).map(|k| n + m + k).collect();
    let gadgets: Vec<Vec<Vertex>> = (0..n)
        .map(|i| (0..=m).map(|j| n + 2 * m + i * (m + 1) + j).collect())
        .collect();
    let hub = n + 2 * m + n * (m + 1);
    let mut edges = Vec::new();
    for (k, &(u, v)) in g.edges().iter().enumerate() {
        edges.extend([(u, n + k), (v, n + k), (n + k, n + m + k)]);
    }
    for (i, bundle) in gadgets.iter().enumerate() {
        edges.extend(bundle.iter().map(|&a| (i, a)));
        edges.push((i, hub));
    }
    let target = Graph::from_edges(hub + 1, edges)?;
    Ok(GadgetMap {
        kind: GadgetKind::MaxMinVc,
        source: g.clone(),
        target,
        vertex_tables: VertexTables {
            originals: (0..n).collect(),
            edge_vertices,
            edge_pendants,
            gadget_labels: (1..=m + 1).map(|j| format!("a{j}")).collect(),
            gadgets,
            hub: Some(hub),
        },
    })
}

/// Forward map for the Max-Min-VC gadget: join every pendant of every
/// cover vertex to the hub, `|S|(m+1)` edges.
pub fn vc_to_edge_addition(map: &GadgetMap, cover: &[Vertex]) -> Result<EdgeAdditionPlan, Error> {
    map.expect_kind(GadgetKind::MaxMinVc)?;
    let mark = membership(map.source.n(), cover)?;
    if !is_vertex_cover(&map.source, &mark) {
        return Err(Error::InvalidParameter("not a vertex cover".into()));
    }
    let hub = map.vertex_tables.hub.expect("hub");
    Ok(EdgeAdditionPlan::new(cover.iter().flat_map(|&i| {
        map.vertex_tables.gadgets[i].iter().map(move |&a| (a, hub))
    })))
}

/// Backward map for the Max-Min-VC gadget.
///
/// `S = {v_i : every pendant a_i^j gained an edge}`. Source edges left
/// uncovered get their smaller endpoint, and the set is then pruned to a
/// minimal cover by dropping redundant vertices in ascending order.
pub fn edge_addition_to_vc(map: &GadgetMap, plan: &EdgeAdditionPlan) -> Result<Vec<Vertex>, Error> {
    map.expect_kind(GadgetKind::MaxMinVc)?;
    if !plan.is_feasible_for(&map.target) {
        return Err(Error::Infeasible(
            "plan does not make the gadget a DD2-graph".into(),
        ));
    }
    let g = &map.source;
    let mut touched = vec![false; map.target.n()];
    for &(u, v) in &plan.additions {
        touched[u] = true;
        touched[v] = true;
    }
    let mut in_s: Vec<bool> = g
        .vertices()
        .map(|i| map.vertex_tables.gadgets[i].iter().all(|&a| touched[a]))
        .collect();
    for &(u, v) in g.edges() {
        if !in_s[u] && !in_s[v] {
            in_s[u] = true;
        }
    }
    for v in g.vertices() {
        if in_s[v] && g.neighbors(v).iter().all(|&w| in_s[w]) {
            in_s[v] = false;
        }
    }
    Ok(g.vertices().filter(|&v| in_s[v]).collect())
}

fn l_instance(
    source_opt: u64,
    target_opt: u64,
    subgraphs: &[Vec<Edge>],
    target: &Graph,
    back: impl Fn(&SpanningSubgraph<'_>) -> Result<BackwardMap, Error>,
) -> Result<LReductionInstance, Error> {
    let mut solutions = Vec::with_capacity(subgraphs.len());
    for kept in subgraphs {
        let h = SpanningSubgraph::new(target, kept.iter().copied())?;
        let mapped = back(&h)?;
        solutions.push(MappedSolution {
            target_value: kept.len() as u64,
            source_value: mapped.set.len() as u64,
        });
    }
    Ok(LReductionInstance {
        source_opt,
        target_opt,
        solutions,
    })
}

/// Source and target optima of the Min-VC gadget on `g`, with every minimal
/// spanning DD2 subgraph of the gadget mapped back to a vertex cover.
pub fn minvc_l_reduction(g: &Graph, budget: &OracleBudget) -> Result<LReductionInstance, Error> {
    let map = gen_minvc_gadget(g)?;
    let source_opt = exact_min_vertex_cover(g, budget)?.value;
    let target_opt = exact_min_spanning_dd2(&map.target, budget)?.value;
    let all = minimal_spanning_dd2_subgraphs(&map.target, budget)?;
    l_instance(source_opt, target_opt, &all, &map.target, |h| {
        minvc_subgraph_to_vc(&map, h)
    })
}

/// Max-IS counterpart of [`minvc_l_reduction`].
pub fn maxis_l_reduction(g: &Graph, budget: &OracleBudget) -> Result<LReductionInstance, Error> {
    let map = gen_maxis_gadget(g)?;
    let source_opt = exact_max_independent_set(g, budget)?.value;
    let target_opt = exact_max_minimal_spanning_dd2(&map.target, budget)?.value;
    let all = minimal_spanning_dd2_subgraphs(&map.target, budget)?;
    l_instance(source_opt, target_opt, &all, &map.target, |h| {
        maxis_subgraph_to_is(&map, h)
    })
}

/// Checks the L-reduction inequalities of both gadgets on `g` with
/// `(alpha, beta) = (23, 1)` and `(19, 1)`.
pub fn check_gadget_l_reductions(g: &Graph, budget: &OracleBudget) -> Result<(bool, bool), Error> {
    let one = Ratio::from_integer(1);
    let minvc = minvc_l_reduction(g, budget)?;
    let maxis = maxis_l_reduction(g, budget)?;
    Ok((
        verify_l_reduction(&minvc, Ratio::from_integer(23), one),
        verify_l_reduction(&maxis, Ratio::from_integer(19), one),
    ))
}

/// Whether `plan` is feasible and no single added edge can be dropped.
pub fn is_minimal_addition(g: &Graph, plan: &EdgeAdditionPlan) -> bool {
    let Ok(full) = plan.apply(g) else {
        return false;
    };
    if !is_dd2(&full).is_dd2 {
        return false;
    }
    let mut wg = WorkingGraph::new(&full);
    plan.additions.iter().all(|&(u, v)| {
        wg.remove_edge(u, v);
        let still = wg.first_violation().is_none();
        wg.add_edge(u, v);
        !still
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{gen_named, NamedGraph};
    use crate::subgraph::is_minimal_spanning_dd2;

    fn k4() -> Graph {
        gen_named(NamedGraph::Complete { n: 4 }).unwrap()
    }

    #[test]
    fn minvc_counts() {
        let map = gen_minvc_gadget(&k4()).unwrap();
        assert_eq!((map.target.n(), map.target.m()), (30, 36));
        assert!(map.target.min_degree() >= 2);
        assert_eq!(map.target.max_degree(), 4);
    }

    #[test]
    fn minvc_forward_and_back() {
        let map = gen_minvc_gadget(&k4()).unwrap();
        let h = vc_to_min_subgraph(&map, &[0, 1, 2]).unwrap();
        assert_eq!(h.len(), 25);
        assert!(is_minimal_spanning_dd2(&h) && is_minimal_by_deletion(&h));
        let back = minvc_subgraph_to_vc(&map, &h).unwrap();
        assert_eq!(back.set, vec![0, 1, 2]);
        assert_eq!(back.normalized.len(), 25);
    }

    #[test]
    fn minvc_rejects_bad_input() {
        let map = gen_minvc_gadget(&k4()).unwrap();
        assert!(vc_to_min_subgraph(&map, &[0, 1]).is_err());
        assert!(vc_to_min_subgraph(&map, &[0, 1, 2, 3]).is_err());
        let c4 = gen_named(NamedGraph::Cycle { n: 4 }).unwrap();
        assert_eq!(gen_minvc_gadget(&c4), Err(Error::NotCubic));
        let full = SpanningSubgraph::full(&map.target);
        assert!(minvc_subgraph_to_vc(&map, &full).is_err());
    }

    #[test]
    fn minvc_all_edges_but_cycle_chords() {
        // E_H minus every s_i p_i and s_i r_i: minimal, no 4-cycle kept
        let map = gen_minvc_gadget(&k4()).unwrap();
        let drop: Vec<Edge> = (0..4)
            .flat_map(|i| {
                let (p, r, s) = (map.slot(i, P), map.slot(i, R), map.slot(i, S));
                [canonical(s, p), canonical(r, s)]
            })
            .collect();
        let kept = map
            .target
            .edges()
            .iter()
            .copied()
            .filter(|e| !drop.contains(e));
        let h = SpanningSubgraph::new(&map.target, kept).unwrap();
        assert_eq!(h.len(), 28);
        assert!(is_minimal_by_deletion(&h));
        let back = minvc_subgraph_to_vc(&map, &h).unwrap();
        assert!(is_vertex_cover(
            &map.source,
            &membership(4, &back.set).unwrap()
        ));
        assert!(back.normalized.len() <= 28);
    }

    #[test]
    fn maxis_counts_and_maps() {
        let map = gen_maxis_gadget(&k4()).unwrap();
        assert_eq!((map.target.n(), map.target.m()), (26, 28));
        let h = is_to_max_subgraph(&map, &[0]).unwrap();
        assert_eq!(h.len(), 19);
        assert!(is_minimal_spanning_dd2(&h) && is_minimal_by_deletion(&h));
        assert_eq!(maxis_subgraph_to_is(&map, &h).unwrap().set, vec![0]);
        assert!(is_to_max_subgraph(&map, &[]).is_err());
    }

    #[test]
    fn maxis_normalizes_p5_components() {
        // v_0 and v_1 share a P5 through e_01; all other vertices are stars
        let g = k4();
        let map = gen_maxis_gadget(&g).unwrap();
        let mut kept = Vec::new();
        for i in 0..4 {
            kept.extend([
                (map.slot(i, P), map.slot(i, Q)),
                (map.slot(i, Q), map.slot(i, R)),
            ]);
            kept.push((map.slot(i, S), i));
        }
        let e = |u, v| map.edge_vertex(u, v).unwrap();
        kept.extend([(0, e(0, 1)), (1, e(0, 1))]);
        kept.extend([(2, e(0, 2)), (2, e(1, 2)), (2, e(2, 3))]);
        kept.extend([(3, e(0, 3)), (3, e(1, 3))]);
        let h = SpanningSubgraph::new(&map.target, kept).unwrap();
        assert!(is_minimal_by_deletion(&h));
        let back = maxis_subgraph_to_is(&map, &h).unwrap();
        assert_eq!(back.set, vec![0]);
        assert_eq!(back.normalized.len(), h.len());
    }

    #[test]
    fn maxmin_p3() {
        let p3 = gen_named(NamedGraph::Path { n: 3 }).unwrap();
        let map = gen_maxmin_gadget(&p3).unwrap();
        assert_eq!((map.target.n(), map.target.m()), (17, 18));
        assert!(map.target.is_bipartite());
        assert!(!is_dd2(&map.target).is_dd2);

        let plan = vc_to_edge_addition(&map, &[0, 2]).unwrap();
        assert_eq!(plan.len(), 6);
        assert!(is_minimal_addition(&map.target, &plan));
        assert_eq!(edge_addition_to_vc(&map, &plan).unwrap(), vec![0, 2]);

        let plan = vc_to_edge_addition(&map, &[1]).unwrap();
        assert_eq!(plan.len(), 3);
        assert!(is_minimal_addition(&map.target, &plan));
        assert_eq!(edge_addition_to_vc(&map, &plan).unwrap(), vec![1]);

        assert!(vc_to_edge_addition(&map, &[0]).is_err());
        assert!(edge_addition_to_vc(&map, &EdgeAdditionPlan::default()).is_err());
    }

    #[test]
    fn gadget_map_json() {
        let map = gen_maxmin_gadget(&gen_named(NamedGraph::Path { n: 3 }).unwrap()).unwrap();
        let back: GadgetMap = serde_json::from_str(&map.to_json()).unwrap();
        assert_eq!(back, map);
        assert_eq!(map.vertex_tables.hub, Some(16));
        assert_eq!(map.edge_vertex(1, 2), Some(4));
    }
}
