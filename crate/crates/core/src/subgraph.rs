//! Spanning subgraphs, minimal DD2 structure, and greedy minimalization.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::{canonical, Edge, Graph, Vertex};
use crate::recognize::{first_violation, is_dd2, WorkingGraph};

/// An edge subset of `parent` over the full vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningSubgraph<'g> {
    parent: &'g Graph,
    kept: Vec<Edge>,
}

impl<'g> SpanningSubgraph<'g> {
    pub fn new(parent: &'g Graph, kept: impl IntoIterator<Item = Edge>) -> Result<Self, Error> {
        let mut kept: Vec<Edge> = kept.into_iter().map(|(u, v)| canonical(u, v)).collect();
        kept.sort_unstable();
        kept.dedup();
        if let Some(&(u, v)) = kept.iter().find(|&&(u, v)| !parent.has_edge(u, v)) {
            return Err(Error::EdgeNotInParent(u, v));
        }
        Ok(Self { parent, kept })
    }

    pub fn full(parent: &'g Graph) -> Self {
        Self {
            parent,
            kept: parent.edges().to_vec(),
        }
    }

    pub fn parent(&self) -> &'g Graph {
        self.parent
    }

    /// Kept edges in canonical order.
    pub fn kept(&self) -> &[Edge] {
        &self.kept
    }

    pub fn len(&self) -> usize {
        self.kept.len()
    }

    pub fn is_empty(&self) -> bool {
        self.kept.is_empty()
    }

    pub fn to_graph(&self) -> Graph {
        Graph::from_sorted_unchecked(self.parent.n(), self.kept.clone())
    }
}

/// Shape of a connected minimal DD2-graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MinimalComponentKind {
    Star {
        center: Vertex,
    },
    CycleC4 {
        vertices: Vec<Vertex>,
    },
    /// Subdivision of a connected corona multigraph; `side_a` are the
    /// subdivision vertices (all of degree two).
    CoronaSubdivision {
        side_a: Vec<Vertex>,
        side_b: Vec<Vertex>,
    },
}

fn component_of(g: &Graph, start: Vertex) -> Vec<Vertex> {
    let mut seen = vec![false; g.n()];
    seen[start] = true;
    let mut stack = vec![start];
    let mut out = vec![start];
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                out.push(w);
                stack.push(w);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Classifies a connected component as one of the three minimal DD2 shapes,
/// or `None` when it is none of them. `P3` is reported as a star.
pub fn classify_minimal_component(
    g: &Graph,
    comp: &[Vertex],
) -> Result<Option<MinimalComponentKind>, Error> {
    let mut comp = comp.to_vec();
    comp.sort_unstable();
    comp.dedup();
    let Some(&first) = comp.first() else {
        return Err(Error::NotAComponent);
    };
    if first >= g.n() || component_of(g, first) != comp {
        return Err(Error::NotAComponent);
    }
    let size = comp.len();
    let edges: usize = comp.iter().map(|&v| g.degree(v)).sum::<usize>() / 2;

    if size >= 3 && edges == size - 1 {
        if let Some(&center) = comp.iter().find(|&&v| g.degree(v) == size - 1) {
            return Ok(Some(MinimalComponentKind::Star { center }));
        }
    }
    if size == 4 && edges == 4 && comp.iter().all(|&v| g.degree(v) == 2) {
        return Ok(Some(MinimalComponentKind::CycleC4 { vertices: comp }));
    }
    let Some((x, y)) = g.two_color(&comp) else {
        return Ok(None);
    };
    for (side_a, side_b) in [(&x, &y), (&y, &x)] {
        if side_a.is_empty() || !side_a.iter().all(|&a| g.degree(a) == 2) {
            continue;
        }
        let near_leaf = |b: Vertex| {
            g.degree(b) == 1
                || g.neighbors(b)
                    .iter()
                    .any(|&a| g.neighbors(a).iter().any(|&c| c != b && g.degree(c) == 1))
        };
        if side_b.iter().all(|&b| near_leaf(b)) {
            return Ok(Some(MinimalComponentKind::CoronaSubdivision {
                side_a: side_a.clone(),
                side_b: side_b.clone(),
            }));
        }
    }
    Ok(None)
}

/// Structural test: `h` is DD2 and every component is a star, a `C4`, or a
/// corona subdivision.
pub fn is_minimal_spanning_dd2(h: &SpanningSubgraph<'_>) -> bool {
    let graph = h.to_graph();
    is_dd2(&graph).is_dd2
        && graph
            .components()
            .iter()
            .all(|comp| matches!(classify_minimal_component(&graph, comp), Ok(Some(_))))
}

/// Definitional test: `h` is DD2 and deleting any single kept edge breaks it.
pub fn is_minimal_by_deletion(h: &SpanningSubgraph<'_>) -> bool {
    let graph = h.to_graph();
    if !is_dd2(&graph).is_dd2 {
        return false;
    }
    let mut wg = WorkingGraph::new(&graph);
    h.kept().iter().all(|&(u, v)| {
        wg.remove_edge(u, v);
        let still = first_violation(wg.adjacency()).is_none();
        wg.add_edge(u, v);
        !still
    })
}

/// Order in which [`minimalize`] tries edge deletions.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DeletionOrder {
    /// Ascending `(u, v)`.
    #[default]
    Lexicographic,
    /// Ascending endpoint degree sum (in the input graph), ties lexicographic.
    LowDegreeFirst,
    /// Descending endpoint degree sum, ties lexicographic.
    HighDegreeFirst,
    /// Explicit permutation of the edge set.
    Explicit(Vec<Edge>),
}

impl DeletionOrder {
    fn sequence(&self, g: &Graph) -> Result<Vec<Edge>, Error> {
        let key = |&(u, v): &Edge| g.degree(u) + g.degree(v);
        let mut edges = g.edges().to_vec();
        match self {
            DeletionOrder::Lexicographic => {}
            DeletionOrder::LowDegreeFirst => edges.sort_by_key(|e| (key(e), *e)),
            DeletionOrder::HighDegreeFirst => {
                edges.sort_by_key(|e| (std::cmp::Reverse(key(e)), *e))
            }
            DeletionOrder::Explicit(order) => {
                let mut given: Vec<Edge> = order.iter().map(|&(u, v)| canonical(u, v)).collect();
                let mut sorted = given.clone();
                sorted.sort_unstable();
                if sorted != edges {
                    return Err(Error::InvalidParameter(
                        "deletion order must be a permutation of the edge set".into(),
                    ));
                }
                std::mem::swap(&mut edges, &mut given);
            }
        }
        Ok(edges)
    }
}

/// Deletes edges greedily, in `order` with repeated passes, while the graph
/// stays DD2. The result is a minimal spanning DD2 subgraph of `g`.
pub fn minimalize<'g>(g: &'g Graph, order: &DeletionOrder) -> Result<SpanningSubgraph<'g>, Error> {
    if !is_dd2(g).is_dd2 {
        return Err(Error::NotDd2);
    }
    let sequence = order.sequence(g)?;
    let mut present = vec![true; sequence.len()];
    let mut wg = WorkingGraph::new(g);
    loop {
        let mut changed = false;
        for (i, &(u, v)) in sequence.iter().enumerate() {
            if present[i] && wg.deletion_keeps_dd2(u, v) {
                wg.remove_edge(u, v);
                present[i] = false;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let kept = sequence
        .into_iter()
        .zip(present)
        .filter_map(|(e, keep)| keep.then_some(e));
    SpanningSubgraph::new(g, kept)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[Edge]) -> Graph {
        Graph::from_edges(n, e.iter().copied()).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn k4() -> Graph {
        g(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    }

    #[test]
    fn classify_examples() {
        let p3 = path(3);
        assert_eq!(
            classify_minimal_component(&p3, &[0, 1, 2]).unwrap(),
            Some(MinimalComponentKind::Star { center: 1 })
        );
        let c4 = cycle(4);
        assert_eq!(
            classify_minimal_component(&c4, &[0, 1, 2, 3]).unwrap(),
            Some(MinimalComponentKind::CycleC4 {
                vertices: vec![0, 1, 2, 3]
            })
        );
        let p5 = path(5);
        assert_eq!(
            classify_minimal_component(&p5, &[0, 1, 2, 3, 4]).unwrap(),
            Some(MinimalComponentKind::CoronaSubdivision {
                side_a: vec![1, 3],
                side_b: vec![0, 2, 4]
            })
        );
        let c6 = cycle(6);
        assert_eq!(
            classify_minimal_component(&c6, &[0, 1, 2, 3, 4, 5]).unwrap(),
            None
        );
    }

    #[test]
    fn classify_rejects_non_components() {
        let p3 = path(3);
        assert_eq!(
            classify_minimal_component(&p3, &[0, 1]),
            Err(Error::NotAComponent)
        );
        assert_eq!(
            classify_minimal_component(&p3, &[]),
            Err(Error::NotAComponent)
        );
    }

    #[test]
    fn small_non_minimal_shapes() {
        assert_eq!(classify_minimal_component(&path(2), &[0, 1]).unwrap(), None);
        assert_eq!(
            classify_minimal_component(&path(4), &[0, 1, 2, 3]).unwrap(),
            None
        );
        assert_eq!(
            classify_minimal_component(&Graph::empty(1), &[0]).unwrap(),
            None
        );
        assert_eq!(
            classify_minimal_component(&cycle(3), &[0, 1, 2]).unwrap(),
            None
        );
    }

    #[test]
    fn minimal_spanning_examples() {
        let k4 = k4();
        let star = SpanningSubgraph::new(&k4, [(0, 3), (1, 3), (2, 3)]).unwrap();
        assert!(is_minimal_spanning_dd2(&star));
        assert!(is_minimal_by_deletion(&star));
        let all = SpanningSubgraph::full(&k4);
        assert!(!is_minimal_spanning_dd2(&all));
        assert!(!is_minimal_by_deletion(&all));
        let c4 = cycle(4);
        let all = SpanningSubgraph::full(&c4);
        assert!(is_minimal_spanning_dd2(&all));
        assert!(is_minimal_by_deletion(&all));
    }

    #[test]
    fn minimalize_k4_gives_spanning_star() {
        let k4 = k4();
        let h = minimalize(&k4, &DeletionOrder::Lexicographic).unwrap();
        assert_eq!(h.kept(), &[(0, 3), (1, 3), (2, 3)]);
    }

    #[test]
    fn minimalize_keeps_minimal_inputs() {
        let c4 = cycle(4);
        assert_eq!(minimalize(&c4, &DeletionOrder::default()).unwrap().len(), 4);
        let p3 = path(3);
        assert_eq!(
            minimalize(&p3, &DeletionOrder::default()).unwrap().kept(),
            p3.edges()
        );
    }

    #[test]
    fn minimalize_rejects_non_dd2() {
        assert_eq!(
            minimalize(&path(4), &DeletionOrder::default()),
            Err(Error::NotDd2)
        );
    }

    #[test]
    fn explicit_order_must_be_permutation() {
        let k4 = k4();
        let bad = DeletionOrder::Explicit(vec![(0, 1)]);
        assert!(matches!(
            minimalize(&k4, &bad),
            Err(Error::InvalidParameter(_))
        ));
        let reversed: Vec<Edge> = k4.edges().iter().rev().copied().collect();
        let h = minimalize(&k4, &DeletionOrder::Explicit(reversed)).unwrap();
        assert!(is_minimal_by_deletion(&h));
    }

    #[test]
    fn c6_minimalizes_to_two_p3() {
        // (0,1) goes first, leaving a P6 whose middle edge (3,4) splits it into two P3s.
        let c6 = cycle(6);
        let h = minimalize(&c6, &DeletionOrder::default()).unwrap();
        assert_eq!(h.kept(), &[(0, 5), (1, 2), (2, 3), (4, 5)]);
        assert!(is_minimal_spanning_dd2(&h));
    }
}
