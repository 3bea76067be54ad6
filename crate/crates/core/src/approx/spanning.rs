use crate::error::Error;
use crate::graph::Graph;
use crate::pair::find_dd2_pair;
use crate::subgraph::{minimalize, DeletionOrder, SpanningSubgraph};

/// Factor-3 approximation of the smallest minimal spanning DD2 subgraph.
///
/// Keeps only the edges across a DD2-pair `(A, B)` and minimalizes. Every
/// component of the result with `k` vertices has at most `2(k - 2)` edges,
/// while any spanning DD2 subgraph needs at least `2n/3`.
pub fn approx_min_dd2(g: &Graph) -> Result<SpanningSubgraph<'_>, Error> {
    let pair = find_dd2_pair(g)?;
    let mut in_a = vec![false; g.n()];
    for &v in &pair.a {
        in_a[v] = true;
    }
    let crossing: Vec<_> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| in_a[u] != in_a[v])
        .collect();
    let bipartite = g.subgraph_with_edges(&crossing)?;
    let h = minimalize(&bipartite, &DeletionOrder::Lexicographic)?;
    SpanningSubgraph::new(g, h.kept().iter().copied())
}

/// Returns some minimal spanning DD2 subgraph, deleting low-degree edges
/// first. Any minimal one is within factor 3 of the largest (1.5 on
/// 3-regular graphs).
pub fn approx_max_dd2(g: &Graph) -> Result<SpanningSubgraph<'_>, Error> {
    minimalize(g, &DeletionOrder::LowDegreeFirst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subgraph::{is_minimal_by_deletion, is_minimal_spanning_dd2};

    fn k4() -> Graph {
        Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn min_examples() {
        assert_eq!(approx_min_dd2(&k4()).unwrap().len(), 3);
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert_eq!(approx_min_dd2(&c4).unwrap().len(), 4);
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(approx_min_dd2(&p3).unwrap().kept(), p3.edges());
    }

    #[test]
    fn max_examples() {
        let k4 = k4();
        let h = approx_max_dd2(&k4).unwrap();
        assert!(h.len() >= 3);
        assert!(is_minimal_spanning_dd2(&h) && is_minimal_by_deletion(&h));
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(approx_max_dd2(&p3).unwrap().len(), 2);
    }

    #[test]
    fn rejects_non_dd2() {
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(approx_min_dd2(&p4), Err(Error::NotDd2));
        assert_eq!(approx_max_dd2(&p4), Err(Error::NotDd2));
    }
}
