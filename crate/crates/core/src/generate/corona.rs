use rand::Rng;
use serde::{Deserialize, Serialize};

use super::random::rng;
use crate::error::Error;
use crate::graph::{Graph, Vertex};

/// A multigraph given by its vertex count and an edge list that may repeat
/// pairs. Loops are not allowed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultigraphSpec {
    pub n: usize,
    pub edges: Vec<(Vertex, Vertex)>,
}

impl MultigraphSpec {
    fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    fn validate(&self) -> Result<(), Error> {
        for &(u, v) in &self.edges {
            for x in [u, v] {
                if x >= self.n {
                    return Err(Error::VertexOutOfRange {
                        vertex: x,
                        n: self.n,
                    });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
        }
        Ok(())
    }

    fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Connected, and every vertex is a leaf or adjacent to one.
    pub fn is_connected_corona(&self) -> bool {
        if self.validate().is_err() || !self.is_connected() {
            return false;
        }
        let deg = self.degrees();
        let mut near_leaf = vec![false; self.n];
        for &(u, v) in &self.edges {
            near_leaf[u] |= deg[v] == 1;
            near_leaf[v] |= deg[u] == 1;
        }
        (0..self.n).all(|v| deg[v] == 1 || near_leaf[v])
    }
}

/// Subdivision of a connected corona multigraph. Original vertices keep
/// their ids and edge `k` of the multigraph becomes vertex `n + k`.
pub fn gen_corona_subdivision(spec: &MultigraphSpec) -> Result<Graph, Error> {
    spec.validate()?;
    if !spec.is_connected_corona() {
        return Err(Error::InvalidParameter(
            "multigraph is not a connected corona graph".into(),
        ));
    }
    let n = spec.n;
    Graph::from_edges(
        n + spec.edges.len(),
        spec.edges
            .iter()
            .enumerate()
            .flat_map(|(k, &(u, v))| [(u, n + k), (v, n + k)]),
    )
}

/// Random connected corona multigraph on `core` non-leaf vertices: a random
/// tree, a few extra (possibly parallel) edges, and one to three pendants per
/// core vertex.
pub fn gen_random_corona_spec(core: usize, seed: u64) -> Result<MultigraphSpec, Error> {
    if core == 0 {
        return Err(Error::InvalidParameter(
            "corona core must be non-empty".into(),
        ));
    }
    let mut rng = rng(seed);
    let mut edges: Vec<(Vertex, Vertex)> = (1..core).map(|v| (rng.gen_range(0..v), v)).collect();
    if core >= 2 {
        for _ in 0..rng.gen_range(0..=core / 2) {
            let u = rng.gen_range(0..core);
            let v = rng.gen_range(0..core);
            if u != v {
                edges.push((u, v));
            }
        }
    }
    let mut n = core;
    for v in 0..core {
        for _ in 0..rng.gen_range(1..=3) {
            edges.push((v, n));
            n += 1;
        }
    }
    Ok(MultigraphSpec { n, edges })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subgraph::{classify_minimal_component, MinimalComponentKind, SpanningSubgraph};
    use crate::subgraph::{is_minimal_by_deletion, is_minimal_spanning_dd2};

    fn spec(n: usize, edges: &[(usize, usize)]) -> MultigraphSpec {
        MultigraphSpec {
            n,
            edges: edges.to_vec(),
        }
    }

    #[test]
    fn corona_p3_gives_p5() {
        let g = gen_corona_subdivision(&spec(3, &[(0, 1), (1, 2)])).unwrap();
        assert_eq!(g.edges(), &[(0, 3), (1, 3), (1, 4), (2, 4)]);
        let kind = classify_minimal_component(&g, &[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(
            kind,
            Some(MinimalComponentKind::CoronaSubdivision {
                side_a: vec![3, 4],
                side_b: vec![0, 1, 2]
            })
        );
    }

    #[test]
    fn k2_gives_p3() {
        let g = gen_corona_subdivision(&spec(2, &[(0, 1)])).unwrap();
        assert_eq!(g.edges(), &[(0, 2), (1, 2)]);
    }

    #[test]
    fn corona_triangle() {
        let s = spec(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]);
        let g = gen_corona_subdivision(&s).unwrap();
        assert_eq!(g.n(), 12);
        let all: Vec<usize> = g.vertices().collect();
        assert!(matches!(
            classify_minimal_component(&g, &all).unwrap(),
            Some(MinimalComponentKind::CoronaSubdivision { .. })
        ));
        let h = SpanningSubgraph::full(&g);
        assert!(is_minimal_spanning_dd2(&h) && is_minimal_by_deletion(&h));
    }

    #[test]
    fn parallel_edges_allowed() {
        let s = spec(4, &[(0, 1), (0, 1), (0, 2), (1, 3)]);
        let g = gen_corona_subdivision(&s).unwrap();
        assert!(is_minimal_by_deletion(&SpanningSubgraph::full(&g)));
    }

    #[test]
    fn rejects_non_corona() {
        assert!(gen_corona_subdivision(&spec(3, &[(0, 1), (1, 2), (0, 2)])).is_err());
        assert!(gen_corona_subdivision(&spec(4, &[(0, 1), (2, 3)])).is_err());
        assert!(gen_corona_subdivision(&spec(2, &[(0, 0)])).is_err());
    }

    #[test]
    fn random_specs_are_corona() {
        for seed in 0..30 {
            let s = gen_random_corona_spec(1 + seed as usize % 5, seed).unwrap();
            assert!(s.is_connected_corona());
            let g = gen_corona_subdivision(&s).unwrap();
            assert!(is_minimal_by_deletion(&SpanningSubgraph::full(&g)));
        }
    }
}
