use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::graph::{canonical, Edge, Graph};

pub(crate) fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random simple 3-regular graph from the pairing model, retrying until the
/// pairing has no loops or parallel edges.
pub fn gen_random_cubic(n: usize, seed: u64) -> Result<Graph, Error> {
    if n < 4 || n % 2 == 1 {
        return Err(Error::InvalidParameter(format!(
            "cubic graphs need an even n >= 4, got {n}"
        )));
    }
    let mut rng = rng(seed);
    let mut points: Vec<usize> = (0..3 * n).map(|p| p / 3).collect();
    loop {
        points.shuffle(&mut rng);
        let mut edges: Vec<Edge> = points
            .chunks_exact(2)
            .map(|pair| canonical(pair[0], pair[1]))
            .collect();
        if edges.iter().any(|&(u, v)| u == v) {
            continue;
        }
        edges.sort_unstable();
        if edges.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        return Graph::from_edges(n, edges);
    }
}

/// Binomial random graph: each pair, in lexicographic order, is an edge with
/// probability `p`.
pub fn gen_random_graph(n: usize, p: f64, seed: u64) -> Result<Graph, Error> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!(
            "edge probability {p} not in [0, 1]"
        )));
    }
    let mut rng = rng(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}
