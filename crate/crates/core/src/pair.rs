//! DD2-pairs: a partition `(A, B)` with `A` dominating and `B` 2-dominating.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::{Graph, Vertex};
use crate::subgraph::{
    classify_minimal_component, minimalize, DeletionOrder, MinimalComponentKind,
};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dd2Pair {
    /// Dominating side.
    pub a: Vec<Vertex>,
    /// 2-dominating side.
    pub b: Vec<Vertex>,
}

impl Dd2Pair {
    /// `A: ...` and `B: ...` lines of whitespace-separated ids.
    pub fn to_text(&self) -> String {
        let mut out = String::from("A:");
        for v in &self.a {
            let _ = write!(out, " {v}");
        }
        out.push_str("\nB:");
        for v in &self.b {
            let _ = write!(out, " {v}");
        }
        out.push('\n');
        out
    }

    pub fn parse(text: &str) -> Result<Self, Error> {
        let mut a = None;
        let mut b = None;
        for line in text.lines().map(str::trim) {
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (label, rest) = line.split_once(':').ok_or_else(|| {
                Error::InvalidParameter(format!("expected `A:` or `B:` line, got `{line}`"))
            })?;
            let ids = rest
                .split_whitespace()
                .map(|t| t.parse::<Vertex>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| Error::InvalidParameter(format!("bad vertex id: {e}")))?;
            match label.trim() {
                "A" => a = Some(ids),
                "B" => b = Some(ids),
                other => return Err(Error::InvalidParameter(format!("unknown label `{other}`"))),
            }
        }
        match (a, b) {
            (Some(mut a), Some(mut b)) => {
                a.sort_unstable();
                b.sort_unstable();
                Ok(Self { a, b })
            }
            _ => Err(Error::InvalidParameter(
                "pair needs both `A:` and `B:` lines".into(),
            )),
        }
    }
}

/// Checks that `p` partitions the vertices, every `B` vertex has a neighbor in
/// `A`, and every `A` vertex has at least two neighbors in `B`.
pub fn verify_pair(g: &Graph, p: &Dd2Pair) -> bool {
    const NONE: u8 = 0;
    const IN_A: u8 = 1;
    const IN_B: u8 = 2;
    let mut side = vec![NONE; g.n()];
    for (set, label) in [(&p.a, IN_A), (&p.b, IN_B)] {
        for &v in set {
            if v >= g.n() || side[v] != NONE {
                return false;
            }
            side[v] = label;
        }
    }
    if side.contains(&NONE) {
        return false;
    }
    g.vertices().all(|v| {
        let want = if side[v] == IN_A { IN_B } else { IN_A };
        let count = g.neighbors(v).iter().filter(|&&w| side[w] == want).count();
        if side[v] == IN_A {
            count >= 2
        } else {
            count >= 1
        }
    })
}

/// Extracts a DD2-pair by minimalizing `g` and reading the sides off the
/// minimal components. Adding edges back never breaks domination, so the
/// pair is valid in `g` too.
pub fn find_dd2_pair(g: &Graph) -> Result<Dd2Pair, Error> {
    let h = minimalize(g, &DeletionOrder::Lexicographic)?;
    let hg = h.to_graph();
    let mut pair = Dd2Pair::default();
    for comp in hg.components() {
        match classify_minimal_component(&hg, &comp)? {
            Some(MinimalComponentKind::Star { center }) => {
                pair.a.push(center);
                pair.b.extend(comp.iter().copied().filter(|&v| v != center));
            }
            Some(MinimalComponentKind::CycleC4 { vertices }) => {
                let first = vertices[0];
                for &v in &vertices {
                    if v == first || !hg.has_edge(first, v) {
                        pair.a.push(v);
                    } else {
                        pair.b.push(v);
                    }
                }
            }
            Some(MinimalComponentKind::CoronaSubdivision { side_a, side_b }) => {
                pair.a.extend(side_a);
                pair.b.extend(side_b);
            }
            None => unreachable!("components of a minimalized graph are minimal DD2-graphs"),
        }
    }
    pair.a.sort_unstable();
    pair.b.sort_unstable();
    Ok(pair)
}
