//! Immutable simple undirected graphs over dense vertex ids `0..n`.

use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError, ParseErrorKind};

pub type Vertex = usize;

/// Unordered edge stored as `(u, v)` with `u < v`.
pub type Edge = (Vertex, Vertex);

/// Returns the canonical orientation of `{u, v}`.
#[inline]
pub fn canonical(u: Vertex, v: Vertex) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A simple undirected graph. Adjacency lists and the edge list are kept
/// sorted so every iteration over the graph is deterministic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct Graph {
    adjacency: Vec<Vec<Vertex>>,
    edges: Vec<Edge>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<Edge>,
}

impl TryFrom<GraphRepr> for Graph {
    type Error = Error;

    fn try_from(repr: GraphRepr) -> Result<Self, Self::Error> {
        Graph::from_edges(repr.n, repr.edges)
    }
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> Self {
        GraphRepr {
            n: g.n(),
            edges: g.edges,
        }
    }
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Self {
            adjacency: vec![Vec::new(); n],
            edges: Vec::new(),
        }
    }

    /// Builds a graph from an arbitrary list of vertex pairs. Pairs are
    /// canonicalized; self-loops, duplicates and out-of-range ids are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: u.max(v),
                    n,
                });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            list.push(canonical(u, v));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_sorted_unchecked(n, list))
    }

    /// `edges` must be canonical, sorted and free of duplicates.
    pub(crate) fn from_sorted_unchecked(n: usize, edges: Vec<Edge>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Self { adjacency, edges }
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn adjacency(&self) -> &[Vec<Vertex>] {
        &self.adjacency
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    /// Closed neighborhood `N[v]`, sorted.
    pub fn closed_neighborhood(&self, v: Vertex) -> Vec<Vertex> {
        let mut out = self.adjacency[v].clone();
        let pos = out.partition_point(|&x| x < v);
        out.insert(pos, v);
        out
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && v < self.n() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Minimum degree; `0` for the graph without vertices.
    pub fn min_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.adjacency.iter().all(|a| a.len() == d)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adjacency.iter().any(Vec::is_empty)
    }

    /// Unordered non-adjacent vertex pairs in ascending lexicographic order.
    pub fn non_edges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for u in self.vertices() {
            for v in u + 1..self.n() {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Connected components, each sorted, ordered by minimum member.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for start in self.vertices() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adjacency[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Proper 2-coloring of each component (aligned with [`Graph::components`]).
    /// The side holding the component's minimum vertex comes first; `None`
    /// marks a component with an odd cycle.
    pub fn bipartition(&self) -> Vec<Option<(Vec<Vertex>, Vec<Vertex>)>> {
        self.components()
            .iter()
            .map(|comp| self.two_color(comp))
            .collect()
    }

    pub(crate) fn two_color(&self, comp: &[Vertex]) -> Option<(Vec<Vertex>, Vec<Vertex>)> {
        let mut color: BTreeMap<Vertex, bool> = BTreeMap::new();
        let start = *comp.first()?;
        color.insert(start, false);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let cu = color[&u];
            for &w in &self.adjacency[u] {
                match color.get(&w) {
                    Some(&cw) if cw == cu => return None,
                    Some(_) => {}
                    None => {
                        color.insert(w, !cu);
                        queue.push_back(w);
                    }
                }
            }
        }
        let (x, y): (Vec<_>, Vec<_>) = color.into_iter().partition(|&(_, c)| !c);
        Some((
            x.into_iter().map(|(v, _)| v).collect(),
            y.into_iter().map(|(v, _)| v).collect(),
        ))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().iter().all(Option::is_some)
    }

    /// Spanning subgraph on the same vertex set with exactly `keep`.
    pub fn subgraph_with_edges(&self, keep: &[Edge]) -> Result<Graph, Error> {
        let mut list = Vec::with_capacity(keep.len());
        for &(u, v) in keep {
            if !self.has_edge(u, v) {
                return Err(Error::EdgeNotInParent(u, v));
            }
            list.push(canonical(u, v));
        }
        list.sort_unstable();
        list.dedup();
        Ok(Graph::from_sorted_unchecked(self.n(), list))
    }

    /// `self` plus the given new edges, which must all be non-edges.
    pub fn with_added_edges(&self, extra: &[Edge]) -> Result<Graph, Error> {
        let mut list = self.edges.clone();
        list.extend(extra.iter().map(|&(u, v)| canonical(u, v)));
        Graph::from_edges(self.n(), list)
    }

    /// Number of edges with both endpoints in `set` (which must be sorted).
    pub fn induced_edge_count(&self, set: &[Vertex]) -> usize {
        self.edges
            .iter()
            .filter(|(u, v)| set.binary_search(u).is_ok() && set.binary_search(v).is_ok())
            .count()
    }

    /// Leaves, weak and strong supports.
    pub fn classify_vertices(&self) -> VertexClassification {
        VertexClassification::of(self)
    }

    /// Edge-list text: a `#` header followed by `n m` and one `u v` per edge.
    pub fn to_edge_list(&self, provenance: &[(&str, String)]) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# n={} m={}", self.n(), self.m());
        for (key, value) in provenance {
            let _ = writeln!(out, "# {key}={value}");
        }
        let _ = writeln!(out, "{} {}", self.n(), self.m());
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

impl std::str::FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_edge_list(s)
    }
}

fn parse_error(line: usize, kind: ParseErrorKind) -> Error {
    Error::Parse(ParseError { line, kind })
}

fn parse_pair(line_no: usize, line: &str) -> Result<(usize, usize), Error> {
    let mut it = line.split_whitespace();
    let parsed = match (it.next(), it.next(), it.next()) {
        (Some(a), Some(b), None) => a.parse::<usize>().ok().zip(b.parse::<usize>().ok()),
        _ => None,
    };
    parsed.ok_or_else(|| parse_error(line_no, ParseErrorKind::Malformed(line.to_string())))
}

/// Parses the edge-list format. Lines starting with `#` and blank lines are
/// ignored; the first remaining line is `n m`, followed by exactly `m` edges.
/// Errors carry 1-based line numbers.
pub fn parse_edge_list(text: &str) -> Result<Graph, Error> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| parse_error(0, ParseErrorKind::MissingHeader))?;
    let (n, m) = parse_pair(header_line, header)?;

    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::with_capacity(m);
    let mut last_line = header_line;
    for (line_no, line) in lines {
        last_line = line_no;
        if edges.len() == m {
            return Err(parse_error(line_no, ParseErrorKind::TooManyEdges(m)));
        }
        let (u, v) = parse_pair(line_no, line)?;
        if u >= n || v >= n {
            return Err(parse_error(
                line_no,
                ParseErrorKind::OutOfRange {
                    vertex: u.max(v),
                    n,
                },
            ));
        }
        if u == v {
            return Err(parse_error(line_no, ParseErrorKind::SelfLoop(u)));
        }
        let e = canonical(u, v);
        if !seen.insert(e) {
            return Err(parse_error(
                line_no,
                ParseErrorKind::DuplicateEdge(e.0, e.1),
            ));
        }
        edges.push(e);
    }
    if edges.len() != m {
        return Err(parse_error(
            last_line,
            ParseErrorKind::TooFewEdges {
                expected: m,
                found: edges.len(),
            },
        ));
    }
    edges.sort_unstable();
    Ok(Graph::from_sorted_unchecked(n, edges))
}

/// Leaves and support vertices of a graph.
///
/// A vertex in a `K2` component is both a leaf and a weak support; everywhere
/// else the three sets are disjoint.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexClassification {
    pub leaves: Vec<Vertex>,
    pub weak_supports: Vec<Vertex>,
    pub strong_supports: Vec<Vertex>,
    /// `pendants[v]` lists the leaf neighbors of `v` (empty for non-supports).
    pub pendants: Vec<Vec<Vertex>>,
}

impl VertexClassification {
    fn of(g: &Graph) -> Self {
        let is_leaf: Vec<bool> = g.vertices().map(|v| g.degree(v) == 1).collect();
        let pendants: Vec<Vec<Vertex>> = g
            .vertices()
            .map(|v| {
                g.neighbors(v)
                    .iter()
                    .copied()
                    .filter(|&w| is_leaf[w])
                    .collect()
            })
            .collect();
        let leaves = g.vertices().filter(|&v| is_leaf[v]).collect();
        let weak_supports = g.vertices().filter(|&v| pendants[v].len() == 1).collect();
        let strong_supports = g.vertices().filter(|&v| pendants[v].len() >= 2).collect();
        Self {
            leaves,
            weak_supports,
            strong_supports,
            pendants,
        }
    }

    pub fn is_leaf(&self, v: Vertex) -> bool {
        self.leaves.binary_search(&v).is_ok()
    }

    pub fn is_support(&self, v: Vertex) -> bool {
        !self.pendants[v].is_empty()
    }

    pub fn is_weak_support(&self, v: Vertex) -> bool {
        self.pendants[v].len() == 1
    }

    pub fn is_strong_support(&self, v: Vertex) -> bool {
        self.pendants[v].len() >= 2
    }

    /// Leaves hanging from weak supports.
    pub fn weak_leaves(&self) -> Vec<Vertex> {
        let mut out: Vec<_> = self
            .weak_supports
            .iter()
            .flat_map(|&s| self.pendants[s].iter().copied())
            .collect();
        out.sort_unstable();
        out
    }

    /// Leaves hanging from strong supports.
    pub fn strong_leaves(&self) -> Vec<Vertex> {
        let mut out: Vec<_> = self
            .strong_supports
            .iter()
            .flat_map(|&s| self.pendants[s].iter().copied())
            .collect();
        out.sort_unstable();
        out
    }
}
