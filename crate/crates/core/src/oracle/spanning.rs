use super::bits::{adjacency, bit, is_dd2_bits};
use super::{Meter, OracleBudget, OracleResult};
use crate::error::{BudgetError, Error};
use crate::graph::{Edge, Graph};
use crate::recognize::is_dd2;

/// Depth-first search over edge subsets, deciding edges in ascending order
/// (include before exclude), so subsets are met in lexicographic order.
///
/// DD2 is preserved by adding edges, which gives two cuts: once the included
/// edges alone are DD2 no strict superset can be minimal, and once included
/// plus undecided edges are not DD2 no completion is.
struct Search<'a> {
    edges: &'a [Edge],
    cur: Vec<u64>,
    avail: Vec<u64>,
    chosen: Vec<Edge>,
    /// Subsets with at least this many edges are not of interest.
    cap: usize,
    meter: Meter,
}

impl Search<'_> {
    fn toggle(adj: &mut [u64], (u, v): Edge) {
        adj[u] ^= bit(v);
        adj[v] ^= bit(u);
    }

    fn cur_is_minimal(&mut self) -> bool {
        for i in 0..self.chosen.len() {
            let e = self.chosen[i];
            Self::toggle(&mut self.cur, e);
            let still = is_dd2_bits(&self.cur);
            Self::toggle(&mut self.cur, e);
            if still {
                return false;
            }
        }
        true
    }

    fn run<F>(&mut self, i: usize, visit: &mut F) -> Result<(), BudgetError>
    where
        F: FnMut(&[Edge]) -> Option<usize>,
    {
        self.meter.tick()?;
        if self.chosen.len() >= self.cap {
            return Ok(());
        }
        if i == self.edges.len() {
            // all undecided edges excluded: cur equals avail, which is DD2
            if self.cur_is_minimal() {
                self.report(visit);
            }
            return Ok(());
        }
        let e = self.edges[i];

        Self::toggle(&mut self.cur, e);
        self.chosen.push(e);
        if is_dd2_bits(&self.cur) {
            if self.chosen.len() < self.cap && self.cur_is_minimal() {
                self.report(visit);
            }
        } else {
            self.run(i + 1, visit)?;
        }
        self.chosen.pop();
        Self::toggle(&mut self.cur, e);

        Self::toggle(&mut self.avail, e);
        if is_dd2_bits(&self.avail) {
            self.run(i + 1, visit)?;
        }
        Self::toggle(&mut self.avail, e);
        Ok(())
    }

    fn report<F>(&mut self, visit: &mut F)
    where
        F: FnMut(&[Edge]) -> Option<usize>,
    {
        if let Some(cap) = visit(&self.chosen) {
            self.cap = cap;
        }
    }
}

/// Enumerates all minimal spanning DD2 subgraphs of `g` in lexicographic
/// order of their sorted edge lists. `visit` may return a new size cap.
fn enumerate<F>(g: &Graph, budget: &OracleBudget, mut visit: F) -> Result<u64, Error>
where
    F: FnMut(&[Edge]) -> Option<usize>,
{
    if !is_dd2(g).is_dd2 {
        return Err(Error::NotDd2);
    }
    budget.check_edges(g.m())?;
    let full = adjacency(g)?;
    let mut search = Search {
        edges: g.edges(),
        cur: vec![0; g.n()],
        avail: full,
        chosen: Vec::new(),
        cap: usize::MAX,
        meter: Meter::new(budget),
    };
    if is_dd2_bits(&search.cur) {
        // only the empty graph
        visit(&[]);
        return Ok(1);
    }
    search.run(0, &mut visit)?;
    Ok(search.meter.explored)
}

/// Every minimal spanning DD2 subgraph of `g`, as sorted edge lists in
/// lexicographic order.
pub fn minimal_spanning_dd2_subgraphs(
    g: &Graph,
    budget: &OracleBudget,
) -> Result<Vec<Vec<Edge>>, Error> {
    let mut out = Vec::new();
    enumerate(g, budget, |h| {
        out.push(h.to_vec());
        None
    })?;
    Ok(out)
}

/// Fewest edges in a minimal spanning DD2 subgraph (equivalently, in any
/// spanning DD2 subgraph).
pub fn exact_min_spanning_dd2(
    g: &Graph,
    budget: &OracleBudget,
) -> Result<OracleResult<Vec<Edge>>, Error> {
    let mut best: Option<Vec<Edge>> = None;
    let explored = enumerate(g, budget, |h| {
        best = Some(h.to_vec());
        Some(h.len())
    })?;
    let witness = best.expect("a DD2-graph has a minimal spanning DD2 subgraph");
    Ok(OracleResult {
        value: witness.len() as u64,
        witness,
        explored,
    })
}

/// Most edges in a minimal spanning DD2 subgraph.
pub fn exact_max_minimal_spanning_dd2(
    g: &Graph,
    budget: &OracleBudget,
) -> Result<OracleResult<Vec<Edge>>, Error> {
    let mut best: Option<Vec<Edge>> = None;
    let explored = enumerate(g, budget, |h| {
        if best.as_ref().is_none_or(|b| h.len() > b.len()) {
            best = Some(h.to_vec());
        }
        None
    })?;
    let witness = best.expect("a DD2-graph has a minimal spanning DD2 subgraph");
    Ok(OracleResult {
        value: witness.len() as u64,
        witness,
        explored,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subgraph::{is_minimal_by_deletion, SpanningSubgraph};

    fn k4() -> Graph {
        Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn k4_values() {
        let b = OracleBudget::default();
        let min = exact_min_spanning_dd2(&k4(), &b).unwrap();
        assert_eq!(min.value, 3);
        assert_eq!(min.witness, vec![(0, 1), (0, 2), (0, 3)]);
        let max = exact_max_minimal_spanning_dd2(&k4(), &b).unwrap();
        assert_eq!(max.value, 4);
        assert_eq!(max.witness, vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn k4_enumeration_is_complete() {
        let k4 = k4();
        let all = minimal_spanning_dd2_subgraphs(&k4, &OracleBudget::default()).unwrap();
        // 4 spanning stars and 3 spanning 4-cycles
        assert_eq!(all.len(), 7);
        let mut brute = Vec::new();
        for mask in 0u32..64 {
            let kept: Vec<Edge> = (0..6)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| k4.edges()[i])
                .collect();
            let h = SpanningSubgraph::new(&k4, kept.clone()).unwrap();
            if is_minimal_by_deletion(&h) {
                brute.push(kept);
            }
        }
        brute.sort();
        assert_eq!(all, brute);
    }

    #[test]
    fn small_examples() {
        let b = OracleBudget::default();
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(exact_min_spanning_dd2(&p3, &b).unwrap().value, 2);
        assert_eq!(exact_max_minimal_spanning_dd2(&p3, &b).unwrap().value, 2);
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert_eq!(exact_min_spanning_dd2(&c4, &b).unwrap().value, 4);
        assert_eq!(exact_max_minimal_spanning_dd2(&c4, &b).unwrap().value, 4);
    }

    #[test]
    fn errors() {
        let b = OracleBudget::default();
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(exact_min_spanning_dd2(&p4, &b), Err(Error::NotDd2));
        let tiny = OracleBudget { max_edges: 5, ..b };
        assert!(exact_min_spanning_dd2(&k4(), &tiny)
            .unwrap_err()
            .is_budget());
        let starved = OracleBudget {
            max_subsets: 3,
            ..b
        };
        assert!(exact_max_minimal_spanning_dd2(&k4(), &starved)
            .unwrap_err()
            .is_budget());
    }
}
