use super::bits::{adjacency, bit, for_each_combination, is_dd2_bits};
use super::{Meter, OracleBudget, OracleResult};
use crate::approx::EdgeAdditionPlan;
use crate::error::Error;
use crate::graph::{Edge, Graph};
use crate::recognize::is_dd2;

/// Fewest new edges making `g` DD2, by iterative deepening over non-edge
/// subsets (lexicographic within each size).
///
/// Only the vertex count and the number of candidate subsets are budgeted:
/// the optimum is usually tiny even when there are many non-edges.
pub fn exact_min_edge_addition(
    g: &Graph,
    budget: &OracleBudget,
) -> Result<OracleResult<EdgeAdditionPlan>, Error> {
    if is_dd2(g).is_dd2 {
        return Err(Error::AlreadyDd2);
    }
    budget.check_vertices(g.n())?;
    let mut adj = adjacency(g)?;
    let candidates: Vec<Edge> = g.non_edges();
    let mut meter = Meter::new(budget);
    let mut found: Option<Vec<Edge>> = None;
    for k in 1..=candidates.len() {
        let hit = for_each_combination(candidates.len(), k, |idx| {
            meter.tick()?;
            let toggle = |adj: &mut [u64]| {
                for &i in idx {
                    let (u, v) = candidates[i];
                    adj[u] ^= bit(v);
                    adj[v] ^= bit(u);
                }
            };
            toggle(&mut adj);
            let ok = is_dd2_bits(&adj);
            toggle(&mut adj);
            if ok {
                found = Some(idx.iter().map(|&i| candidates[i]).collect());
            }
            Ok::<_, Error>(ok)
        })?;
        if hit {
            break;
        }
    }
    let additions =
        found.ok_or_else(|| Error::Infeasible("no set of new edges makes the graph DD2".into()))?;
    Ok(OracleResult {
        value: additions.len() as u64,
        witness: EdgeAdditionPlan::new(additions),
        explored: meter.explored,
    })
}
