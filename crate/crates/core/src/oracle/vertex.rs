use super::bits::{adjacency, bit, for_each_k_subset, full_mask, members, to_vec};
use super::{Meter, OracleBudget, OracleResult};
use crate::approx::WeightedTDomInstance;
use crate::error::Error;
use crate::graph::{Graph, Vertex};
use crate::pair::Dd2Pair;

/// Bitmask adjacency after checking the vertex budget.
fn prepare(g: &Graph, budget: &OracleBudget) -> Result<Vec<u64>, Error> {
    budget.check_vertices(g.n())?;
    adjacency(g)
}

/// Smallest (or, with `descending`, largest) subset satisfying `accept`,
/// trying sizes in order and bitmasks ascending within a size.
fn search_by_size(
    n: usize,
    descending: bool,
    meter: &mut Meter,
    mut accept: impl FnMut(u64) -> bool,
) -> Result<Option<u64>, Error> {
    let sizes: Vec<usize> = if descending {
        (0..=n).rev().collect()
    } else {
        (0..=n).collect()
    };
    let mut found = None;
    for k in sizes {
        let hit = for_each_k_subset(n, k, |mask| {
            meter.tick()?;
            if accept(mask) {
                found = Some(mask);
                return Ok::<_, Error>(true);
            }
            Ok(false)
        })?;
        if hit {
            break;
        }
    }
    Ok(found)
}

fn optimum(
    g: &Graph,
    budget: &OracleBudget,
    descending: bool,
    accept: impl Fn(&[u64], u64) -> bool,
) -> Result<OracleResult<Vec<Vertex>>, Error> {
    let adj = prepare(g, budget)?;
    let mut meter = Meter::new(budget);
    let mask = search_by_size(g.n(), descending, &mut meter, |m| accept(&adj, m))?
        .expect("the full or empty vertex set is always feasible");
    Ok(OracleResult {
        value: u64::from(mask.count_ones()),
        witness: to_vec(mask),
        explored: meter.explored,
    })
}

fn is_cover(adj: &[u64], s: u64) -> bool {
    // every vertex outside s has all its neighbors in s
    adj.iter()
        .enumerate()
        .all(|(v, &a)| s & bit(v) != 0 || a & !s == 0)
}

fn is_minimal_cover(adj: &[u64], s: u64) -> bool {
    is_cover(adj, s) && members(s).all(|v| adj[v] & !s != 0)
}

fn is_independent(adj: &[u64], s: u64) -> bool {
    members(s).all(|v| adj[v] & s == 0)
}

fn is_maximal_independent(adj: &[u64], s: u64) -> bool {
    is_independent(adj, s) && (0..adj.len()).all(|v| s & bit(v) != 0 || adj[v] & s != 0)
}

fn dominates(adj: &[u64], s: u64) -> bool {
    adj.iter()
        .enumerate()
        .all(|(v, &a)| s & bit(v) != 0 || a & s != 0)
}

fn two_dominates(adj: &[u64], s: u64) -> bool {
    adj.iter()
        .enumerate()
        .all(|(v, &a)| s & bit(v) != 0 || (a & s).count_ones() >= 2)
}

pub fn exact_min_vertex_cover(
    g: &Graph,
    budget: &OracleBudget,
) -> Result<OracleResult<Vec<Vertex>>, Error> {
    optimum(g, budget, false, is_cover)
}

/// Largest minimal vertex cover.
pub fn exact_max_min_vertex_cover(
    g: &Graph,
    budget: &OracleBudget,
) -> Result<OracleResult<Vec<Vertex>>, Error> {
    optimum(g, budget, true, is_minimal_cover)
}

pub fn exact_max_independent_set(
    g: &Graph,
    budget: &OracleBudget,
) -> Result<OracleResult<Vec<Vertex>>, Error> {
    optimum(g, budget, true, is_independent)
}

/// Domination number with a minimum dominating set.
pub fn exact_gamma(g: &Graph, budget: &OracleBudget) -> Result<OracleResult<Vec<Vertex>>, Error> {
    optimum(g, budget, false, dominates)
}

/// 2-domination number with a minimum 2-dominating set.
pub fn exact_gamma2(g: &Graph, budget: &OracleBudget) -> Result<OracleResult<Vec<Vertex>>, Error> {
    optimum(g, budget, false, two_dominates)
}

fn all_matching(
    g: &Graph,
    budget: &OracleBudget,
    accept: impl Fn(&[u64], u64) -> bool,
) -> Result<Vec<Vec<Vertex>>, Error> {
    let adj = prepare(g, budget)?;
    let mut meter = Meter::new(budget);
    let mut out = Vec::new();
    for k in 0..=g.n() {
        for_each_k_subset(g.n(), k, |mask| {
            meter.tick()?;
            if accept(&adj, mask) {
                out.push(to_vec(mask));
            }
            Ok::<_, Error>(false)
        })?;
    }
    Ok(out)
}

/// All minimal vertex covers, by size then bitmask.
pub fn minimal_vertex_covers(g: &Graph, budget: &OracleBudget) -> Result<Vec<Vec<Vertex>>, Error> {
    all_matching(g, budget, is_minimal_cover)
}

/// All maximal independent sets, by size then bitmask.
pub fn maximal_independent_sets(
    g: &Graph,
    budget: &OracleBudget,
) -> Result<Vec<Vec<Vertex>>, Error> {
    all_matching(g, budget, is_maximal_independent)
}

/// First DD2-pair `(A, B)` with `A` tried by size, then bitmask.
pub fn exact_has_dd2_pair(g: &Graph, budget: &OracleBudget) -> Result<Option<Dd2Pair>, Error> {
    let adj = prepare(g, budget)?;
    let all = full_mask(g.n());
    let mut meter = Meter::new(budget);
    let found = search_by_size(g.n(), false, &mut meter, |a| {
        let b = all & !a;
        members(b).all(|v| adj[v] & a != 0) && members(a).all(|v| (adj[v] & b).count_ones() >= 2)
    })?;
    Ok(found.map(|a| Dd2Pair {
        a: to_vec(a),
        b: to_vec(all & !a),
    }))
}

/// Minimum-weight `T`-dominating set; ties go to the smaller set, then the
/// smaller bitmask.
pub fn exact_min_weight_tdom(
    inst: &WeightedTDomInstance,
    budget: &OracleBudget,
) -> Result<OracleResult<Vec<Vertex>>, Error> {
    let g = &inst.graph;
    let adj = prepare(g, budget)?;
    let closed: Vec<u64> = inst.targets.iter().map(|&t| adj[t] | bit(t)).collect();
    let mut meter = Meter::new(budget);
    let mut best: Option<(u64, u64)> = None;
    for k in 0..=g.n() {
        for_each_k_subset(g.n(), k, |mask| {
            meter.tick()?;
            if closed.iter().all(|&c| c & mask != 0) {
                let w: u64 = members(mask).map(|v| inst.weights[v]).sum();
                if best.is_none_or(|(bw, _)| w < bw) {
                    best = Some((w, mask));
                }
            }
            Ok::<_, Error>(false)
        })?;
    }
    let (value, mask) = best.expect("the full vertex set is T-dominating");
    Ok(OracleResult {
        value,
        witness: to_vec(mask),
        explored: meter.explored,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, e.iter().copied()).unwrap()
    }

    fn k4() -> Graph {
        g(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    }

    fn p3() -> Graph {
        g(3, &[(0, 1), (1, 2)])
    }

    fn c4() -> Graph {
        g(4, &[(0, 1), (1, 2), (2, 3), (0, 3)])
    }

    #[test]
    fn cover_and_independence() {
        let b = OracleBudget::default();
        assert_eq!(exact_min_vertex_cover(&k4(), &b).unwrap().value, 3);
        assert_eq!(exact_max_independent_set(&k4(), &b).unwrap().value, 1);
        let mm = exact_max_min_vertex_cover(&p3(), &b).unwrap();
        assert_eq!((mm.value, mm.witness), (2, vec![0, 2]));
        assert_eq!(exact_min_vertex_cover(&c4(), &b).unwrap().value, 2);
        assert_eq!(exact_max_independent_set(&c4(), &b).unwrap().value, 2);
    }

    #[test]
    fn enumerations() {
        let b = OracleBudget::default();
        assert_eq!(
            minimal_vertex_covers(&p3(), &b).unwrap(),
            vec![vec![1], vec![0, 2]]
        );
        assert_eq!(minimal_vertex_covers(&k4(), &b).unwrap().len(), 4);
        assert_eq!(
            maximal_independent_sets(&p3(), &b).unwrap(),
            vec![vec![1], vec![0, 2]]
        );
    }

    #[test]
    fn pairs() {
        let b = OracleBudget::default();
        let p4 = g(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(exact_has_dd2_pair(&p4, &b).unwrap(), None);
        assert_eq!(
            exact_has_dd2_pair(&p3(), &b).unwrap(),
            Some(Dd2Pair {
                a: vec![1],
                b: vec![0, 2]
            })
        );
        let pair = exact_has_dd2_pair(&c4(), &b).unwrap().unwrap();
        assert!(crate::pair::verify_pair(&c4(), &pair));
    }

    #[test]
    fn domination_numbers() {
        let b = OracleBudget::default();
        for (graph, gamma, gamma2) in [(p3(), 1, 2), (c4(), 2, 2), (k4(), 1, 2)] {
            assert_eq!(exact_gamma(&graph, &b).unwrap().value, gamma);
            assert_eq!(exact_gamma2(&graph, &b).unwrap().value, gamma2);
        }
    }

    #[test]
    fn tdom_examples() {
        let b = OracleBudget::default();
        let inst = WeightedTDomInstance::new(g(3, &[(1, 2)]), vec![1; 3], vec![1, 2]).unwrap();
        let r = exact_min_weight_tdom(&inst, &b).unwrap();
        assert_eq!((r.value, r.witness), (1, vec![1]));

        let inst = WeightedTDomInstance::new(p3(), vec![1; 3], vec![]).unwrap();
        let r = exact_min_weight_tdom(&inst, &b).unwrap();
        assert_eq!((r.value, r.witness), (0, vec![]));

        let star = g(4, &[(0, 1), (0, 2), (0, 3)]);
        let inst = WeightedTDomInstance::new(star, vec![5, 1, 1, 1], vec![1, 2, 3]).unwrap();
        assert_eq!(exact_min_weight_tdom(&inst, &b).unwrap().value, 3);
    }

    #[test]
    fn vertex_budget() {
        let b = OracleBudget {
            max_vertices: 3,
            ..OracleBudget::default()
        };
        assert!(exact_gamma(&k4(), &b).unwrap_err().is_budget());
    }
}
