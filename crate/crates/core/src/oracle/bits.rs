//! Bitmask adjacency for graphs with at most 64 vertices.

use crate::error::{BudgetError, Error};
use crate::graph::{Graph, Vertex};

pub(crate) const MAX_BITS: usize = 64;

pub(crate) fn bit(v: Vertex) -> u64 {
    1u64 << v
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn members(mut mask: u64) -> impl Iterator<Item = Vertex> {
    std::iter::from_fn(move || {
        (mask != 0).then(|| {
            let v = mask.trailing_zeros() as Vertex;
            mask &= mask - 1;
            v
        })
    })
}

pub(crate) fn to_vec(mask: u64) -> Vec<Vertex> {
    members(mask).collect()
}

pub(crate) fn adjacency(g: &Graph) -> Result<Vec<u64>, Error> {
    if g.n() > MAX_BITS {
        return Err(BudgetError::Vertices {
            actual: g.n(),
            limit: MAX_BITS,
        }
        .into());
    }
    Ok(g.adjacency()
        .iter()
        .map(|nb| nb.iter().fold(0, |m, &w| m | bit(w)))
        .collect())
}

/// DD2 test on bitmask adjacency.
pub(crate) fn is_dd2_bits(adj: &[u64]) -> bool {
    let mut leaves = 0u64;
    for (v, &a) in adj.iter().enumerate() {
        match a.count_ones() {
            0 => return false,
            1 => leaves |= bit(v),
            _ => {}
        }
    }
    let mut supports = 0u64;
    let mut weak = 0u64;
    for (v, &a) in adj.iter().enumerate() {
        match (a & leaves).count_ones() {
            0 => {}
            1 => {
                supports |= bit(v);
                weak |= bit(v);
            }
            _ => supports |= bit(v),
        }
    }
    members(weak).all(|s| adj[s] & !(leaves | supports) != 0)
}

/// Visits the `k`-subsets of `0..n` in increasing bitmask order. Stops when
/// `f` returns `true`.
pub(crate) fn for_each_k_subset<E>(
    n: usize,
    k: usize,
    mut f: impl FnMut(u64) -> Result<bool, E>,
) -> Result<bool, E> {
    debug_assert!(n < 64);
    if k > n {
        return Ok(false);
    }
    if k == 0 {
        return f(0);
    }
    let limit = 1u64 << n;
    let mut x = (1u64 << k) - 1;
    while x < limit {
        if f(x)? {
            return Ok(true);
        }
        // next mask with the same popcount
        let c = x & x.wrapping_neg();
        let r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
    }
    Ok(false)
}

/// Visits the `k`-combinations of `0..len` in lexicographic order.
pub(crate) fn for_each_combination<E>(
    len: usize,
    k: usize,
    mut f: impl FnMut(&[usize]) -> Result<bool, E>,
) -> Result<bool, E> {
    if k > len {
        return Ok(false);
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if f(&idx)? {
            return Ok(true);
        }
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + len - k) else {
            return Ok(false);
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
