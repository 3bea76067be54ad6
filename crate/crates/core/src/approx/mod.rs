//! Approximation algorithms.
//!
//! | problem | routine | guarantee |
//! |---|---|---|
//! | smallest minimal spanning DD2 subgraph | [`approx_min_dd2`] | 3 |
//! | same, 3-regular input | [`approx_min_dd2_cubic`] | 1.8 |
//! | largest minimal spanning DD2 subgraph | [`approx_max_dd2`] | 3 (1.5 when 3-regular) |
//! | fewest added edges to reach DD2 | [`approx_min_to_dd2`] | O(log n) |

mod augment;
mod cubic;
mod domination;
mod spanning;

pub use augment::{approx_min_to_dd2, EdgeAdditionPlan, MinToDd2Trace};
pub use cubic::{approx_min_dd2_cubic, maximal_induced_matching, CubicTrace};
pub use domination::{
    approx_weighted_tdom, greedy_weighted_dominating_set, harmonic, TDomSolution,
    WeightedTDomInstance,
};
pub use spanning::{approx_max_dd2, approx_min_dd2};
