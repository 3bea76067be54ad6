//! Seeded instance generators and reduction gadgets.

mod corona;
mod gadget;
mod named;
mod random;

pub use corona::{gen_corona_subdivision, gen_random_corona_spec, MultigraphSpec};
pub use gadget::{
    check_gadget_l_reductions, edge_addition_to_vc, gen_maxis_gadget, gen_maxmin_gadget,
    gen_minvc_gadget, is_minimal_addition, is_to_max_subgraph, maxis_l_reduction,
    maxis_subgraph_to_is, minvc_l_reduction, minvc_subgraph_to_vc, vc_to_edge_addition,
    vc_to_min_subgraph, BackwardMap, GadgetKind, GadgetMap, VertexTables,
};
pub use named::{gen_named, NamedGraph};
pub use random::{gen_random_cubic, gen_random_graph};

use crate::error::Error;
use crate::graph::Graph;

/// Attaches a new pendant `n + v` to every vertex `v`. The result is never a
/// DD2-graph: every original vertex becomes a weak support whose neighbors
/// are all leaves or supports.
pub fn gen_non_dd2(g: &Graph) -> Result<Graph, Error> {
    if let Some(v) = g.vertices().find(|&v| g.degree(v) == 0) {
        return Err(Error::IsolatedVertex(v));
    }
    let n = g.n();
    Graph::from_edges(
        2 * n,
        g.edges().iter().copied().chain((0..n).map(|v| (v, n + v))),
    )
}
