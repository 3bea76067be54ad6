//! Disjoint dominating and 2-dominating sets (DD2) on undirected graphs.
//!
//! A graph is a *DD2-graph* when its vertices split into a dominating set `A`
//! and a 2-dominating set `B`. This crate provides
//!
//! * recognition of DD2-graphs and extraction of a DD2-pair ([`recognize`], [`pair`]),
//! * minimal spanning DD2 subgraphs and their structural classification ([`subgraph`]),
//! * approximation algorithms for the minimum / maximum minimal spanning DD2
//!   subgraph and for the minimum edge addition problem ([`approx`]),
//! * exhaustive oracles used as ground truth ([`oracle`]),
//! * instance generators, including the hardness-reduction gadgets ([`generate`]).

pub mod approx;
pub mod error;
pub mod generate;
pub mod graph;
pub mod oracle;
pub mod pair;
pub mod recognize;
pub mod subgraph;

pub use error::{BudgetError, Error, ParseError, ParseErrorKind};
pub use graph::{canonical, parse_edge_list, Edge, Graph, Vertex, VertexClassification};
pub use pair::{find_dd2_pair, verify_pair, Dd2Pair};
pub use recognize::{is_dd2, RecognitionReport, Witness};
pub use subgraph::{
    classify_minimal_component, is_minimal_by_deletion, is_minimal_spanning_dd2, minimalize,
    DeletionOrder, MinimalComponentKind, SpanningSubgraph,
};
