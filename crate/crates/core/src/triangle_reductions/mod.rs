//! Range-pair queries and edge-triangle problems in terms of each other, in
//! both directions, for counting and for the boolean variants.

mod base;
mod multigraph;
mod solvers;

pub use base::{base_decompose, base_decompose_traced, BaseInterval, Decomposed};
pub use multigraph::{build_query_multigraph, MultigraphSizes, QueryMultigraph};
pub use solvers::{
    neighbor_array, split_counts, CountsViaPairs, DetectionViaDisjoint, DisjointViaDetection,
    PairsViaTriangles,
};
