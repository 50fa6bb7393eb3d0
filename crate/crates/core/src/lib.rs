//! Dangalchev closeness and vertex residual closeness of graphs, middle and
//! line graph constructions, closed-form values for standard families, and an
//! audit engine that checks each closed form against brute-force
//! shortest-path computation.
//!
//! Numeric code is generic over [`Scalar`]; `f64` is the working type and
//! [`Exact`] (arbitrary-precision rationals) gives bit-exact results.

pub mod closeness;
pub mod cli;
pub mod distance;
pub mod edgelist;
pub mod error;
pub mod formulas;
pub mod generate;
pub mod graph;
pub mod iso;
pub mod scalar;
pub mod transform;
pub mod verify;

pub use closeness::{
    closeness_after_removal, closeness_after_removal_with, closeness_profile, residual_closeness,
    residual_closeness_with, total_closeness, ClosenessProfile, RemovalMode, RemovalProfile,
};
pub use distance::{all_pairs_bfs, bfs_from, floyd_warshall, DistanceMatrix, Hops};
pub use edgelist::{parse_edge_list, read_edge_list, write_edge_list};
pub use error::{Error, Result};
pub use formulas::{eval_f64, eval_formula, list_formulas, FormulaId};
pub use generate::{generate, FamilySpec};
pub use graph::{Graph, VertexKind};
pub use scalar::{Exact, Scalar};
pub use transform::{line_graph, middle_graph, remove_edge, remove_vertex};

pub type Closeness64 = ClosenessProfile<f64>;
pub type Closeness32 = ClosenessProfile<f32>;
pub type ExactCloseness = ClosenessProfile<Exact>;
pub type Removal64 = RemovalProfile<f64>;
pub type Removal32 = RemovalProfile<f32>;
pub type ExactRemoval = RemovalProfile<Exact>;
