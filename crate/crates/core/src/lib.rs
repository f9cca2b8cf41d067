//! Power graphs of finite cyclic and dihedral groups and their Szeged index.
//!
//! Every closed form in [`formulas`] and [`join`] can be checked against
//! direct distance counting on the constructed graph
//! ([`SimpleGraph::szeged_index`]); [`verify`] runs those comparisons over
//! ranges and seeded random suites.

pub mod error;
pub mod formulas;
pub mod graph;
pub mod join;
pub mod number_theory;
pub mod power_graph;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{DistanceMatrix, DistanceRow, SimpleGraph, MAX_ORDER};
pub use join::{
    build_generalized_join, szeged_join_corrected, szeged_join_formula, JoinSpec, JoinedGraph,
};
pub use power_graph::{
    cyclic_decomposition, power_graph_cyclic, power_graph_cyclic_punctured, power_graph_dihedral,
    CyclicDecomposition, GroupFamily, GroupSpec,
};
