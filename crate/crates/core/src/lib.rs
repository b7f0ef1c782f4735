//! Recognition, structure certificates and colouring for uncluttered graphs:
//! graphs with no induced fork and no induced antifork.
//!
//! Graphs have at most 64 vertices and are stored as one `u64` adjacency row
//! per vertex.

pub mod audit;
pub mod chromatic;
pub mod decompose;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod io;
pub mod iso;
pub mod modular;
pub mod pattern;
pub mod structure;

#[cfg(test)]
mod testutil;

pub use chromatic::{
    chromatic_number_exact, clique_number, color_uncluttered, cover_color_complement_line,
    vizing_edge_color, Coloring, EdgeColoring,
};
pub use decompose::{
    classify, decomposition_tree, verify_certificate, CaseTag, Certificate, DecompositionTree,
    TreeNode,
};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet, MAX_VERTICES};
pub use io::{from_edge_list, from_graph6, to_edge_list, to_graph6};
pub use pattern::{find_induced, is_uncluttered, pattern, NamedPattern, PatternWitness};
