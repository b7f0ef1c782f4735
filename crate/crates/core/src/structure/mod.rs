//! Candelabra, candled graphs and line graphs of triangle-free graphs.

mod candelabrum;
mod line_graph;

pub use candelabrum::{
    check_candelabrum, detect_candled, detect_candled_exhaustive, recognize_candelabrum,
    recognize_candelabrum_exhaustive, CandelabrumStructure, CandledDecomposition, EXHAUSTIVE_LIMIT,
};
pub use line_graph::{
    bipartition, is_line_graph_of_bipartite, is_triangle_free, line_graph, maximal_cliques,
    recognize_line_graph_triangle_free, triangle_free_krausz_partition, KrauszPartition, RootGraph,
};
