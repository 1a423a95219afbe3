//! Rainbow vertex-connection colorings of graphs.

pub mod blocks;
pub mod coloring;
pub mod construct;
pub mod decomposition;
pub mod error;
pub mod generate;
pub mod graph;
pub mod oracle;
pub mod verify;

pub use blocks::{block_decomposition, cut_vertices, is_2_connected, minimal_2connected_spanning, BlockDecomposition};
pub use coloring::{Color, Coloring, ColoringRecord, PaletteLedger};
pub use error::{Error, Result};
pub use graph::{parse_graph, serialize_graph, Graph, Path, Vertex};
pub use verify::{color_stats, exists_rainbow_path, has_property_star, is_rainbow_path, verify_rainbow_vc, Certificate, RainbowMode};
pub use construct::{
    auto_method, block_coloring, color_with, cycle_coloring, theorem_2_1_value, two_connected_coloring, Method,
};
pub use decomposition::{ear_decomposition, Ear, EarDecomposition};
pub use oracle::{exact_rvc, find_coloring, OracleResult, SearchBudget};
