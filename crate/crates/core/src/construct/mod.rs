//! Colorings built from the constructive bounds: cycles, balanced
//! extensions across long ears, 2-connected graphs and block compositions.

mod balanced;
mod blockwise;
mod cycle;
mod long_ears;
mod small_cycles;
mod two_connected;

pub use balanced::{balanced_coloring, balanced_coloring_with, extend_with_ear, BalancedCase, BalancedCheck, BalancedColoring};
pub use blockwise::{block_bound, block_coloring, blockwise_bound};
pub use cycle::{cycle_coloring, wraparound_colors};
pub use long_ears::lemma1_coloring;
pub use small_cycles::small_cycle_colors;
pub use two_connected::{two_connected_coloring, two_connected_coloring_with, TwoConnectedOptions};

use serde::{Deserialize, Serialize};

use crate::coloring::Coloring;
use crate::error::Result;
use crate::graph::Graph;

/// rvc of the cycle on `n >= 3` vertices, which is also the upper bound for
/// every 2-connected graph of order `n`.
pub fn theorem_2_1_value(n: usize) -> usize {
    assert!(n >= 3, "cycles have at least 3 vertices");
    let half = n.div_ceil(2);
    match n {
        3 => 0,
        4 | 5 => 1,
        9 => 3,
        6..=13 | 15 => half - 1,
        _ => half,
    }
}

/// Which construction produced a coloring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Cycle,
    TwoConnected,
    Blocks,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Cycle => "cycle",
            Method::TwoConnected => "two-connected",
            Method::Blocks => "blocks",
        }
    }
}

/// Picks the construction by graph class: cycles, then 2-connected graphs,
/// then block composition.
pub fn auto_method(g: &Graph) -> Method {
    if g.is_cycle() {
        Method::Cycle
    } else if crate::blocks::is_2_connected(g) {
        Method::TwoConnected
    } else {
        Method::Blocks
    }
}

/// Runs `method` on `g`. The cycle method accepts any graph that is a
/// cycle, whatever its vertex labels.
pub fn color_with(g: &Graph, method: Method) -> Result<Coloring> {
    match method {
        Method::Cycle => cycle::cycle_coloring_of(g),
        Method::TwoConnected => two_connected_coloring(g),
        Method::Blocks => block_coloring(g),
    }
}
