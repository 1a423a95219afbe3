use crate::coloring::{Color, Coloring};
use crate::decomposition::cycle_order;
use crate::error::{Error, Result};
use crate::graph::Graph;

use super::small_cycles::small_cycle_colors;

/// `v_i -> i` for the first ceil(n/2) vertices, then the same colors again:
/// every shortest arc of the cycle is then rainbow.
pub fn wraparound_colors(n: usize) -> Vec<Color> {
    let half = n.div_ceil(2);
    (0..n).map(|i| i % half).collect()
}

/// Coloring of `Graph::cycle(n)` with exactly rvc(C_n) colors.
pub fn cycle_coloring(n: usize) -> Result<Coloring> {
    if n < 3 {
        return Err(Error::Precondition(format!("a cycle needs at least 3 vertices, got {n}")));
    }
    let colors = match n {
        3..=5 => vec![0; n],
        14 | 16.. => wraparound_colors(n),
        _ => small_cycle_colors(n).expect("frozen coloring for 6..=13 and 15").to_vec(),
    };
    Coloring::new(&Graph::cycle(n), colors)
}

/// [`cycle_coloring`] transported along the cyclic order of `g`.
pub(crate) fn cycle_coloring_of(g: &Graph) -> Result<Coloring> {
    let order = cycle_order(g).ok_or_else(|| Error::Precondition("graph is not a cycle".into()))?;
    let base = cycle_coloring(g.n())?;
    let mut colors = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        colors[v] = base.color(i);
    }
    Coloring::new(g, colors)
}
