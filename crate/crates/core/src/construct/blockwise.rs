//! Colorings of connected graphs assembled block by block.

use crate::blocks::block_decomposition;
use crate::coloring::{Color, Coloring, PaletteLedger};
use crate::error::{Error, Result};
use crate::graph::Graph;

use super::theorem_2_1_value;
use super::two_connected::two_connected_coloring;

/// Per-block term of the upper bound: 0 for a complete block, else rvc(C_|B|).
pub fn block_bound(block: &Graph) -> usize {
    if block.is_complete() {
        0
    } else {
        theorem_2_1_value(block.n())
    }
}

/// The bound sum of block terms plus the number of cut vertices.
pub fn blockwise_bound(g: &Graph) -> Result<usize> {
    let bd = block_decomposition(g)?;
    Ok(bd.blocks.iter().map(|b| block_bound(&g.induced(b))).sum::<usize>() + bd.t())
}

/// Non-complete blocks get their own 2-connected coloring on disjoint
/// palettes; non-cut vertices of complete blocks reuse one color of the
/// first non-complete block; every cut vertex gets a distinct new color.
pub fn block_coloring(g: &Graph) -> Result<Coloring> {
    if g.n() < 2 {
        return Err(Error::Precondition(format!("need at least 2 vertices, got {}", g.n())));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.is_complete() {
        return Ok(Coloring::constant(g));
    }
    let bd = block_decomposition(g)?;
    let mut colors: Vec<Option<Color>> = vec![None; g.n()];
    let mut ledger = PaletteLedger::new();
    let mut filler: Option<Color> = None;
    for block in &bd.blocks {
        let h = g.induced(block);
        if h.is_complete() {
            continue;
        }
        let c = two_connected_coloring(&h)?;
        // Shift the block palette past everything used so far.
        let base = ledger.next_unused();
        let mut top = base;
        for (i, &v) in block.iter().enumerate() {
            let shifted = base + c.color(i);
            top = top.max(shifted + 1);
            if !bd.cut_vertices.contains(&v) {
                colors[v] = Some(shifted);
                filler.get_or_insert(shifted);
            }
        }
        ledger = PaletteLedger::starting_at(top);
    }
    let cut_colors = ledger.fresh_many(bd.t());
    for (&v, &x) in bd.cut_vertices.iter().zip(&cut_colors) {
        colors[v] = Some(x);
    }
    // With only complete blocks the first cut color doubles as the filler.
    let filler = filler.or_else(|| cut_colors.first().copied()).unwrap_or(0);
    let colors = colors.into_iter().map(|c| c.unwrap_or(filler)).collect();
    Coloring::new(g, colors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{verify_rainbow_vc, RainbowMode};

    fn check(g: &Graph) -> Coloring {
        let c = block_coloring(g).unwrap();
        assert!(verify_rainbow_vc(g, &c, RainbowMode::rainbow()).unwrap().is_verified());
        assert!(c.reported_count() <= blockwise_bound(g).unwrap());
        c
    }

    #[test]
    fn trees_use_one_color_per_cut_vertex() {
        let c = check(&Graph::path(6));
        assert_eq!(c.reported_count(), 4);
        let star = Graph::from_edges(5, (1..5).map(|i| (0, i))).unwrap();
        assert_eq!(check(&star).reported_count(), 1);
    }

    #[test]
    fn bowtie_of_triangles() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        assert_eq!(check(&g).reported_count(), 1);
    }

    #[test]
    fn cycles_joined_by_a_bridge() {
        // C6 on 0..5, C7 on 6..12, bridge 5 - 6.
        let mut edges: Vec<(usize, usize)> = Graph::cycle(6).edges().collect();
        edges.extend(Graph::cycle(7).edges().map(|(u, v)| (u + 6, v + 6)));
        edges.push((5, 6));
        let g = Graph::from_edges(13, edges).unwrap();
        let c = check(&g);
        assert!(c.reported_count() <= 2 + 3 + 2);
    }

    #[test]
    fn complete_and_disconnected() {
        assert_eq!(check(&Graph::complete(5)).reported_count(), 0);
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(block_coloring(&g), Err(Error::Disconnected));
    }
}
