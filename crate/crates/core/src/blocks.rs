//! Cut vertices, blocks and minimal 2-connected spanning subgraphs.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDecomposition {
    /// Vertex sets of the blocks, each sorted, ordered by smallest vertex.
    pub blocks: Vec<Vec<Vertex>>,
    pub cut_vertices: BTreeSet<Vertex>,
}

impl BlockDecomposition {
    /// Number of cut vertices.
    pub fn t(&self) -> usize {
        self.cut_vertices.len()
    }
}

struct Frame {
    v: Vertex,
    parent: Option<Vertex>,
    next: usize,
}

/// Hopcroft-Tarjan low-point search from vertex 0 over the whole (connected)
/// graph. Returns the blocks as vertex sets and the cut vertices.
fn lowpoint_search(g: &Graph) -> (Vec<Vec<Vertex>>, BTreeSet<Vertex>) {
    let n = g.n();
    let mut blocks = Vec::new();
    let mut cuts = BTreeSet::new();
    if n < 2 {
        return (blocks, cuts);
    }
    const UNSEEN: usize = usize::MAX;
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut timer = 0;
    let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();
    let mut root_children = 0;

    disc[0] = timer;
    low[0] = timer;
    timer += 1;
    let mut frames = vec![Frame { v: 0, parent: None, next: 0 }];

    while let Some(frame) = frames.last_mut() {
        let v = frame.v;
        if frame.next < g.degree(v) {
            let w = g.neighbors(v)[frame.next];
            frame.next += 1;
            if disc[w] == UNSEEN {
                if v == 0 {
                    root_children += 1;
                }
                edge_stack.push((v, w));
                disc[w] = timer;
                low[w] = timer;
                timer += 1;
                frames.push(Frame { v: w, parent: Some(v), next: 0 });
            } else if Some(w) != frame.parent && disc[w] < disc[v] {
                edge_stack.push((v, w));
                low[v] = low[v].min(disc[w]);
            }
            continue;
        }
        frames.pop();
        let Some(up) = frames.last() else { break };
        let u = up.v;
        low[u] = low[u].min(low[v]);
        if low[v] >= disc[u] {
            if u != 0 {
                cuts.insert(u);
            }
            let mut block = BTreeSet::new();
            while let Some((a, b)) = edge_stack.pop() {
                block.insert(a);
                block.insert(b);
                if (a, b) == (u, v) {
                    break;
                }
            }
            blocks.push(block.into_iter().collect::<Vec<_>>());
        }
    }
    if root_children > 1 {
        cuts.insert(0);
    }
    blocks.sort();
    (blocks, cuts)
}

pub fn cut_vertices(g: &Graph) -> Result<BTreeSet<Vertex>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(lowpoint_search(g).1)
}

pub fn block_decomposition(g: &Graph) -> Result<BlockDecomposition> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.n() < 2 {
        return Err(Error::Precondition("block decomposition needs at least 2 vertices".into()));
    }
    let (blocks, cut_vertices) = lowpoint_search(g);
    Ok(BlockDecomposition { blocks, cut_vertices })
}

pub fn is_2_connected(g: &Graph) -> bool {
    g.n() >= 3 && g.is_connected() && lowpoint_search(g).1.is_empty()
}

/// Greedy edge deletion in lexicographic edge order. An edge kept once is
/// kept for good: a spanning subgraph of a graph that is not 2-connected is
/// not 2-connected either, so a single pass leaves every edge essential.
pub fn minimal_2connected_spanning(g: &Graph) -> Result<Graph> {
    if !is_2_connected(g) {
        return Err(Error::NotTwoConnected);
    }
    let mut h = g.clone();
    for (u, v) in g.edges().collect::<Vec<_>>() {
        let candidate = h.without_edge(u, v);
        if is_2_connected(&candidate) {
            h = candidate;
        }
    }
    Ok(h)
}
