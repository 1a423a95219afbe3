//! Seeded instance generators for tests and benchmarks. Every generator is
//! a pure function of its arguments; the stream is ChaCha8 seeded from the
//! given `u64`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Path, Vertex};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GeneratorKind {
    /// The cycle `0, 1, ..., n-1` plus random chords.
    #[default]
    HamiltonChords,
    /// A random cycle grown by random open ears until it has `n` vertices,
    /// then random extra edges.
    EarBuilt,
}

/// A 2-connected graph on `n` vertices with `extra_edges` edges beyond a
/// spanning cycle (Hamilton kind).
pub fn random_2connected(n: usize, extra_edges: usize, seed: u64) -> Result<Graph> {
    random_2connected_with(n, extra_edges, seed, GeneratorKind::HamiltonChords)
}

pub fn random_2connected_with(n: usize, extra_edges: usize, seed: u64, kind: GeneratorKind) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Precondition(format!("a 2-connected graph needs at least 3 vertices, got {n}")));
    }
    let mut rng = rng(seed);
    let base = match kind {
        GeneratorKind::HamiltonChords => Graph::cycle(n),
        GeneratorKind::EarBuilt => ear_built(n, &mut rng)?,
    };
    add_random_edges(&base, extra_edges, &mut rng)
}

fn ear_built(n: usize, rng: &mut ChaCha8Rng) -> Result<Graph> {
    let k = rng.gen_range(3..=n);
    let mut edges: Vec<(Vertex, Vertex)> = Graph::cycle(k).edges().collect();
    let mut next = k;
    while next < n {
        let a = rng.gen_range(0..next);
        let mut b = rng.gen_range(0..next - 1);
        if b >= a {
            b += 1;
        }
        let inner = rng.gen_range(1..=(n - next).min(8));
        let mut path = vec![a];
        path.extend(next..next + inner);
        path.push(b);
        edges.extend(path.windows(2).map(|w| (w[0], w[1])));
        next += inner;
    }
    Graph::from_edges(n, edges)
}

/// `g` plus `extra` distinct new edges chosen uniformly from its non-edges.
pub fn add_random_edges(g: &Graph, extra: usize, rng: &mut ChaCha8Rng) -> Result<Graph> {
    let n = g.n();
    let mut missing: Vec<(Vertex, Vertex)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !g.has_edge(u, v)).collect();
    if extra > missing.len() {
        return Err(Error::Precondition(format!(
            "asked for {extra} extra edges but only {} are missing",
            missing.len()
        )));
    }
    let (chosen, _) = missing.partial_shuffle(rng, extra);
    let mut chosen = chosen.to_vec();
    chosen.sort_unstable();
    g.with_edges(chosen)
}

/// A connected graph: a random recursive tree plus `extra_edges` random edges.
pub fn random_connected(n: usize, extra_edges: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::Precondition("need at least one vertex".into()));
    }
    let mut rng = rng(seed);
    let mut order: Vec<Vertex> = (0..n).collect();
    order.shuffle(&mut rng);
    let tree = (1..n).map(|i| (order[rng.gen_range(0..i)], order[i]));
    let g = Graph::from_edges(n, tree)?;
    add_random_edges(&g, extra_edges, &mut rng)
}

/// One block of [`random_block_graph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BlockShape {
    Cycle(usize),
    Complete(usize),
}

impl BlockShape {
    pub fn order(self) -> usize {
        match self {
            BlockShape::Cycle(k) | BlockShape::Complete(k) => k,
        }
    }

    fn graph(self) -> Graph {
        match self {
            BlockShape::Cycle(k) => Graph::cycle(k),
            BlockShape::Complete(k) => Graph::complete(k),
        }
    }
}

/// A connected graph glued from `blocks` random cycles (3..=9 vertices) and
/// complete graphs (2..=5 vertices); each new block shares one vertex with
/// what has been built so far.
pub fn random_block_graph(blocks: usize, seed: u64) -> Result<(Graph, Vec<BlockShape>)> {
    if blocks == 0 {
        return Err(Error::Precondition("need at least one block".into()));
    }
    let mut rng = rng(seed);
    let mut shapes = Vec::with_capacity(blocks);
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut n = 0;
    for i in 0..blocks {
        let shape =
            if rng.gen_bool(0.5) { BlockShape::Cycle(rng.gen_range(3..=9)) } else { BlockShape::Complete(rng.gen_range(2..=5)) };
        let h = shape.graph();
        // Local vertex 0 is the shared vertex; the rest are new.
        let anchor = if i == 0 { None } else { Some(rng.gen_range(0..n)) };
        let offset = if anchor.is_some() { n - 1 } else { n };
        let id = |v: Vertex| match (v, anchor) {
            (0, Some(a)) => a,
            _ => v + offset,
        };
        edges.extend(h.edges().map(|(u, v)| (id(u), id(v))));
        n = offset + shape.order();
        shapes.push(shape);
    }
    Ok((Graph::from_edges(n, edges)?, shapes))
}

/// Input for one run of the balanced-coloring property suite: an even base
/// cycle and a sequence of ears, each attached to the graph built so far
/// with its interior on the next free ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EarSequence {
    pub base: usize,
    pub ears: Vec<Path>,
}

impl EarSequence {
    pub fn final_order(&self) -> usize {
        self.base + self.ears.iter().map(|e| e.len() - 1).sum::<usize>()
    }
}

/// Even base cycle of 6..=12 vertices and 1..=3 ears of length 5..=9.
pub fn random_ear_sequence(seed: u64) -> EarSequence {
    let mut rng = rng(seed);
    let base = 2 * rng.gen_range(3..=6);
    let count = rng.gen_range(1..=3);
    let mut n = base;
    let mut ears = Vec::with_capacity(count);
    for _ in 0..count {
        let len = rng.gen_range(5..=9);
        let a = rng.gen_range(0..n);
        let mut b = rng.gen_range(0..n - 1);
        if b >= a {
            b += 1;
        }
        let mut path = vec![a];
        path.extend(n..n + len - 1);
        path.push(b);
        n += len - 1;
        ears.push(Path::new(path));
    }
    EarSequence { base, ears }
}
