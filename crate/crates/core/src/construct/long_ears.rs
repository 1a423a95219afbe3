//! Revised rainbow colorings with ceil(n/2) colors, each used at most
//! twice, for graphs decomposed into an even cycle and ears of length >= 5.

use crate::coloring::Coloring;
use crate::decomposition::EarDecomposition;
use crate::error::{Error, Result};
use crate::graph::{Graph, Path, Vertex};

use super::balanced::{balanced_coloring_with, BalancedCheck};
use super::cycle::wraparound_colors;

/// The long-ear pipeline on a graph of order at least 16.
///
/// An odd cycle gets the wraparound coloring. Otherwise the even initial
/// cycle gets the wraparound coloring and every ear is added with a
/// balanced coloring, placing each once-used color so that property (*)
/// holds at the first vertex of the following ear.
pub fn lemma1_coloring(g: &Graph, d: &EarDecomposition) -> Result<Coloring> {
    if g.n() < 16 {
        return Err(Error::Precondition(format!("the long-ear pipeline needs at least 16 vertices, got {}", g.n())));
    }
    long_ear_coloring(g, d)
}

/// [`lemma1_coloring`] without the order restriction; the construction
/// itself is valid for any order.
pub(crate) fn long_ear_coloring(g: &Graph, d: &EarDecomposition) -> Result<Coloring> {
    if let Some(short) = d.ears.iter().find(|e| e.len() < 5) {
        return Err(Error::Precondition(format!("decomposition contains an ear of length {}", short.len())));
    }
    let replay = d.replay(g.n())?;
    if replay.edges().any(|(u, v)| !g.has_edge(u, v)) {
        return Err(Error::Precondition("decomposition uses edges outside the graph".into()));
    }
    let n0 = d.initial_cycle.len();
    let order: Vec<Vertex> = d
        .initial_cycle
        .iter()
        .copied()
        .chain(d.ears.iter().flat_map(|e| e.interior().iter().copied()))
        .collect();
    if order.len() != g.n() {
        return Err(Error::Precondition("decomposition does not span the graph".into()));
    }
    let mut relabel = vec![usize::MAX; g.n()];
    for (i, &v) in order.iter().enumerate() {
        relabel[v] = i;
    }

    if d.ears.is_empty() {
        let wrap = wraparound_colors(n0);
        let mut colors = vec![0; g.n()];
        for (i, &v) in order.iter().enumerate() {
            colors[v] = wrap[i];
        }
        return Coloring::new(g, colors);
    }
    if n0 % 2 == 1 {
        return Err(Error::Precondition("initial cycle must be even when ears follow".into()));
    }

    let mut ears: Vec<Path> =
        d.ears.iter().map(|e| Path::new(e.path.vertices().iter().map(|&v| relabel[v]).collect())).collect();
    let mut host = Graph::cycle(n0);
    let mut coloring = Coloring::new(&host, wraparound_colors(n0))?;
    for i in 0..ears.len() {
        let verified = |target| balanced_coloring_with(&host, &coloring, &ears[i], target, BalancedCheck::Verified);
        let next = ears.get(i + 1).cloned();
        let step = match verified(next.as_ref().map(Path::first)) {
            Err(Error::ConstructionFailed(..)) => {
                // Enter the next ear from its other end instead; failing
                // that, fall back to the plain rule placement.
                let other = next.as_ref().map(Path::last);
                match (next.is_some(), verified(other)) {
                    (true, Ok(done)) => {
                        ears[i + 1] = ears[i + 1].reversed();
                        Ok(done)
                    }
                    _ => balanced_coloring_with(
                        &host,
                        &coloring,
                        &ears[i],
                        next.as_ref().map(Path::first),
                        BalancedCheck::RuleOnly,
                    ),
                }
            }
            other => other,
        }?;
        host = step.graph;
        coloring = step.coloring;
    }

    let mut colors = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        colors[v] = coloring.color(i);
    }
    Coloring::new(g, colors)
}
