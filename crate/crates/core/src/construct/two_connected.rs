//! Colorings of 2-connected graphs within rvc(C_n) colors.
//!
//! For order at least 16 the graph is reduced to a minimal 2-connected
//! spanning subgraph, whose nonincreasing ear decomposition splits into
//! long ears (length >= 5, handled by the long-ear pipeline) and short
//! ears (length 2 to 4) colored by fixed local rules. Extra edges of the
//! original graph only add paths, so the coloring carries over.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;

use crate::blocks::{is_2_connected, minimal_2connected_spanning};
use crate::coloring::{Color, Coloring, PaletteLedger};
use crate::decomposition::{ear_decomposition, Ear, EarDecomposition};
use crate::error::{Error, Result};
use crate::graph::{Graph, Path, Vertex};
use crate::oracle::{find_coloring, SearchBudget};
use crate::verify::{color_stats, verify_rainbow_vc, CertificateStatus, RainbowMode};

use super::cycle::cycle_coloring_of;
use super::long_ears::long_ear_coloring;
use super::theorem_2_1_value;

/// Order up to which the exact search backs up the ear pipeline.
pub const SMALL_ORDER_LIMIT: usize = 15;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoConnectedOptions {
    /// Allow the bounded exact search for orders up to
    /// [`SMALL_ORDER_LIMIT`] when the ear pipeline misses the bound.
    pub exact_fallback: bool,
    pub node_budget: u64,
}

impl Default for TwoConnectedOptions {
    fn default() -> Self {
        TwoConnectedOptions { exact_fallback: true, node_budget: crate::oracle::DEFAULT_NODE_BUDGET }
    }
}

pub fn two_connected_coloring(g: &Graph) -> Result<Coloring> {
    two_connected_coloring_with(g, TwoConnectedOptions::default())
}

pub fn two_connected_coloring_with(g: &Graph, options: TwoConnectedOptions) -> Result<Coloring> {
    if !is_2_connected(g) {
        return Err(Error::NotTwoConnected);
    }
    if g.is_complete() {
        return Ok(Coloring::constant(g));
    }
    if g.is_cycle() {
        return cycle_coloring_of(g);
    }
    let n = g.n();
    let bound = theorem_2_1_value(n);
    let attempt = ear_pipeline(g);
    if n > SMALL_ORDER_LIMIT {
        return attempt;
    }
    if let Ok(c) = &attempt {
        if c.reported_count() <= bound {
            return attempt;
        }
    }
    if !options.exact_fallback {
        return attempt;
    }
    let budget = SearchBudget::default().with_max_vertices(SMALL_ORDER_LIMIT).with_node_budget(options.node_budget);
    match find_coloring(g, RainbowMode::rainbow(), bound, budget)? {
        Some(c) => Coloring::new(g, c.into_colors()),
        None => Err(Error::Precondition(format!("no rainbow coloring of this graph with {bound} colors"))),
    }
}

/// Relabelled retries of the ear pipeline after the first attempt fails.
const RELABEL_ATTEMPTS: u64 = 16;

/// The ear pipeline, verified. If no choice of the shared color works, the
/// pipeline is rerun on seeded relabellings of `g`, which changes the
/// tie-breaks of the decomposition.
pub(crate) fn ear_pipeline(g: &Graph) -> Result<Coloring> {
    let first = ear_pipeline_once(g);
    if !matches!(first, Err(Error::ConstructionFailed(..))) {
        return first;
    }
    for seed in 1..=RELABEL_ATTEMPTS {
        let mut perm: Vec<Vertex> = (0..g.n()).collect();
        perm.shuffle(&mut crate::generate::rng(seed));
        let relabelled = Graph::from_edges(g.n(), g.edges().map(|(u, v)| (perm[u], perm[v])))?;
        if let Ok(c) = ear_pipeline_once(&relabelled) {
            let colors = (0..g.n()).map(|v| c.color(perm[v])).collect();
            return Coloring::new(g, colors);
        }
    }
    first
}

fn ear_pipeline_once(g: &Graph) -> Result<Coloring> {
    let minimal = minimal_2connected_spanning(g)?;
    let d = ear_decomposition(&minimal)?;
    let plan = ShortEarPlan::new(&d)?;
    let base = plan.color_long_part(g.n())?;
    let mut last_failure = None;
    for x in plan.candidate_shared_colors(&base) {
        let c = plan.color_short_ears(g, &base, x)?;
        let cert = verify_rainbow_vc(g, &c, RainbowMode::rainbow())?;
        match cert.status {
            CertificateStatus::Verified => return Ok(c),
            CertificateStatus::Counterexample => last_failure = cert.failing_pair,
        }
    }
    let (u, v) = last_failure.unwrap_or((0, 0));
    Err(Error::ConstructionFailed(u, v))
}

struct ShortEarPlan<'a> {
    d: &'a EarDecomposition,
    long: usize,
    short: Vec<&'a Ear>,
}

impl<'a> ShortEarPlan<'a> {
    fn new(d: &'a EarDecomposition) -> Result<Self> {
        let long = d.ears.iter().take_while(|e| e.len() >= 5).count();
        let rest = &d.ears[long..];
        if rest.iter().any(|e| e.len() >= 5) {
            return Err(Error::Precondition("ear lengths are not nonincreasing".into()));
        }
        // Chords cannot occur in a minimal graph's decomposition; if a
        // heuristic search produced one it only adds paths and is skipped.
        let mut short: Vec<&Ear> = rest.iter().filter(|e| e.len() >= 2).collect();
        short.sort_by(|p, q| q.len().cmp(&p.len()).then_with(|| p.path.cmp(&q.path)));
        Ok(ShortEarPlan { d, long, short })
    }

    /// Colors of the long part `G_t`, indexed by vertex of the whole graph;
    /// `None` outside `G_t`.
    fn color_long_part(&self, n: usize) -> Result<Vec<Option<Color>>> {
        let long_ears = &self.d.ears[..self.long];
        let order: Vec<Vertex> = self
            .d
            .initial_cycle
            .iter()
            .copied()
            .chain(long_ears.iter().flat_map(|e| e.interior().iter().copied()))
            .collect();
        let mut index = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            index[v] = i;
        }
        let k = self.d.initial_cycle.len();
        let mut edges: Vec<(Vertex, Vertex)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
        let ears: Vec<Ear> = long_ears
            .iter()
            .map(|e| Ear::new(Path::new(e.path.vertices().iter().map(|&v| index[v]).collect())))
            .collect();
        for e in &ears {
            edges.extend(e.path.vertices().windows(2).map(|w| (w[0], w[1])));
        }
        let gt = Graph::from_edges(order.len(), edges)?;
        let dt = EarDecomposition {
            initial_cycle: (0..k).collect(),
            long_count: ears.len(),
            ears,
            heuristic: self.d.heuristic,
        };
        let ct = long_ear_coloring(&gt, &dt)?;
        let mut colors = vec![None; n];
        for (i, &v) in order.iter().enumerate() {
            colors[v] = Some(ct.color(i));
        }
        Ok(colors)
    }

    /// The once-used color first, then the rest in increasing order.
    fn candidate_shared_colors(&self, base: &[Option<Color>]) -> Vec<Color> {
        let long_colors: Vec<Color> = base.iter().flatten().copied().collect();
        let stats = color_stats(&Coloring::from_colors(long_colors));
        let mut out: Vec<Color> = stats.once_used.clone();
        let all: BTreeSet<Color> = stats.multiplicity.keys().copied().collect();
        out.extend(all.into_iter().filter(|c| !stats.once_used.contains(c)));
        out
    }

    fn color_short_ears(&self, g: &Graph, base: &[Option<Color>], x: Color) -> Result<Coloring> {
        let top = base.iter().flatten().max().map_or(0, |m| m + 1);
        let mut ledger = PaletteLedger::starting_at(top);
        let mut colors: Vec<Option<Color>> = base.to_vec();
        let length_four = self.short.iter().filter(|e| e.len() == 4).count();
        let center = if length_four >= 2 { ledger.fresh() } else { x };
        for ear in &self.short {
            let p = ear.path.vertices();
            let a = p[0];
            let inherited = base[a].or(colors[a]).expect("ear ends are colored before the ear");
            match ear.len() {
                4 => {
                    let xj = ledger.fresh();
                    colors[a] = Some(xj);
                    colors[p[3]] = Some(xj);
                    colors[p[1]] = Some(inherited);
                    colors[p[2]] = Some(center);
                }
                3 => {
                    let xj = ledger.fresh();
                    colors[a] = Some(xj);
                    colors[p[2]] = Some(xj);
                    colors[p[1]] = Some(inherited);
                }
                2 => colors[p[1]] = Some(x),
                _ => unreachable!("short ears have length 2 to 4"),
            }
        }
        let colors: Option<Vec<Color>> = colors.into_iter().collect();
        let colors = colors.ok_or_else(|| Error::Precondition("decomposition does not span the graph".into()))?;
        Coloring::new(g, colors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::verify_rainbow_vc;

    fn check(g: &Graph) -> Coloring {
        let c = two_connected_coloring(g).unwrap();
        assert!(verify_rainbow_vc(g, &c, RainbowMode::rainbow()).unwrap().is_verified());
        assert!(c.reported_count() <= theorem_2_1_value(g.n()), "{} colors", c.reported_count());
        c
    }

    #[test]
    fn c16_plus_length_two_ear() {
        let g = Graph::from_edges(17, Graph::cycle(16).edges().chain([(0, 16), (16, 8)])).unwrap();
        let c = check(&g);
        assert!(c.reported_count() <= 9);
    }

    #[test]
    fn cycles_match_the_table() {
        for n in 3..=30 {
            let c = check(&Graph::cycle(n));
            assert_eq!(c.reported_count(), theorem_2_1_value(n));
        }
    }

    #[test]
    fn k4_reports_zero() {
        assert_eq!(check(&Graph::complete(4)).reported_count(), 0);
    }

    #[test]
    fn small_theta_falls_back_to_search() {
        let g = Graph::from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 6), (6, 3)]).unwrap();
        check(&g);
    }

    #[test]
    fn mixed_short_ears_on_a_long_cycle() {
        // C18 with ears of lengths 4, 4, 3 and 2 hung between rim vertices.
        let mut edges: Vec<(Vertex, Vertex)> = Graph::cycle(18).edges().collect();
        edges.extend([(0, 18), (18, 19), (19, 20), (20, 9)]);
        edges.extend([(3, 21), (21, 22), (22, 23), (23, 12)]);
        edges.extend([(5, 24), (24, 25), (25, 14)]);
        edges.extend([(7, 26), (26, 16)]);
        check(&Graph::from_edges(27, edges).unwrap());
    }

    #[test]
    fn rejects_non_2_connected() {
        assert_eq!(two_connected_coloring(&Graph::path(5)), Err(Error::NotTwoConnected));
        assert_eq!(two_connected_coloring(&Graph::complete(2)), Err(Error::NotTwoConnected));
    }
}
