//! Exhaustive computation of rvc and rvc* on small graphs.
//!
//! Colorings are enumerated as restricted-growth sequences over a BFS
//! vertex order, so each partition of the vertices into color classes is
//! visited once. For every vertex pair the search keeps the
//! inclusion-minimal interior vertex sets of its simple paths: a pair is
//! served iff one of those sets is colored rainbow, and a pair is dead as
//! soon as the already-colored part of every such set has a repeat.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::coloring::Coloring;
use crate::construct::{cycle_coloring, theorem_2_1_value};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::verify::{verify_rainbow_vc, RainbowMode};

/// Largest order accepted by the oracle unless overridden.
pub const DEFAULT_MAX_VERTICES: usize = 11;
pub const DEFAULT_NODE_BUDGET: u64 = 2_000_000_000;

/// Hard limit of the bitmask representation.
const MASK_LIMIT: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    pub max_vertices: usize,
    pub max_colors: Option<usize>,
    pub node_budget: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_vertices: DEFAULT_MAX_VERTICES, max_colors: None, node_budget: DEFAULT_NODE_BUDGET }
    }
}

impl SearchBudget {
    pub fn with_max_vertices(self, max_vertices: usize) -> Self {
        SearchBudget { max_vertices, ..self }
    }

    pub fn with_node_budget(self, node_budget: u64) -> Self {
        SearchBudget { node_budget, ..self }
    }

    pub fn with_max_colors(self, max_colors: usize) -> Self {
        SearchBudget { max_colors: Some(max_colors), ..self }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleResult {
    pub value: usize,
    pub witness: Coloring,
    pub nodes_expanded: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Minimum number of colors making `g` rainbow (or revised rainbow)
/// vertex-connected, with a witness using exactly that many colors.
pub fn exact_rvc(g: &Graph, mode: RainbowMode, budget: SearchBudget) -> Result<OracleResult> {
    let start = Instant::now();
    check_instance(g, budget)?;
    if g.is_complete() {
        return Ok(OracleResult {
            value: 0,
            witness: Coloring::constant(g),
            nodes_expanded: 0,
            elapsed: start.elapsed(),
        });
    }
    let lower = g.diameter()?.saturating_sub(1).max(1);
    let upper = budget.max_colors.unwrap_or(g.n()).min(g.n());
    let mut search = ColoringSearch::new(g, mode);
    let mut nodes = 0;
    for k in lower..=upper {
        let found = search.find(k, budget.node_budget.saturating_sub(nodes));
        nodes += search.nodes;
        match found {
            Ok(Some(witness)) => {
                return Ok(OracleResult { value: k, witness, nodes_expanded: nodes, elapsed: start.elapsed() })
            }
            Ok(None) => {}
            Err(_) => return Err(Error::BudgetExhausted { budget: budget.node_budget }),
        }
    }
    Err(Error::Precondition(format!("no coloring with at most {upper} colors exists")))
}

/// Searches for a coloring with at most `k` colors that passes in `mode`.
/// `Ok(None)` is an exhaustive proof that none exists.
pub fn find_coloring(g: &Graph, mode: RainbowMode, k: usize, budget: SearchBudget) -> Result<Option<Coloring>> {
    check_instance(g, budget)?;
    if g.n() <= 1 || g.is_complete() {
        return Ok((k >= 1 || g.n() == 0).then(|| Coloring::constant(g)));
    }
    ColoringSearch::new(g, mode)
        .find(k, budget.node_budget)
        .map_err(|_| Error::BudgetExhausted { budget: budget.node_budget })
}

fn check_instance(g: &Graph, budget: SearchBudget) -> Result<()> {
    let max = budget.max_vertices.min(MASK_LIMIT);
    if g.n() > max {
        return Err(Error::OverBudget { n: g.n(), max });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

struct PairPaths {
    /// Positions (in search order) of the two ends.
    ends: (usize, usize),
    /// Inclusion-minimal interior sets, as masks over search positions.
    interiors: Vec<u64>,
}

struct BudgetHit;

struct ColoringSearch {
    n: usize,
    revised: bool,
    /// `order[i]` is the vertex colored at depth `i`.
    order: Vec<Vertex>,
    pairs: Vec<PairPaths>,
    /// Pairs whose status can change when position `i` gets its color.
    touched: Vec<Vec<usize>>,
    // per-search state
    k: usize,
    colors: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl ColoringSearch {
    fn new(g: &Graph, mode: RainbowMode) -> Self {
        let n = g.n();
        let order = g.bfs_order(0);
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut pairs = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                let interiors = minimal_interiors(g, u, v)
                    .into_iter()
                    .map(|mask| remap(mask, &pos))
                    .collect();
                pairs.push(PairPaths { ends: (pos[u], pos[v]), interiors });
            }
        }
        let revised = mode.is_revised();
        let mut touched = vec![Vec::new(); n];
        for (idx, pair) in pairs.iter().enumerate() {
            let mut mask = pair.interiors.iter().fold(0u64, |acc, m| acc | m);
            if revised {
                mask |= (1 << pair.ends.0) | (1 << pair.ends.1);
            }
            for (i, list) in touched.iter_mut().enumerate() {
                if mask >> i & 1 == 1 {
                    list.push(idx);
                }
            }
        }
        ColoringSearch { n, revised, order, pairs, touched, k: 0, colors: vec![0; n], nodes: 0, budget: 0 }
    }

    fn find(&mut self, k: usize, budget: u64) -> std::result::Result<Option<Coloring>, BudgetHit> {
        self.k = k;
        self.nodes = 0;
        self.budget = budget;
        if k == 0 || k > MASK_LIMIT {
            return Ok(None);
        }
        self.colors[0] = 0;
        if !self.consistent(0) {
            return Ok(None);
        }
        if self.descend(1, 0)? {
            let mut colors = vec![0; self.n];
            for (i, &v) in self.order.iter().enumerate() {
                colors[v] = self.colors[i];
            }
            return Ok(Some(Coloring::from_colors(colors)));
        }
        Ok(None)
    }

    fn descend(&mut self, depth: usize, max_used: usize) -> std::result::Result<bool, BudgetHit> {
        if depth == self.n {
            return Ok(true);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(BudgetHit);
        }
        let top = (max_used + 1).min(self.k - 1);
        for color in 0..=top {
            self.colors[depth] = color;
            if self.consistent(depth) && self.descend(depth + 1, max_used.max(color))? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Every pair touched by position `depth` still has a set whose colored
    /// part is consistent with a rainbow completion.
    fn consistent(&self, depth: usize) -> bool {
        let colored: u64 = if depth + 1 >= 64 { u64::MAX } else { (1u64 << (depth + 1)) - 1 };
        self.touched[depth].iter().all(|&p| self.pair_alive(&self.pairs[p], colored))
    }

    fn pair_alive(&self, pair: &PairPaths, colored: u64) -> bool {
        let (a, b) = pair.ends;
        pair.interiors.iter().any(|&set| {
            if set.count_ones() as usize > self.k {
                return false;
            }
            let mut seen = 0u64;
            let mut bits = set & colored;
            while bits != 0 {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let bit = 1u64 << self.colors[i];
                if seen & bit != 0 {
                    return false;
                }
                seen |= bit;
            }
            if self.revised {
                for end in [a, b] {
                    if colored >> end & 1 == 1 && seen >> self.colors[end] & 1 == 1 {
                        return false;
                    }
                }
            }
            true
        })
    }
}

fn remap(mask: u64, pos: &[usize]) -> u64 {
    let mut out = 0;
    let mut bits = mask;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        out |= 1 << pos[v];
    }
    out
}

/// Inclusion-minimal interior vertex sets of the simple `u`-`v` paths,
/// found by depth-bounded search with increasing bound so that small sets
/// are seen first and prune their supersets.
pub(crate) fn minimal_interiors(g: &Graph, u: Vertex, v: Vertex) -> Vec<u64> {
    fn walk(g: &Graph, at: Vertex, target: Vertex, left: usize, interior: u64, visited: u64, found: &mut Vec<u64>) {
        for &w in g.neighbors(at) {
            if w == target {
                if !found.iter().any(|&f| f & interior == f) {
                    found.push(interior);
                }
                continue;
            }
            if left <= 1 || visited >> w & 1 == 1 {
                continue;
            }
            let next = interior | 1 << w;
            if found.iter().any(|&f| f & next == f) {
                continue;
            }
            walk(g, w, target, left - 1, next, visited | 1 << w, found);
        }
    }
    let mut found: Vec<u64> = Vec::new();
    for bound in 1..g.n() {
        walk(g, u, v, bound, 0, 1 << u, &mut found);
    }
    found.sort_by_key(|m| (m.count_ones(), *m));
    let mut minimal: Vec<u64> = Vec::with_capacity(found.len());
    for m in found {
        if !minimal.iter().any(|&f| f & m == f) {
            minimal.push(m);
        }
    }
    minimal
}

/// One row of the cycle table: constructed count, exact value where the
/// oracle was run, and the closed form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub n: usize,
    pub constructed: usize,
    pub constructed_verified: bool,
    pub exact: Option<usize>,
    pub closed_form: usize,
}

impl TableRow {
    pub fn agrees(&self) -> bool {
        self.constructed_verified
            && self.constructed == self.closed_form
            && self.exact.is_none_or(|e| e == self.closed_form)
    }
}

/// Rows for `3..=max_n`; the oracle is run for `n <= max_exact_n`.
pub fn reproduce_theorem_2_1(max_exact_n: usize, max_n: usize, budget: SearchBudget) -> Result<Vec<TableRow>> {
    let budget = budget.with_max_vertices(budget.max_vertices.max(max_exact_n));
    (3..=max_n)
        .map(|n| {
            let g = Graph::cycle(n);
            let built = cycle_coloring(n)?;
            let constructed_verified = verify_rainbow_vc(&g, &built, RainbowMode::rainbow())?.is_verified();
            let exact = if n <= max_exact_n {
                Some(exact_rvc(&g, RainbowMode::rainbow(), budget)?.value)
            } else {
                None
            };
            Ok(TableRow {
                n,
                constructed: built.reported_count(),
                constructed_verified,
                exact,
                closed_form: theorem_2_1_value(n),
            })
        })
        .collect()
}
