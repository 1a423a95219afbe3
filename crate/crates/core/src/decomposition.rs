//! Nonincreasing ear decompositions of 2-connected graphs.
//!
//! The decomposition starts from an even cycle (unless the graph is an odd
//! cycle), adds at every step a longest ear of the current subgraph with
//! distinct endpoints, and finishes with the remaining chords as ears of
//! length 1.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::blocks::{is_2_connected, minimal_2connected_spanning};
use crate::error::{Error, Result};
use crate::graph::{Graph, Path, Vertex};

/// Default node budget for a single longest-ear search.
pub const DEFAULT_EAR_BUDGET: u64 = 20_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ear {
    pub path: Path,
}

impl Ear {
    pub fn new(path: Path) -> Self {
        Ear { path }
    }

    pub fn a(&self) -> Vertex {
        self.path.first()
    }

    pub fn b(&self) -> Vertex {
        self.path.last()
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.path.len()
    }

    pub fn is_empty(&self) -> bool {
        self.path.len() == 0
    }

    pub fn interior(&self) -> &[Vertex] {
        self.path.interior()
    }

    pub fn reversed(&self) -> Ear {
        Ear { path: self.path.reversed() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EarDecomposition {
    /// Vertex sequence of the initial cycle; the last vertex is adjacent to
    /// the first.
    pub initial_cycle: Vec<Vertex>,
    pub ears: Vec<Ear>,
    /// Ears `0..long_count` have length at least 2, the rest length 1.
    pub long_count: usize,
    /// Set when some longest-ear search ran out of budget.
    pub heuristic: bool,
}

impl EarDecomposition {
    /// Rebuilds the union of the initial cycle and all ears on `n` vertices.
    pub fn replay(&self, n: usize) -> Result<Graph> {
        let mut g = cycle_graph(n, &self.initial_cycle)?;
        for ear in &self.ears {
            g = g.with_edges(ear.path.vertices().windows(2).map(|w| (w[0], w[1])))?;
        }
        Ok(g)
    }

    /// Checks every structural condition against `g`, returning a
    /// description of the first violation.
    pub fn check(&self, g: &Graph) -> std::result::Result<(), String> {
        let cycle = &self.initial_cycle;
        if cycle.len() < 3 {
            return Err("initial cycle has fewer than 3 vertices".into());
        }
        let mut current = cycle_graph(g.n(), cycle).map_err(|e| e.to_string())?;
        if current.edges().any(|(u, v)| !g.has_edge(u, v)) {
            return Err("initial cycle uses a non-edge".into());
        }
        if !g.is_cycle() || g.n() % 2 == 0 {
            if cycle.len() % 2 == 1 {
                return Err(format!("initial cycle has odd length {}", cycle.len()));
            }
        }
        let mut in_current: Vec<bool> = vec![false; g.n()];
        for &v in cycle {
            in_current[v] = true;
        }
        let mut previous_len = usize::MAX;
        for (i, ear) in self.ears.iter().enumerate() {
            if !ear.path.is_valid_in(g) || ear.len() == 0 {
                return Err(format!("ear {i} is not a path of the graph"));
            }
            if ear.a() == ear.b() || !in_current[ear.a()] || !in_current[ear.b()] {
                return Err(format!("ear {i} endpoints are not distinct vertices of the prefix"));
            }
            if ear.interior().iter().any(|&v| in_current[v]) {
                return Err(format!("ear {i} interior meets the prefix"));
            }
            if ear.len() == 1 && current.has_edge(ear.a(), ear.b()) {
                return Err(format!("ear {i} repeats an edge"));
            }
            if ear.len() > previous_len {
                return Err(format!("ear {i} is longer than its predecessor"));
            }
            previous_len = ear.len();
            for &v in ear.interior() {
                in_current[v] = true;
            }
            current = current
                .with_edges(ear.path.vertices().windows(2).map(|w| (w[0], w[1])))
                .map_err(|e| e.to_string())?;
            let spanned: Vec<Vertex> = (0..g.n()).filter(|&v| in_current[v]).collect();
            if !is_2_connected(&current.induced(&spanned)) {
                return Err(format!("prefix after ear {i} is not 2-connected"));
            }
        }
        if current != *g {
            return Err("replay does not reproduce the edge set".into());
        }
        let long = self.ears.iter().take_while(|e| e.len() >= 2).count();
        if long != self.long_count || self.ears[long..].iter().any(|e| e.len() != 1) {
            return Err("long_count does not split long ears from chords".into());
        }
        Ok(())
    }

    /// Human-readable record: the initial cycle, one line per ear, then t.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let cycle: Vec<String> = self.initial_cycle.iter().map(|v| v.to_string()).collect();
        writeln!(out, "initial_cycle {}", cycle.join(" ")).unwrap();
        for ear in &self.ears {
            let interior: Vec<String> = ear.interior().iter().map(|v| v.to_string()).collect();
            writeln!(
                out,
                "ear a={} interior=[{}] b={} length={}",
                ear.a(),
                interior.join(" "),
                ear.b(),
                ear.len()
            )
            .unwrap();
        }
        writeln!(out, "t {}", self.long_count).unwrap();
        out
    }
}

fn cycle_graph(n: usize, cycle: &[Vertex]) -> Result<Graph> {
    let k = cycle.len();
    Graph::from_edges(n, (0..k).map(|i| (cycle[i], cycle[(i + 1) % k])))
}

/// Rotates a cycle to start at its smallest vertex, heading towards the
/// smaller of that vertex's two cycle neighbors.
fn normalize_cycle(mut cycle: Vec<Vertex>) -> Vec<Vertex> {
    let k = cycle.len();
    let start = (0..k).min_by_key(|&i| cycle[i]).unwrap_or(0);
    cycle.rotate_left(start);
    if k > 2 && cycle[k - 1] < cycle[1] {
        cycle[1..].reverse();
    }
    cycle
}

/// Vertex sequence of a graph that is a single cycle.
fn cycle_sequence(g: &Graph) -> Vec<Vertex> {
    let start = (0..g.n()).find(|&v| g.degree(v) > 0).unwrap_or(0);
    let mut seq = vec![start];
    let mut prev = start;
    let mut at = g.neighbors(start)[0];
    while at != start {
        seq.push(at);
        let next = g.neighbors(at).iter().copied().find(|&w| w != prev).expect("2-regular");
        prev = at;
        at = next;
    }
    normalize_cycle(seq)
}

/// The cyclic vertex order of a graph that is a cycle, normalized.
pub fn cycle_order(g: &Graph) -> Option<Vec<Vertex>> {
    g.is_cycle().then(|| cycle_sequence(g))
}

/// Any cycle, from the first back edge of a DFS rooted at the smallest
/// vertex that has neighbors.
fn some_cycle(g: &Graph) -> Option<Vec<Vertex>> {
    let root = (0..g.n()).find(|&v| g.degree(v) > 0)?;
    let mut parent = vec![usize::MAX; g.n()];
    let mut depth = vec![usize::MAX; g.n()];
    let mut stack = vec![(root, 0usize)];
    depth[root] = 0;
    while let Some(top) = stack.last_mut() {
        let v = top.0;
        if top.1 < g.degree(v) {
            let w = g.neighbors(v)[top.1];
            top.1 += 1;
            if depth[w] == usize::MAX {
                depth[w] = depth[v] + 1;
                parent[w] = v;
                stack.push((w, 0));
            } else if w != parent[v] && depth[w] < depth[v] {
                let mut cycle = vec![v];
                let mut at = v;
                while at != w {
                    at = parent[at];
                    cycle.push(at);
                }
                return Some(cycle);
            }
        } else {
            stack.pop();
        }
    }
    None
}

/// Some ear of the cycle `cycle` in `g`: a chord, or a shortest path
/// through vertices off the cycle.
fn ear_of_cycle(g: &Graph, cycle: &[Vertex]) -> Option<Vec<Vertex>> {
    let k = cycle.len();
    let mut on_cycle = vec![false; g.n()];
    for &v in cycle {
        on_cycle[v] = true;
    }
    let cycle_edges: BTreeSet<(Vertex, Vertex)> = (0..k)
        .map(|i| {
            let (u, v) = (cycle[i], cycle[(i + 1) % k]);
            (u.min(v), u.max(v))
        })
        .collect();
    let mut starts: Vec<Vertex> = cycle.to_vec();
    starts.sort_unstable();
    for &a in &starts {
        for &w in g.neighbors(a) {
            if on_cycle[w] && !cycle_edges.contains(&(a.min(w), a.max(w))) {
                return Some(vec![a, w]);
            }
        }
        // BFS through off-cycle vertices back to a different cycle vertex.
        let mut parent = vec![usize::MAX; g.n()];
        let mut queue = VecDeque::new();
        for &w in g.neighbors(a) {
            if !on_cycle[w] && parent[w] == usize::MAX {
                parent[w] = a;
                queue.push_back(w);
            }
        }
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                if on_cycle[y] && y != a {
                    let mut path = vec![y, x];
                    let mut at = x;
                    while parent[at] != a {
                        at = parent[at];
                        path.push(at);
                    }
                    path.push(a);
                    path.reverse();
                    return Some(path);
                }
                if !on_cycle[y] && parent[y] == usize::MAX {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
    }
    None
}

/// An even cycle of `g`, or the whole of `g` when `g` is an odd cycle.
pub fn find_initial_cycle(g: &Graph) -> Result<Path> {
    if !is_2_connected(g) {
        return Err(Error::NotTwoConnected);
    }
    if g.is_cycle() {
        return Ok(Path::new(cycle_sequence(g)));
    }
    let cycle = some_cycle(g).expect("2-connected graphs have cycles");
    if cycle.len() % 2 == 0 {
        return Ok(Path::new(normalize_cycle(cycle)));
    }
    // An ear splits the odd cycle into arcs of lengths p + q = |C|; exactly
    // one of ear + p and ear + q is even.
    let ear = ear_of_cycle(g, &cycle).expect("2-connected graph that is not a cycle has an ear");
    let (a, b) = (ear[0], *ear.last().unwrap());
    let k = cycle.len();
    let ia = cycle.iter().position(|&v| v == a).unwrap();
    let ib = cycle.iter().position(|&v| v == b).unwrap();
    // Arc from b forward (in cycle order) to a, and from a forward to b.
    let arc = |from: usize, to: usize| -> Vec<Vertex> {
        let mut out = vec![cycle[from]];
        let mut i = from;
        while i != to {
            i = (i + 1) % k;
            out.push(cycle[i]);
        }
        out
    };
    let ear_len = ear.len() - 1;
    let back = arc(ib, ia); // b .. a
    let mut closed = ear.clone();
    if (ear_len + back.len() - 1) % 2 == 0 {
        closed.extend(&back[1..back.len() - 1]);
    } else {
        let forward = arc(ia, ib); // a .. b, walked back from b to a
        closed.extend(forward[1..forward.len() - 1].iter().rev());
    }
    debug_assert_eq!(closed.len() % 2, 0);
    Ok(Path::new(normalize_cycle(closed)))
}

/// Result of a longest-ear search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EarSearch {
    pub ear: Ear,
    /// The node budget ran out; `ear` is the longest seen, not necessarily
    /// a longest ear.
    pub heuristic: bool,
}

/// A longest ear of `h` in `g`, ties broken by lexicographically smallest
/// vertex sequence. `h` is given on the vertex set of `g`; its vertices are
/// those with at least one incident `h` edge.
pub fn longest_ear(g: &Graph, h: &Graph) -> Result<Ear> {
    longest_ear_with_budget(g, h, DEFAULT_EAR_BUDGET).map(|s| s.ear)
}

pub fn longest_ear_with_budget(g: &Graph, h: &Graph, budget: u64) -> Result<EarSearch> {
    if h.n() != g.n() {
        return Err(Error::DimensionMismatch { expected: g.n(), found: h.n() });
    }
    let in_h: Vec<bool> = (0..g.n()).map(|v| h.degree(v) > 0).collect();
    // Components of g - V(h) bound how long an ear through them can be.
    let mut comp = vec![usize::MAX; g.n()];
    let mut comp_size = Vec::new();
    for s in 0..g.n() {
        if in_h[s] || comp[s] != usize::MAX {
            continue;
        }
        let id = comp_size.len();
        let mut size = 0;
        let mut queue = VecDeque::from([s]);
        comp[s] = id;
        while let Some(x) = queue.pop_front() {
            size += 1;
            for &y in g.neighbors(x) {
                if !in_h[y] && comp[y] == usize::MAX {
                    comp[y] = id;
                    queue.push_back(y);
                }
            }
        }
        comp_size.push(size);
    }
    let ceiling = comp_size.iter().map(|s| s + 1).max().unwrap_or(1);

    let mut search = EarDfs {
        g,
        in_h: &in_h,
        comp: &comp,
        comp_size: &comp_size,
        visited: vec![false; g.n()],
        path: Vec::new(),
        best: None,
        nodes: 0,
        budget,
        out_of_budget: false,
    };
    'outer: for a in (0..g.n()).filter(|&v| in_h[v]) {
        for &w in g.neighbors(a) {
            if search.best_len() >= ceiling || search.out_of_budget {
                break 'outer;
            }
            if in_h[w] {
                if w != a && !h.has_edge(a, w) && search.best.is_none() {
                    search.best = Some(vec![a, w]);
                }
                continue;
            }
            search.path = vec![a, w];
            search.visited[w] = true;
            search.walk(w, 1);
            search.visited[w] = false;
        }
    }
    let heuristic = search.out_of_budget;
    match search.best {
        Some(p) => Ok(EarSearch { ear: Ear::new(Path::new(p)), heuristic }),
        None => Err(Error::NoEar),
    }
}

struct EarDfs<'a> {
    g: &'a Graph,
    in_h: &'a [bool],
    comp: &'a [usize],
    comp_size: &'a [usize],
    visited: Vec<bool>,
    path: Vec<Vertex>,
    best: Option<Vec<Vertex>>,
    nodes: u64,
    budget: u64,
    out_of_budget: bool,
}

impl EarDfs<'_> {
    fn best_len(&self) -> usize {
        self.best.as_ref().map_or(0, |p| p.len() - 1)
    }

    /// `path` ends at the off-`h` vertex `at`; `inside` counts its off-`h`
    /// vertices.
    fn walk(&mut self, at: Vertex, inside: usize) {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.out_of_budget = true;
            return;
        }
        let a = self.path[0];
        let edges = self.path.len() - 1;
        let room = self.comp_size[self.comp[at]] - inside;
        if edges + room + 1 <= self.best_len() {
            return;
        }
        for &y in self.g.neighbors(at) {
            if self.out_of_budget {
                return;
            }
            if self.in_h[y] {
                if y != a && edges + 1 > self.best_len() {
                    let mut p = self.path.clone();
                    p.push(y);
                    self.best = Some(p);
                }
            } else if !self.visited[y] {
                self.visited[y] = true;
                self.path.push(y);
                self.walk(y, inside + 1);
                self.path.pop();
                self.visited[y] = false;
            }
        }
    }
}

/// Nonincreasing ear decomposition. Long ears are built greedily on a
/// minimal 2-connected spanning subgraph; the edges it drops follow as
/// ears of length 1 in lexicographic order.
pub fn ear_decomposition(g: &Graph) -> Result<EarDecomposition> {
    ear_decomposition_with_budget(g, DEFAULT_EAR_BUDGET)
}

pub fn ear_decomposition_with_budget(g: &Graph, budget: u64) -> Result<EarDecomposition> {
    if !is_2_connected(g) {
        return Err(Error::NotTwoConnected);
    }
    let n = g.n();
    let mut base = minimal_2connected_spanning(g)?;
    if base.is_cycle() && n % 2 == 1 && !g.is_cycle() {
        // An odd Hamilton cycle has no even cycle; one chord creates one.
        let chord = g.edges().find(|&(u, v)| !base.has_edge(u, v)).expect("g has an extra edge");
        base = base.with_edges([chord])?;
    }
    let initial_cycle = find_initial_cycle(&base)?.0;
    let mut current = cycle_graph(n, &initial_cycle)?;
    let mut ears = Vec::new();
    let mut heuristic = false;
    while current.edge_count() < base.edge_count() {
        let found = longest_ear_with_budget(&base, &current, budget)?;
        heuristic |= found.heuristic;
        current = current.with_edges(found.ear.path.vertices().windows(2).map(|w| (w[0], w[1])))?;
        ears.push(found.ear);
    }
    let long_count = ears.iter().take_while(|e| e.len() >= 2).count();
    for (u, v) in g.edges() {
        if !current.has_edge(u, v) {
            ears.push(Ear::new(Path::new(vec![u, v])));
        }
    }
    let long_count = long_count.max(ears.iter().take_while(|e| e.len() >= 2).count());
    Ok(EarDecomposition { initial_cycle, ears, long_count, heuristic })
}
