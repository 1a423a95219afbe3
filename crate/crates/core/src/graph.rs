//! Simple undirected graphs on dense `0..n` vertex ids, the edge-list text
//! format, and breadth-first structure queries.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;

/// Simple undirected graph. Adjacency lists are sorted and symmetric.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    edge_count: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], edge_count: 0 }
    }

    /// Builds a graph, rejecting self-loops and out-of-range endpoints.
    /// Repeated edges are collapsed.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { vertex: u.max(v), n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            set.insert((u.min(v), u.max(v)));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &set {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { adj, edge_count: set.len() })
    }

    /// The cycle `0, 1, ..., n-1, 0`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
    }

    /// The path `0 - 1 - ... - n-1`.
    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edges(n, edges).expect("valid complete graph")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(min, max)` pairs in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn edge_set(&self) -> BTreeSet<(Vertex, Vertex)> {
        self.edges().collect()
    }

    pub fn without_edge(&self, u: Vertex, v: Vertex) -> Graph {
        let (a, b) = (u.min(v), u.max(v));
        Graph::from_edges(self.n(), self.edges().filter(|&e| e != (a, b))).expect("subgraph")
    }

    pub fn with_edges<I>(&self, extra: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        Graph::from_edges(self.n(), self.edges().chain(extra))
    }

    /// Subgraph induced by `vertices`, relabelled to `0..k` in the order given.
    pub fn induced(&self, vertices: &[Vertex]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = vertices.iter().flat_map(|&u| {
            let index = &index;
            self.adj[u]
                .iter()
                .filter(move |&&w| index[w] != usize::MAX && u < w)
                .map(move |&w| (index[u], index[w]))
        });
        Graph::from_edges(vertices.len(), edges).expect("induced subgraph")
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.edge_count == n * n.saturating_sub(1) / 2
    }

    /// Connected and 2-regular.
    pub fn is_cycle(&self) -> bool {
        self.n() >= 3 && self.adj.iter().all(|l| l.len() == 2) && self.is_connected()
    }

    /// Single-source BFS distances; `None` for unreachable vertices.
    pub fn bfs_distances(&self, source: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Graphs with 0 or 1 vertices count as connected.
    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.bfs_distances(0).iter().all(Option::is_some)
    }

    pub fn diameter(&self) -> Result<usize> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let mut best = 0;
        for s in 0..self.n() {
            for d in self.bfs_distances(s).into_iter().flatten() {
                best = best.max(d);
            }
        }
        Ok(best)
    }

    /// Vertices in BFS order from `source`, neighbors visited in id order.
    pub fn bfs_order(&self, source: Vertex) -> Vec<Vertex> {
        let mut seen = vec![false; self.n()];
        let mut order = Vec::with_capacity(self.n());
        let mut queue = VecDeque::from([source]);
        seen[source] = true;
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        order
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// A simple path given by its vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Path(pub Vec<Vertex>);

impl Path {
    pub fn new(vertices: Vec<Vertex>) -> Self {
        Path(vertices)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Vertex {
        self.0[0]
    }

    pub fn last(&self) -> Vertex {
        *self.0.last().expect("non-empty path")
    }

    pub fn interior(&self) -> &[Vertex] {
        match self.0.len() {
            0..=2 => &[],
            k => &self.0[1..k - 1],
        }
    }

    pub fn reversed(&self) -> Path {
        Path(self.0.iter().rev().copied().collect())
    }

    /// Non-empty, consecutive vertices adjacent in `g`, no repeated vertex.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        if self.0.is_empty() || self.0.iter().any(|&v| v >= g.n()) {
            return false;
        }
        let distinct: BTreeSet<_> = self.0.iter().collect();
        distinct.len() == self.0.len() && self.0.windows(2).all(|w| g.has_edge(w[0], w[1]))
    }
}

/// Non-fatal observations made while parsing an edge list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseWarning {
    pub line: usize,
    pub message: String,
}

/// Parses the edge-list format, dropping duplicate-edge warnings.
pub fn parse_graph(text: &str) -> Result<Graph> {
    parse_graph_with_warnings(text).map(|(g, _)| g)
}

/// Parses the edge-list format: one `u v` pair per line, `#` comments,
/// blank lines ignored, and an optional leading `vertices <n>` directive.
pub fn parse_graph_with_warnings(text: &str) -> Result<(Graph, Vec<ParseWarning>)> {
    let mut declared: Option<usize> = None;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut seen = BTreeSet::new();
    let mut warnings = Vec::new();
    let mut max_id: Option<Vertex> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens[0] == "vertices" {
            if !edges.is_empty() || declared.is_some() {
                return Err(Error::Parse {
                    line,
                    message: "`vertices` directive must appear once, before any edge".into(),
                });
            }
            if tokens.len() != 2 {
                return Err(Error::Parse { line, message: "expected `vertices <n>`".into() });
            }
            declared = Some(parse_id(tokens[1], line)?);
            continue;
        }
        if tokens.len() != 2 {
            return Err(Error::Parse {
                line,
                message: format!("expected two vertex ids, found {} tokens", tokens.len()),
            });
        }
        let u = parse_id(tokens[0], line)?;
        let v = parse_id(tokens[1], line)?;
        if u == v {
            return Err(Error::Parse { line, message: format!("self-loop on vertex {u}") });
        }
        if let Some(n) = declared {
            if u.max(v) >= n {
                return Err(Error::Parse {
                    line,
                    message: format!("vertex {} out of range for declared count {n}", u.max(v)),
                });
            }
        }
        let key = (u.min(v), u.max(v));
        if !seen.insert(key) {
            warnings.push(ParseWarning {
                line,
                message: format!("duplicate edge {} {} collapsed", key.0, key.1),
            });
            continue;
        }
        max_id = Some(max_id.map_or(u.max(v), |m| m.max(u).max(v)));
        edges.push(key);
    }

    let n = declared.unwrap_or_else(|| max_id.map_or(0, |m| m + 1));
    Ok((Graph::from_edges(n, edges)?, warnings))
}

fn parse_id(token: &str, line: usize) -> Result<Vertex> {
    if token.starts_with('-') {
        return Err(Error::Parse { line, message: format!("negative vertex id `{token}`") });
    }
    token
        .parse::<Vertex>()
        .map_err(|_| Error::Parse { line, message: format!("invalid vertex id `{token}`") })
}

/// Serializes to the edge-list format. A `vertices` directive is emitted
/// only when it is needed to recover isolated trailing vertices.
pub fn serialize_graph(g: &Graph) -> String {
    let mut out = String::new();
    let implied = g.edges().map(|(_, v)| v + 1).max().unwrap_or(0);
    if implied != g.n() {
        out.push_str(&format!("vertices {}\n", g.n()));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
