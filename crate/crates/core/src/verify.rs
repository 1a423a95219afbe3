//! Rainbow path search and certificate checking.
//!
//! A path is *rainbow* when its internal vertices carry pairwise distinct
//! colors. It is *revised rainbow* when every vertex carries a distinct
//! color except that the two ends may share one. Both predicates are
//! monotone: removing internal vertices from a qualifying path can only
//! keep it qualifying, which the search below uses for pruning.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coloring::{Color, Coloring};
use crate::error::{Error, Result};
use crate::graph::{Graph, Path, Vertex};

/// Default per-pair node budget for path searches.
pub const DEFAULT_PATH_BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RainbowKind {
    Rainbow,
    RevisedRainbow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RainbowMode {
    pub kind: RainbowKind,
    /// When set, no vertex of the path (ends included) may carry this color.
    pub forbidden_color: Option<Color>,
}

impl RainbowMode {
    pub const fn rainbow() -> Self {
        RainbowMode { kind: RainbowKind::Rainbow, forbidden_color: None }
    }

    pub const fn revised() -> Self {
        RainbowMode { kind: RainbowKind::RevisedRainbow, forbidden_color: None }
    }

    pub fn avoiding(self, color: Color) -> Self {
        RainbowMode { forbidden_color: Some(color), ..self }
    }

    pub fn is_revised(&self) -> bool {
        self.kind == RainbowKind::RevisedRainbow
    }
}

/// Checks the path predicate for `mode`. Validity of `p` in the host graph
/// is the caller's concern.
pub fn is_rainbow_path(p: &Path, c: &Coloring, mode: RainbowMode) -> bool {
    let vs = p.vertices();
    if let Some(x) = mode.forbidden_color {
        if vs.iter().any(|&v| c.color(v) == x) {
            return false;
        }
    }
    let mut seen = BTreeSet::new();
    if !p.interior().iter().all(|&v| seen.insert(c.color(v))) {
        return false;
    }
    match mode.kind {
        RainbowKind::Rainbow => true,
        RainbowKind::RevisedRainbow => {
            if vs.len() < 2 {
                return true;
            }
            let (a, b) = (c.color(p.first()), c.color(p.last()));
            !seen.contains(&a) && !seen.contains(&b)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateStatus {
    Verified,
    Counterexample,
}

/// Outcome of an all-pairs check: witnesses for every pair, or the first
/// pair (lexicographically) for which exhaustive search found no path.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub status: CertificateStatus,
    pub mode: RainbowMode,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failing_pair: Option<(Vertex, Vertex)>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub witnesses: Vec<((Vertex, Vertex), Path)>,
}

impl Certificate {
    pub fn is_verified(&self) -> bool {
        self.status == CertificateStatus::Verified
    }

    pub fn witness_map(&self) -> BTreeMap<(Vertex, Vertex), &Path> {
        self.witnesses.iter().map(|(k, p)| (*k, p)).collect()
    }
}

/// Reusable path search over one graph and coloring.
pub struct Verifier<'a> {
    g: &'a Graph,
    coloring: &'a Coloring,
    mode: RainbowMode,
    dense: Vec<usize>,
    forbidden: Option<usize>,
    palette_size: usize,
    budget: u64,
    keep_witnesses: bool,
}

impl<'a> Verifier<'a> {
    pub fn new(g: &'a Graph, coloring: &'a Coloring, mode: RainbowMode) -> Result<Self> {
        if coloring.len() != g.n() {
            return Err(Error::DimensionMismatch { expected: g.n(), found: coloring.len() });
        }
        let palette: Vec<Color> = coloring.palette().into_iter().collect();
        let dense = coloring
            .colors()
            .iter()
            .map(|c| palette.binary_search(c).expect("palette color"))
            .collect();
        let forbidden = mode.forbidden_color.and_then(|x| palette.binary_search(&x).ok());
        Ok(Verifier {
            g,
            coloring,
            mode,
            dense,
            forbidden,
            palette_size: palette.len(),
            budget: DEFAULT_PATH_BUDGET,
            keep_witnesses: false,
        })
    }

    /// Per-pair node budget; exhausting it is reported as
    /// [`Error::BudgetExhausted`], never as absence of a path.
    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn with_witnesses(mut self, keep: bool) -> Self {
        self.keep_witnesses = keep;
        self
    }

    /// Exhaustive search for a qualifying `u`-`v` path.
    pub fn find_path(&self, u: Vertex, v: Vertex) -> Result<Option<Path>> {
        let n = self.g.n();
        if u >= n || v >= n {
            return Err(Error::VertexOutOfRange { vertex: u.max(v), n });
        }
        if let Some(x) = self.forbidden {
            if self.dense[u] == x || self.dense[v] == x {
                return Ok(None);
            }
        }
        if u == v {
            return Ok(Some(Path::new(vec![u])));
        }
        let usable = self.palette_size - usize::from(self.forbidden.is_some());
        let mut search = Search {
            g: self.g,
            dense: &self.dense,
            forbidden: self.forbidden,
            revised: self.mode.is_revised(),
            target: v,
            target_color: self.dense[v],
            dist_to_target: self.g.bfs_distances(v),
            used: ColorSet::new(self.palette_size),
            used_count: 0,
            capacity: usable,
            on_path: vec![false; n],
            path: vec![u],
            nodes: 0,
            budget: self.budget,
        };
        if search.revised {
            // The start color may reappear only at the target.
            search.used.insert(self.dense[u]);
            search.used_count = 1;
        }
        search.on_path[u] = true;
        match search.extend(u) {
            Step::Found => Ok(Some(Path::new(search.path))),
            Step::Exhausted => Ok(None),
            Step::OutOfBudget => Err(Error::BudgetExhausted { budget: self.budget }),
        }
    }

    /// All-pairs check, fanned out over the rayon pool. The failing pair
    /// reported is the lexicographic minimum over all pairs proven to fail.
    pub fn certify(&self) -> Result<Certificate> {
        if !self.g.is_connected() {
            return Err(Error::Disconnected);
        }
        let n = self.g.n();
        let pairs: Vec<(Vertex, Vertex)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let outcomes: Vec<Result<Option<Path>>> =
            pairs.par_iter().map(|&(u, v)| self.find_path(u, v)).collect();

        let mut witnesses = Vec::new();
        let mut inconclusive = None;
        for (&pair, outcome) in pairs.iter().zip(outcomes) {
            match outcome {
                Ok(Some(p)) => {
                    if self.keep_witnesses {
                        witnesses.push((pair, p));
                    }
                }
                Ok(None) => {
                    return Ok(Certificate {
                        status: CertificateStatus::Counterexample,
                        mode: self.mode,
                        failing_pair: Some(pair),
                        witnesses: Vec::new(),
                    });
                }
                Err(e) => {
                    inconclusive.get_or_insert(e);
                }
            }
        }
        if let Some(e) = inconclusive {
            return Err(e);
        }
        Ok(Certificate { status: CertificateStatus::Verified, mode: self.mode, failing_pair: None, witnesses })
    }

    pub fn coloring(&self) -> &Coloring {
        self.coloring
    }
}

enum Step {
    Found,
    Exhausted,
    OutOfBudget,
}

struct Search<'a> {
    g: &'a Graph,
    dense: &'a [usize],
    forbidden: Option<usize>,
    revised: bool,
    target: Vertex,
    target_color: usize,
    dist_to_target: Vec<Option<usize>>,
    used: ColorSet,
    used_count: usize,
    capacity: usize,
    on_path: Vec<bool>,
    path: Vec<Vertex>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn extend(&mut self, at: Vertex) -> Step {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Step::OutOfBudget;
        }
        for &w in self.g.neighbors(at) {
            if w == self.target {
                self.path.push(w);
                return Step::Found;
            }
        }
        // Colors still available for interior vertices after the next one.
        let reserved = usize::from(self.revised);
        for &w in self.g.neighbors(at) {
            if self.on_path[w] {
                continue;
            }
            let cw = self.dense[w];
            if Some(cw) == self.forbidden || self.used.contains(cw) {
                continue;
            }
            if self.revised && cw == self.target_color {
                continue;
            }
            let Some(d) = self.dist_to_target[w] else { continue };
            // w plus at least d - 1 further interior vertices, all distinct.
            let interior_after = self.used_count + 1 - reserved;
            if interior_after + d - 1 > self.capacity.saturating_sub(reserved) {
                continue;
            }
            self.on_path[w] = true;
            self.used.insert(cw);
            self.used_count += 1;
            self.path.push(w);
            match self.extend(w) {
                Step::Exhausted => {}
                other => return other,
            }
            self.path.pop();
            self.used_count -= 1;
            self.used.remove(cw);
            self.on_path[w] = false;
        }
        Step::Exhausted
    }
}

/// Fixed-width bitset over dense color indices.
#[derive(Clone)]
struct ColorSet {
    words: Vec<u64>,
}

impl ColorSet {
    fn new(size: usize) -> Self {
        ColorSet { words: vec![0; size.div_ceil(64).max(1)] }
    }

    #[inline]
    fn contains(&self, i: usize) -> bool {
        self.words[i >> 6] & (1u64 << (i & 63)) != 0
    }

    #[inline]
    fn insert(&mut self, i: usize) {
        self.words[i >> 6] |= 1u64 << (i & 63);
    }

    #[inline]
    fn remove(&mut self, i: usize) {
        self.words[i >> 6] &= !(1u64 << (i & 63));
    }
}

pub fn exists_rainbow_path(
    g: &Graph,
    c: &Coloring,
    u: Vertex,
    v: Vertex,
    mode: RainbowMode,
) -> Result<Option<Path>> {
    Verifier::new(g, c, mode)?.find_path(u, v)
}

pub fn verify_rainbow_vc(g: &Graph, c: &Coloring, mode: RainbowMode) -> Result<Certificate> {
    Verifier::new(g, c, mode)?.certify()
}

/// Property (*) of a revised rainbow coloring relative to `v` and color
/// `x`: every vertex not colored `x` is reached from `v` by a revised
/// rainbow path on which `x` does not occur. Returns the first vertex for
/// which no such path exists.
pub fn property_star_violation(g: &Graph, c: &Coloring, v: Vertex, x: Color) -> Result<Option<Vertex>> {
    if c.color(v) == x {
        return Err(Error::Precondition(format!("vertex {v} carries the excluded color {x}")));
    }
    let verifier = Verifier::new(g, c, RainbowMode::revised().avoiding(x))?;
    for u in 0..g.n() {
        if c.color(u) == x {
            continue;
        }
        if verifier.find_path(v, u)?.is_none() {
            return Ok(Some(u));
        }
    }
    Ok(None)
}

pub fn has_property_star(g: &Graph, c: &Coloring, v: Vertex, x: Color) -> Result<bool> {
    property_star_violation(g, c, v, x).map(|bad| bad.is_none())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColorStats {
    pub distinct: usize,
    /// Multiplicity of each color.
    pub multiplicity: BTreeMap<Color, usize>,
    /// Number of colors with each multiplicity.
    pub histogram: BTreeMap<usize, usize>,
    pub once_used: Vec<Color>,
}

impl ColorStats {
    pub fn max_multiplicity(&self) -> usize {
        self.histogram.keys().next_back().copied().unwrap_or(0)
    }
}

pub fn color_stats(c: &Coloring) -> ColorStats {
    let mut multiplicity = BTreeMap::new();
    for &col in c.colors() {
        *multiplicity.entry(col).or_insert(0) += 1;
    }
    let mut histogram = BTreeMap::new();
    for &m in multiplicity.values() {
        *histogram.entry(m).or_insert(0) += 1;
    }
    let once_used = multiplicity.iter().filter(|(_, &m)| m == 1).map(|(&col, _)| col).collect();
    ColorStats { distinct: multiplicity.len(), multiplicity, histogram, once_used }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn colored(colors: &[Color]) -> Coloring {
        Coloring::from_colors(colors.to_vec())
    }

    #[test]
    fn path_predicate_examples() {
        let two = Path::new(vec![0, 1]);
        assert!(is_rainbow_path(&two, &colored(&[4, 4]), RainbowMode::rainbow()));
        assert!(is_rainbow_path(&two, &colored(&[4, 4]), RainbowMode::revised()));

        let p = Path::new(vec![0, 1, 2, 3, 4]);
        let c = colored(&[5, 1, 2, 1, 6]);
        assert!(!is_rainbow_path(&p, &c, RainbowMode::rainbow()));
        assert!(!is_rainbow_path(&p, &c, RainbowMode::revised()));

        let p = Path::new(vec![0, 1, 2, 3]);
        let c = colored(&[3, 1, 2, 3]);
        assert!(is_rainbow_path(&p, &c, RainbowMode::rainbow()));
        assert!(is_rainbow_path(&p, &c, RainbowMode::revised()));
    }

    #[test]
    fn revised_rejects_end_color_inside() {
        let p = Path::new(vec![0, 1, 2]);
        let c = colored(&[7, 7, 8]);
        assert!(is_rainbow_path(&p, &c, RainbowMode::rainbow()));
        assert!(!is_rainbow_path(&p, &c, RainbowMode::revised()));
        assert!(!is_rainbow_path(&p, &colored(&[1, 2, 3]), RainbowMode::rainbow().avoiding(3)));
    }

    #[test]
    fn c7_with_adjacent_repeat_has_no_path_between_v7_and_v3() {
        // v1..v7 are vertices 0..6; v1 and v2 share a color.
        let g = Graph::cycle(7);
        let c = Coloring::new(&g, vec![0, 0, 1, 0, 1, 0, 1]).unwrap();
        assert_eq!(exists_rainbow_path(&g, &c, 6, 2, RainbowMode::rainbow()).unwrap(), None);
    }

    #[test]
    fn adjacent_pairs_use_the_edge() {
        let g = Graph::cycle(6);
        let c = Coloring::new(&g, vec![0; 6]).unwrap();
        let p = exists_rainbow_path(&g, &c, 2, 3, RainbowMode::revised()).unwrap().unwrap();
        assert_eq!(p.vertices(), &[2, 3]);
    }

    #[test]
    fn c14_wraparound_antipodal_pair() {
        let g = Graph::cycle(14);
        let c = Coloring::new(&g, (0..14).map(|i| i % 7).collect()).unwrap();
        let p = exists_rainbow_path(&g, &c, 0, 7, RainbowMode::rainbow()).unwrap().unwrap();
        assert_eq!(p.len(), 7);
        assert!(verify_rainbow_vc(&g, &c, RainbowMode::rainbow()).unwrap().is_verified());
    }

    #[test]
    fn constant_coloring_of_complete_graph_verifies() {
        let g = Graph::complete(5);
        let c = Coloring::constant(&g);
        assert!(verify_rainbow_vc(&g, &c, RainbowMode::rainbow()).unwrap().is_verified());
    }

    #[test]
    fn counterexample_is_first_failing_pair() {
        let g = Graph::path(4);
        let c = Coloring::new(&g, vec![0, 1, 1, 0]).unwrap();
        let cert = verify_rainbow_vc(&g, &c, RainbowMode::rainbow()).unwrap();
        assert_eq!(cert.status, CertificateStatus::Counterexample);
        assert_eq!(cert.failing_pair, Some((0, 3)));
    }

    #[test]
    fn witnesses_are_kept_on_request() {
        let g = Graph::cycle(5);
        let c = Coloring::new(&g, vec![0; 5]).unwrap();
        let cert = Verifier::new(&g, &c, RainbowMode::rainbow())
            .unwrap()
            .with_witnesses(true)
            .certify()
            .unwrap();
        assert_eq!(cert.witnesses.len(), 10);
        for ((u, v), p) in &cert.witnesses {
            assert_eq!((p.first(), p.last()), (*u, *v));
            assert!(p.is_valid_in(&g));
            assert!(is_rainbow_path(p, &c, RainbowMode::rainbow()));
        }
    }

    #[test]
    fn budget_exhaustion_is_not_absence() {
        let g = Graph::cycle(9);
        let c = Coloring::new(&g, (0..9).collect()).unwrap();
        let v = Verifier::new(&g, &c, RainbowMode::rainbow()).unwrap().with_budget(1);
        assert_eq!(v.find_path(0, 4), Err(Error::BudgetExhausted { budget: 1 }));
    }

    #[test]
    fn star_center_has_property_star() {
        let g = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let c = Coloring::new(&g, vec![0, 1, 2, 3, 9]).unwrap();
        assert!(has_property_star(&g, &c, 0, 9).unwrap());
        assert!(has_property_star(&g, &c, 0, 0).is_err());
    }

    #[test]
    fn c5_property_star_brute_force() {
        // C5 colored (1,1,1,1,2); from vertex 0 avoiding color 2 the only
        // route to vertex 2 is 0-1-2, whose interior {1} is fine in revised
        // mode only if its color differs from both ends, which it does not.
        let g = Graph::cycle(5);
        let c = Coloring::new(&g, vec![1, 1, 1, 1, 2]).unwrap();
        assert_eq!(property_star_violation(&g, &c, 0, 2).unwrap(), Some(2));
        assert_eq!(brute_force_star(&g, &c, 0, 2), Some(2));
    }

    fn brute_force_star(g: &Graph, c: &Coloring, v: Vertex, x: Color) -> Option<Vertex> {
        let mode = RainbowMode::revised().avoiding(x);
        (0..g.n()).filter(|&u| c.color(u) != x && u != v).find(|&u| {
            !all_simple_paths(g, v, u).iter().any(|p| is_rainbow_path(p, c, mode))
        })
    }

    fn all_simple_paths(g: &Graph, from: Vertex, to: Vertex) -> Vec<Path> {
        fn go(g: &Graph, to: Vertex, path: &mut Vec<Vertex>, out: &mut Vec<Path>) {
            let at = *path.last().unwrap();
            if at == to {
                out.push(Path::new(path.clone()));
                return;
            }
            for &w in g.neighbors(at) {
                if !path.contains(&w) {
                    path.push(w);
                    go(g, to, path, out);
                    path.pop();
                }
            }
        }
        let mut out = Vec::new();
        go(g, to, &mut vec![from], &mut out);
        out
    }

    #[test]
    fn stats() {
        let s = color_stats(&colored(&[1, 2, 1, 2]));
        assert_eq!(s.distinct, 2);
        assert_eq!(s.histogram, BTreeMap::from([(2, 2)]));
        assert!(s.once_used.is_empty());

        let s = color_stats(&colored(&[1, 2, 3, 1, 2]));
        assert_eq!(s.distinct, 3);
        assert_eq!(s.once_used, vec![3]);
        assert_eq!(s.max_multiplicity(), 2);
    }
}
