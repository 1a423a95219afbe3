//! Balanced extension of a revised rainbow coloring across one long ear.
//!
//! The host `H` occupies vertices `0..|H|` and the ear's interior takes the
//! next `s - 2` ids, so `H ∪ P` is again a graph on dense ids. Along the
//! ear `v_1 (= a), ..., v_s (= b)` the two halves are colored with the same
//! fresh colors `x_1, x_2, ...`, the old colors of `a` and `b` move to the
//! middle of the ear, and when the order of `H ∪ P` is odd one ear vertex
//! carries a color used nowhere else.

use serde::{Deserialize, Serialize};

use crate::coloring::{Color, Coloring, PaletteLedger};
use crate::error::{Error, Result};
use crate::graph::{Graph, Path, Vertex};
use crate::verify::{color_stats, property_star_violation, verify_rainbow_vc, RainbowMode};

/// The four cases, by parity of `|H|` and of the ear length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BalancedCase {
    /// `|H|` even, ear length odd.
    EvenHostOddEar,
    /// `|H|` odd, ear length even.
    OddHostEvenEar,
    /// `|H|` even, ear length even.
    EvenHostEvenEar,
    /// `|H|` odd, ear length odd.
    OddHostOddEar,
}

impl BalancedCase {
    pub fn of(host_order: usize, ear_len: usize) -> Self {
        match (host_order % 2 == 1, ear_len % 2 == 1) {
            (false, true) => BalancedCase::EvenHostOddEar,
            (true, false) => BalancedCase::OddHostEvenEar,
            (false, false) => BalancedCase::EvenHostEvenEar,
            (true, true) => BalancedCase::OddHostOddEar,
        }
    }

    /// 1 through 4, in the order listed above.
    pub fn number(self) -> u8 {
        match self {
            BalancedCase::EvenHostOddEar => 1,
            BalancedCase::OddHostEvenEar => 2,
            BalancedCase::EvenHostEvenEar => 3,
            BalancedCase::OddHostOddEar => 4,
        }
    }

    /// The result has odd order and one once-used color.
    fn has_singleton(self) -> bool {
        matches!(self, BalancedCase::EvenHostEvenEar | BalancedCase::OddHostOddEar)
    }

    /// The once-used color of the host is reused at the end of the first half.
    fn reuses_host_singleton(self) -> bool {
        matches!(self, BalancedCase::OddHostEvenEar | BalancedCase::OddHostOddEar)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalancedColoring {
    /// `H ∪ P`.
    pub graph: Graph,
    pub coloring: Coloring,
    pub case: BalancedCase,
    /// Fresh colors used on both halves of the ear, in order.
    pub paired_colors: Vec<Color>,
    /// The color used exactly once, when the order of `H ∪ P` is odd.
    pub once_used: Option<Color>,
    /// Ear vertex carrying `once_used`.
    pub singleton_vertex: Option<Vertex>,
}

/// `h ∪ ear`, where the ear's ends lie in `h` and its interior is exactly
/// the ids `h.n()..h.n() + len - 1`.
pub fn extend_with_ear(h: &Graph, ear: &Path) -> Result<Graph> {
    let vs = ear.vertices();
    if vs.len() < 2 {
        return Err(Error::Precondition("an ear has at least one edge".into()));
    }
    let (a, b) = (ear.first(), ear.last());
    let nh = h.n();
    if a >= nh || b >= nh {
        return Err(Error::Precondition(format!("ear ends {a}, {b} must be vertices of the host")));
    }
    if a == b {
        return Err(Error::Precondition("ear ends must be distinct".into()));
    }
    let interior = ear.interior();
    let mut seen = vec![false; interior.len()];
    for &v in interior {
        if v < nh || v >= nh + interior.len() || std::mem::replace(&mut seen[v - nh], true) {
            return Err(Error::Precondition(format!(
                "ear interior must be exactly the new ids {}..{}",
                nh,
                nh + interior.len()
            )));
        }
    }
    if interior.is_empty() && h.has_edge(a, b) {
        return Err(Error::Precondition(format!("edge {a} {b} is already in the host")));
    }
    let mut edges: Vec<(Vertex, Vertex)> = h.edges().collect();
    edges.extend(vs.windows(2).map(|w| (w[0], w[1])));
    Graph::from_edges(nh + interior.len(), edges)
}

/// Balanced coloring of `h ∪ ear` from the revised rainbow coloring
/// `c_prime` of `h`.
///
/// `c_prime` must use `ceil(|h|/2)` colors, each at most twice; when `|h|`
/// is odd its single once-used color must not sit on the ear's first
/// vertex. When the result has odd order and `star_target` is given, the
/// once-used vertex is placed so that property (*) holds with respect to
/// `star_target` and the new once-used color; without a target it goes to
/// the middle vertex `v_{ceil(s/2)}`.
pub fn balanced_coloring(
    h: &Graph,
    c_prime: &Coloring,
    ear: &Path,
    star_target: Option<Vertex>,
) -> Result<BalancedColoring> {
    balanced_coloring_with(h, c_prime, ear, star_target, BalancedCheck::Verified)
}

/// How [`balanced_coloring_with`] picks the place of the once-used color.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BalancedCheck {
    /// Try the rule's position, then every other one, and keep the first
    /// result that passes the revised-rainbow verifier and, given a target,
    /// the property (*) check. Fails when no position passes.
    Verified,
    /// Take the rule's position (the middle vertex without a target) and
    /// check nothing.
    RuleOnly,
}

pub fn balanced_coloring_with(
    h: &Graph,
    c_prime: &Coloring,
    ear: &Path,
    star_target: Option<Vertex>,
    check: BalancedCheck,
) -> Result<BalancedColoring> {
    let s = ear.vertices().len();
    if s < 6 {
        return Err(Error::Precondition(format!("balanced coloring needs an ear with at least 6 vertices, got {s}")));
    }
    let graph = extend_with_ear(h, ear)?;
    let nh = h.n();
    if c_prime.len() != nh {
        return Err(Error::DimensionMismatch { expected: nh, found: c_prime.len() });
    }
    let stats = color_stats(c_prime);
    if stats.max_multiplicity() > 2 || stats.distinct != nh.div_ceil(2) {
        return Err(Error::Precondition(format!(
            "host coloring must use {} colors at most twice each, found {} colors with multiplicity up to {}",
            nh.div_ceil(2),
            stats.distinct,
            stats.max_multiplicity()
        )));
    }
    let (a, b) = (ear.first(), ear.last());
    let case = BalancedCase::of(nh, s - 1);
    let host_singleton = if case.reuses_host_singleton() {
        match stats.once_used.as_slice() {
            [x] if c_prime.color(a) != *x => Some(*x),
            _ => {
                return Err(Error::Precondition(
                    "odd host coloring needs exactly one once-used color, absent from the ear's first vertex".into(),
                ))
            }
        }
    } else {
        None
    };
    if let Some(t) = star_target {
        if t >= graph.n() {
            return Err(Error::VertexOutOfRange { vertex: t, n: graph.n() });
        }
    }

    let half = s.div_ceil(2);
    let paired = match case {
        BalancedCase::EvenHostOddEar => s / 2 - 1,
        BalancedCase::OddHostEvenEar | BalancedCase::EvenHostEvenEar => half - 2,
        BalancedCase::OddHostOddEar => s / 2 - 2,
    };
    let mut ledger = PaletteLedger::inheriting(c_prime.colors());
    let paired_colors = ledger.fresh_many(paired);
    let singleton_color = case.has_singleton().then(|| ledger.fresh());
    if let Some(x) = singleton_color {
        ledger.mark_once_used(x);
    }

    let (ca, cb) = (c_prime.color(a), c_prime.color(b));
    let mut head: Vec<Color> = if ca != cb {
        paired_colors.iter().copied().chain([ca]).collect()
    } else {
        [ca].into_iter().chain(paired_colors.iter().copied()).collect()
    };
    head.extend(host_singleton);
    let tail: Vec<Color> = [cb].into_iter().chain(paired_colors.iter().copied()).collect();

    let build = |singleton_at: Option<usize>| -> Coloring {
        let mut colors: Vec<Color> = c_prime.colors().to_vec();
        colors.resize(graph.n(), 0);
        let free: Vec<Vertex> = (0..s).filter(|&i| Some(i) != singleton_at).collect();
        debug_assert_eq!(free.len(), head.len() + tail.len());
        for (&pos, &col) in free.iter().zip(head.iter().chain(tail.iter())) {
            colors[ear.vertices()[pos]] = col;
        }
        if let (Some(pos), Some(x)) = (singleton_at, singleton_color) {
            colors[ear.vertices()[pos]] = x;
        }
        Coloring::new(&graph, colors).expect("dimension matches")
    };

    // Candidate places for the once-used color: the rule's choice first,
    // then every other ear position in order.
    let candidates: Vec<Option<usize>> = match singleton_color {
        None => vec![None],
        Some(_) => {
            let preferred = match star_target {
                None => Some(half - 1),
                Some(target) => rule_position(case, ear, c_prime, target, nh),
            };
            preferred
                .into_iter()
                .chain((0..s).filter(|&q| Some(q) != preferred))
                .filter(|&q| star_target != Some(ear.vertices()[q]))
                .map(Some)
                .collect()
        }
    };
    let (coloring, singleton_at) = match check {
        BalancedCheck::RuleOnly => {
            let q = candidates[0];
            (build(q), q)
        }
        BalancedCheck::Verified => {
            let mut failure = None;
            let mut chosen = None;
            for q in candidates {
                let candidate = build(q);
                let cert = verify_rainbow_vc(&graph, &candidate, RainbowMode::revised())?;
                if let Some(pair) = cert.failing_pair {
                    failure.get_or_insert(pair);
                    continue;
                }
                if let (Some(target), Some(x)) = (star_target, singleton_color) {
                    if let Some(u) = property_star_violation(&graph, &candidate, target, x)? {
                        failure.get_or_insert((target, u));
                        continue;
                    }
                }
                chosen = Some((candidate, q));
                break;
            }
            match chosen {
                Some(found) => found,
                None => {
                    let (u, v) = failure.unwrap_or((a, b));
                    return Err(Error::ConstructionFailed(u, v));
                }
            }
        }
    };

    Ok(BalancedColoring {
        graph,
        coloring,
        case,
        paired_colors,
        once_used: singleton_color,
        singleton_vertex: singleton_at.map(|q| ear.vertices()[q]),
    })
}

/// Position (0-based along the ear) for the once-used color that makes
/// property (*) hold with respect to `target`.
fn rule_position(case: BalancedCase, ear: &Path, c_prime: &Coloring, target: Vertex, nh: usize) -> Option<usize> {
    let s = ear.vertices().len();
    let half = s.div_ceil(2);
    if let Some(p) = ear.vertices().iter().position(|&v| v == target) {
        // The vertex at distance ceil(s/2) from the target along the ear.
        return if p + half < s { Some(p + half) } else { p.checked_sub(half) };
    }
    debug_assert!(target < nh);
    match case {
        BalancedCase::EvenHostEvenEar => Some(half - 1),
        BalancedCase::OddHostOddEar => {
            if c_prime.color(target) != c_prime.color(ear.first()) {
                Some(s / 2)
            } else {
                Some(s / 2 - 1)
            }
        }
        _ => None,
    }
}
