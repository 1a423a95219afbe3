//! Vertex colorings and fresh-color bookkeeping.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

pub type Color = usize;

/// A total vertex coloring together with the number of colors it is
/// reported to use. Complete graphs report 0 even though every vertex
/// physically carries a color.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coloring {
    colors: Vec<Color>,
    reported_count: usize,
}

impl Coloring {
    /// Colors the vertices of `g`; the count follows the complete-graph
    /// convention.
    pub fn new(g: &Graph, colors: Vec<Color>) -> Result<Self> {
        if colors.len() != g.n() {
            return Err(Error::DimensionMismatch { expected: g.n(), found: colors.len() });
        }
        let reported_count = if g.is_complete() { 0 } else { distinct(&colors) };
        Ok(Coloring { colors, reported_count })
    }

    /// A coloring detached from any host graph; the count is the number of
    /// distinct colors.
    pub fn from_colors(colors: Vec<Color>) -> Self {
        let reported_count = distinct(&colors);
        Coloring { colors, reported_count }
    }

    /// Every vertex of `g` gets color 0.
    pub fn constant(g: &Graph) -> Self {
        Coloring::new(g, vec![0; g.n()]).expect("matching length")
    }

    pub fn color(&self, v: Vertex) -> Color {
        self.colors[v]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn reported_count(&self) -> usize {
        self.reported_count
    }

    pub fn distinct_count(&self) -> usize {
        distinct(&self.colors)
    }

    pub fn palette(&self) -> BTreeSet<Color> {
        self.colors.iter().copied().collect()
    }

    /// Renumbers colors to `0..k` in order of first appearance.
    pub fn canonical(&self) -> Coloring {
        let mut map = std::collections::HashMap::new();
        let colors = self
            .colors
            .iter()
            .map(|c| {
                let next = map.len();
                *map.entry(*c).or_insert(next)
            })
            .collect();
        Coloring { colors, reported_count: self.reported_count }
    }

    pub fn into_colors(self) -> Vec<Color> {
        self.colors
    }
}

fn distinct(colors: &[Color]) -> usize {
    colors.iter().collect::<BTreeSet<_>>().len()
}

/// Tracks which colors came from an earlier coloring and hands out fresh
/// ones from a monotone counter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaletteLedger {
    old_colors: BTreeSet<Color>,
    new_colors: Vec<Color>,
    next: Color,
    once_used: Option<Color>,
}

impl PaletteLedger {
    pub fn new() -> Self {
        PaletteLedger { old_colors: BTreeSet::new(), new_colors: Vec::new(), next: 0, once_used: None }
    }

    /// Ledger whose old colors are those of `colors`; fresh colors start
    /// above the largest of them.
    pub fn inheriting(colors: &[Color]) -> Self {
        let old_colors: BTreeSet<Color> = colors.iter().copied().collect();
        let next = old_colors.last().map_or(0, |m| m + 1);
        PaletteLedger { old_colors, new_colors: Vec::new(), next, once_used: None }
    }

    /// Ledger that will never hand out a color below `start`.
    pub fn starting_at(start: Color) -> Self {
        PaletteLedger { next: start, ..PaletteLedger::new() }
    }

    pub fn fresh(&mut self) -> Color {
        let c = self.next;
        self.next += 1;
        self.new_colors.push(c);
        c
    }

    pub fn fresh_many(&mut self, k: usize) -> Vec<Color> {
        (0..k).map(|_| self.fresh()).collect()
    }

    pub fn old_colors(&self) -> &BTreeSet<Color> {
        &self.old_colors
    }

    pub fn new_colors(&self) -> &[Color] {
        &self.new_colors
    }

    pub fn next_unused(&self) -> Color {
        self.next
    }

    pub fn mark_once_used(&mut self, c: Color) {
        self.once_used = Some(c);
    }

    pub fn once_used(&self) -> Option<Color> {
        self.once_used
    }
}

impl Default for PaletteLedger {
    fn default() -> Self {
        PaletteLedger::new()
    }
}

/// Serialized form of a coloring: vertex count, colors by vertex, the
/// reported count and the construction that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringRecord {
    pub n: usize,
    pub colors: Vec<Color>,
    pub reported_count: usize,
    pub provenance: String,
}

impl ColoringRecord {
    pub fn new(c: &Coloring, provenance: impl Into<String>) -> Self {
        ColoringRecord {
            n: c.len(),
            colors: c.colors().to_vec(),
            reported_count: c.reported_count(),
            provenance: provenance.into(),
        }
    }

    /// The coloring on `g`; the count is recomputed from `g`.
    pub fn to_coloring(&self, g: &Graph) -> Result<Coloring> {
        if self.n != self.colors.len() {
            return Err(Error::DimensionMismatch { expected: self.n, found: self.colors.len() });
        }
        Coloring::new(g, self.colors.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graphs_report_zero() {
        let c = Coloring::new(&Graph::complete(4), vec![0, 0, 1, 2]).unwrap();
        assert_eq!(c.reported_count(), 0);
        assert_eq!(c.distinct_count(), 3);
        let c = Coloring::new(&Graph::cycle(5), vec![0, 0, 1, 2, 2]).unwrap();
        assert_eq!(c.reported_count(), 3);
    }

    #[test]
    fn dimension_mismatch() {
        assert_eq!(
            Coloring::new(&Graph::cycle(5), vec![0; 4]),
            Err(Error::DimensionMismatch { expected: 5, found: 4 })
        );
    }

    #[test]
    fn ledger_colors_are_disjoint_from_inherited() {
        let mut ledger = PaletteLedger::inheriting(&[3, 1, 7]);
        let fresh = ledger.fresh_many(3);
        assert_eq!(fresh, vec![8, 9, 10]);
        assert!(fresh.iter().all(|c| !ledger.old_colors().contains(c)));
    }

    #[test]
    fn canonical_relabels_by_first_use() {
        assert_eq!(Coloring::from_colors(vec![5, 2, 5, 9]).canonical().colors(), &[0, 1, 0, 2]);
    }

    #[test]
    fn record_round_trip() {
        let g = Graph::cycle(6);
        let c = Coloring::new(&g, vec![0, 0, 1, 0, 1, 0]).unwrap();
        let r = ColoringRecord::new(&c, "cycle");
        assert_eq!(r.reported_count, 2);
        assert_eq!(r.to_coloring(&g).unwrap(), c);
        assert!(r.to_coloring(&Graph::cycle(7)).is_err());
    }
}
