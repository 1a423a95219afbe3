//! Colorings of the cycles whose rvc sits below ceil(n/2), found once by the
//! exact search and frozen here.

use crate::coloring::Color;

const C6: [Color; 6] = [0, 0, 1, 0, 1, 0];
const C7: [Color; 7] = [0, 0, 1, 0, 2, 1, 0];
const C8: [Color; 8] = [0, 1, 0, 2, 1, 0, 2, 1];
const C9: [Color; 9] = [0, 1, 2, 0, 1, 2, 0, 1, 2];
const C10: [Color; 10] = [0, 1, 2, 3, 0, 1, 2, 3, 1, 2];
const C11: [Color; 11] = [0, 1, 2, 3, 0, 1, 2, 4, 3, 1, 2];
const C12: [Color; 12] = [0, 1, 3, 2, 4, 0, 3, 2, 1, 4, 3, 2];
const C13: [Color; 13] = [0, 1, 3, 2, 4, 5, 0, 3, 2, 1, 4, 3, 2];
const C15: [Color; 15] = [0, 1, 3, 4, 6, 2, 5, 1, 4, 0, 6, 3, 5, 4, 2];

/// Frozen coloring of `Graph::cycle(n)` for n in 6..=13 and 15.
pub fn small_cycle_colors(n: usize) -> Option<&'static [Color]> {
    Some(match n {
        6 => &C6,
        7 => &C7,
        8 => &C8,
        9 => &C9,
        10 => &C10,
        11 => &C11,
        12 => &C12,
        13 => &C13,
        15 => &C15,
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::theorem_2_1_value;
    use crate::coloring::Coloring;
    use crate::graph::Graph;
    use crate::oracle::{find_coloring, SearchBudget};
    use crate::verify::{verify_rainbow_vc, RainbowMode};

    const ORDERS: [usize; 9] = [6, 7, 8, 9, 10, 11, 12, 13, 15];

    #[test]
    fn frozen_colorings_verify() {
        for n in ORDERS {
            let g = Graph::cycle(n);
            let c = Coloring::new(&g, small_cycle_colors(n).unwrap().to_vec()).unwrap();
            assert_eq!(c.reported_count(), theorem_2_1_value(n), "C{n}");
            assert!(verify_rainbow_vc(&g, &c, RainbowMode::rainbow()).unwrap().is_verified(), "C{n}");
        }
    }

    #[test]
    fn regenerates_from_the_search() {
        for n in ORDERS {
            let k = theorem_2_1_value(n);
            let budget = SearchBudget::default().with_max_vertices(15);
            let found = find_coloring(&Graph::cycle(n), RainbowMode::rainbow(), k, budget).unwrap().unwrap();
            assert_eq!(found.colors(), small_cycle_colors(n).unwrap(), "C{n}");
        }
    }

    #[test]
    fn other_orders_are_absent() {
        for n in [3, 4, 5, 14, 16, 40] {
            assert!(small_cycle_colors(n).is_none());
        }
    }
}
