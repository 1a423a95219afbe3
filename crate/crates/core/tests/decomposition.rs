use rvc_core::blocks::{block_decomposition, is_2_connected, minimal_2connected_spanning};
use rvc_core::generate::{random_2connected_with, random_block_graph, GeneratorKind};
use rvc_core::{ear_decomposition, Graph};

#[test]
fn ear_decompositions_replay_and_are_nonincreasing() {
    for seed in 0..120u64 {
        let n = 5 + seed as usize % 20;
        let kind = if seed % 2 == 0 { GeneratorKind::HamiltonChords } else { GeneratorKind::EarBuilt };
        let extra = if n >= 7 { seed as usize % 4 } else { 0 };
        let g = random_2connected_with(n, extra, seed, kind).unwrap();
        let d = ear_decomposition(&g).unwrap();
        d.check(&g).unwrap_or_else(|e| panic!("seed {seed}: {e}"));
        assert_eq!(d.replay(g.n()).unwrap(), g, "seed {seed}");
        assert_eq!(d.ears.len(), g.edge_count() - g.n(), "seed {seed}");
        assert!(d.ears.windows(2).all(|w| w[0].len() >= w[1].len()), "seed {seed}");
        assert_eq!(d.long_count, d.ears.iter().filter(|e| e.len() >= 2).count());
    }
}

#[test]
fn minimal_subgraphs_lose_only_chords() {
    for seed in 0..60u64 {
        let n = 6 + seed as usize % 15;
        let g = random_2connected_with(n, 3, seed, GeneratorKind::HamiltonChords).unwrap();
        let h = minimal_2connected_spanning(&g).unwrap();
        assert!(is_2_connected(&h));
        assert!(h.edges().all(|(u, v)| g.has_edge(u, v)));
        // Removing any edge breaks 2-connectivity.
        for (u, v) in h.edges() {
            let rest: Vec<_> = h.edges().filter(|&e| e != (u, v)).collect();
            let smaller = Graph::from_edges(h.n(), rest).unwrap();
            assert!(!is_2_connected(&smaller), "seed {seed}: edge {u}-{v} is redundant");
        }
        let d = ear_decomposition(&h).unwrap();
        assert!(d.ears.iter().all(|e| e.len() >= 2), "seed {seed}");
    }
}

#[test]
fn block_counts_of_glued_graphs() {
    for seed in 0..60u64 {
        let blocks = 1 + seed as usize % 5;
        let (g, shapes) = random_block_graph(blocks, seed).unwrap();
        let bd = block_decomposition(&g).unwrap();
        assert_eq!(bd.blocks.len(), shapes.len());
        let covered: usize = bd.blocks.iter().map(|b| b.len()).sum();
        // Each cut vertex is counted once per block that contains it.
        let extra: usize =
            bd.cut_vertices.iter().map(|&c| bd.blocks.iter().filter(|b| b.contains(&c)).count() - 1).sum();
        assert_eq!(covered - extra, g.n());
    }
}

#[test]
fn cycles_have_no_ears() {
    for n in 3..12 {
        let d = ear_decomposition(&Graph::cycle(n)).unwrap();
        assert!(d.ears.is_empty());
        assert_eq!(d.initial_cycle.len(), n);
    }
}
