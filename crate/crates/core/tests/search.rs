mod common;

use std::collections::BTreeMap;

use common::{choose2, naive_rainbow_cliques, suite_graph};
use rainbow::constructions::{extremal, perturb_fresh_colors};
use rainbow::random::random_complete_coloring;
use rainbow::search::{
    count_rainbow_cliques, count_rainbow_cliques_up_to, find_monochromatic_cycle,
    find_monochromatic_path, find_properly_colored_c4, find_rainbow_clique,
    find_rainbow_complete_bipartite, find_rainbow_turan,
};
use rainbow::turan::thresholds;
use rainbow::{ColoredGraph, PatternKind};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn counts_match_subset_oracle() {
    for seed in 0..1000 {
        let g = suite_graph(seed, 9);
        for k in 1..=g.n().min(6) {
            let naive = naive_rainbow_cliques(&g, k);
            assert_eq!(
                count_rainbow_cliques(&g, k),
                naive.len() as u64,
                "seed={seed} k={k}"
            );
            let found = find_rainbow_clique(&g, k);
            assert_eq!(found.is_some(), !naive.is_empty(), "seed={seed} k={k}");
            if let Some(w) = found {
                // combinations() yields subsets in lexicographic order
                assert_eq!(w.vertices, naive[0], "seed={seed} k={k}");
                assert!(w.validate(&g));
            }
            let capped = count_rainbow_cliques_up_to(&g, k, 2);
            assert_eq!(capped, (naive.len() as u64).min(2));
        }
    }
}

#[test]
fn degenerate_clique_sizes() {
    let g = suite_graph(5, 9);
    assert_eq!(count_rainbow_cliques(&g, 1), g.n() as u64);
    assert_eq!(count_rainbow_cliques(&g, 2), g.edge_count() as u64);
    assert_eq!(count_rainbow_cliques(&g, 0), 0);
    assert!(find_rainbow_clique(&g, g.n() + 1).is_none());
}

/// Complete colorings at the existence threshold, half of them one fresh
/// color above the extremal coloring, plus incomplete graphs that make up
/// missing edges with extra colors.
fn threshold_graph(seed: u64) -> (ColoredGraph, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = if seed.is_multiple_of(2) { 4 } else { 5 };
    let n = rng.gen_range(k..=12);
    let target = thresholds(n, k).unwrap().existence;
    let pairs = choose2(n);
    match seed % 3 {
        0 => {
            let g = perturb_fresh_colors(&extremal(n, k).unwrap(), target, seed).unwrap();
            (g, k)
        }
        1 => {
            let need = target - pairs;
            let palette = rng.gen_range(need..=pairs) as u32;
            (random_complete_coloring(&mut rng, n, palette, need), k)
        }
        _ => {
            let slack = (2 * pairs - target) / 2;
            let missing = rng.gen_range(0..=slack);
            let g = random_complete_coloring(&mut rng, n, pairs as u32, target - pairs + missing);
            let mut sizes: BTreeMap<u32, usize> = g.color_class_sizes();
            let mut edges: Vec<_> = g.edges().collect();
            edges.shuffle(&mut rng);
            let mut dropped = 0;
            edges.retain(|&(_, _, c)| {
                if dropped < missing && sizes[&c] > 1 {
                    *sizes.get_mut(&c).unwrap() -= 1;
                    dropped += 1;
                    false
                } else {
                    true
                }
            });
            (ColoredGraph::from_edges(n, edges).unwrap(), k)
        }
    }
}

#[test]
fn existence_threshold_forces_rainbow_clique() {
    for seed in 0..1000 {
        let (g, k) = threshold_graph(seed);
        let target = thresholds(g.n(), k).unwrap().existence;
        assert!(g.edges_plus_colors() >= target, "seed={seed}");
        let w = find_rainbow_clique(&g, k).unwrap_or_else(|| panic!("seed={seed}"));
        assert!(w.validate(&g));
    }
}

#[test]
fn deletion_never_adds_rainbow_cliques() {
    for seed in 0..200 {
        let g = suite_graph(seed, 10);
        if g.n() < 2 {
            continue;
        }
        for k in 2..=4 {
            let before = count_rainbow_cliques(&g, k);
            for v in g.vertices() {
                let h = g.remove_vertex(v).unwrap();
                assert!(
                    count_rainbow_cliques(&h, k) <= before,
                    "seed={seed} v={v} k={k}"
                );
            }
        }
    }
}

#[test]
fn every_witness_validates() {
    for seed in 0..300 {
        let g = suite_graph(seed, 9);
        let n = g.n();
        let mut witnesses = Vec::new();
        witnesses.extend((1..=n).filter_map(|k| find_rainbow_clique(&g, k)));
        witnesses.extend((3..=n).filter_map(|len| find_monochromatic_cycle(&g, len)));
        witnesses.extend((2..=n).filter_map(|len| find_monochromatic_path(&g, len)));
        witnesses.extend(find_properly_colored_c4(&g));
        for a in 1..=2 {
            for b in a..=3 {
                if a + b <= n {
                    witnesses.extend(find_rainbow_complete_bipartite(&g, a, b));
                }
            }
        }
        for r in 1..=n.min(4) {
            if let Some((partition, w)) = find_rainbow_turan(&g, r) {
                assert_eq!(
                    w.kind,
                    PatternKind::RainbowTuran {
                        parts: partition.sizes().to_vec()
                    }
                );
                witnesses.push(w);
            }
        }
        for w in witnesses {
            assert!(w.validate(&g), "seed={seed} {w}");
        }
    }
}

#[test]
fn rainbow_turan_spanning_on_k6() {
    let g = rainbow::constructions::k6_variant(rainbow::constructions::K6Variant::TuranPair);
    let (p, w) = find_rainbow_turan(&g, 2).unwrap();
    assert_eq!(p.sizes(), &[3, 3]);
    assert_eq!(w.vertices.len(), 6);
    assert_eq!(w.edges.len(), 9);
    assert!(w.validate(&g));
}
