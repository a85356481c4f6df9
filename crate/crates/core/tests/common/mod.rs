//! Brute-force oracles shared by the integration test targets.
#![allow(dead_code)]

use std::collections::HashSet;

use itertools::Itertools;
use rainbow::random::{random_colored_graph, random_complete_coloring};
use rainbow::ColoredGraph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Maximum number of cross edges of a `k`-partition of `n` vertices, by
/// trying every multiset of part sizes.
pub fn turan_by_partitions(n: usize, k: usize) -> usize {
    fn walk(left: usize, parts: usize, cap: usize, squares: usize, best: &mut usize, n: usize) {
        if parts == 0 {
            if left == 0 {
                *best = (*best).max((n * n - squares) / 2);
            }
            return;
        }
        for size in 0..=left.min(cap) {
            walk(left - size, parts - 1, size, squares + size * size, best, n);
        }
    }
    let mut best = 0;
    walk(n, k, n, 0, &mut best, n);
    best
}

pub fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Vertex sets of size `k` that are pairwise adjacent with pairwise distinct
/// edge colors, by direct subset enumeration.
pub fn naive_rainbow_cliques(g: &ColoredGraph, k: usize) -> Vec<Vec<usize>> {
    if k == 0 || k > g.n() {
        return Vec::new();
    }
    g.vertices()
        .combinations(k)
        .filter(|set| {
            let mut colors = HashSet::new();
            set.iter()
                .tuple_combinations()
                .all(|(&u, &v)| g.color(u, v).is_some_and(|c| colors.insert(c)))
        })
        .collect()
}

/// Colors present at `v` that disappear when `v` is deleted, computed from
/// the deleted graph.
pub fn saturated_by_deletion(g: &ColoredGraph, v: usize) -> usize {
    let rest: HashSet<_> = g
        .edges()
        .filter(|&(a, b, _)| a != v && b != v)
        .map(|e| e.2)
        .collect();
    let at_v: HashSet<_> = g
        .edges()
        .filter(|&(a, b, _)| a == v || b == v)
        .map(|e| e.2)
        .collect();
    at_v.difference(&rest).count()
}

/// The suite graph for `seed`: `n` in `1..=max_n`, a random density and
/// palette, and every fourth seed a complete coloring.
pub fn suite_graph(seed: u64, max_n: usize) -> ColoredGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=max_n);
    let pairs = choose2(n).max(1);
    if seed % 4 == 3 && n >= 2 {
        let min_colors = rng.gen_range(1..=pairs);
        let palette = rng.gen_range(min_colors..=pairs) as u32;
        random_complete_coloring(&mut rng, n, palette, min_colors)
    } else {
        let density = rng.gen_range(0.3..=1.0);
        let palette = rng.gen_range(1..=pairs as u32);
        random_colored_graph(&mut rng, n, density, palette)
    }
}
