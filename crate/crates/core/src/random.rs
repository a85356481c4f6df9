//! Seeded random colored graphs for property suites and falsification runs.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{Color, ColoredGraph, GraphBuilder};
use crate::turan::binomial2;

/// Each pair becomes an edge with probability `density`; colors are drawn
/// uniformly from `1..=palette`.
pub fn random_colored_graph<R: Rng>(
    rng: &mut R,
    n: usize,
    density: f64,
    palette: Color,
) -> ColoredGraph {
    let mut builder = GraphBuilder::new(n).expect("valid vertex count");
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.gen_bool(density) {
                builder
                    .add_edge(u, v, rng.gen_range(1..=palette.max(1)))
                    .expect("fresh pair");
            }
        }
    }
    builder.build()
}

/// A complete coloring of `K_n` with at least `min_colors` colors: edges get
/// uniform colors from a palette of size `palette >= min_colors`, then edges
/// of repeated colors are moved to fresh colors until the count is reached.
pub fn random_complete_coloring<R: Rng>(
    rng: &mut R,
    n: usize,
    palette: Color,
    min_colors: usize,
) -> ColoredGraph {
    let pairs = binomial2(n);
    assert!(
        min_colors <= pairs,
        "cannot use {min_colors} colors on {pairs} edges"
    );
    let palette = palette.max(min_colors as Color).max(1);
    let mut edges: Vec<(usize, usize, Color)> = (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v, 0)))
        .collect();
    for e in edges.iter_mut() {
        e.2 = rng.gen_range(1..=palette);
    }
    let mut fresh = palette;
    loop {
        let mut sizes = std::collections::HashMap::new();
        for e in &edges {
            *sizes.entry(e.2).or_insert(0usize) += 1;
        }
        if sizes.len() >= min_colors {
            break;
        }
        let shared: Vec<usize> = (0..edges.len())
            .filter(|&i| sizes[&edges[i].2] >= 2)
            .collect();
        let &pick = shared
            .choose(rng)
            .expect("a repeated color exists below the target");
        fresh += 1;
        edges[pick].2 = fresh;
    }
    ColoredGraph::from_edges(n, edges).expect("valid edges")
}
