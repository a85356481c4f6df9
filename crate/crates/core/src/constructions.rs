//! Explicit colorings: the extremal rainbow-`K_k`-free pattern, the
//! lexicographic coloring, the two 10-colorings of `K_6`, the 7-vertex
//! non-complete example, and fresh-color perturbations.

use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{invalid, Error, Result};
use crate::graph::{Color, ColoredGraph, GraphBuilder};
use crate::turan::{binomial2, turan_partition};

/// Complete `K_n` over a balanced `(k-2)`-partition of consecutive vertex
/// blocks. Cross edges get colors `1..=t(n, k-2)` in row-major order and
/// every intra-part edge gets the single color `t(n, k-2) + 1`.
///
/// When `n = k - 2` every part is a single vertex and no intra-part edge
/// exists, so the shared color is absent.
pub fn extremal(n: usize, k: usize) -> Result<ColoredGraph> {
    if k < 4 {
        return Err(invalid(format!("extremal coloring needs k >= 4, got {k}")));
    }
    if n < k - 2 {
        return Err(invalid(format!(
            "extremal coloring needs n >= k - 2, got n={n}, k={k}"
        )));
    }
    let labels = turan_partition(n, k - 2)?.block_labels();
    let cross = (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .filter(|&(u, v)| labels[u - 1] != labels[v - 1])
        .count() as Color;
    let mut next = 0;
    Ok(ColoredGraph::complete(n, |u, v| {
        if labels[u - 1] == labels[v - 1] {
            cross + 1
        } else {
            next += 1;
            next
        }
    })?)
}

/// `K_n` with `color(u, v) = min(u, v)`.
pub fn lexicographic(n: usize) -> Result<ColoredGraph> {
    if n < 2 {
        return Err(invalid(format!(
            "lexicographic coloring needs n >= 2, got {n}"
        )));
    }
    Ok(ColoredGraph::complete(n, |u, v| u.min(v) as Color)?)
}

/// The two 10-colorings of `K_6` without a rainbow `K_4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum K6Variant {
    /// Rainbow `T(6,2)` on `{1,2,3} | {4,5,6}`, both triangles in color 10.
    TuranPair,
    /// Cycle `1-2-3-4-5-6-1` in color 1, the other nine edges in `2..=10`.
    MonoC6,
}

impl FromStr for K6Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "turan-pair" => Ok(K6Variant::TuranPair),
            "mono-c6" => Ok(K6Variant::MonoC6),
            other => Err(invalid(format!(
                "unknown K6 variant {other:?} (expected turan-pair or mono-c6)"
            ))),
        }
    }
}

pub fn k6_variant(which: K6Variant) -> ColoredGraph {
    match which {
        K6Variant::TuranPair => extremal(6, 4).expect("valid parameters"),
        K6Variant::MonoC6 => {
            let on_cycle = |u: usize, v: usize| v - u == 1 || (u, v) == (1, 6);
            let mut next = 1;
            ColoredGraph::complete(6, |u, v| {
                if on_cycle(u, v) {
                    1
                } else {
                    next += 1;
                    next
                }
            })
            .expect("valid parameters")
        }
    }
}

/// Seven vertices: lexicographic `K_5` on `1..=5`, and two nonadjacent
/// vertices 6 and 7 each joined to `1..=5` by five fresh colors, assigned in
/// row-major order. `e + c = 20 + 14 = 34`.
pub fn counterexample_n7() -> ColoredGraph {
    let mut builder = GraphBuilder::new(7).expect("valid size");
    let mut fresh = 4;
    for u in 1..=7usize {
        for v in u + 1..=7 {
            let color = match (u, v) {
                (6, 7) => continue,
                (_, 6) | (_, 7) => {
                    fresh += 1;
                    fresh
                }
                _ => u as Color,
            };
            builder.add_edge(u, v, color).expect("valid edge");
        }
    }
    builder.build()
}

/// `g` with the edge `uv` moved to a brand-new color `max + 1`.
pub fn recolor_fresh(g: &ColoredGraph, u: usize, v: usize) -> Result<ColoredGraph> {
    if u == 0 || v == 0 || u > g.n() || v > g.n() || !g.has_edge(u, v) {
        return Err(invalid(format!("{u}-{v} is not an edge")));
    }
    let fresh = g.max_color() + 1;
    let (a, b) = (u.min(v), u.max(v));
    Ok(g.recolored(|x, y, c| if (x, y) == (a, b) { fresh } else { c }))
}

/// Recolors uniformly random edges from color classes with at least two
/// edges, each to a fresh color, until `e + c >= target_ec`. Every step
/// raises `c` by exactly one.
pub fn perturb_fresh_colors(g: &ColoredGraph, target_ec: usize, seed: u64) -> Result<ColoredGraph> {
    if !g.is_complete() {
        return Err(invalid("perturbation expects a complete graph"));
    }
    let max = 2 * binomial2(g.n());
    if target_ec > max {
        return Err(Error::Unreachable {
            target: target_ec,
            max,
        });
    }
    if g.edges_plus_colors() >= target_ec {
        return Ok(g.clone());
    }

    let mut edges: Vec<(usize, usize, Color)> = g.edges().collect();
    let mut class_size = g.color_class_sizes();
    let mut fresh = g.max_color();
    let mut ec = g.edges_plus_colors();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while ec < target_ec {
        let shared: Vec<usize> = (0..edges.len())
            .filter(|&i| class_size[&edges[i].2] >= 2)
            .collect();
        let &pick = shared.choose(&mut rng).ok_or(Error::Unreachable {
            target: target_ec,
            max: ec,
        })?;
        *class_size.get_mut(&edges[pick].2).unwrap() -= 1;
        fresh += 1;
        edges[pick].2 = fresh;
        class_size.insert(fresh, 1);
        ec += 1;
    }
    Ok(ColoredGraph::from_edges(g.n(), edges)?)
}
