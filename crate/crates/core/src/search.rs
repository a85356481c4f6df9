//! Exact search for rainbow, monochromatic and properly colored patterns.
//!
//! Every `find_*` returns the lexicographically least witness under vertex
//! order, so results are reproducible across runs and thread counts.

use std::ops::ControlFlow;

use rayon::prelude::*;

use crate::error::{invalid, Result};
use crate::graph::{ColoredGraph, VertexSet};
use crate::turan::{turan_partition, TuranPartition};
use crate::witness::{PatternKind, Witness};

/// Bitset over dense color indices with undo support through `remove`.
#[derive(Clone)]
pub(crate) struct ColorSet {
    words: Vec<u64>,
}

impl ColorSet {
    pub(crate) fn new(colors: usize) -> Self {
        ColorSet {
            words: vec![0; colors.div_ceil(64).max(1)],
        }
    }

    #[inline]
    pub(crate) fn contains(&self, c: usize) -> bool {
        self.words[c / 64] >> (c % 64) & 1 == 1
    }

    /// Returns false if `c` was already present.
    #[inline]
    pub(crate) fn insert(&mut self, c: usize) -> bool {
        let fresh = !self.contains(c);
        self.words[c / 64] |= 1 << (c % 64);
        fresh
    }

    #[inline]
    pub(crate) fn remove(&mut self, c: usize) {
        self.words[c / 64] &= !(1 << (c % 64));
    }
}

/// Adds the colors of the edges from `v` to every vertex of `to` into
/// `used`. On a repeat (or a missing edge) everything added so far is rolled
/// back and `false` is returned.
fn add_star_colors(g: &ColoredGraph, v: usize, to: &[usize], used: &mut ColorSet) -> bool {
    for (i, &u) in to.iter().enumerate() {
        let fits = match g.dense_color(u, v) {
            Some(c) => used.insert(c),
            None => false,
        };
        if !fits {
            for &w in &to[..i] {
                used.remove(g.dense_color(w, v).unwrap());
            }
            return false;
        }
    }
    true
}

fn remove_star_colors(g: &ColoredGraph, v: usize, to: &[usize], used: &mut ColorSet) {
    for &u in to {
        used.remove(g.dense_color(u, v).unwrap());
    }
}

/// Ordered backtracking over rainbow cliques. `visit` sees each rainbow
/// `k`-clique once, as an increasing vertex list, in lexicographic order.
fn walk_rainbow_cliques<F>(
    g: &ColoredGraph,
    k: usize,
    clique: &mut Vec<usize>,
    candidates: VertexSet,
    used: &mut ColorSet,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if clique.len() == k {
        return visit(clique);
    }
    if clique.len() + candidates.len() < k {
        return ControlFlow::Continue(());
    }
    for v in candidates.iter() {
        if !add_star_colors(g, v, clique, used) {
            continue;
        }
        let next = candidates
            .intersection(g.neighbors(v))
            .intersection(VertexSet::above(v));
        clique.push(v);
        let flow = walk_rainbow_cliques(g, k, clique, next, used, visit);
        clique.pop();
        remove_star_colors(g, v, clique, used);
        flow?;
    }
    ControlFlow::Continue(())
}

fn clique_witness(g: &ColoredGraph, vertices: &[usize]) -> Witness {
    let mut pairs = Vec::new();
    for (i, &u) in vertices.iter().enumerate() {
        for &v in &vertices[i + 1..] {
            pairs.push((u, v));
        }
    }
    Witness::from_pairs(g, PatternKind::RainbowClique, vertices.to_vec(), pairs)
}

/// Lexicographically least rainbow `K_k`, if any. Every vertex is a rainbow
/// `K_1` and every edge a rainbow `K_2`.
pub fn find_rainbow_clique(g: &ColoredGraph, k: usize) -> Option<Witness> {
    if k == 0 || k > g.n() {
        return None;
    }
    let mut found = None;
    let mut used = ColorSet::new(g.color_count());
    let _ = walk_rainbow_cliques(
        g,
        k,
        &mut Vec::with_capacity(k),
        VertexSet::full(g.n()),
        &mut used,
        &mut |clique| {
            found = Some(clique_witness(g, clique));
            ControlFlow::Break(())
        },
    );
    found
}

/// Counts rainbow `k`-cliques containing `first` as their smallest vertex,
/// stopping once `limit` is reached.
fn count_rooted(g: &ColoredGraph, k: usize, first: usize, limit: u64) -> u64 {
    let mut count = 0u64;
    let mut used = ColorSet::new(g.color_count());
    let mut clique = Vec::with_capacity(k);
    clique.push(first);
    let candidates = g.neighbors(first).intersection(VertexSet::above(first));
    let _ = walk_rainbow_cliques(g, k, &mut clique, candidates, &mut used, &mut |_| {
        count += 1;
        if count >= limit {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    count
}

/// Exact number of vertex sets of size `k` inducing a rainbow clique.
///
/// Top-level branches (the smallest vertex of the clique) run in parallel;
/// the sum is independent of scheduling.
pub fn count_rainbow_cliques(g: &ColoredGraph, k: usize) -> u64 {
    if k == 0 || k > g.n() {
        return 0;
    }
    (1..=g.n())
        .into_par_iter()
        .map(|first| count_rooted(g, k, first, u64::MAX))
        .sum()
}

/// Like [`count_rainbow_cliques`] but stops at `limit`; returns
/// `min(count, limit)`.
pub fn count_rainbow_cliques_up_to(g: &ColoredGraph, k: usize, limit: u64) -> u64 {
    if k == 0 || k > g.n() || limit == 0 {
        return 0;
    }
    let mut total = 0;
    for first in g.vertices() {
        total += count_rooted(g, k, first, limit - total);
        if total >= limit {
            return limit;
        }
    }
    total
}

/// Chooses `want` more vertices from `pool` (in increasing order) for the
/// right side of a bipartite witness.
fn extend_right_side(
    g: &ColoredGraph,
    left: &[usize],
    right: &mut Vec<usize>,
    pool: VertexSet,
    want: usize,
    used: &mut ColorSet,
) -> bool {
    if right.len() == want {
        return true;
    }
    if right.len() + pool.len() < want {
        return false;
    }
    for v in pool.iter() {
        if !add_star_colors(g, v, left, used) {
            continue;
        }
        right.push(v);
        if extend_right_side(
            g,
            left,
            right,
            pool.intersection(VertexSet::above(v)),
            want,
            used,
        ) {
            return true;
        }
        right.pop();
        remove_star_colors(g, v, left, used);
    }
    false
}

fn extend_left_side(
    g: &ColoredGraph,
    left: &mut Vec<usize>,
    pool: VertexSet,
    a: usize,
    b: usize,
) -> Option<Vec<usize>> {
    if left.len() == a {
        let others = left.iter().fold(VertexSet::full(g.n()), |acc, &u| {
            acc.intersection(g.neighbors(u))
        });
        let mut used = ColorSet::new(g.color_count());
        let mut right = Vec::with_capacity(b);
        return extend_right_side(g, left, &mut right, others, b, &mut used).then_some(right);
    }
    for v in pool.iter() {
        left.push(v);
        if let Some(right) = extend_left_side(g, left, pool.intersection(VertexSet::above(v)), a, b)
        {
            return Some(right);
        }
        left.pop();
    }
    None
}

/// Disjoint `A` (size `a`) and `B` (size `b`) with all `a·b` cross edges
/// present in pairwise distinct colors. The witness lists `A` then `B`.
pub fn find_rainbow_complete_bipartite(g: &ColoredGraph, a: usize, b: usize) -> Option<Witness> {
    if a == 0 || b == 0 || a + b > g.n() {
        return None;
    }
    let mut left = Vec::with_capacity(a);
    let right = extend_left_side(g, &mut left, VertexSet::full(g.n()), a, b)?;
    let pairs: Vec<_> = left
        .iter()
        .flat_map(|&u| right.iter().map(move |&v| (u, v)))
        .collect();
    let mut vertices = left;
    vertices.extend(right);
    Some(Witness::from_pairs(
        g,
        PatternKind::RainbowBipartite { a, b },
        vertices,
        pairs,
    ))
}

struct TuranSearch<'a> {
    g: &'a ColoredGraph,
    sizes: &'a [usize],
    parts: Vec<Vec<usize>>,
    used: ColorSet,
}

impl TuranSearch<'_> {
    fn assign(&mut self, v: usize) -> bool {
        if v > self.g.n() {
            return true;
        }
        for p in 0..self.sizes.len() {
            if self.parts[p].len() == self.sizes[p] {
                continue;
            }
            // Equal-sized parts are interchangeable: open them in order.
            if self.parts[p].is_empty()
                && p > 0
                && self.sizes[p - 1] == self.sizes[p]
                && self.parts[p - 1].is_empty()
            {
                continue;
            }
            let others: Vec<usize> = self
                .parts
                .iter()
                .enumerate()
                .filter(|&(q, _)| q != p)
                .flat_map(|(_, part)| part.iter().copied())
                .collect();
            if !add_star_colors(self.g, v, &others, &mut self.used) {
                continue;
            }
            self.parts[p].push(v);
            if self.assign(v + 1) {
                return true;
            }
            self.parts[p].pop();
            remove_star_colors(self.g, v, &others, &mut self.used);
        }
        false
    }
}

/// A spanning balanced complete `r`-partite subgraph whose cross edges carry
/// pairwise distinct colors. Only the Turán part sizes are searched.
pub fn find_rainbow_turan(g: &ColoredGraph, r: usize) -> Option<(TuranPartition, Witness)> {
    let partition = turan_partition(g.n(), r).ok()?;
    let mut search = TuranSearch {
        g,
        sizes: partition.sizes(),
        parts: vec![Vec::new(); r],
        used: ColorSet::new(g.color_count()),
    };
    if !search.assign(1) {
        return None;
    }
    let parts = search.parts;
    let mut pairs = Vec::new();
    for (p, part) in parts.iter().enumerate() {
        for other in &parts[p + 1..] {
            for &u in part {
                for &v in other {
                    pairs.push((u.min(v), u.max(v)));
                }
            }
        }
    }
    let vertices: Vec<usize> = parts.concat();
    let kind = PatternKind::RainbowTuran {
        parts: partition.sizes().to_vec(),
    };
    let witness = Witness::from_pairs(g, kind, vertices, pairs);
    Some((partition, witness))
}

/// Neighbors of `v` along edges of dense color `c`.
fn color_neighbors(g: &ColoredGraph, v: usize, c: usize) -> VertexSet {
    g.neighbors(v)
        .iter()
        .filter(|&u| g.dense_color(u, v) == Some(c))
        .collect()
}

/// Depth-first extension of a monochromatic path. With `close_to`, the path
/// must also close into a cycle through that vertex.
fn extend_mono_path(
    g: &ColoredGraph,
    path: &mut Vec<usize>,
    allowed: VertexSet,
    color: Option<usize>,
    want: usize,
    close_to: Option<usize>,
) -> bool {
    let last = *path.last().unwrap();
    if path.len() == want {
        return match close_to {
            None => true,
            Some(start) => path[1] < last && color.is_some() && g.dense_color(last, start) == color,
        };
    }
    let step = match color {
        Some(c) => color_neighbors(g, last, c),
        None => g.neighbors(last),
    };
    for v in step.intersection(allowed).iter() {
        let c = color.or_else(|| g.dense_color(last, v));
        path.push(v);
        let mut rest = allowed;
        rest.remove(v);
        if extend_mono_path(g, path, rest, c, want, close_to) {
            return true;
        }
        path.pop();
    }
    false
}

/// A cycle on `len` distinct vertices whose edges all share one color.
/// Witnesses start at their smallest vertex with `v_1 < v_{len-1}`.
pub fn find_monochromatic_cycle(g: &ColoredGraph, len: usize) -> Option<Witness> {
    if len < 3 || len > g.n() {
        return None;
    }
    for start in g.vertices() {
        let mut path = vec![start];
        let allowed = VertexSet::above(start).intersection(VertexSet::full(g.n()));
        if extend_mono_path(g, &mut path, allowed, None, len, Some(start)) {
            let pairs: Vec<_> = (0..len).map(|i| (path[i], path[(i + 1) % len])).collect();
            return Some(Witness::from_pairs(g, PatternKind::MonoCycle, path, pairs));
        }
    }
    None
}

/// A path on `vertices` distinct vertices whose edges all share one color.
pub fn find_monochromatic_path(g: &ColoredGraph, vertices: usize) -> Option<Witness> {
    if vertices < 2 || vertices > g.n() {
        return None;
    }
    for start in g.vertices() {
        let mut path = vec![start];
        let mut allowed = VertexSet::full(g.n());
        allowed.remove(start);
        if extend_mono_path(g, &mut path, allowed, None, vertices, None) {
            let pairs: Vec<_> = path.windows(2).map(|w| (w[0], w[1])).collect();
            return Some(Witness::from_pairs(g, PatternKind::MonoPath, path, pairs));
        }
    }
    None
}

/// A 4-cycle `a b c d` in which consecutive edges differ in color, with `a`
/// the smallest vertex and `b < d`.
pub fn find_properly_colored_c4(g: &ColoredGraph) -> Option<Witness> {
    for a in g.vertices() {
        let higher = VertexSet::above(a);
        for b in g.neighbors(a).intersection(higher).iter() {
            let ab = g.dense_color(a, b);
            for c in g.neighbors(b).intersection(higher).iter() {
                let bc = g.dense_color(b, c);
                if c == b || bc == ab {
                    continue;
                }
                let ds = g
                    .neighbors(c)
                    .intersection(g.neighbors(a))
                    .intersection(VertexSet::above(b));
                for d in ds.iter() {
                    let cd = g.dense_color(c, d);
                    let da = g.dense_color(d, a);
                    if d != c && cd != bc && da != cd && da != ab {
                        let vertices = vec![a, b, c, d];
                        let pairs = [(a, b), (b, c), (c, d), (d, a)];
                        return Some(Witness::from_pairs(
                            g,
                            PatternKind::ProperC4,
                            vertices,
                            pairs,
                        ));
                    }
                }
            }
        }
    }
    None
}

/// A pattern together with its size parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PatternQuery {
    RainbowClique { k: usize },
    RainbowBipartite { a: usize, b: usize },
    RainbowTuran { r: usize },
    MonoCycle { len: usize },
    MonoPath { vertices: usize },
    ProperC4,
}

impl PatternQuery {
    /// Checks the size parameters against a host graph on `n` vertices.
    pub fn validate(&self, n: usize) -> Result<()> {
        let (sizes, min): (Vec<usize>, usize) = match *self {
            PatternQuery::RainbowClique { k } => (vec![k], 1),
            PatternQuery::RainbowBipartite { a, b } => (vec![a, b, a + b], 1),
            PatternQuery::RainbowTuran { r } => (vec![r], 1),
            PatternQuery::MonoCycle { len } => (vec![len], 3),
            PatternQuery::MonoPath { vertices } => (vec![vertices], 2),
            PatternQuery::ProperC4 => (vec![4], 4),
        };
        for s in sizes {
            if s < min {
                return Err(invalid(format!(
                    "{self:?}: size parameter must be at least {min}"
                )));
            }
            if s > n {
                return Err(invalid(format!("{self:?}: size parameter exceeds n = {n}")));
            }
        }
        Ok(())
    }

    pub fn find(&self, g: &ColoredGraph) -> Option<Witness> {
        match *self {
            PatternQuery::RainbowClique { k } => find_rainbow_clique(g, k),
            PatternQuery::RainbowBipartite { a, b } => find_rainbow_complete_bipartite(g, a, b),
            PatternQuery::RainbowTuran { r } => find_rainbow_turan(g, r).map(|(_, w)| w),
            PatternQuery::MonoCycle { len } => find_monochromatic_cycle(g, len),
            PatternQuery::MonoPath { vertices } => find_monochromatic_path(g, vertices),
            PatternQuery::ProperC4 => find_properly_colored_c4(g),
        }
    }
}
