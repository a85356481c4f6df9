//! Immutable edge-colored simple graphs.
//!
//! Vertices are labeled `1..=n` everywhere in the public API. Colors are
//! arbitrary positive integers; internally every distinct color is also given
//! a dense index `0..c(G)` so that searches can keep used-color sets as
//! bitsets.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{GraphError, Result};

/// A color id as it appears in ECG files.
pub type Color = u32;

/// Largest supported vertex count (vertex subsets are one `u128`).
pub const MAX_VERTICES: usize = 128;

/// A set of vertices `1..=128` packed into a single word.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u128);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u128::MAX)
        } else {
            VertexSet((1u128 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!((1..=MAX_VERTICES).contains(&v));
        VertexSet(1u128 << (v - 1))
    }

    /// Vertices strictly greater than `v`.
    pub fn above(v: usize) -> Self {
        if v >= MAX_VERTICES {
            VertexSet::EMPTY
        } else {
            VertexSet(!((1u128 << v) - 1))
        }
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        (1..=MAX_VERTICES).contains(&v) && self.0 >> (v - 1) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u128 << (v - 1);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u128 << (v - 1));
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    /// Smallest member, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    pub fn iter(self) -> VertexSetIter {
        VertexSetIter(self.0)
    }

    pub fn bits(self) -> u128 {
        self.0
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = VertexSet::EMPTY;
        for v in iter {
            set.insert(v);
        }
        set
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
pub struct VertexSetIter(u128);

impl Iterator for VertexSetIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize + 1;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let len = self.0.count_ones() as usize;
        (len, Some(len))
    }
}

impl ExactSizeIterator for VertexSetIter {}

/// An edge-colored simple undirected graph on vertices `1..=n`.
#[derive(Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    n: usize,
    adjacency: Vec<VertexSet>,
    /// `n * n` matrix of dense color index + 1; 0 marks a non-edge.
    cells: Vec<u32>,
    /// Distinct color ids, ascending; position is the dense index.
    palette: Vec<Color>,
    edge_count: usize,
}

impl ColoredGraph {
    /// Builds a graph from `(u, v, color)` triples.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize, Color)>,
    {
        let mut builder = GraphBuilder::new(n)?;
        for (u, v, c) in edges {
            builder.add_edge(u, v, c)?;
        }
        Ok(builder.build())
    }

    /// The complete graph `K_n` with `color(u, v)` for every `u < v`.
    pub fn complete<F>(n: usize, mut color: F) -> Result<Self, GraphError>
    where
        F: FnMut(usize, usize) -> Color,
    {
        let mut builder = GraphBuilder::new(n)?;
        for u in 1..=n {
            for v in u + 1..=n {
                builder.add_edge(u, v, color(u, v))?;
            }
        }
        Ok(builder.build())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.n
    }

    /// e(G).
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// c(G), the number of distinct colors.
    pub fn color_count(&self) -> usize {
        self.palette.len()
    }

    /// `(e(G), c(G))`.
    pub fn counts(&self) -> (usize, usize) {
        (self.edge_count, self.palette.len())
    }

    /// `e(G) + c(G)`, the quantity every threshold in this crate is stated in.
    pub fn edges_plus_colors(&self) -> usize {
        self.edge_count + self.palette.len()
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count == self.n * (self.n - 1) / 2
    }

    #[inline]
    fn cell(&self, u: usize, v: usize) -> u32 {
        self.cells[(u - 1) * self.n + (v - 1)]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u - 1].contains(v)
    }

    /// Color of the edge `uv`, if present.
    #[inline]
    pub fn color(&self, u: usize, v: usize) -> Option<Color> {
        match self.cell(u, v) {
            0 => None,
            d => Some(self.palette[d as usize - 1]),
        }
    }

    /// Dense index (`0..c(G)`) of the color of `uv`, if present.
    #[inline]
    pub fn dense_color(&self, u: usize, v: usize) -> Option<usize> {
        match self.cell(u, v) {
            0 => None,
            d => Some(d as usize - 1),
        }
    }

    /// Distinct colors, ascending. Index `i` is the color with dense index `i`.
    pub fn palette(&self) -> &[Color] {
        &self.palette
    }

    /// Largest color id in use, or 0 for an edgeless graph.
    pub fn max_color(&self) -> Color {
        self.palette.last().copied().unwrap_or(0)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adjacency[v - 1]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v - 1].len()
    }

    /// All edges as `(u, v, color)` with `u < v`, sorted by `(u, v)`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, Color)> + '_ {
        (1..=self.n).flat_map(move |u| {
            self.adjacency[u - 1]
                .intersection(VertexSet::above(u))
                .iter()
                .map(move |v| (u, v, self.color(u, v).unwrap()))
        })
    }

    /// The subgraph induced on `keep`, relabeled `1..=|keep|` in increasing
    /// order of the original labels. Colors are preserved.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<Self, GraphError> {
        if keep.is_empty() {
            return Err(GraphError::EmptyVertexSet);
        }
        let mut set = VertexSet::EMPTY;
        for &v in keep {
            if v == 0 || v > self.n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: v,
                    n: self.n,
                });
            }
            if set.contains(v) {
                return Err(GraphError::RepeatedVertex(v));
            }
            set.insert(v);
        }
        let order: Vec<usize> = set.iter().collect();
        let mut builder = GraphBuilder::new(order.len())?;
        for (i, &u) in order.iter().enumerate() {
            for (j, &v) in order.iter().enumerate().skip(i + 1) {
                if let Some(c) = self.color(u, v) {
                    builder.add_edge(i + 1, j + 1, c)?;
                }
            }
        }
        Ok(builder.build())
    }

    /// `G - v`.
    pub fn remove_vertex(&self, v: usize) -> Result<Self, GraphError> {
        let keep: Vec<usize> = self.vertices().filter(|&u| u != v).collect();
        if v == 0 || v > self.n {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        self.induced_subgraph(&keep)
    }

    /// Same edge set, colors replaced by `recolor(u, v, old)`.
    pub fn recolored<F>(&self, mut recolor: F) -> Self
    where
        F: FnMut(usize, usize, Color) -> Color,
    {
        let mut builder = GraphBuilder::new(self.n).expect("n already validated");
        for (u, v, c) in self.edges() {
            builder
                .add_edge(u, v, recolor(u, v, c))
                .expect("edge set already validated");
        }
        builder.build()
    }

    /// Number of edges carrying each color, keyed by color id.
    pub fn color_class_sizes(&self) -> BTreeMap<Color, usize> {
        let mut sizes = BTreeMap::new();
        for (_, _, c) in self.edges() {
            *sizes.entry(c).or_insert(0) += 1;
        }
        sizes
    }
}

impl fmt::Debug for ColoredGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ColoredGraph(n={}, ", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

/// Incremental, validating constructor for [`ColoredGraph`].
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    n: usize,
    colors: Vec<Color>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(GraphBuilder {
            n,
            colors: vec![0; n * n],
        })
    }

    /// Adds `uv` with color `c`; `u > v` is accepted and normalized.
    pub fn add_edge(&mut self, u: usize, v: usize, c: Color) -> Result<(), GraphError> {
        for w in [u, v] {
            if w == 0 || w > self.n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if c == 0 {
            return Err(GraphError::NonPositiveColor);
        }
        let (a, b) = (u.min(v), u.max(v));
        let idx = (a - 1) * self.n + (b - 1);
        if self.colors[idx] != 0 {
            return Err(GraphError::DuplicateEdge(a, b));
        }
        self.colors[idx] = c;
        self.colors[(b - 1) * self.n + (a - 1)] = c;
        Ok(())
    }

    pub fn build(self) -> ColoredGraph {
        let n = self.n;
        let mut palette: Vec<Color> = self.colors.iter().copied().filter(|&c| c != 0).collect();
        palette.sort_unstable();
        palette.dedup();
        let mut adjacency = vec![VertexSet::EMPTY; n];
        let mut cells = vec![0u32; n * n];
        let mut edge_count = 0;
        for u in 1..=n {
            for v in 1..=n {
                let c = self.colors[(u - 1) * n + (v - 1)];
                if c != 0 {
                    adjacency[u - 1].insert(v);
                    let dense = palette.binary_search(&c).unwrap();
                    cells[(u - 1) * n + (v - 1)] = dense as u32 + 1;
                    if u < v {
                        edge_count += 1;
                    }
                }
            }
        }
        ColoredGraph {
            n,
            adjacency,
            cells,
            palette,
            edge_count,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rainbow_k4() -> ColoredGraph {
        let mut next = 0;
        ColoredGraph::complete(4, |_, _| {
            next += 1;
            next
        })
        .unwrap()
    }

    #[test]
    fn vertex_set_basics() {
        let s: VertexSet = [1, 5, 128].into_iter().collect();
        assert_eq!(s.len(), 3);
        assert!(s.contains(128));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![1, 5, 128]);
        assert_eq!(VertexSet::above(5).intersection(s).first(), Some(128));
        assert_eq!(VertexSet::full(128).len(), 128);
        assert!(VertexSet::above(128).is_empty());
    }

    #[test]
    fn counts_of_rainbow_k4() {
        let g = rainbow_k4();
        assert_eq!(g.counts(), (6, 6));
        assert!(g.is_complete());
    }

    #[test]
    fn builder_rejects_bad_edges() {
        let mut b = GraphBuilder::new(3).unwrap();
        assert_eq!(b.add_edge(1, 1, 1), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            b.add_edge(1, 4, 1),
            Err(GraphError::VertexOutOfRange { vertex: 4, n: 3 })
        );
        assert_eq!(b.add_edge(1, 2, 0), Err(GraphError::NonPositiveColor));
        b.add_edge(1, 2, 7).unwrap();
        assert_eq!(b.add_edge(2, 1, 8), Err(GraphError::DuplicateEdge(1, 2)));
        assert_eq!(GraphBuilder::new(0).unwrap_err(), GraphError::NoVertices);
        assert_eq!(
            GraphBuilder::new(129).unwrap_err(),
            GraphError::TooManyVertices(129)
        );
    }

    #[test]
    fn induced_subgraph_relabels_in_order() {
        let g = rainbow_k4();
        let h = g.induced_subgraph(&[4, 2, 3]).unwrap();
        assert_eq!(h.counts(), (3, 3));
        assert_eq!(h.color(1, 2), g.color(2, 3));
        assert_eq!(h.color(2, 3), g.color(3, 4));
        assert_eq!(g.induced_subgraph(&[1, 2, 3, 4]).unwrap(), g);
        assert!(g.induced_subgraph(&[]).is_err());
        assert!(g.induced_subgraph(&[5]).is_err());
        assert!(g.induced_subgraph(&[1, 1]).is_err());
    }

    #[test]
    fn single_edge_on_three_vertices_is_not_complete() {
        let g = ColoredGraph::from_edges(3, [(1, 2, 1)]).unwrap();
        assert!(!g.is_complete());
        assert_eq!(g.degree(3), 0);
    }

    #[test]
    fn edges_are_sorted() {
        let g = ColoredGraph::from_edges(4, [(3, 4, 2), (1, 3, 9), (2, 1, 5)]).unwrap();
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(edges, vec![(1, 2, 5), (1, 3, 9), (3, 4, 2)]);
        assert_eq!(g.palette(), &[2, 5, 9]);
        assert_eq!(g.dense_color(1, 3), Some(2));
    }
}
