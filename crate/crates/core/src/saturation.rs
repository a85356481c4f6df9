//! Saturated degrees and the saturation tallies `(c_0, c_1, c_2)`.
//!
//! A color is saturated at `v` when `v` touches an edge of that color and the
//! color disappears from `G - v`. Equivalently, `v` lies on every edge of the
//! color class. Intersecting the endpoint pairs of a class therefore yields
//! its saturating vertices in one pass: a single edge is saturated at both
//! endpoints, a star at its center, anything else nowhere.

use std::collections::HashMap;

use crate::graph::{ColoredGraph, VertexSet};

/// Per-vertex saturated degree `d^s(v)` plus the color tallies `c_t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SaturationProfile {
    ds: Vec<usize>,
    tallies: [usize; 3],
}

impl SaturationProfile {
    /// `d^s(v)` for `v` in `1..=n`.
    pub fn ds(&self, v: usize) -> usize {
        self.ds[v - 1]
    }

    /// Saturated degrees indexed from vertex 1.
    pub fn degrees(&self) -> &[usize] {
        &self.ds
    }

    /// Colors saturated at exactly `t` vertices, `t` in `0..=2`.
    pub fn c(&self, t: usize) -> usize {
        self.tallies[t]
    }

    /// `(c_0, c_1, c_2)`.
    pub fn tallies(&self) -> (usize, usize, usize) {
        (self.tallies[0], self.tallies[1], self.tallies[2])
    }

    /// `Σ_v d^s(v)`, which always equals `2·c_2 + c_1`.
    pub fn total(&self) -> usize {
        self.ds.iter().sum()
    }
}

impl ColoredGraph {
    pub fn saturation(&self) -> SaturationProfile {
        let mut common: HashMap<usize, VertexSet> = HashMap::new();
        for u in self.vertices() {
            for v in self.neighbors(u).intersection(VertexSet::above(u)).iter() {
                let pair = VertexSet::singleton(u).union(VertexSet::singleton(v));
                let dense = self.dense_color(u, v).unwrap();
                common
                    .entry(dense)
                    .and_modify(|s| *s = s.intersection(pair))
                    .or_insert(pair);
            }
        }
        let mut ds = vec![0; self.n()];
        let mut tallies = [0; 3];
        for saturating in common.values() {
            let t = saturating.len();
            assert!(t <= 2, "a color class cannot be saturated at {t} vertices");
            tallies[t] += 1;
            for v in saturating.iter() {
                ds[v - 1] += 1;
            }
        }
        SaturationProfile { ds, tallies }
    }
}
