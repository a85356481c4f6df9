//! Labeled regular graphs on a handful of vertices, their canonical forms,
//! and sparse vertex subsets.

use std::fmt;

use crate::graph::ColoredGraph;

/// Uncolored simple graph on at most 16 vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SmallGraph {
    n: usize,
    adj: Vec<u16>,
}

impl SmallGraph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= 16, "SmallGraph holds at most 16 vertices");
        SmallGraph { n, adj: vec![0; n] }
    }

    /// Graph with 1-based edges.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = SmallGraph::empty(n);
        for (u, v) in edges {
            g.add_edge(u - 1, v - 1);
        }
        g
    }

    /// Disjoint cycles on consecutive labels, e.g. `[6, 3]` is
    /// `1-2-..-6-1` plus `7-8-9-7`.
    pub fn cycle_union(lengths: &[usize]) -> Self {
        let n = lengths.iter().sum();
        let mut g = SmallGraph::empty(n);
        let mut first = 0;
        for &len in lengths {
            for i in 0..len {
                g.add_edge(first + i, first + (i + 1) % len);
            }
            first += len;
        }
        g
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        assert_ne!(u, v);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|a| a.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u - 1] >> (v - 1) & 1 == 1
    }

    /// 1-based edges `(u, v)` with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.adj[u] >> v & 1 == 1 {
                    out.push((u + 1, v + 1));
                }
            }
        }
        out
    }

    /// Number of edges inside the 1-based vertex subset.
    pub fn edges_within(&self, subset: &[usize]) -> usize {
        let mask = subset.iter().fold(0u16, |m, &v| m | 1 << (v - 1));
        subset
            .iter()
            .map(|&v| (self.adj[v - 1] & mask).count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Component sizes, largest first. For a 2-regular graph this is its
    /// cycle type, a complete isomorphism invariant.
    pub fn component_sizes(&self) -> Vec<usize> {
        let mut seen = 0u16;
        let mut sizes = Vec::new();
        for start in 0..self.n {
            if seen >> start & 1 == 1 {
                continue;
            }
            let mut component = 1u16 << start;
            let mut frontier = component;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.adj[v] & !component;
                component |= fresh;
                frontier |= fresh;
            }
            seen |= component;
            sizes.push(component.count_ones() as usize);
        }
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        sizes
    }

    /// The graph as an edge-colored graph with every edge in color 1.
    pub fn to_colored(&self) -> ColoredGraph {
        ColoredGraph::from_edges(self.n, self.edges().into_iter().map(|(u, v)| (u, v, 1)))
            .expect("valid edges")
    }
}

impl fmt::Debug for SmallGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SmallGraph(n={}, {:?})", self.n, self.edges())
    }
}

struct RegularEnumeration {
    n: usize,
    d: usize,
    degree: Vec<usize>,
    graph: SmallGraph,
    out: Vec<SmallGraph>,
}

impl RegularEnumeration {
    /// Completes vertex `v` by choosing its missing neighbors among later
    /// vertices, each labeled graph arising exactly once.
    fn complete_vertex(&mut self, v: usize) {
        if v == self.n {
            self.out.push(self.graph.clone());
            return;
        }
        let need = self.d - self.degree[v];
        self.choose(v, v + 1, need);
    }

    fn choose(&mut self, v: usize, from: usize, need: usize) {
        if need == 0 {
            self.complete_vertex(v + 1);
            return;
        }
        for w in from..self.n {
            if self.n - w < need {
                break;
            }
            if self.degree[w] == self.d {
                continue;
            }
            self.graph.add_edge(v, w);
            self.degree[v] += 1;
            self.degree[w] += 1;
            self.choose(v, w + 1, need - 1);
            self.degree[v] -= 1;
            self.degree[w] -= 1;
            self.graph.adj[v] &= !(1 << w);
            self.graph.adj[w] &= !(1 << v);
        }
    }
}

/// All labeled `d`-regular graphs on `n <= 16` vertices.
pub fn enumerate_regular(n: usize, d: usize) -> Vec<SmallGraph> {
    if n * d % 2 == 1 || (n > 0 && d >= n) {
        return Vec::new();
    }
    let mut search = RegularEnumeration {
        n,
        d,
        degree: vec![0; n],
        graph: SmallGraph::empty(n),
        out: Vec::new(),
    };
    search.complete_vertex(0);
    search.out
}

/// Minimum over all vertex relabelings of the edge bitmask (pair `(i, j)`,
/// `i < j`, at a fixed row-major bit). Two graphs are isomorphic iff their
/// canonical forms agree. Cost is `n!`; intended for `n <= 9`.
pub fn canonical_form(g: &SmallGraph) -> u128 {
    let n = g.n;
    let bit = |i: usize, j: usize| {
        let (a, b) = (i.min(j), i.max(j));
        a * n - a * (a + 1) / 2 + (b - a - 1)
    };
    let edges: Vec<(usize, usize)> = g.edges().into_iter().map(|(u, v)| (u - 1, v - 1)).collect();
    let encode = |perm: &[usize]| {
        edges
            .iter()
            .fold(0u128, |acc, &(u, v)| acc | 1 << bit(perm[u], perm[v]))
    };

    // Heap's algorithm over all permutations.
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = encode(&perm);
    let mut counters = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if counters[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(counters[i], i);
            }
            best = best.min(encode(&perm));
            counters[i] += 1;
            i = 1;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
    best
}

fn first_sparse(
    g: &SmallGraph,
    size: usize,
    min_edges: usize,
    chosen: &mut Vec<usize>,
    next: usize,
) -> bool {
    if chosen.len() == size {
        return g.edges_within(chosen) < min_edges;
    }
    for v in next..=g.n {
        if g.n - v + 1 < size - chosen.len() {
            break;
        }
        chosen.push(v);
        if first_sparse(g, size, min_edges, chosen, v + 1) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Lexicographically least `size`-subset (1-based) spanning fewer than
/// `min_edges` edges, if one exists.
pub fn sparse_subset(g: &SmallGraph, size: usize, min_edges: usize) -> Option<Vec<usize>> {
    let mut chosen = Vec::with_capacity(size);
    first_sparse(g, size, min_edges, &mut chosen, 1).then_some(chosen)
}
