use std::collections::HashSet;
use std::fmt;

use crate::graph::{Color, ColoredGraph};

/// Pattern a [`Witness`] certifies, with whatever shape parameters the
/// predicate needs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PatternKind {
    RainbowClique,
    /// The first `a` witness vertices form one side, the next `b` the other.
    RainbowBipartite {
        a: usize,
        b: usize,
    },
    /// Witness vertices are the parts laid out consecutively.
    RainbowTuran {
        parts: Vec<usize>,
    },
    MonoCycle,
    MonoPath,
    ProperC4,
}

impl PatternKind {
    pub fn tag(&self) -> &'static str {
        match self {
            PatternKind::RainbowClique => "rainbow-clique",
            PatternKind::RainbowBipartite { .. } => "rainbow-bipartite",
            PatternKind::RainbowTuran { .. } => "rainbow-turan",
            PatternKind::MonoCycle => "mono-cycle",
            PatternKind::MonoPath => "mono-path",
            PatternKind::ProperC4 => "proper-c4",
        }
    }
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A vertex list and its colored edges certifying a pattern in some host
/// graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize, Color)>,
    pub kind: PatternKind,
}

fn normalized(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

fn all_distinct<T: Eq + std::hash::Hash>(items: impl IntoIterator<Item = T>) -> bool {
    let mut seen = HashSet::new();
    items.into_iter().all(|x| seen.insert(x))
}

impl Witness {
    /// Builds a witness from a vertex list and the pairs that carry the
    /// pattern, reading colors from `g`.
    pub(crate) fn from_pairs(
        g: &ColoredGraph,
        kind: PatternKind,
        vertices: Vec<usize>,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Self {
        let edges = pairs
            .into_iter()
            .map(|(u, v)| (u, v, g.color(u, v).expect("witness edge must exist")))
            .collect();
        Witness {
            vertices,
            edges,
            kind,
        }
    }

    /// Pairs whose edges the pattern consists of, derived from the vertex
    /// list alone.
    fn required_pairs(&self) -> Option<Vec<(usize, usize)>> {
        let vs = &self.vertices;
        let pairs = match &self.kind {
            PatternKind::RainbowClique => {
                let mut pairs = Vec::new();
                for (i, &u) in vs.iter().enumerate() {
                    for &v in &vs[i + 1..] {
                        pairs.push((u, v));
                    }
                }
                pairs
            }
            PatternKind::RainbowBipartite { a, b } => {
                if vs.len() != a + b {
                    return None;
                }
                let (left, right) = vs.split_at(*a);
                left.iter()
                    .flat_map(|&u| right.iter().map(move |&v| (u, v)))
                    .collect()
            }
            PatternKind::RainbowTuran { parts } => {
                if parts.iter().sum::<usize>() != vs.len() || parts.contains(&0) {
                    return None;
                }
                let mut label = Vec::with_capacity(vs.len());
                for (p, &size) in parts.iter().enumerate() {
                    label.extend(std::iter::repeat_n(p, size));
                }
                let mut pairs = Vec::new();
                for i in 0..vs.len() {
                    for j in i + 1..vs.len() {
                        if label[i] != label[j] {
                            pairs.push((vs[i], vs[j]));
                        }
                    }
                }
                pairs
            }
            PatternKind::MonoCycle | PatternKind::ProperC4 => {
                let min_len = if self.kind == PatternKind::ProperC4 {
                    4
                } else {
                    3
                };
                if vs.len() < min_len || (self.kind == PatternKind::ProperC4 && vs.len() != 4) {
                    return None;
                }
                (0..vs.len())
                    .map(|i| (vs[i], vs[(i + 1) % vs.len()]))
                    .collect()
            }
            PatternKind::MonoPath => {
                if vs.len() < 2 {
                    return None;
                }
                vs.windows(2).map(|w| (w[0], w[1])).collect()
            }
        };
        Some(pairs)
    }

    /// Checks that every listed edge exists in `g` with the stated color,
    /// that the edges are exactly the ones the pattern prescribes, and that
    /// the color predicate of the pattern holds.
    pub fn validate(&self, g: &ColoredGraph) -> bool {
        if self.vertices.iter().any(|&v| v == 0 || v > g.n()) || !all_distinct(&self.vertices) {
            return false;
        }
        if self.edges.iter().any(|&(u, v, c)| {
            u == v || u == 0 || v == 0 || u > g.n() || v > g.n() || g.color(u, v) != Some(c)
        }) {
            return false;
        }
        let Some(required) = self.required_pairs() else {
            return false;
        };
        let listed: HashSet<_> = self
            .edges
            .iter()
            .map(|&(u, v, _)| normalized(u, v))
            .collect();
        let wanted: HashSet<_> = required.iter().map(|&(u, v)| normalized(u, v)).collect();
        if listed.len() != self.edges.len() || listed != wanted {
            return false;
        }
        match &self.kind {
            PatternKind::RainbowClique
            | PatternKind::RainbowBipartite { .. }
            | PatternKind::RainbowTuran { .. } => all_distinct(self.edges.iter().map(|e| e.2)),
            PatternKind::MonoCycle | PatternKind::MonoPath => {
                self.edges.windows(2).all(|w| w[0].2 == w[1].2)
            }
            PatternKind::ProperC4 => {
                let colors: Vec<Color> = required
                    .iter()
                    .map(|&(u, v)| g.color(u, v).unwrap())
                    .collect();
                (0..4).all(|i| colors[i] != colors[(i + 1) % 4])
            }
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on", self.kind)?;
        for v in &self.vertices {
            write!(f, " {v}")?;
        }
        if let PatternKind::RainbowTuran { parts } = &self.kind {
            write!(f, " (parts {parts:?})")?;
        }
        Ok(())
    }
}
