use std::time::Instant;

use super::{stirling2, EdgePartitionCursor, VerificationReport};
use crate::graph::{Color, ColoredGraph};
use crate::search::{find_monochromatic_cycle, find_rainbow_turan};

/// Which alternative a 10-colored, rainbow-`K_4`-free `K_6` falls into.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum K6Branch {
    RainbowTuran,
    MonoC6,
    Neither,
}

/// Rainbow `T(6,2)` is tried first.
pub fn classify_k6(g: &ColoredGraph) -> K6Branch {
    if find_rainbow_turan(g, 2).is_some() {
        K6Branch::RainbowTuran
    } else if find_monochromatic_cycle(g, 6).is_some() {
        K6Branch::MonoC6
    } else {
        K6Branch::Neither
    }
}

const PAIRS: usize = 15;

fn k6_pairs() -> Vec<(usize, usize)> {
    (1..=6usize)
        .flat_map(|u| (u + 1..=6).map(move |v| (u, v)))
        .collect()
}

/// Enumerates every coloring of `K_6` with exactly 10 colors (up to renaming)
/// and keeps those without a rainbow `K_4`. Returns the number of colorings
/// examined and the survivors.
pub fn k6_survivors() -> (u64, Vec<ColoredGraph>) {
    let pairs = k6_pairs();
    let index = |u: usize, v: usize| pairs.iter().position(|&p| p == (u, v)).unwrap();
    let mut quads: Vec<[usize; 6]> = Vec::new();
    for a in 1..=6 {
        for b in a + 1..=6 {
            for c in b + 1..=6 {
                for d in c + 1..=6 {
                    quads.push([
                        index(a, b),
                        index(a, c),
                        index(a, d),
                        index(b, c),
                        index(b, d),
                        index(c, d),
                    ]);
                }
            }
        }
    }

    let mut cursor = EdgePartitionCursor::new(PAIRS, 10);
    let mut examined = 0u64;
    let mut survivors = Vec::new();
    while cursor.advance() {
        examined += 1;
        let colors = cursor.blocks();
        let has_rainbow_k4 = quads.iter().any(|quad| {
            let mask = quad.iter().fold(0u16, |m, &e| m | 1 << colors[e]);
            mask.count_ones() == 6
        });
        if !has_rainbow_k4 {
            let edges = pairs
                .iter()
                .zip(colors)
                .map(|(&(u, v), &c)| (u, v, c as Color + 1));
            survivors.push(ColoredGraph::from_edges(6, edges).expect("valid edges"));
        }
    }
    (examined, survivors)
}

/// Every `K_6` colored with exactly 10 colors and no rainbow `K_4` contains a
/// rainbow `T(6,2)` or a monochromatic `C_6`; every such coloring also has
/// saturation tallies `(c_0, c_1, c_2) = (1, 0, 9)`.
pub fn verify_k6_dichotomy() -> VerificationReport {
    let start = Instant::now();
    let mut report = VerificationReport::new("k6-dichotomy");
    let (examined, survivors) = k6_survivors();
    report.space_size = examined;
    if examined as u128 != stirling2(PAIRS, 10) {
        report.failed_checks.push(format!(
            "enumerated {examined} colorings, expected S(15,10)"
        ));
    }
    for g in survivors {
        let tallies = g.saturation().tallies();
        if classify_k6(&g) == K6Branch::Neither || tallies != (1, 0, 9) {
            report.counterexamples.push(g);
        }
    }
    report.normalize();
    report.elapsed = start.elapsed();
    report
}
