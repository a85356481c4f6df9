use std::time::Instant;

use super::{EdgePartitionCursor, VerificationReport};
use crate::error::{invalid, Result};
use crate::graph::{Color, ColoredGraph};
use crate::turan::binomial2;

/// Every colored graph on `n` vertices (`3 <= n <= 5`) with
/// `e + c >= C(n,2) + n` contains a rainbow triangle.
///
/// Enumerates every edge subset of `K_n` and every partition of it into color
/// classes, so `space_size` is the Bell number `B(C(n,2) + 1)`.
pub fn verify_triangle_threshold(n: usize) -> Result<VerificationReport> {
    verify_triangle_threshold_at(n, binomial2(n) + n)
}

/// Same enumeration with an arbitrary `e + c` bound; any graph reaching
/// `min_ec` without a rainbow triangle is reported.
pub fn verify_triangle_threshold_at(n: usize, min_ec: usize) -> Result<VerificationReport> {
    if !(3..=5).contains(&n) {
        return Err(invalid(format!(
            "triangle verification supports 3 <= n <= 5, got {n}"
        )));
    }
    let start = Instant::now();
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .collect();
    let index = |u: usize, v: usize| pairs.iter().position(|&p| p == (u, v)).unwrap();
    let mut triangles = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b + 1..=n {
                triangles.push([index(a, b), index(a, c), index(b, c)]);
            }
        }
    }

    let mut report = VerificationReport::new(&format!("triangle-n{n}"));
    let mut color_of = vec![0u8; pairs.len()];
    for mask in 0u32..1 << pairs.len() {
        let chosen: Vec<usize> = (0..pairs.len()).filter(|&i| mask >> i & 1 == 1).collect();
        let inside: Vec<&[usize; 3]> = triangles
            .iter()
            .filter(|t| t.iter().all(|&e| mask >> e & 1 == 1))
            .collect();
        for classes in 0..=chosen.len() {
            let mut cursor = EdgePartitionCursor::new(chosen.len(), classes);
            while cursor.advance() {
                report.space_size += 1;
                if chosen.len() + classes < min_ec {
                    continue;
                }
                for (&e, &block) in chosen.iter().zip(cursor.blocks()) {
                    color_of[e] = block;
                }
                let rainbow = inside.iter().any(|t| {
                    let [x, y, z] = t.map(|e| color_of[e]);
                    x != y && y != z && x != z
                });
                if !rainbow {
                    let edges = chosen
                        .iter()
                        .zip(cursor.blocks())
                        .map(|(&e, &block)| (pairs[e].0, pairs[e].1, block as Color + 1));
                    report
                        .counterexamples
                        .push(ColoredGraph::from_edges(n, edges).expect("valid edges"));
                }
            }
        }
    }
    report.normalize();
    report.elapsed = start.elapsed();
    Ok(report)
}
