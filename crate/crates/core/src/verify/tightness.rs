use std::time::Instant;

use super::VerificationReport;
use crate::constructions::{extremal, perturb_fresh_colors, recolor_fresh};
use crate::error::{invalid, Result};
use crate::search::{count_rainbow_cliques, find_rainbow_clique};
use crate::turan::{thresholds, turan_partition};

/// The extremal coloring sits exactly at the extremal `e + c` with no
/// rainbow `K_k`, and moving any single intra-part edge to a fresh color
/// creates one.
pub fn verify_tightness(n: usize, k: usize) -> Result<VerificationReport> {
    if !(4..=5).contains(&k) {
        return Err(invalid(format!(
            "tightness is checked for k in {{4, 5}}, got {k}"
        )));
    }
    if n < k || n > 40 {
        return Err(invalid(format!("tightness needs k <= n <= 40, got n={n}")));
    }
    let start = Instant::now();
    let mut report = VerificationReport::new(&format!("tightness-n{n}-k{k}"));
    let g = extremal(n, k)?;
    let bound = thresholds(n, k)?.extremal;

    report.space_size = 1;
    if g.edges_plus_colors() != bound {
        report.failed_checks.push(format!(
            "extremal coloring has e+c = {}, expected {bound}",
            g.edges_plus_colors()
        ));
    }
    if count_rainbow_cliques(&g, k) != 0 {
        report.counterexamples.push(g.clone());
    }

    let labels = turan_partition(n, k - 2)?.block_labels();
    for (u, v, _) in g
        .edges()
        .filter(|&(u, v, _)| labels[u - 1] == labels[v - 1])
    {
        report.space_size += 1;
        let h = recolor_fresh(&g, u, v)?;
        if h.edges_plus_colors() != bound + 1 || find_rainbow_clique(&h, k).is_none() {
            report.counterexamples.push(h);
        }
    }

    // The seeded perturbation lands on one of the targets above.
    let h = perturb_fresh_colors(&g, bound + 1, 0)?;
    if find_rainbow_clique(&h, k).is_none() {
        report.counterexamples.push(h);
    }
    report.normalize();
    report.elapsed = start.elapsed();
    Ok(report)
}
