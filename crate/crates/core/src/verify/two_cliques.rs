use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::VerificationReport;
use crate::constructions::{extremal, perturb_fresh_colors};
use crate::error::{invalid, Result};
use crate::graph::Color;
use crate::random::random_complete_coloring;
use crate::search::count_rainbow_cliques_up_to;
use crate::turan::{binomial2, thresholds};

/// Randomized search for colorings at or above the existence threshold that
/// contain fewer than two rainbow `K_k`.
///
/// Even trials draw a uniform-palette complete coloring repaired up to the
/// required color count; odd trials perturb the extremal coloring just past
/// the threshold, where rainbow cliques are scarcest. Each trial has its own
/// ChaCha stream, so results do not depend on thread scheduling.
pub fn falsify_two_cliques(
    k: usize,
    n: usize,
    trials: u64,
    seed: u64,
) -> Result<VerificationReport> {
    let in_range = (k >= 6 && n > k) || (k == 5 && n >= 10);
    if !in_range {
        return Err(invalid(format!(
            "two-clique search needs n > k >= 6, or k = 5 and n >= 10; got k={k}, n={n}"
        )));
    }
    if n > 40 {
        return Err(invalid(format!(
            "two-clique search supports n <= 40, got {n}"
        )));
    }
    let start = Instant::now();
    let pairs = binomial2(n);
    let target = thresholds(n, k)?.existence;
    let colors_needed = target - pairs;
    let base = extremal(n, k)?;

    let mut report = VerificationReport::new(&format!("two-cliques-n{n}-k{k}"));
    report.space_size = trials;
    let failures: Vec<_> = (0..trials)
        .into_par_iter()
        .filter_map(|trial| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(trial);
            let g = if trial % 2 == 0 {
                let palette = rng.gen_range(colors_needed..=pairs) as Color;
                random_complete_coloring(&mut rng, n, palette, colors_needed)
            } else {
                let extra = rng.gen_range(0..=2usize);
                perturb_fresh_colors(&base, (target + extra).min(2 * pairs), rng.gen())
                    .expect("target within range")
            };
            debug_assert!(g.edges_plus_colors() >= target);
            (count_rainbow_cliques_up_to(&g, k, 2) < 2).then_some(g)
        })
        .collect();
    report.counterexamples = failures;
    report.normalize();
    report.elapsed = start.elapsed();
    Ok(report)
}
