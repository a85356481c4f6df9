//! The `K_8` / `K_9` base cases through their color-class reductions.
//!
//! In a rainbow-`K_4`-free 17-coloring of `K_8` (resp. rainbow-`K_5`-free
//! 28-coloring of `K_9`) sixteen (twenty-seven) colors are single edges and
//! the remaining color class `H` is 3-regular (2-regular). Avoiding the
//! rainbow clique forces every 4-set (5-set) of vertices to span at least two
//! edges of `H`. The verifiers enumerate all labeled candidates for `H` and
//! apply that filter directly.

use std::collections::BTreeSet;
use std::time::Instant;

use super::regular::{canonical_form, enumerate_regular, sparse_subset, SmallGraph};
use super::VerificationReport;
use crate::error::{invalid, Result};

/// All `(c_2, c_1, c_0)` of nonnegative integers with
/// `c_2 + c_1 + c_0 = c_total` and `lo <= 2·c_2 + c_1 <= hi`, sorted
/// descending.
pub fn verify_saturation_solutions(
    c_total: usize,
    lo: usize,
    hi: usize,
) -> Result<Vec<(usize, usize, usize)>> {
    if lo > hi {
        return Err(invalid(format!("empty range: lo = {lo} > hi = {hi}")));
    }
    let mut out = Vec::new();
    for c2 in (0..=c_total).rev() {
        for c1 in (0..=c_total - c2).rev() {
            let weight = 2 * c2 + c1;
            if (lo..=hi).contains(&weight) {
                out.push((c2, c1, c_total - c2 - c1));
            }
        }
    }
    Ok(out)
}

/// Labeled cubic graphs on 8 vertices in which every 4-set spans at least
/// two edges. Returns the number enumerated and the survivors.
pub fn cubic_survivors() -> (usize, Vec<SmallGraph>) {
    let all = enumerate_regular(8, 3);
    let total = all.len();
    let survivors = all
        .into_iter()
        .filter(|h| sparse_subset(h, 4, 2).is_none())
        .collect();
    (total, survivors)
}

/// Labeled 2-regular graphs on 9 vertices in which every 5-set spans at least
/// two edges. Returns the number enumerated and the survivors.
pub fn two_regular_survivors() -> (usize, Vec<SmallGraph>) {
    let all = enumerate_regular(9, 2);
    let total = all.len();
    let survivors = all
        .into_iter()
        .filter(|h| sparse_subset(h, 5, 2).is_none())
        .collect();
    (total, survivors)
}

/// Only the disjoint union of two `K_4` survives the 4-set filter, and the
/// `(c_2, c_1, c_0)` preamble has exactly the four expected solutions.
pub fn verify_k8_reduction() -> VerificationReport {
    let start = Instant::now();
    let mut report = VerificationReport::new("k8-reduction");
    let (total, survivors) = cubic_survivors();
    report.space_size = total as u64;

    let two_k4 = SmallGraph::from_edges(
        8,
        [
            (1, 2),
            (1, 3),
            (1, 4),
            (2, 3),
            (2, 4),
            (3, 4),
            (5, 6),
            (5, 7),
            (5, 8),
            (6, 7),
            (6, 8),
            (7, 8),
        ],
    );
    let target = canonical_form(&two_k4);
    if sparse_subset(&two_k4, 4, 2).is_some() {
        report
            .failed_checks
            .push("2K4 fails its own 4-set filter".into());
    }
    let classes: BTreeSet<u128> = survivors.iter().map(canonical_form).collect();
    if survivors.is_empty() {
        report
            .failed_checks
            .push("no cubic graph survived the 4-set filter".into());
    }
    for (h, form) in survivors.iter().zip(survivors.iter().map(canonical_form)) {
        if form != target {
            report.counterexamples.push(h.to_colored());
        }
    }
    if classes.len() > 1 {
        report
            .failed_checks
            .push(format!("{} isomorphism classes survive", classes.len()));
    }

    let expected = vec![(17, 0, 0), (16, 1, 0), (16, 0, 1), (15, 2, 0)];
    match verify_saturation_solutions(17, 32, 34) {
        Ok(found) if found == expected => {}
        Ok(found) => report
            .failed_checks
            .push(format!("tally solutions for c=17 are {found:?}")),
        Err(e) => report.failed_checks.push(e.to_string()),
    }
    report.normalize();
    report.elapsed = start.elapsed();
    report
}

/// A cycle type that fails the 5-set filter, with its least violating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Elimination {
    pub cycle_type: Vec<usize>,
    /// 1-based vertices of the lexicographically least sparse 5-set on the
    /// consecutive-label representative.
    pub sparse_set: Option<Vec<usize>>,
    pub edges_inside: Option<usize>,
}

/// Least sparse 5-sets for the cycle types `9`, `6+3` and `5+4`.
pub fn k9_eliminations() -> Vec<Elimination> {
    [vec![9], vec![6, 3], vec![5, 4]]
        .into_iter()
        .map(|cycle_type| {
            let h = SmallGraph::cycle_union(&cycle_type);
            let sparse_set = sparse_subset(&h, 5, 2);
            let edges_inside = sparse_set.as_deref().map(|s| h.edges_within(s));
            Elimination {
                cycle_type,
                sparse_set,
                edges_inside,
            }
        })
        .collect()
}

/// Only cycle type `3+3+3` survives the 5-set filter, and each other type
/// has a concrete sparse 5-set.
pub fn verify_k9_reduction() -> VerificationReport {
    let start = Instant::now();
    let mut report = VerificationReport::new("k9-reduction");
    let (total, survivors) = two_regular_survivors();
    report.space_size = total as u64;

    let mut types = BTreeSet::new();
    for h in &survivors {
        let cycle_type = h.component_sizes();
        if cycle_type != [3, 3, 3] {
            report.counterexamples.push(h.to_colored());
        }
        types.insert(cycle_type);
    }
    if !types.contains(&vec![3, 3, 3]) {
        report
            .failed_checks
            .push("3+3+3 did not survive the 5-set filter".into());
    }
    for elimination in k9_eliminations() {
        if elimination.sparse_set.is_none() {
            report.failed_checks.push(format!(
                "cycle type {:?} has no sparse 5-set",
                elimination.cycle_type
            ));
        }
    }
    report.normalize();
    report.elapsed = start.elapsed();
    report
}
