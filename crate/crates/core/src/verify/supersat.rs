//! Growth of the rainbow clique count above the extremal threshold.
//!
//! For each `n` the extremal pattern on `k - 2` parts (for triangles a single
//! part, i.e. a monochromatic `K_n`) is perturbed with fresh colors until
//! `e + c >= ⌈(1 + (k-3)/(k-2) + 2ε)·C(n,2)⌉`, and rainbow `K_k` are counted
//! exactly. A least-squares fit of `log count` against `log n` estimates the
//! growth exponent.

use std::io;

use num_rational::Ratio;

use crate::constructions::{extremal, perturb_fresh_colors};
use crate::error::{invalid, Error, Result};
use crate::graph::ColoredGraph;
use crate::search::count_rainbow_cliques;
use crate::turan::binomial2;

/// Parses `0.1`, `1/10` or `3` into an exact nonnegative rational.
pub fn parse_rational(text: &str) -> Result<Ratio<i128>> {
    let text = text.trim();
    let bad = || invalid(format!("not a rational number: {text:?}"));
    if let Some((num, den)) = text.split_once('/') {
        let num: i128 = num.trim().parse().map_err(|_| bad())?;
        let den: i128 = den.trim().parse().map_err(|_| bad())?;
        if den == 0 {
            return Err(bad());
        }
        return Ok(Ratio::new(num, den));
    }
    let (whole, frac) = text.split_once('.').unwrap_or((text, ""));
    if whole.is_empty() && frac.is_empty() || frac.len() > 18 {
        return Err(bad());
    }
    let negative = whole.starts_with('-');
    let digits = whole.trim_start_matches(['-', '+']);
    if !digits
        .chars()
        .chain(frac.chars())
        .all(|c| c.is_ascii_digit())
    {
        return Err(bad());
    }
    let scale = 10i128.pow(frac.len() as u32);
    let whole: i128 = if digits.is_empty() {
        0
    } else {
        digits.parse().map_err(|_| bad())?
    };
    let frac: i128 = if frac.is_empty() {
        0
    } else {
        frac.parse().map_err(|_| bad())?
    };
    let value = Ratio::new(whole * scale + frac, scale);
    Ok(if negative { -value } else { value })
}

/// `⌈(1 + (k-3)/(k-2) + 2ε)·C(n,2)⌉`, exactly.
pub fn supersaturation_target(n: usize, k: usize, eps: Ratio<i128>) -> usize {
    let k = k as i128;
    let factor = Ratio::from_integer(1) + Ratio::new(k - 3, k - 2) + eps * 2;
    let value = factor * Ratio::from_integer(binomial2(n) as i128);
    value.ceil().to_integer() as usize
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SupersatRow {
    pub n: usize,
    pub ec: usize,
    pub count: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SupersatTable {
    pub k: usize,
    pub rows: Vec<SupersatRow>,
    /// Least-squares slope of `ln count` on `ln n` over rows with a nonzero
    /// count; `None` with fewer than two such rows.
    pub slope: Option<f64>,
}

impl SupersatTable {
    /// Writes the rows as CSV with header `n,ec,count`.
    pub fn write_csv<W: io::Write>(&self, out: W) -> Result<()> {
        let mut writer = csv::Writer::from_writer(out);
        writer
            .write_record(["n", "ec", "count"])
            .map_err(csv_error)?;
        for row in &self.rows {
            writer
                .write_record([row.n.to_string(), row.ec.to_string(), row.count.to_string()])
                .map_err(csv_error)?;
        }
        writer.flush()?;
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("ascii output")
    }
}

fn csv_error(e: csv::Error) -> Error {
    Error::Io(io::Error::other(e))
}

fn log_log_slope(rows: &[SupersatRow]) -> Option<f64> {
    let points: Vec<(f64, f64)> = rows
        .iter()
        .filter(|r| r.count > 0)
        .map(|r| ((r.n as f64).ln(), (r.count as f64).ln()))
        .collect();
    if points.len() < 2 {
        return None;
    }
    let len = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / len;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / len;
    let sxx: f64 = points.iter().map(|p| (p.0 - mean_x).powi(2)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

/// Runs the experiment for `k` in `{3, 4}` over the given vertex counts.
pub fn supersaturation_experiment(
    k: usize,
    ns: &[usize],
    eps: Ratio<i128>,
    seed: u64,
) -> Result<SupersatTable> {
    if !(3..=4).contains(&k) {
        return Err(invalid(format!(
            "supersaturation runs support k in {{3, 4}}, got {k}"
        )));
    }
    if eps <= Ratio::from_integer(0) {
        return Err(invalid("eps must be positive"));
    }
    let mut rows = Vec::with_capacity(ns.len());
    for &n in ns {
        if n < k || n > 100 {
            return Err(invalid(format!("n must lie in {k}..=100, got {n}")));
        }
        let target = supersaturation_target(n, k, eps);
        let max = 2 * binomial2(n);
        if target > max {
            return Err(Error::Unreachable { target, max });
        }
        let base = if k == 3 {
            ColoredGraph::complete(n, |_, _| 1)?
        } else {
            extremal(n, k)?
        };
        let g = perturb_fresh_colors(&base, target, seed)?;
        rows.push(SupersatRow {
            n,
            ec: g.edges_plus_colors(),
            count: count_rainbow_cliques(&g, k),
        });
    }
    let slope = log_log_slope(&rows);
    Ok(SupersatTable { k, rows, slope })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("0.1").unwrap(), Ratio::new(1, 10));
        assert_eq!(parse_rational("1/10").unwrap(), Ratio::new(1, 10));
        assert_eq!(parse_rational("2").unwrap(), Ratio::from_integer(2));
        assert_eq!(parse_rational(".25").unwrap(), Ratio::new(1, 4));
        assert_eq!(parse_rational("-0.5").unwrap(), Ratio::new(-1, 2));
        for bad in ["", ".", "x", "1/0", "0.1.2", "1e3"] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn targets_are_exact_ceilings() {
        // 1.2 * 45 = 54 exactly; 1.7 * 435 = 739.5
        assert_eq!(supersaturation_target(10, 3, Ratio::new(1, 10)), 54);
        assert_eq!(supersaturation_target(30, 4, Ratio::new(1, 10)), 740);
    }

    #[test]
    fn all_rainbow_target_counts_every_triangle() {
        // 1 + 2·(1/2) = 2: every edge ends up with its own color.
        let table = supersaturation_experiment(3, &[9], Ratio::new(1, 2), 4).unwrap();
        assert_eq!(table.rows[0].ec, 72);
        assert_eq!(table.rows[0].count, 84);
        assert_eq!(table.slope, None);
    }

    #[test]
    fn argument_checks() {
        assert!(supersaturation_experiment(5, &[10], Ratio::new(1, 10), 0).is_err());
        assert!(supersaturation_experiment(3, &[10], Ratio::from_integer(0), 0).is_err());
        assert!(supersaturation_experiment(3, &[101], Ratio::new(1, 10), 0).is_err());
        assert!(matches!(
            supersaturation_experiment(3, &[10], Ratio::new(6, 10), 0),
            Err(Error::Unreachable { .. })
        ));
    }

    #[test]
    fn csv_layout() {
        let table = SupersatTable {
            k: 3,
            rows: vec![SupersatRow {
                n: 5,
                ec: 14,
                count: 3,
            }],
            slope: None,
        };
        assert_eq!(table.to_csv(), "n,ec,count\n5,14,3\n");
    }
}
