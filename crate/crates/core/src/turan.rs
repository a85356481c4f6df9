//! Turán numbers, balanced partitions and the `e(G) + c(G)` thresholds.
//!
//! All arithmetic is exact. With `n = p·k + i`, `0 <= i < k`,
//!
//! ```text
//! t(n, k) = (k - 1)(n² - i²) / (2k) + C(i, 2)
//! t(n + 1, k) - t(n, k) = n - (n - i) / k
//! ```

use crate::error::{invalid, Result};

/// Part sizes of the Turán graph `T(n, k)`, nonincreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TuranPartition {
    sizes: Vec<usize>,
}

impl TuranPartition {
    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn parts(&self) -> usize {
        self.sizes.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.sizes.iter().sum()
    }

    /// Part index of each vertex when parts are laid out as consecutive
    /// blocks of `1..=n` in order.
    pub fn block_labels(&self) -> Vec<usize> {
        self.sizes
            .iter()
            .enumerate()
            .flat_map(|(part, &size)| std::iter::repeat_n(part, size))
            .collect()
    }

    /// Consecutive vertex blocks `[1..=s_0], [s_0+1..], ...`.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut next = 1;
        self.sizes
            .iter()
            .map(|&size| {
                let block = (next..next + size).collect();
                next += size;
                block
            })
            .collect()
    }

    /// Number of pairs inside a single part.
    pub fn intra_pairs(&self) -> usize {
        self.sizes.iter().map(|&s| binomial2(s)).sum()
    }
}

pub(crate) fn binomial2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn check_k(k: usize) -> Result<()> {
    if k == 0 {
        return Err(invalid("part count k must be at least 1"));
    }
    Ok(())
}

/// Edge count of the balanced complete `k`-partite graph on `n` vertices.
pub fn turan_number(n: usize, k: usize) -> Result<usize> {
    check_k(k)?;
    let i = n % k;
    // n² - i² = (n - i)(n + i) is a multiple of k, and (k - 1)·p·(n + i) is even.
    let (n, i, k) = (n as u128, i as u128, k as u128);
    let t = (k - 1) * (n * n - i * i) / (2 * k) + i * i.saturating_sub(1) / 2;
    Ok(t as usize)
}

/// `t(n + 1, k) - t(n, k)`, computed directly.
pub fn turan_increment(n: usize, k: usize) -> Result<usize> {
    check_k(k)?;
    let i = n % k;
    Ok(n - (n - i) / k)
}

/// Sizes of the `k` parts of `T(n, k)`: the first `n mod k` parts get one
/// extra vertex.
pub fn turan_partition(n: usize, k: usize) -> Result<TuranPartition> {
    check_k(k)?;
    if k > n {
        return Err(invalid(format!(
            "cannot split {n} vertices into {k} nonempty parts"
        )));
    }
    let (base, extra) = (n / k, n % k);
    let sizes = (0..k).map(|p| base + usize::from(p < extra)).collect();
    Ok(TuranPartition { sizes })
}

/// `e(G) + c(G)` values for rainbow `K_k`: the largest value attained without
/// one (`extremal`) and the value that forces one (`existence`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Thresholds {
    pub extremal: usize,
    pub existence: usize,
}

/// Thresholds for a rainbow `K_k` in an `n`-vertex colored graph.
///
/// For `k >= 4` this is `C(n,2) + t(n, k-2) + 1` and `+ 2`; for triangles it
/// is `C(n,2) + n - 1` and `C(n,2) + n`.
pub fn thresholds(n: usize, k: usize) -> Result<Thresholds> {
    if k < 3 {
        return Err(invalid(format!("thresholds need k >= 3, got {k}")));
    }
    if n < k {
        return Err(invalid(format!("thresholds need n >= k, got n={n}, k={k}")));
    }
    let pairs = binomial2(n);
    let existence = if k == 3 {
        pairs + n
    } else {
        pairs + turan_number(n, k - 2)? + 2
    };
    Ok(Thresholds {
        extremal: existence - 1,
        existence,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn anchors() {
        assert_eq!(turan_number(8, 2).unwrap(), 16);
        assert_eq!(turan_number(9, 3).unwrap(), 27);
        assert_eq!(turan_number(7, 2).unwrap(), 12);
        assert_eq!(turan_number(13, 1).unwrap(), 0);
        assert_eq!(turan_number(0, 3).unwrap(), 0);
        assert!(turan_number(5, 0).is_err());
    }

    #[test]
    fn increments() {
        assert_eq!(turan_increment(8, 2).unwrap(), 4);
        assert_eq!(turan_increment(9, 3).unwrap(), 6);
        for k in 1..10 {
            assert_eq!(turan_increment(k, k).unwrap(), k - 1);
        }
        assert!(turan_increment(3, 0).is_err());
    }

    #[test]
    fn partitions() {
        assert_eq!(turan_partition(8, 2).unwrap().sizes(), &[4, 4]);
        assert_eq!(turan_partition(9, 3).unwrap().sizes(), &[3, 3, 3]);
        assert_eq!(turan_partition(7, 3).unwrap().sizes(), &[3, 2, 2]);
        assert_eq!(
            turan_partition(7, 3).unwrap().blocks(),
            vec![vec![1, 2, 3], vec![4, 5], vec![6, 7]]
        );
        assert!(turan_partition(3, 4).is_err());
        assert!(turan_partition(3, 0).is_err());
    }

    #[test]
    fn threshold_constants() {
        let t = thresholds(8, 4).unwrap();
        assert_eq!((t.extremal, t.existence), (45, 46));
        let t = thresholds(9, 5).unwrap();
        assert_eq!((t.extremal, t.existence), (64, 65));
        let t = thresholds(5, 3).unwrap();
        assert_eq!((t.extremal, t.existence), (14, 15));
        assert!(thresholds(5, 2).is_err());
        assert!(thresholds(3, 4).is_err());
    }
}
