//! Set partitions of `{0, .., m-1}` into exactly `r` blocks as restricted
//! growth strings.
//!
//! A restricted growth string `a` has `a[0] = 0` and
//! `a[i] <= max(a[0..i]) + 1`; element `i` lies in block `a[i]`, so blocks are
//! numbered by first appearance. Strings are produced in lexicographic order.
//! A coloring of `m` edges with exactly `r` colors, up to renaming the colors,
//! is one such string.

/// Streaming enumerator over partitions of `m` elements into exactly `r`
/// nonempty blocks.
///
/// ```
/// use rainbow::verify::EdgePartitionCursor;
///
/// let mut cursor = EdgePartitionCursor::new(4, 2);
/// let mut seen = Vec::new();
/// while cursor.advance() {
///     seen.push(cursor.blocks().to_vec());
/// }
/// assert_eq!(seen.len(), 7);
/// assert_eq!(seen[0], vec![0, 0, 0, 1]);
/// assert_eq!(seen[6], vec![0, 1, 1, 1]);
/// ```
#[derive(Debug, Clone)]
pub struct EdgePartitionCursor {
    m: usize,
    r: usize,
    rgs: Vec<u8>,
    prefix_max: Vec<u8>,
    state: State,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum State {
    Fresh,
    Active,
    Done,
}

impl EdgePartitionCursor {
    pub fn new(m: usize, r: usize) -> Self {
        assert!(r <= u8::MAX as usize + 1, "at most 256 blocks supported");
        EdgePartitionCursor {
            m,
            r,
            rgs: vec![0; m],
            prefix_max: vec![0; m],
            state: State::Fresh,
        }
    }

    pub fn elements(&self) -> usize {
        self.m
    }

    pub fn block_count(&self) -> usize {
        self.r
    }

    /// Block index of each element in the current partition.
    pub fn blocks(&self) -> &[u8] {
        &self.rgs
    }

    /// Writes the lexicographically least completion of `rgs[..from]`
    /// (`from >= 1`) that reaches exactly `r` blocks, given the block maximum
    /// so far.
    fn fill_from(&mut self, from: usize, mut max: u8) {
        let need = self.r - (max as usize + 1);
        debug_assert!(need <= self.m - from);
        for j in from..self.m {
            if self.m - j <= need {
                max += 1;
                self.rgs[j] = max;
            } else {
                self.rgs[j] = 0;
            }
            self.prefix_max[j] = max;
        }
    }

    /// Moves to the next partition; the first call positions the cursor on
    /// the first one. Returns false once all partitions have been produced.
    pub fn advance(&mut self) -> bool {
        match self.state {
            State::Done => false,
            State::Fresh => {
                let exists = if self.m == 0 {
                    self.r == 0
                } else {
                    1 <= self.r && self.r <= self.m
                };
                if !exists {
                    self.state = State::Done;
                    return false;
                }
                if self.m > 0 {
                    self.rgs[0] = 0;
                    self.prefix_max[0] = 0;
                    self.fill_from(1, 0);
                }
                self.state = State::Active;
                true
            }
            State::Active if self.m == 0 => {
                self.state = State::Done;
                false
            }
            State::Active => {
                let top = (self.r - 1) as u8;
                for i in (1..self.m).rev() {
                    let before = self.prefix_max[i - 1];
                    let value = self.rgs[i];
                    if value >= top || value > before {
                        continue;
                    }
                    let raised = value + 1;
                    let max = before.max(raised);
                    if max as usize + 1 + (self.m - i - 1) < self.r {
                        continue;
                    }
                    self.rgs[i] = raised;
                    self.prefix_max[i] = max;
                    if i + 1 < self.m {
                        self.fill_from(i + 1, max);
                    }
                    return true;
                }
                self.state = State::Done;
                false
            }
        }
    }

    /// Exhausts the cursor, returning how many partitions remained.
    pub fn count_remaining(mut self) -> u64 {
        let mut count = 0;
        while self.advance() {
            count += 1;
        }
        count
    }
}

/// Stirling numbers of the second kind via
/// `S(m, r) = r·S(m-1, r) + S(m-1, r-1)`.
pub fn stirling2(m: usize, r: usize) -> u128 {
    let mut row = vec![0u128; r + 1];
    row[0] = 1;
    for _ in 0..m {
        for j in (1..=r).rev() {
            row[j] = j as u128 * row[j] + row[j - 1];
        }
        row[0] = 0;
    }
    row[r]
}

/// Bell numbers `B(m) = Σ_r S(m, r)`.
pub fn bell(m: usize) -> u128 {
    (0..=m).map(|r| stirling2(m, r)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn collect(m: usize, r: usize) -> Vec<Vec<u8>> {
        let mut cursor = EdgePartitionCursor::new(m, r);
        let mut out = Vec::new();
        while cursor.advance() {
            out.push(cursor.blocks().to_vec());
        }
        out
    }

    #[test]
    fn degenerate_shapes() {
        assert_eq!(collect(0, 0), vec![Vec::<u8>::new()]);
        assert!(collect(0, 1).is_empty());
        assert!(collect(3, 0).is_empty());
        assert!(collect(3, 4).is_empty());
        assert_eq!(collect(3, 1), vec![vec![0, 0, 0]]);
        assert_eq!(collect(3, 3), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn five_into_three_in_order() {
        let all = collect(5, 3);
        assert_eq!(all.len(), 25);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        for rgs in &all {
            let mut max = 0;
            assert_eq!(rgs[0], 0);
            for &x in &rgs[1..] {
                assert!(x <= max + 1);
                max = max.max(x);
            }
            assert_eq!(max, 2);
        }
    }

    #[test]
    fn stirling_and_bell_values() {
        assert_eq!(stirling2(15, 10), 12_662_650);
        assert_eq!(stirling2(0, 0), 1);
        assert_eq!(stirling2(4, 0), 0);
        assert_eq!(bell(4), 15);
        assert_eq!(bell(7), 877);
        assert_eq!(bell(11), 678_570);
    }
}
