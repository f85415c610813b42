//! Min 1-Separated Sum: pick `r` pairwise non-neighboring entries of a
//! positive integer sequence with minimum total.
//!
//! The squared dtw distance between two binary strings with equal first and
//! equal last symbols is exactly such a minimum over the inner block sizes of
//! the string with more blocks, which is why this lives next to `dtw`.

use crate::error::{Error, Result};

/// Values `b_1..b_m` (all positive) and the number `r` of entries to select.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MssInstance {
    values: Vec<usize>,
    r: usize,
}

impl MssInstance {
    pub fn new(values: Vec<usize>, r: usize) -> Result<Self> {
        if values.contains(&0) {
            return Err(Error::Contract("MSS values must be positive".into()));
        }
        Ok(Self { values, r })
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn m(&self) -> usize {
        self.values.len()
    }

    pub fn is_feasible(&self) -> bool {
        self.r <= max_selectable(self.values.len())
    }
}

/// Largest number of pairwise non-neighboring picks among `m` slots.
pub fn max_selectable(m: usize) -> usize {
    m.div_ceil(2)
}

/// Dynamic programming table for an MSS instance.
///
/// Row `i` (0..=m) covers the prefix `b_1..b_i` and holds the optimal sums for
/// `j = 0..=min(r, ceil(i/2))` selections; cells outside that range are
/// infeasible and absent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MssTable {
    rows: Vec<Vec<u64>>,
    r: usize,
}

impl MssTable {
    /// `M[i, j]`, or `None` when `j` picks do not fit into `i` slots or
    /// exceed the table's `r`.
    pub fn get(&self, i: usize, j: usize) -> Option<u64> {
        self.rows.get(i)?.get(j).copied()
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.rows[i]
    }

    /// Number of values covered (the last row index).
    pub fn m(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn r(&self) -> usize {
        self.r
    }
}

#[inline]
fn next_row(prev2: Option<&[u64]>, prev: &[u64], value: usize, i: usize, r: usize) -> Vec<u64> {
    let width = r.min(max_selectable(i)) + 1;
    let mut row = Vec::with_capacity(width);
    row.push(0);
    for j in 1..width {
        // Taking b_i leaves j-1 picks for b_1..b_{i-2}; for i = 1 that prefix
        // is empty and only admits zero picks.
        let take = match prev2 {
            Some(p2) => p2.get(j - 1).map(|&s| s + value as u64),
            None => (j == 1).then_some(value as u64),
        };
        let skip = prev.get(j).copied();
        let best = match (take, skip) {
            (Some(a), Some(b)) => a.min(b),
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (None, None) => unreachable!("j <= ceil(i/2) always has a feasible option"),
        };
        row.push(best);
    }
    row
}

/// Builds the full table. Runs in `O(m * r)`.
pub fn mss_table(instance: &MssInstance) -> MssTable {
    let r = instance.r;
    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(instance.m() + 1);
    rows.push(vec![0]);
    for (idx, &value) in instance.values.iter().enumerate() {
        let i = idx + 1;
        let prev2 = if i >= 2 {
            Some(rows[i - 2].as_slice())
        } else {
            None
        };
        let row = next_row(prev2, &rows[i - 1], value, i, r);
        rows.push(row);
    }
    MssTable { rows, r }
}

/// Optimal sums for the whole sequence with `0..=min(r, ceil(m/2))` picks,
/// keeping only two live rows.
pub fn mss_last_row(values: &[usize], r: usize) -> Vec<u64> {
    let mut prev2: Option<Vec<u64>> = None;
    let mut prev = vec![0u64];
    for (idx, &value) in values.iter().enumerate() {
        let row = next_row(prev2.as_deref(), &prev, value, idx + 1, r);
        prev2 = Some(std::mem::replace(&mut prev, row));
    }
    prev
}

/// Minimum 1-separated sum of `r` entries of `values`.
pub fn mss_min_sum(values: &[usize], r: usize) -> Result<u64> {
    if r > max_selectable(values.len()) {
        return Err(Error::Infeasible { m: values.len(), r });
    }
    if r == 0 {
        return Ok(0);
    }
    Ok(mss_last_row(values, r)[r])
}

pub fn mss_solve(instance: &MssInstance) -> Result<u64> {
    mss_min_sum(&instance.values, instance.r)
}

/// Largest `m` accepted by [`mss_brute_force`].
pub const BRUTE_FORCE_MAX_M: usize = 24;

/// Exhaustive search over all index sets with pairwise gaps of at least two.
pub fn mss_brute_force(instance: &MssInstance) -> Result<u64> {
    let m = instance.m();
    if m > BRUTE_FORCE_MAX_M {
        return Err(Error::TooLarge(format!(
            "brute-force MSS limited to m <= {BRUTE_FORCE_MAX_M}, got {m}"
        )));
    }
    if !instance.is_feasible() {
        return Err(Error::Infeasible { m, r: instance.r });
    }
    let mut best = u64::MAX;
    for mask in 0u32..(1u32 << m) {
        if mask.count_ones() as usize != instance.r || mask & (mask >> 1) != 0 {
            continue;
        }
        let sum = (0..m)
            .filter(|&i| mask & (1 << i) != 0)
            .map(|i| instance.values[i] as u64)
            .sum();
        best = best.min(sum);
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn inst(values: &[usize], r: usize) -> MssInstance {
        MssInstance::new(values.to_vec(), r).unwrap()
    }

    #[test]
    fn table_examples() {
        let t = mss_table(&inst(&[4, 1, 3], 2));
        assert_eq!(t.get(3, 2), Some(7));
        assert_eq!(t.get(2, 2), None);

        let t = mss_table(&inst(&[5, 3, 7], 0));
        for i in 0..=3 {
            assert_eq!(t.row(i), &[0]);
        }

        let t = mss_table(&inst(&[1, 1, 2, 2, 1, 1], 2));
        assert_eq!(t.get(6, 2), Some(2));
    }

    #[test]
    fn solve_examples() {
        assert_eq!(mss_solve(&inst(&[4, 1, 3, 2], 2)), Ok(3));
        assert_eq!(mss_solve(&inst(&[9], 1)), Ok(9));
        assert_eq!(mss_solve(&inst(&[1, 1, 2, 2, 1, 1], 2)), Ok(2));
        assert_eq!(mss_solve(&inst(&[], 0)), Ok(0));
        assert_eq!(
            mss_solve(&inst(&[3, 1], 2)),
            Err(Error::Infeasible { m: 2, r: 2 })
        );
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(mss_brute_force(&inst(&[1, 1, 2, 2, 1, 1], 2)), Ok(2));
        assert_eq!(mss_brute_force(&inst(&[7, 7], 1)), Ok(7));
        assert_eq!(
            mss_brute_force(&inst(&[3, 1], 2)),
            Err(Error::Infeasible { m: 2, r: 2 })
        );
        assert_eq!(mss_brute_force(&inst(&[], 0)), Ok(0));
        assert!(matches!(
            mss_brute_force(&inst(&[1; 25], 1)),
            Err(Error::TooLarge(_))
        ));
    }

    #[test]
    fn rejects_zero_values() {
        assert!(MssInstance::new(vec![1, 0], 1).is_err());
    }

    proptest! {
        #[test]
        fn dp_matches_brute_force(values in prop::collection::vec(1usize..=50, 0..=16), r_seed in 0usize..100) {
            let r = r_seed % (max_selectable(values.len()) + 1);
            let instance = inst(&values, r);
            prop_assert_eq!(mss_solve(&instance), mss_brute_force(&instance));
        }

        #[test]
        fn table_identities(values in prop::collection::vec(1usize..=20, 1..=14), r in 0usize..8) {
            let t = mss_table(&inst(&values, r));
            for i in 1..=values.len() {
                prop_assert_eq!(t.get(i, 0), Some(0));
                if r >= 1 {
                    prop_assert_eq!(t.get(i, 1), values[..i].iter().min().map(|&v| v as u64));
                }
                for j in 2..=r.min(max_selectable(i)) {
                    let take = t.get(i - 2, j - 1).map(|s| s + values[i - 1] as u64);
                    let skip = t.get(i - 1, j);
                    let expect = match (take, skip) {
                        (Some(a), Some(b)) => a.min(b),
                        (a, b) => a.or(b).unwrap(),
                    };
                    prop_assert_eq!(t.get(i, j), Some(expect));
                }
                if i < values.len() {
                    for j in 0..=r.min(max_selectable(i)) {
                        prop_assert!(t.get(i, j).unwrap() >= t.get(i + 1, j).unwrap());
                    }
                }
            }
            prop_assert_eq!(&mss_last_row(&values, r)[..], t.row(values.len()));
        }
    }
}
