//! Ground-truth search over every binary string up to a length limit.
//!
//! Strings are enumerated depth-first as a binary trie so each node extends
//! its parent's dtw rows by one candidate symbol instead of refilling whole
//! tables.

use num_rational::Ratio;

use super::fast::integral_weights;
use super::{LandscapeEntry, MeanResult, Weight};
use crate::error::{Error, Result};
use crate::string::BinaryString;

/// Longest candidate length accepted by the exhaustive solvers.
pub const EXHAUSTIVE_MAX_LEN: usize = 14;

/// Cap on `k * 2^max_len`.
const EXHAUSTIVE_WORK_LIMIT: usize = 1 << 22;

enum Aggregate<'a> {
    Sum,
    Weighted(&'a [u64]),
    Max,
}

impl Aggregate<'_> {
    fn fold(&self, distances: impl Iterator<Item = u64>) -> u64 {
        match self {
            Aggregate::Sum => distances.sum(),
            Aggregate::Weighted(w) => distances.zip(w.iter()).map(|(d, &w)| d * w).sum(),
            Aggregate::Max => distances.max().unwrap_or(0),
        }
    }
}

struct Search<'a> {
    inputs: Vec<&'a [u8]>,
    aggregate: Aggregate<'a>,
    max_len: usize,
    // rows[depth][input] is the dtw row of the current depth+1 prefix.
    rows: Vec<Vec<Vec<u64>>>,
    prefix: Vec<u8>,
    best: u64,
    // Indexed by 2 * (len - 1) + first.
    condensed: Vec<u64>,
}

impl Search<'_> {
    fn visit(&mut self, depth: usize, symbol: u8, condensed: bool) {
        self.prefix.push(symbol);
        let (done, rest) = self.rows.split_at_mut(depth);
        let parent = done.last();
        for (j, ys) in self.inputs.iter().enumerate() {
            let row = &mut rest[0][j];
            for (t, &b) in ys.iter().enumerate() {
                let cost = u64::from(symbol != b);
                row[t] = cost
                    + match (parent, t) {
                        (None, 0) => 0,
                        (None, _) => row[t - 1],
                        (Some(p), 0) => p[j][0],
                        (Some(p), _) => p[j][t - 1].min(p[j][t]).min(row[t - 1]),
                    };
            }
        }
        let value = self
            .aggregate
            .fold(rest[0].iter().map(|row| row[row.len() - 1]));
        self.best = self.best.min(value);
        if condensed {
            self.condensed[2 * depth + usize::from(self.prefix[0])] = value;
        }
        if depth + 1 < self.max_len {
            for next in [0u8, 1] {
                self.visit(depth + 1, next, condensed && next != symbol);
            }
        }
        self.prefix.pop();
    }
}

fn search(
    strings: &[BinaryString],
    max_len: usize,
    aggregate: Aggregate<'_>,
) -> Result<MeanResult> {
    if strings.is_empty() {
        return Err(Error::Contract("at least one input string required".into()));
    }
    if max_len == 0 {
        return Err(Error::Contract(
            "maximum candidate length must be positive".into(),
        ));
    }
    if max_len > EXHAUSTIVE_MAX_LEN
        || strings.len().saturating_mul(1 << max_len) > EXHAUSTIVE_WORK_LIMIT
    {
        return Err(Error::TooLarge(format!(
            "exhaustive search over {} strings up to length {max_len} \
             (limit: length {EXHAUSTIVE_MAX_LEN}, k * 2^len <= {EXHAUSTIVE_WORK_LIMIT})",
            strings.len()
        )));
    }
    let inputs: Vec<&[u8]> = strings.iter().map(BinaryString::symbols).collect();
    let rows = (0..max_len)
        .map(|_| inputs.iter().map(|s| vec![0u64; s.len()]).collect())
        .collect();
    let mut state = Search {
        inputs,
        aggregate,
        max_len,
        rows,
        prefix: Vec::with_capacity(max_len),
        best: u64::MAX,
        condensed: vec![u64::MAX; 2 * max_len],
    };
    state.visit(0, 0, true);
    state.visit(0, 1, true);

    let landscape: Vec<_> = state
        .condensed
        .iter()
        .enumerate()
        .map(|(idx, &value)| LandscapeEntry {
            length: 1 + idx / 2,
            first: (idx % 2) as u8,
            value,
        })
        .collect();
    // The optima list only holds condensed minimizers; an empty list would
    // mean the global minimum is attained by non-condensed strings only.
    let mut result = MeanResult::from_landscape(landscape);
    if result.objective_value != state.best {
        result.optimal_candidates.clear();
        result.objective_value = state.best;
    }
    Ok(result)
}

/// Minimum of `sum_i dtw(s_i, z)^2` over all binary `z` with
/// `1 <= |z| <= max_len`. The landscape lists the condensed candidates.
pub fn mean_exhaustive(strings: &[BinaryString], max_len: usize) -> Result<MeanResult> {
    search(strings, max_len, Aggregate::Sum)
}

pub fn center_exhaustive(strings: &[BinaryString], max_len: usize) -> Result<MeanResult> {
    search(strings, max_len, Aggregate::Max)
}

pub fn weighted_mean_exhaustive(
    strings: &[BinaryString],
    weights: &[Weight],
    max_len: usize,
) -> Result<MeanResult<Weight>> {
    let (scaled, scale) = integral_weights(weights, strings.len())?;
    Ok(
        search(strings, max_len, Aggregate::Weighted(&scaled))?
            .map_values(|v| Ratio::new(v, scale)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dtw::dtw_sq_dp;

    fn strings(list: &[&str]) -> Vec<BinaryString> {
        list.iter().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn exhaustive_examples() {
        let r = mean_exhaustive(&strings(&["000", "111"]), 4).unwrap();
        assert_eq!(r.objective_value, 2);

        let r = mean_exhaustive(&strings(&["0"]), 3).unwrap();
        assert_eq!(r.objective_value, 0);
        assert_eq!(r.optimal_candidates, strings(&["0"]));

        let r = mean_exhaustive(&strings(&["010", "01010", "01110001110"]), 8).unwrap();
        assert_eq!(r.objective_value, 1);
        assert_eq!(r.optimal_candidates, strings(&["01010"]));

        let r = mean_exhaustive(&strings(&["010", "010", "01110001110"]), 11).unwrap();
        assert_eq!(r.objective_value, 2);
        assert_eq!(r.optimal_candidates, strings(&["01010"]));
    }

    #[test]
    fn guards() {
        assert!(matches!(
            mean_exhaustive(&strings(&["0"]), 15),
            Err(Error::TooLarge(_))
        ));
        let many = vec!["0".parse().unwrap(); 512];
        assert!(matches!(
            mean_exhaustive(&many, 14),
            Err(Error::TooLarge(_))
        ));
        assert!(mean_exhaustive(&[], 3).is_err());
        assert!(mean_exhaustive(&strings(&["0"]), 0).is_err());
    }

    #[test]
    fn trie_rows_match_direct_dp() {
        // Every condensed landscape value must equal the plain table.
        let inputs = strings(&["0011010", "1110", "0", "1010100"]);
        let r = mean_exhaustive(&inputs, 7).unwrap();
        for e in &r.landscape {
            let z = crate::string::condensed_string(e.first, e.length).unwrap();
            let direct: u64 = inputs
                .iter()
                .map(|s| dtw_sq_dp(s, &z, false).squared_distance)
                .sum();
            assert_eq!(e.value, direct, "{z}");
        }
    }
}
