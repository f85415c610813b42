use super::fast::landscape_from;
use super::MeanResult;
use crate::error::{Error, Result};
use crate::string::BinaryString;

/// Reference `O(k n^2)` solver.
///
/// Runs the dtw table of each alternating string of length `n + 1` against
/// every input. Row `L` of that table, read at the input's last column, is
/// the distance to the length-`L` prefix, so all `2(n + 1)` candidates are
/// scored by two tables per input.
pub fn mean_baseline(strings: &[BinaryString]) -> Result<MeanResult> {
    if strings.is_empty() {
        return Err(Error::Contract("at least one input string required".into()));
    }
    let cand_len = strings.iter().map(BinaryString::len).max().unwrap_or(0) + 1;
    let mut values = vec![0u64; 2 * cand_len];
    let mut prev = Vec::new();
    let mut cur = Vec::new();
    for s in strings {
        let ys = s.symbols();
        let n = ys.len();
        for first in [0u8, 1] {
            prev.clear();
            prev.resize(n, 0);
            cur.clear();
            cur.resize(n, 0);
            for row in 0..cand_len {
                let a = first ^ (row as u8 & 1);
                for (j, &b) in ys.iter().enumerate() {
                    let cost = u64::from(a != b);
                    cur[j] = cost
                        + match (row, j) {
                            (0, 0) => 0,
                            (0, _) => cur[j - 1],
                            (_, 0) => prev[0],
                            _ => prev[j - 1].min(prev[j]).min(cur[j - 1]),
                        };
                }
                values[2 * row + usize::from(first)] += cur[n - 1];
                std::mem::swap(&mut prev, &mut cur);
            }
        }
    }
    Ok(MeanResult::from_landscape(landscape_from(1, &values)))
}
