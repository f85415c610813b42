use num_integer::Integer;
use num_rational::Ratio;

use super::{candidate_bounds, LandscapeEntry, MeanResult, Weight};
use crate::dtw::{condensed_closed_form, dtw_all_condensed, EndStats};
use crate::error::{Error, Result};
use crate::string::{BinaryString, BlockProfile};

/// Scores every candidate `(len, first)` with `len` in `lower..=upper`.
///
/// `combine(acc, j, d)` folds the squared distance `d` of input `j` into the
/// candidate's accumulator, which starts at zero. The result is indexed by
/// `2 * (len - lower) + first`.
pub(crate) fn score_candidates(
    strings: &[BinaryString],
    lower: usize,
    upper: usize,
    mut combine: impl FnMut(&mut u64, usize, u64),
) -> Vec<u64> {
    let mut acc = vec![0u64; 2 * (upper - lower + 1)];
    for (j, s) in strings.iter().enumerate() {
        let profile = BlockProfile::of(s);
        let stats = EndStats::of(&profile);
        let shorter = (lower < stats.count).then(|| {
            dtw_all_condensed(&profile, lower).expect("lower bound below condensation length")
        });
        for len in lower..=upper {
            for first in [0u8, 1] {
                let d = if len >= stats.count {
                    condensed_closed_form(len, first, &stats)
                } else {
                    shorter
                        .as_ref()
                        .and_then(|v| v.get(len, first))
                        .expect("vector covers lower..condensation length")
                };
                combine(&mut acc[2 * (len - lower) + usize::from(first)], j, d);
            }
        }
    }
    acc
}

pub(crate) fn landscape_from<V: Copy>(lower: usize, values: &[V]) -> Vec<LandscapeEntry<V>> {
    values
        .iter()
        .enumerate()
        .map(|(idx, &value)| LandscapeEntry {
            length: lower + idx / 2,
            first: (idx % 2) as u8,
            value,
        })
        .collect()
}

/// All condensed means, scanning lengths `max(1, mu-2)..=m+1`.
pub fn mean_fast(strings: &[BinaryString]) -> Result<MeanResult> {
    let bounds = candidate_bounds(strings)?;
    let values = score_candidates(strings, bounds.lower, bounds.upper, |acc, _, d| *acc += d);
    Ok(MeanResult::from_landscape(landscape_from(
        bounds.lower,
        &values,
    )))
}

/// Candidates minimizing the largest squared distance to any input.
pub fn center(strings: &[BinaryString]) -> Result<MeanResult> {
    let (lower, upper) = candidate_bounds(strings)?.padded();
    let values = score_candidates(strings, lower, upper, |acc, _, d| *acc = (*acc).max(d));
    Ok(MeanResult::from_landscape(landscape_from(lower, &values)))
}

/// Rescales rational weights to integers sharing one denominator.
pub(crate) fn integral_weights(weights: &[Weight], k: usize) -> Result<(Vec<u64>, u64)> {
    if weights.len() != k {
        return Err(Error::WeightCount {
            expected: k,
            got: weights.len(),
        });
    }
    if weights.iter().all(|w| *w.numer() == 0) {
        return Err(Error::ZeroWeights);
    }
    let scale = weights.iter().fold(1u64, |l, w| l.lcm(w.denom()));
    let scaled = weights
        .iter()
        .map(|w| w.numer() * (scale / w.denom()))
        .collect();
    Ok((scaled, scale))
}

/// Condensed minimizers of `sum_i w_i * dtw(s_i, z)^2`.
pub fn weighted_mean(strings: &[BinaryString], weights: &[Weight]) -> Result<MeanResult<Weight>> {
    let (lower, upper) = candidate_bounds(strings)?.padded();
    let (scaled, scale) = integral_weights(weights, strings.len())?;
    let values = score_candidates(strings, lower, upper, |acc, j, d| *acc += scaled[j] * d);
    Ok(MeanResult::from_landscape(landscape_from(lower, &values))
        .map_values(|v| Ratio::new(v, scale)))
}
