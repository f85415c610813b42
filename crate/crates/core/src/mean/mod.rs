//! Exact condensed means, weighted means and centers.
//!
//! Every problem here admits a condensed optimum, so a candidate is fully
//! described by its length and first symbol. The fast solvers score a
//! bounded window of candidates with the closed form (candidates at least
//! as long as the input's condensation) and [`dtw_all_condensed`] (shorter
//! ones).
//!
//! [`dtw_all_condensed`]: crate::dtw::dtw_all_condensed

mod baseline;
mod exhaustive;
mod fast;
mod special;

use std::str::FromStr;

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::string::{condensed_string, BinaryString};

pub use baseline::mean_baseline;
pub use exhaustive::{
    center_exhaustive, mean_exhaustive, weighted_mean_exhaustive, EXHAUSTIVE_MAX_LEN,
};
pub use fast::{center, mean_fast, weighted_mean};
pub use special::{mean_three_matched, mean_two};

/// Nonnegative rational weight.
pub type Weight = Ratio<u64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Objective {
    /// Sum of squared distances (mean).
    Sum,
    /// Maximum squared distance (center).
    Max,
}

impl FromStr for Objective {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sum" => Ok(Objective::Sum),
            "max" => Ok(Objective::Max),
            other => Err(Error::Contract(format!("unknown objective {other:?}"))),
        }
    }
}

/// One condensed candidate and its objective value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LandscapeEntry<V> {
    pub length: usize,
    pub first: u8,
    pub value: V,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MeanResult<V = u64> {
    /// All optimal condensed candidates, ordered by length then first symbol.
    pub optimal_candidates: Vec<BinaryString>,
    pub objective_value: V,
    /// Objective of every candidate considered, in the same order.
    pub landscape: Vec<LandscapeEntry<V>>,
}

impl<V: Copy + Ord> MeanResult<V> {
    /// Builds a result from a landscape, taking all argmins as optima.
    pub(crate) fn from_landscape(landscape: Vec<LandscapeEntry<V>>) -> Self {
        let objective_value = landscape
            .iter()
            .map(|e| e.value)
            .min()
            .expect("landscape is never empty");
        let optimal_candidates = landscape
            .iter()
            .filter(|e| e.value == objective_value)
            .map(|e| condensed_string(e.first, e.length).expect("candidate lengths are positive"))
            .collect();
        Self {
            optimal_candidates,
            objective_value,
            landscape,
        }
    }
}

impl<V> MeanResult<V> {
    pub fn map_values<W>(self, mut f: impl FnMut(V) -> W) -> MeanResult<W> {
        MeanResult {
            optimal_candidates: self.optimal_candidates,
            objective_value: f(self.objective_value),
            landscape: self
                .landscape
                .into_iter()
                .map(|e| LandscapeEntry {
                    length: e.length,
                    first: e.first,
                    value: f(e.value),
                })
                .collect(),
        }
    }
}

/// Condensation-length statistics of an input set and the candidate
/// length window `[lower, upper]` that contains every condensed mean.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CandidateBounds {
    /// Condensation length of the `ceil(k/2)`-th shortest input.
    pub mu: usize,
    /// Maximum condensation length.
    pub m: usize,
    /// Minimum condensation length.
    pub nu: usize,
    pub lower: usize,
    pub upper: usize,
}

impl CandidateBounds {
    pub(crate) fn from_lengths(mut lengths: Vec<usize>) -> Result<Self> {
        if lengths.is_empty() {
            return Err(Error::Contract("at least one input string required".into()));
        }
        lengths.sort_unstable();
        let k = lengths.len();
        let mu = lengths[k.div_ceil(2) - 1];
        let m = lengths[k - 1];
        Ok(Self {
            mu,
            m,
            nu: lengths[0],
            lower: mu.saturating_sub(2).max(1),
            upper: m + 1,
        })
    }

    /// Window used for weighted means and centers: `[max(1, nu-2), m+1]`.
    pub fn padded(&self) -> (usize, usize) {
        (self.nu.saturating_sub(2).max(1), self.upper)
    }

    pub fn contains(&self, len: usize) -> bool {
        (self.lower..=self.upper).contains(&len)
    }
}

pub fn candidate_bounds(strings: &[BinaryString]) -> Result<CandidateBounds> {
    CandidateBounds::from_lengths(strings.iter().map(BinaryString::block_count).collect())
}

/// Parses a weight written as an integer, a decimal (`0.25`) or a fraction
/// (`1/3`).
pub fn parse_weight(text: &str) -> Result<Weight> {
    let text = text.trim();
    let bad = || Error::Contract(format!("invalid weight {text:?}"));
    if let Some((num, den)) = text.split_once('/') {
        let num: u64 = num.trim().parse().map_err(|_| bad())?;
        let den: u64 = den.trim().parse().map_err(|_| bad())?;
        if den == 0 {
            return Err(bad());
        }
        return Ok(Ratio::new(num, den));
    }
    let (int, frac) = text.split_once('.').unwrap_or((text, ""));
    if (int.is_empty() && frac.is_empty())
        || !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit())
        || frac.len() > 18
    {
        return Err(bad());
    }
    let den = 10u64.pow(frac.len() as u32);
    let int: u64 = if int.is_empty() {
        0
    } else {
        int.parse().map_err(|_| bad())?
    };
    let frac: u64 = if frac.is_empty() {
        0
    } else {
        frac.parse().map_err(|_| bad())?
    };
    let num = int
        .checked_mul(den)
        .and_then(|v| v.checked_add(frac))
        .ok_or_else(bad)?;
    Ok(Ratio::new(num, den))
}

/// Which solver to run for a [`MeanProblem`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Fast,
    Baseline,
    Exhaustive,
    /// Currently always the fast solver.
    Auto,
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fast" => Ok(Algorithm::Fast),
            "baseline" => Ok(Algorithm::Baseline),
            "exhaustive" => Ok(Algorithm::Exhaustive),
            "auto" => Ok(Algorithm::Auto),
            other => Err(Error::Contract(format!("unknown algorithm {other:?}"))),
        }
    }
}

/// Inputs of a mean/center computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeanProblem {
    pub strings: Vec<BinaryString>,
    pub weights: Option<Vec<Weight>>,
    pub objective: Objective,
}

impl MeanProblem {
    pub fn new(
        strings: Vec<BinaryString>,
        weights: Option<Vec<Weight>>,
        objective: Objective,
    ) -> Result<Self> {
        if strings.is_empty() {
            return Err(Error::Contract("at least one input string required".into()));
        }
        if let Some(w) = &weights {
            if w.len() != strings.len() {
                return Err(Error::WeightCount {
                    expected: strings.len(),
                    got: w.len(),
                });
            }
            if objective == Objective::Max {
                return Err(Error::Contract(
                    "weights are only supported for the sum objective".into(),
                ));
            }
        }
        Ok(Self {
            strings,
            weights,
            objective,
        })
    }

    /// Largest input length, the `n` of the exhaustive guard.
    pub fn max_len(&self) -> usize {
        self.strings
            .iter()
            .map(BinaryString::len)
            .max()
            .unwrap_or(0)
    }

    /// Solves with the chosen algorithm. Objective values are reported as
    /// rationals so weighted and unweighted results share one type.
    pub fn solve(&self, algorithm: Algorithm) -> Result<MeanResult<Weight>> {
        let exhaustive_len = || (self.max_len() + 1).min(EXHAUSTIVE_MAX_LEN);
        let integral = |r: MeanResult<u64>| r.map_values(Ratio::from_integer);
        match (self.objective, &self.weights, algorithm) {
            (Objective::Sum, None, Algorithm::Fast | Algorithm::Auto) => {
                mean_fast(&self.strings).map(integral)
            }
            (Objective::Sum, None, Algorithm::Baseline) => {
                mean_baseline(&self.strings).map(integral)
            }
            (Objective::Sum, None, Algorithm::Exhaustive) => {
                mean_exhaustive(&self.strings, exhaustive_len()).map(integral)
            }
            (Objective::Sum, Some(w), Algorithm::Fast | Algorithm::Auto) => {
                weighted_mean(&self.strings, w)
            }
            (Objective::Sum, Some(w), Algorithm::Exhaustive) => {
                weighted_mean_exhaustive(&self.strings, w, exhaustive_len())
            }
            (Objective::Max, _, Algorithm::Fast | Algorithm::Auto) => {
                center(&self.strings).map(integral)
            }
            (Objective::Max, _, Algorithm::Exhaustive) => {
                center_exhaustive(&self.strings, exhaustive_len()).map(integral)
            }
            (_, _, Algorithm::Baseline) => Err(Error::Contract(
                "the baseline solver only handles the unweighted sum objective".into(),
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strings(list: &[&str]) -> Vec<BinaryString> {
        list.iter().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn bounds_examples() {
        let b = candidate_bounds(&strings(&["000", "111"])).unwrap();
        assert_eq!((b.mu, b.m, b.lower, b.upper), (1, 1, 1, 2));

        let b = candidate_bounds(&strings(&["0", "0", "0", "101", "101", "010", "010"])).unwrap();
        assert_eq!((b.mu, b.m, b.nu, b.lower, b.upper), (3, 3, 1, 1, 4));

        let b = candidate_bounds(&strings(&["0011010"])).unwrap();
        assert_eq!((b.mu, b.m, b.nu), (5, 5, 5));
        assert_eq!((b.lower, b.upper), (3, 6));

        assert!(candidate_bounds(&[]).is_err());
    }

    #[test]
    fn weights_parse() {
        assert_eq!(parse_weight("3").unwrap(), Ratio::from_integer(3));
        assert_eq!(parse_weight("0.25").unwrap(), Ratio::new(1, 4));
        assert_eq!(parse_weight(".5").unwrap(), Ratio::new(1, 2));
        assert_eq!(parse_weight("1/3").unwrap(), Ratio::new(1, 3));
        for bad in ["", "-1", "1/0", "abc", "1.2.3", "."] {
            assert!(parse_weight(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn problem_validation() {
        let s = strings(&["01", "10"]);
        assert!(MeanProblem::new(vec![], None, Objective::Sum).is_err());
        assert_eq!(
            MeanProblem::new(
                s.clone(),
                Some(vec![Ratio::from_integer(1)]),
                Objective::Sum
            ),
            Err(Error::WeightCount {
                expected: 2,
                got: 1
            })
        );
        let p = MeanProblem::new(s, None, Objective::Max).unwrap();
        assert!(p.solve(Algorithm::Baseline).is_err());
    }
}
