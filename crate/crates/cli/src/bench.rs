//! Wall-time comparison of the fast and baseline mean solvers.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use bdtw_core::{mean_baseline, mean_fast, BinaryString};
use serde::Serialize;

use crate::{derive_seed, random_instance, CliError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BenchAlgorithm {
    Fast,
    Baseline,
}

impl BenchAlgorithm {
    /// Optimal objective value for the instance.
    pub fn solve(self, strings: &[BinaryString]) -> u64 {
        let result = match self {
            BenchAlgorithm::Fast => mean_fast(strings),
            BenchAlgorithm::Baseline => mean_baseline(strings),
        };
        result.expect("instances are nonempty").objective_value
    }
}

impl FromStr for BenchAlgorithm {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "fast" => Ok(BenchAlgorithm::Fast),
            "baseline" => Ok(BenchAlgorithm::Baseline),
            other => Err(CliError::Usage(format!(
                "unknown bench algorithm {other:?}"
            ))),
        }
    }
}

impl fmt::Display for BenchAlgorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BenchAlgorithm::Fast => "fast",
            BenchAlgorithm::Baseline => "baseline",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchRecord {
    pub algorithm: BenchAlgorithm,
    pub k: usize,
    pub n: usize,
    pub sparsity: f64,
    /// Median wall time in seconds.
    pub wall_time: f64,
    pub objective: u64,
}

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub ks: Vec<usize>,
    pub ns: Vec<usize>,
    pub sparsities: Vec<f64>,
    /// Instances per grid cell.
    pub seeds: usize,
    pub base_seed: u64,
    pub algorithms: Vec<BenchAlgorithm>,
    /// Largest `n` the baseline may run on.
    pub baseline_cap: usize,
    pub repetitions: usize,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            ks: vec![10],
            ns: vec![1000],
            sparsities: vec![0.1],
            seeds: 1,
            base_seed: 0,
            algorithms: vec![BenchAlgorithm::Fast, BenchAlgorithm::Baseline],
            baseline_cap: 2000,
            repetitions: 3,
        }
    }
}

/// Runs `algorithm` `repetitions` times; returns the median wall time in
/// seconds and the objective.
pub fn time_median(
    algorithm: BenchAlgorithm,
    strings: &[BinaryString],
    repetitions: usize,
) -> (f64, u64) {
    let mut times = Vec::with_capacity(repetitions.max(1));
    let mut objective = 0;
    for _ in 0..repetitions.max(1) {
        let start = Instant::now();
        objective = std::hint::black_box(algorithm.solve(std::hint::black_box(strings)));
        times.push(start.elapsed().as_secs_f64());
    }
    times.sort_by(f64::total_cmp);
    (times[times.len() / 2], objective)
}

/// Benchmarks every grid cell, serially, in `(k, n, sparsity, seed)` order.
/// Fails before timing anything if the baseline would exceed its cap, and
/// fails hard if two algorithms disagree on an instance.
pub fn run_bench(config: &BenchConfig) -> Result<Vec<BenchRecord>, CliError> {
    if config.algorithms.contains(&BenchAlgorithm::Baseline) {
        if let Some(&n) = config.ns.iter().find(|&&n| n > config.baseline_cap) {
            return Err(CliError::Usage(format!(
                "baseline limited to n <= {} (got n = {n}); raise --baseline-cap or drop the baseline",
                config.baseline_cap
            )));
        }
    }
    let mut records = Vec::new();
    for &k in &config.ks {
        for &n in &config.ns {
            for &sparsity in &config.sparsities {
                for s in 0..config.seeds {
                    let seed = derive_seed(
                        config.base_seed,
                        &[k as u64, n as u64, sparsity.to_bits(), s as u64],
                    );
                    let strings = random_instance(k, n, sparsity, seed)?;
                    let mut objective = None;
                    for &algorithm in &config.algorithms {
                        let (wall_time, value) =
                            time_median(algorithm, &strings, config.repetitions);
                        if let Some(expected) = objective {
                            if expected != value {
                                return Err(CliError::Consistency(format!(
                                    "{algorithm} objective {value} != {expected} (k={k}, n={n}, sparsity={sparsity}, seed={seed})"
                                )));
                            }
                        }
                        objective = Some(value);
                        records.push(BenchRecord {
                            algorithm,
                            k,
                            n,
                            sparsity,
                            wall_time,
                            objective: value,
                        });
                    }
                }
            }
        }
    }
    Ok(records)
}
