//! How the mean relates to simple statistics of its inputs: length against
//! the median condensed length, and first symbol against two majority votes.

use std::fmt::Write as _;
use std::thread;

use bdtw_core::{candidate_bounds, mean_fast, BinaryString, BlockProfile};
use serde::Serialize;

use crate::{derive_seed, random_instance, CliError};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StructRecord {
    pub sparsity: f64,
    pub k: usize,
    pub median_condensed_length: usize,
    pub mean_length: usize,
    pub length_diff: i64,
    pub first_symbol_match_majority: bool,
    pub first_symbol_match_blocksum: bool,
}

#[derive(Clone, Debug)]
pub struct StructConfig {
    pub sparsities: Vec<f64>,
    pub ks: Vec<usize>,
    pub n: usize,
    pub runs: usize,
    pub base_seed: u64,
}

impl Default for StructConfig {
    fn default() -> Self {
        Self {
            sparsities: vec![0.05, 0.1, 0.2, 0.5, 0.8, 1.0],
            ks: vec![5, 15, 40],
            n: 200,
            runs: 200,
            base_seed: 0,
        }
    }
}

/// True if `symbol` wins (or ties) a vote of `zero` against `one`.
fn wins(symbol: u8, zero: usize, one: usize) -> bool {
    match symbol {
        0 => zero >= one,
        _ => one >= zero,
    }
}

/// Analyzes one instance using the first optimum reported by the fast solver.
pub fn analyze(strings: &[BinaryString], sparsity: f64) -> Result<StructRecord, CliError> {
    let bounds = candidate_bounds(strings)?;
    let mean = mean_fast(strings)?;
    let z = &mean.optimal_candidates[0];

    let (mut starters, mut block_mass) = ([0usize; 2], [0usize; 2]);
    for s in strings {
        let p = BlockProfile::of(s);
        starters[usize::from(p.first_symbol())] += 1;
        block_mass[usize::from(p.first_symbol())] += p.sizes()[0];
    }
    Ok(StructRecord {
        sparsity,
        k: strings.len(),
        median_condensed_length: bounds.mu,
        mean_length: z.len(),
        length_diff: z.len() as i64 - bounds.mu as i64,
        first_symbol_match_majority: wins(z.first(), starters[0], starters[1]),
        first_symbol_match_blocksum: wins(z.first(), block_mass[0], block_mass[1]),
    })
}

fn run_cell(config: &StructConfig, k: usize, sparsity: f64) -> Result<Vec<StructRecord>, CliError> {
    (0..config.runs)
        .map(|run| {
            let seed = derive_seed(
                config.base_seed,
                &[k as u64, sparsity.to_bits(), run as u64],
            );
            analyze(&random_instance(k, config.n, sparsity, seed)?, sparsity)
        })
        .collect()
}

/// Runs every `(k, sparsity)` cell in parallel; records come back ordered by
/// `k`, then sparsity, then run index.
pub fn run_struct(config: &StructConfig) -> Result<Vec<StructRecord>, CliError> {
    let cells: Vec<(usize, f64)> = config
        .ks
        .iter()
        .flat_map(|&k| config.sparsities.iter().map(move |&s| (k, s)))
        .collect();
    let results: Vec<_> = thread::scope(|scope| {
        let handles: Vec<_> = cells
            .iter()
            .map(|&(k, s)| scope.spawn(move || run_cell(config, k, s)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("struct worker panicked"))
            .collect()
    });
    let mut records = Vec::new();
    for cell in results {
        records.extend(cell?);
    }
    Ok(records)
}

/// Match frequencies over the grid, one row per `k` and one column per
/// sparsity.
#[derive(Clone, Debug, PartialEq)]
pub struct FrequencyTables {
    pub ks: Vec<usize>,
    pub sparsities: Vec<f64>,
    pub majority: Vec<Vec<f64>>,
    pub blocksum: Vec<Vec<f64>>,
}

impl FrequencyTables {
    pub fn from_records(config: &StructConfig, records: &[StructRecord]) -> Self {
        let table = |pick: fn(&StructRecord) -> bool| {
            config
                .ks
                .iter()
                .map(|&k| {
                    config
                        .sparsities
                        .iter()
                        .map(|&s| {
                            let cell: Vec<_> = records
                                .iter()
                                .filter(|r| r.k == k && r.sparsity == s)
                                .collect();
                            let hits = cell.iter().filter(|r| pick(r)).count();
                            hits as f64 / cell.len().max(1) as f64
                        })
                        .collect()
                })
                .collect()
        };
        Self {
            ks: config.ks.clone(),
            sparsities: config.sparsities.clone(),
            majority: table(|r| r.first_symbol_match_majority),
            blocksum: table(|r| r.first_symbol_match_blocksum),
        }
    }

    /// Looks up a cell by its coordinates.
    pub fn get(&self, table: &[Vec<f64>], k: usize, sparsity: f64) -> Option<f64> {
        let row = self.ks.iter().position(|&x| x == k)?;
        let col = self.sparsities.iter().position(|&x| x == sparsity)?;
        Some(table[row][col])
    }

    /// Plain-text rendering of both tables.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (title, table) in [
            (
                "first symbol vs majority of starting symbols",
                &self.majority,
            ),
            (
                "first symbol vs majority of first-block symbols",
                &self.blocksum,
            ),
        ] {
            let _ = writeln!(out, "# {title}");
            let _ = write!(out, "k\\sparsity");
            for s in &self.sparsities {
                let _ = write!(out, "\t{s}");
            }
            out.push('\n');
            for (k, row) in self.ks.iter().zip(table) {
                let _ = write!(out, "{k}");
                for f in row {
                    let _ = write!(out, "\t{f:.3}");
                }
                out.push('\n');
            }
        }
        out
    }
}
