//! Experiment drivers and output formatting behind the `bdtw` binary.

pub mod bench;
pub mod error;
pub mod report;
pub mod structure;

use bdtw_core::{gen_random, BinaryString, SparsityConfig};

pub use crate::error::CliError;

/// Mixes a base seed with grid coordinates (splitmix64 finalizer per part).
pub fn derive_seed(base: u64, parts: &[u64]) -> u64 {
    parts.iter().fold(base, |acc, &p| {
        let mut z = acc ^ p.wrapping_add(0x9E37_79B9_7F4A_7C15);
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    })
}

/// `k` random strings of length `n`; string `i` uses seed `seed + i`.
pub fn random_instance(
    k: usize,
    n: usize,
    sparsity: f64,
    seed: u64,
) -> Result<Vec<BinaryString>, CliError> {
    (0..k)
        .map(|i| {
            let cfg = SparsityConfig::new(n, sparsity, seed.wrapping_add(i as u64))?;
            Ok(gen_random(&cfg))
        })
        .collect()
}
