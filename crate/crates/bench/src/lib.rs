//! Shared fixtures for the criterion benches.

use bdtw_core::{gen_random, BinaryString, SparsityConfig};

/// `k` seeded random strings of length `n`; string `i` uses seed `seed + i`.
pub fn instance(k: usize, n: usize, sparsity: f64, seed: u64) -> Vec<BinaryString> {
    (0..k as u64)
        .map(|i| gen_random(&SparsityConfig::new(n, sparsity, seed + i).expect("valid config")))
        .collect()
}

/// Sequence of `m` values in `1..=9` from a fixed linear congruential walk.
pub fn mss_values(m: usize, seed: u64) -> Vec<usize> {
    let mut state = seed;
    (0..m)
        .map(|_| {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            1 + (state >> 59) as usize % 9
        })
        .collect()
}
