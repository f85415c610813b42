//! Exact means, weighted means and centers of binary strings under the
//! squared dynamic time warping distance.

pub mod data;
pub mod dtw;
pub mod error;
pub mod mean;
pub mod mss;
pub mod string;

pub use crate::data::{
    gen_random, parse_events, sample_to_string, SamplingConfig, SamplingMode, SensorEvent,
    SparsityConfig, StateMap, TimeSpan,
};
pub use crate::dtw::{
    dtw_all_condensed, dtw_sq_blocks, dtw_sq_condensed, dtw_sq_dp, CondensedDistanceVector,
    DtwResult,
};
pub use crate::error::{Error, Result};
pub use crate::mean::{
    candidate_bounds, center, center_exhaustive, mean_baseline, mean_exhaustive, mean_fast,
    mean_three_matched, mean_two, parse_weight, weighted_mean, weighted_mean_exhaustive, Algorithm,
    CandidateBounds, LandscapeEntry, MeanProblem, MeanResult, Objective, Weight,
};
pub use crate::mss::{mss_brute_force, mss_solve, mss_table, MssInstance, MssTable};
pub use crate::string::{
    block_profile, condense, condensed_string, parse_strings, validate_warping_path, BinaryString,
    BlockProfile, WarpingPath,
};
