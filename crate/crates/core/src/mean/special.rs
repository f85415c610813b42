//! Linear-time means for two strings and for three strings sharing both
//! endpoint symbols.

use super::{mean_fast, LandscapeEntry, MeanResult};
use crate::dtw::{condensed_closed_form, EndStats};
use crate::error::{Error, Result};
use crate::string::{BinaryString, BlockProfile};

fn single(length: usize, first: u8, value: u64) -> MeanResult {
    MeanResult::from_landscape(vec![LandscapeEntry {
        length,
        first,
        value,
    }])
}

/// A condensed mean of two strings.
///
/// With different condensation lengths the longer condensation is a mean.
/// With equal lengths the candidate window has constant size and the fast
/// solver is already linear, so it reports all means.
pub fn mean_two(s1: &BinaryString, s2: &BinaryString) -> Result<MeanResult> {
    let (p1, p2) = (BlockProfile::of(s1), BlockProfile::of(s2));
    if p1.block_count() == p2.block_count() {
        return mean_fast(&[s1.clone(), s2.clone()]);
    }
    let (short, long) = if p1.block_count() < p2.block_count() {
        (p1, p2)
    } else {
        (p2, p1)
    };
    let value = condensed_closed_form(
        long.block_count(),
        long.first_symbol(),
        &EndStats::of(&short),
    );
    Ok(single(long.block_count(), long.first_symbol(), value))
}

/// Maximum number of pairwise non-neighboring size-one blocks among the
/// inner blocks, taken greedily from the left.
fn separated_unit_blocks(sizes: &[usize]) -> usize {
    if sizes.len() < 3 {
        return 0;
    }
    let mut count = 0;
    let mut last: Option<usize> = None;
    for (i, &b) in sizes[1..sizes.len() - 1].iter().enumerate() {
        if b == 1 && last.is_none_or(|t| i > t + 1) {
            count += 1;
            last = Some(i);
        }
    }
    count
}

/// A condensed mean of three strings that share their first symbol and their
/// last symbol.
///
/// The mean has length `l3 - 2 * rho`, where `rho` is the number of size-one
/// inner blocks of the longest condensation that can be misaligned together,
/// but never shorter than the middle condensation length.
pub fn mean_three_matched(
    s1: &BinaryString,
    s2: &BinaryString,
    s3: &BinaryString,
) -> Result<MeanResult> {
    if !(s1.first() == s2.first() && s2.first() == s3.first())
        || !(s1.last() == s2.last() && s2.last() == s3.last())
    {
        return Err(Error::Contract(
            "all three strings must share first and last symbols".into(),
        ));
    }
    let mut profiles = [s1, s2, s3].map(BlockProfile::of);
    profiles.sort_by_key(BlockProfile::block_count);
    let [l1, l2, l3] = profiles.each_ref().map(BlockProfile::block_count);

    let rho = separated_unit_blocks(profiles[2].sizes()).min((l3 - l2) / 2);
    let len = l3 - 2 * rho;
    // Shorter inputs sit at half their length gap; the longest one pays one
    // per misaligned size-one block.
    let value = ((len - l1) / 2 + (len - l2) / 2 + rho) as u64;
    Ok(single(len, s1.first(), value))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bs(s: &str) -> BinaryString {
        s.parse().unwrap()
    }

    #[test]
    fn two_examples() {
        let r = mean_two(&bs("00"), &bs("0101")).unwrap();
        assert_eq!(r.optimal_candidates, vec![bs("0101")]);
        assert_eq!(r.objective_value, 2);

        let r = mean_two(&bs("01"), &bs("0011")).unwrap();
        assert_eq!(r.optimal_candidates, vec![bs("01")]);
        assert_eq!(r.objective_value, 0);

        let r = mean_two(&bs("1"), &bs("10")).unwrap();
        assert_eq!(r.optimal_candidates, vec![bs("10")]);
        assert_eq!(r.objective_value, 1);
    }

    #[test]
    fn three_examples() {
        let r = mean_three_matched(&bs("0"), &bs("0"), &bs("0")).unwrap();
        assert_eq!(r.optimal_candidates, vec![bs("0")]);
        assert_eq!(r.objective_value, 0);

        let r = mean_three_matched(&bs("010"), &bs("010"), &bs("01110001110")).unwrap();
        assert_eq!(r.optimal_candidates, vec![bs("01010")]);
        assert_eq!(r.objective_value, 2);

        let r = mean_three_matched(&bs("010"), &bs("01010"), &bs("0101010")).unwrap();
        assert_eq!(r.optimal_candidates, vec![bs("01010")]);
        assert_eq!(r.objective_value, 2);
    }

    #[test]
    fn three_requires_shared_endpoints() {
        assert!(mean_three_matched(&bs("01"), &bs("0"), &bs("0")).is_err());
        assert!(mean_three_matched(&bs("0"), &bs("10"), &bs("0")).is_err());
    }

    #[test]
    fn greedy_unit_blocks() {
        assert_eq!(separated_unit_blocks(&[3, 1, 1, 1, 2]), 2);
        assert_eq!(separated_unit_blocks(&[1, 1, 1]), 1);
        assert_eq!(separated_unit_blocks(&[1, 3, 3, 3, 1]), 0);
        assert_eq!(separated_unit_blocks(&[1, 1]), 0);
        assert_eq!(separated_unit_blocks(&[1, 1, 2, 1, 1, 1, 1]), 3);
    }
}
