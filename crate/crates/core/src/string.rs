//! Binary strings, their block decomposition, and warping paths.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A nonempty sequence over `{0, 1}`. Symbols are stored one per byte.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryString(Vec<u8>);

impl BinaryString {
    /// Builds a string from raw symbols. Every element must be 0 or 1.
    pub fn new(symbols: Vec<u8>) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::EmptyString);
        }
        if let Some(position) = symbols.iter().position(|&b| b > 1) {
            return Err(Error::InvalidSymbol {
                symbol: char::from(symbols[position]),
                position,
            });
        }
        Ok(Self(symbols))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; kept so clippy's `len_without_is_empty` stays quiet.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn symbols(&self) -> &[u8] {
        &self.0
    }

    pub fn first(&self) -> u8 {
        self.0[0]
    }

    pub fn last(&self) -> u8 {
        self.0[self.0.len() - 1]
    }

    pub fn get(&self, index: usize) -> Option<u8> {
        self.0.get(index).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = u8> + '_ {
        self.0.iter().copied()
    }

    /// True when no two consecutive symbols are equal.
    pub fn is_condensed(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != w[1])
    }

    /// Number of maximal runs, i.e. the condensation length.
    pub fn block_count(&self) -> usize {
        1 + self.0.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Fraction of symbols that open a new block.
    pub fn sparsity(&self) -> f64 {
        self.block_count() as f64 / self.len() as f64
    }
}

impl FromStr for BinaryString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let symbols = s
            .chars()
            .enumerate()
            .map(|(position, c)| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                symbol => Err(Error::InvalidSymbol { symbol, position }),
            })
            .collect::<Result<Vec<u8>>>()?;
        Self::new(symbols)
    }
}

impl fmt::Display for BinaryString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b == 0 { "0" } else { "1" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryString({self})")
    }
}

impl Serialize for BinaryString {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Run-length view of a binary string: the first symbol plus the size of
/// every maximal block, left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BlockProfile {
    first: u8,
    sizes: Vec<usize>,
}

impl BlockProfile {
    pub fn new(first: u8, sizes: Vec<usize>) -> Result<Self> {
        if first > 1 {
            return Err(Error::InvalidSymbol {
                symbol: char::from(first),
                position: 0,
            });
        }
        if sizes.is_empty() || sizes.contains(&0) {
            return Err(Error::InvalidBlocks);
        }
        Ok(Self { first, sizes })
    }

    pub fn of(s: &BinaryString) -> Self {
        let mut sizes = Vec::new();
        let mut run = 0;
        let mut prev = s.first();
        for b in s.iter() {
            if b == prev {
                run += 1;
            } else {
                sizes.push(run);
                run = 1;
                prev = b;
            }
        }
        sizes.push(run);
        Self {
            first: s.first(),
            sizes,
        }
    }

    pub fn first_symbol(&self) -> u8 {
        self.first
    }

    pub fn last_symbol(&self) -> u8 {
        symbol_at(self.first, self.sizes.len() - 1)
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Number of blocks; equals the condensation length.
    pub fn block_count(&self) -> usize {
        self.sizes.len()
    }

    /// Length of the originating string.
    pub fn total_len(&self) -> usize {
        self.sizes.iter().sum()
    }

    pub fn is_condensed(&self) -> bool {
        self.sizes.iter().all(|&b| b == 1)
    }

    pub fn condensed(&self) -> BinaryString {
        alternating(self.first, self.sizes.len())
    }

    pub fn to_binary_string(&self) -> BinaryString {
        let mut symbols = Vec::with_capacity(self.total_len());
        for (i, &size) in self.sizes.iter().enumerate() {
            symbols.extend(std::iter::repeat_n(symbol_at(self.first, i), size));
        }
        BinaryString(symbols)
    }
}

/// Symbol of the `index`-th (0-based) block of an alternating sequence.
pub(crate) fn symbol_at(first: u8, index: usize) -> u8 {
    first ^ (index as u8 & 1)
}

fn alternating(first: u8, len: usize) -> BinaryString {
    BinaryString((0..len).map(|i| symbol_at(first, i)).collect())
}

/// Collapses every block to a single symbol.
pub fn condense(s: &BinaryString) -> BinaryString {
    let mut symbols = Vec::with_capacity(s.len());
    for b in s.iter() {
        if symbols.last() != Some(&b) {
            symbols.push(b);
        }
    }
    BinaryString(symbols)
}

pub fn block_profile(s: &BinaryString) -> BlockProfile {
    BlockProfile::of(s)
}

/// The alternating string of `len` symbols starting with `first`.
pub fn condensed_string(first: u8, len: usize) -> Result<BinaryString> {
    if len == 0 {
        return Err(Error::EmptyString);
    }
    if first > 1 {
        return Err(Error::InvalidSymbol {
            symbol: char::from(first),
            position: 0,
        });
    }
    Ok(alternating(first, len))
}

/// A sequence of 1-based index pairs aligning two strings.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct WarpingPath {
    pub pairs: Vec<(usize, usize)>,
}

impl WarpingPath {
    pub fn new(pairs: Vec<(usize, usize)>) -> Self {
        Self { pairs }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Checks the three warping path conditions for order `m x n`.
    pub fn is_valid(&self, m: usize, n: usize) -> bool {
        validate_warping_path(self, m, n)
    }

    /// Sum of squared local differences along the path. Pairs must index
    /// into `x` and `y`.
    pub fn cost(&self, x: &BinaryString, y: &BinaryString) -> u64 {
        self.pairs
            .iter()
            .map(|&(i, j)| u64::from(x.symbols()[i - 1] != y.symbols()[j - 1]))
            .sum()
    }
}

pub fn validate_warping_path(p: &WarpingPath, m: usize, n: usize) -> bool {
    let (Some(&first), Some(&last)) = (p.pairs.first(), p.pairs.last()) else {
        return false;
    };
    if first != (1, 1) || last != (m, n) {
        return false;
    }
    p.pairs.windows(2).all(|w| {
        let (di, dj) = (w[1].0.wrapping_sub(w[0].0), w[1].1.wrapping_sub(w[0].1));
        matches!((di, dj), (1, 0) | (0, 1) | (1, 1))
    })
}

/// Parses the one-string-per-line text format. Blank lines and lines
/// starting with `#` are skipped; surrounding whitespace is ignored.
pub fn parse_strings(text: &str) -> Result<Vec<BinaryString>> {
    let mut out = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let s = line.parse::<BinaryString>().map_err(|e| Error::Parse {
            line: idx + 1,
            message: e.to_string(),
        })?;
        out.push(s);
    }
    Ok(out)
}
