//! Squared dtw distance between binary strings.
//!
//! Three routes are provided: the textbook `O(mn)` table, a constant-time
//! closed form when one side is condensed and has at least as many blocks,
//! and a block-based route that reduces to Min 1-Separated Sum after peeling
//! mismatched boundary blocks. [`dtw_all_condensed`] extends the block route
//! to every alternating string of a range of lengths at once.

use crate::error::{Error, Result};
use crate::mss::{max_selectable, mss_last_row, mss_min_sum};
use crate::string::{symbol_at, BinaryString, BlockProfile, WarpingPath};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DtwResult {
    pub squared_distance: u64,
    pub path: Option<WarpingPath>,
}

/// Standard dynamic program over the full `|x| x |y|` table.
///
/// With `want_path` the whole table is kept and one optimal path is traced
/// back, preferring the diagonal predecessor, then vertical `(i-1, j)`, then
/// horizontal `(i, j-1)`. Otherwise two rows suffice.
pub fn dtw_sq_dp(x: &BinaryString, y: &BinaryString, want_path: bool) -> DtwResult {
    let (xs, ys) = (x.symbols(), y.symbols());
    let (m, n) = (xs.len(), ys.len());
    if !want_path {
        let mut prev = vec![0u64; n];
        let mut cur = vec![0u64; n];
        for (i, &a) in xs.iter().enumerate() {
            for (j, &b) in ys.iter().enumerate() {
                let cost = u64::from(a != b);
                cur[j] = cost
                    + match (i, j) {
                        (0, 0) => 0,
                        (0, _) => cur[j - 1],
                        (_, 0) => prev[0],
                        _ => prev[j - 1].min(prev[j]).min(cur[j - 1]),
                    };
            }
            std::mem::swap(&mut prev, &mut cur);
        }
        return DtwResult {
            squared_distance: prev[n - 1],
            path: None,
        };
    }

    let mut table = vec![0u64; m * n];
    let at = |i: usize, j: usize| i * n + j;
    for i in 0..m {
        for j in 0..n {
            let cost = u64::from(xs[i] != ys[j]);
            table[at(i, j)] = cost
                + match (i, j) {
                    (0, 0) => 0,
                    (0, _) => table[at(0, j - 1)],
                    (_, 0) => table[at(i - 1, 0)],
                    _ => table[at(i - 1, j - 1)]
                        .min(table[at(i - 1, j)])
                        .min(table[at(i, j - 1)]),
                };
        }
    }

    let mut pairs = Vec::with_capacity(m + n);
    let (mut i, mut j) = (m - 1, n - 1);
    pairs.push((i + 1, j + 1));
    while (i, j) != (0, 0) {
        (i, j) = if i == 0 {
            (0, j - 1)
        } else if j == 0 {
            (i - 1, 0)
        } else {
            let diag = table[at(i - 1, j - 1)];
            let up = table[at(i - 1, j)];
            let left = table[at(i, j - 1)];
            if diag <= up && diag <= left {
                (i - 1, j - 1)
            } else if up <= left {
                (i - 1, j)
            } else {
                (i, j - 1)
            }
        };
        pairs.push((i + 1, j + 1));
    }
    pairs.reverse();
    DtwResult {
        squared_distance: table[at(m - 1, n - 1)],
        path: Some(WarpingPath::new(pairs)),
    }
}

/// Boundary facts about a block profile; enough to evaluate the closed form
/// against any longer-or-equal condensed string in constant time.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct EndStats {
    pub first: u8,
    pub count: usize,
    pub head: usize,
    pub tail: usize,
    pub min_inner: Option<usize>,
}

impl EndStats {
    pub fn of(p: &BlockProfile) -> Self {
        let sizes = p.sizes();
        let count = sizes.len();
        Self {
            first: p.first_symbol(),
            count,
            head: sizes[0],
            tail: sizes[count - 1],
            min_inner: if count >= 3 {
                sizes[1..count - 1].iter().copied().min()
            } else {
                None
            },
        }
    }
}

/// Squared dtw between the alternating string `(first, len)` and a string
/// with the given statistics, assuming `stats.count <= len`.
pub(crate) fn condensed_closed_form(len: usize, first: u8, stats: &EndStats) -> u64 {
    debug_assert!(stats.count <= len);
    let gap = (len - stats.count) as u64;
    if first == stats.first {
        gap.div_ceil(2)
    } else if gap > 0 {
        1 + gap / 2
    } else if len == 1 {
        // Both strings are single blocks of opposite symbols.
        stats.head as u64
    } else {
        // Either drop the candidate's first symbol and then y's last block,
        // drop y's first block and then the candidate's last symbol, or drop
        // both candidate boundary symbols and misalign one inner block of y.
        let inner = stats.min_inner.map_or(u64::MAX, |b| 1 + b as u64);
        1 + (stats.head as u64).min(stats.tail as u64).min(inner)
    }
}

/// Closed form for a condensed `x` against any `y` with `|ỹ| <= |x|`.
///
/// When the first symbols differ and both have the same number of blocks the
/// value depends on `y`'s boundary and smallest inner block sizes; it equals
/// 2 exactly when one of those blocks has size one (or an inner one does).
pub fn dtw_sq_condensed(x: &BlockProfile, y: &BlockProfile) -> Result<u64> {
    if !x.is_condensed() {
        return Err(Error::Contract("left operand must be condensed".into()));
    }
    if y.block_count() > x.block_count() {
        return Err(Error::Contract(format!(
            "condensation of right operand ({}) longer than left operand ({})",
            y.block_count(),
            x.block_count()
        )));
    }
    Ok(condensed_closed_form(
        x.block_count(),
        x.first_symbol(),
        &EndStats::of(y),
    ))
}

/// Precomputed MSS rows over the four inner-block windows of one profile,
/// indexed by (first block dropped, last block dropped).
struct InnerTables<'a> {
    sizes: &'a [usize],
    rows: [[Vec<u64>; 2]; 2],
}

impl<'a> InnerTables<'a> {
    fn new(sizes: &'a [usize], r: usize) -> Self {
        let window = |df: usize, dl: usize| {
            let lo = 1 + df;
            let hi = sizes.len().saturating_sub(1 + dl);
            if lo < hi {
                mss_last_row(&sizes[lo..hi], r)
            } else {
                vec![0]
            }
        };
        Self {
            sizes,
            rows: [[window(0, 0), window(0, 1)], [window(1, 0), window(1, 1)]],
        }
    }
}

#[derive(Clone, Copy)]
enum Blocks<'a> {
    Sizes(&'a [usize]),
    Unit(usize),
    Tabled(&'a InnerTables<'a>),
}

impl Blocks<'_> {
    fn len(&self) -> usize {
        match self {
            Blocks::Sizes(s) => s.len(),
            Blocks::Unit(n) => *n,
            Blocks::Tabled(t) => t.sizes.len(),
        }
    }

    fn size(&self, i: usize) -> u64 {
        match self {
            Blocks::Sizes(s) => s[i] as u64,
            Blocks::Unit(_) => 1,
            Blocks::Tabled(t) => t.sizes[i] as u64,
        }
    }
}

/// A window `[lo, hi)` of a block sequence. Boundary blocks are only ever
/// peeled once per end, so the window is determined by two flags.
#[derive(Clone, Copy)]
struct Side<'a> {
    id: usize,
    first: u8,
    lo: usize,
    hi: usize,
    blocks: Blocks<'a>,
}

impl<'a> Side<'a> {
    fn new(id: usize, first: u8, blocks: Blocks<'a>) -> Self {
        Self {
            id,
            first,
            lo: 0,
            hi: blocks.len(),
            blocks,
        }
    }

    fn count(&self) -> usize {
        self.hi - self.lo
    }

    fn head_symbol(&self) -> u8 {
        symbol_at(self.first, self.lo)
    }

    fn tail_symbol(&self) -> u8 {
        symbol_at(self.first, self.hi - 1)
    }

    fn head(&self) -> u64 {
        self.blocks.size(self.lo)
    }

    fn tail(&self) -> u64 {
        self.blocks.size(self.hi - 1)
    }

    fn drop_head(mut self) -> Self {
        self.lo += 1;
        self
    }

    fn drop_tail(mut self) -> Self {
        self.hi -= 1;
        self
    }

    fn trim_bits(&self) -> usize {
        debug_assert!(self.lo <= 1 && self.blocks.len() - self.hi <= 1);
        let bits = usize::from(self.lo > 0) | (usize::from(self.hi < self.blocks.len()) << 1);
        bits << (2 * self.id)
    }

    /// Minimum 1-separated sum of `r` inner blocks of this window.
    fn inner_mss(&self, r: usize) -> u64 {
        if r == 0 {
            return 0;
        }
        match self.blocks {
            Blocks::Sizes(s) => mss_min_sum(&s[self.lo + 1..self.hi - 1], r)
                .expect("block counts guarantee a feasible MSS instance"),
            Blocks::Unit(_) => {
                debug_assert!(r <= max_selectable(self.count() - 2));
                r as u64
            }
            Blocks::Tabled(t) => {
                let df = self.lo;
                let dl = t.sizes.len() - self.hi;
                t.rows[df][dl][r]
            }
        }
    }
}

type Memo = [Option<u64>; 16];

/// Peels mismatched boundary blocks (first symbols, then last symbols) off
/// whichever side is required, then reads the MSS value over the inner
/// blocks of the side with more blocks.
fn warp(a: Side<'_>, b: Side<'_>, memo: &mut Memo) -> u64 {
    let key = a.trim_bits() | b.trim_bits();
    if let Some(v) = memo[key] {
        return v;
    }
    let (x, y) = if a.count() >= b.count() {
        (a, b)
    } else {
        (b, a)
    };
    let value = if x.head_symbol() != y.head_symbol() {
        if x.count() == 1 {
            x.head().max(y.head())
        } else if y.count() == 1 {
            x.head() + warp(x.drop_head(), y, memo)
        } else {
            let left = x.head() + warp(x.drop_head(), y, memo);
            let right = y.head() + warp(x, y.drop_head(), memo);
            left.min(right)
        }
    } else if x.tail_symbol() != y.tail_symbol() {
        if y.count() == 1 {
            x.tail() + warp(x.drop_tail(), y, memo)
        } else {
            let left = x.tail() + warp(x.drop_tail(), y, memo);
            let right = y.tail() + warp(x, y.drop_tail(), memo);
            left.min(right)
        }
    } else {
        x.inner_mss((x.count() - y.count()) / 2)
    };
    memo[key] = Some(value);
    value
}

/// Exact squared dtw computed from block sizes alone.
pub fn dtw_sq_blocks(x: &BlockProfile, y: &BlockProfile) -> u64 {
    let a = Side::new(0, x.first_symbol(), Blocks::Sizes(x.sizes()));
    let b = Side::new(1, y.first_symbol(), Blocks::Sizes(y.sizes()));
    warp(a, b, &mut [None; 16])
}

/// Squared distances from one string to every alternating string whose
/// length lies in `min_len..=max_len`, for both start symbols.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CondensedDistanceVector {
    min_len: usize,
    entries: Vec<[u64; 2]>,
}

impl CondensedDistanceVector {
    pub fn min_len(&self) -> usize {
        self.min_len
    }

    pub fn max_len(&self) -> usize {
        self.min_len + self.entries.len() - 1
    }

    pub fn get(&self, len: usize, first: u8) -> Option<u64> {
        let idx = len.checked_sub(self.min_len)?;
        self.entries.get(idx).map(|e| e[usize::from(first)])
    }

    /// `(length, first symbol, distance)` in increasing length order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u8, u64)> + '_ {
        self.entries.iter().enumerate().flat_map(move |(i, e)| {
            let len = self.min_len + i;
            [(len, 0, e[0]), (len, 1, e[1])]
        })
    }
}

/// Distances from `s` to all alternating strings of lengths
/// `min_len..=|s̃|`, using four MSS tables over the inner-block windows of
/// `s`. Runs in `O(|s̃| * (|s̃| - min_len))`.
pub fn dtw_all_condensed(s: &BlockProfile, min_len: usize) -> Result<CondensedDistanceVector> {
    let ell = s.block_count();
    if min_len == 0 || min_len > ell {
        return Err(Error::Contract(format!(
            "minimum candidate length must lie in 1..={ell}, got {min_len}"
        )));
    }
    // Peeling both boundary symbols of a candidate can ask for one more
    // selection than the plain length gap.
    let r = (ell - min_len).div_ceil(2) + 1;
    let tables = InnerTables::new(s.sizes(), r);
    let entries = (min_len..=ell)
        .map(|len| {
            [0u8, 1].map(|first| {
                let a = Side::new(0, s.first_symbol(), Blocks::Tabled(&tables));
                let b = Side::new(1, first, Blocks::Unit(len));
                warp(a, b, &mut [None; 16])
            })
        })
        .collect();
    Ok(CondensedDistanceVector { min_len, entries })
}
