//! Exact Motzkin numbers and prefix-completion counts.
//!
//! Both tables are process-wide, grow on demand and are never evicted. They sit
//! behind reader/writer locks, so a reader only ever sees fully written rows.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use spin::RwLock;

use crate::error::{Error, Result};

/// Unbounded nonnegative integer used for Motzkin numbers and indexes.
pub type BigNat = BigUint;

/// Words at most this long are ranked against the shared completion table.
/// Longer words use a transient sweep whose memory is linear in the length.
pub(crate) const SHARED_TABLE_LENGTH: usize = 128;

static MOTZKIN: RwLock<Vec<BigUint>> = RwLock::new(Vec::new());
static COMPLETIONS: RwLock<CompletionTable> = RwLock::new(CompletionTable::new());

fn ensure_motzkin(n: usize) {
    if MOTZKIN.read().len() > n {
        return;
    }
    let mut table = MOTZKIN.write();
    if table.is_empty() {
        table.push(BigUint::one());
        table.push(BigUint::one());
    }
    // (k + 2) M_k = (2k + 1) M_{k-1} + 3 (k - 1) M_{k-2}; the division is exact.
    while table.len() <= n {
        let k = table.len() as u64;
        let sum = &table[table.len() - 1] * (2 * k + 1) + &table[table.len() - 2] * (3 * (k - 1));
        let next = sum / (k + 2);
        table.push(next);
    }
}

/// The Motzkin number `M_n`, with `M_0 = 1`.
pub fn motzkin(n: usize) -> BigNat {
    ensure_motzkin(n);
    MOTZKIN.read()[n].clone()
}

/// Runs `f` over the memoized prefix `M_0..=M_n` without cloning it.
pub(crate) fn with_motzkin<R>(n: usize, f: impl FnOnce(&[BigUint]) -> R) -> R {
    ensure_motzkin(n);
    let table = MOTZKIN.read();
    f(&table[..=n])
}

/// Number of canonical words of length `n`: `U_1 = 1` and `U_n = M_n - M_{n-1}`.
pub fn unique_count(n: usize) -> Result<BigNat> {
    match n {
        0 => Err(Error::Argument("there is no 0-range; word lengths start at 1".into())),
        1 => Ok(BigUint::one()),
        _ => with_motzkin(n, |m| Ok(&m[n] - &m[n - 1])),
    }
}

/// Triangle of completion counts: entry `(m, d)` is the number of strings of
/// length `m` that start at depth `d`, never dip below depth 0 and end at depth 0.
#[derive(Debug, Clone, Default)]
pub struct CompletionTable {
    rows: Vec<Vec<BigUint>>,
}

impl CompletionTable {
    pub const fn new() -> Self {
        CompletionTable { rows: Vec::new() }
    }

    /// Highest tabulated remaining length, if any.
    pub fn max_length(&self) -> Option<usize> {
        self.rows.len().checked_sub(1)
    }

    /// Tabulates every row up to and including `m`.
    pub fn extend_to(&mut self, m: usize) {
        if self.rows.is_empty() {
            self.rows.push(vec![BigUint::one()]);
        }
        while self.rows.len() <= m {
            let next = next_row(self.rows.last().unwrap(), self.rows.len());
            self.rows.push(next);
        }
    }

    /// Entry `(m, d)`; zero when `d > m`. Panics if row `m` is not tabulated.
    pub fn get(&self, m: usize, d: usize) -> &BigUint {
        static ZERO: BigUint = BigUint::ZERO;
        self.rows[m].get(d).unwrap_or(&ZERO)
    }
}

/// Row `m` from row `m - 1`, keeping at most `width` entries.
fn next_row_bounded(prev: &[BigUint], width: usize) -> Vec<BigUint> {
    let at = |d: usize| prev.get(d);
    (0..width)
        .map(|d| {
            let mut v = BigUint::zero();
            if let Some(x) = at(d) {
                v += x;
            }
            if let Some(x) = at(d + 1) {
                v += x;
            }
            if d > 0 {
                if let Some(x) = at(d - 1) {
                    v += x;
                }
            }
            v
        })
        .collect()
}

fn next_row(prev: &[BigUint], m: usize) -> Vec<BigUint> {
    next_row_bounded(prev, m + 1)
}

/// Memoized completion count for `m` remaining symbols starting at depth `d`.
pub fn completions(m: usize, d: usize) -> BigNat {
    if d > m {
        return BigUint::zero();
    }
    {
        let table = COMPLETIONS.read();
        if table.max_length().is_some_and(|top| top >= m) {
            return table.get(m, d).clone();
        }
    }
    let mut table = COMPLETIONS.write();
    table.extend_to(m);
    table.get(m, d).clone()
}

/// Runs `f` over the shared completion table, tabulated at least up to row `m`.
pub(crate) fn with_completions<R>(m: usize, f: impl FnOnce(&CompletionTable) -> R) -> R {
    {
        let table = COMPLETIONS.read();
        if table.max_length().is_some_and(|top| top >= m) {
            return f(&table);
        }
    }
    COMPLETIONS.write().extend_to(m);
    f(&COMPLETIONS.read())
}

/// Completion rows for a word of fixed length `len`, truncated to the depths
/// a prefix of that word can actually reach: row `m` keeps `d <= min(m, len - m)`.
pub(crate) struct LengthSweep {
    len: usize,
}

impl LengthSweep {
    pub(crate) fn new(len: usize) -> Self {
        LengthSweep { len }
    }

    fn width(&self, m: usize) -> usize {
        m.min(self.len - m) + 1
    }

    fn advance(&self, prev: &[BigUint], m: usize) -> Vec<BigUint> {
        next_row_bounded(prev, self.width(m))
    }

    /// Visits rows `0..=top` in increasing order.
    pub(crate) fn ascending(&self, top: usize, mut f: impl FnMut(usize, &[BigUint])) {
        let mut row = vec![BigUint::one()];
        f(0, &row);
        for m in 1..=top {
            row = self.advance(&row, m);
            f(m, &row);
        }
    }

    /// Visits rows `top, top - 1, ..., 0`. Rows are recomputed from checkpoints
    /// spaced about `sqrt(top)` apart, so only `O(sqrt(top))` rows are alive at once.
    pub(crate) fn descending(&self, top: usize, mut f: impl FnMut(usize, &[BigUint])) {
        let stride = isqrt(top + 1).max(1);
        let mut checkpoints: Vec<Vec<BigUint>> = Vec::with_capacity(top / stride + 1);
        self.ascending(top, |m, row| {
            if m % stride == 0 {
                checkpoints.push(row.to_vec());
            }
        });
        for (block, start_row) in checkpoints.into_iter().enumerate().rev() {
            let start = block * stride;
            let end = (start + stride - 1).min(top);
            let mut rows = Vec::with_capacity(end - start + 1);
            rows.push(start_row);
            for m in start + 1..=end {
                let next = self.advance(rows.last().unwrap(), m);
                rows.push(next);
            }
            for (offset, row) in rows.iter().enumerate().rev() {
                f(start + offset, row);
            }
        }
    }
}

fn isqrt(n: usize) -> usize {
    let mut r = 0usize;
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Convolution recurrence `M_{n+1} = M_n + sum M_k M_{n-1-k}`, independent of the table.
    fn motzkin_convolution(count: usize) -> Vec<BigUint> {
        let mut m = vec![BigUint::one()];
        while m.len() < count {
            let n = m.len() - 1;
            let mut next = m[n].clone();
            for k in 0..n {
                next += &m[k] * &m[n - 1 - k];
            }
            m.push(next);
        }
        m
    }

    fn brute_completions(m: usize, d: usize) -> usize {
        fn go(left: usize, depth: usize) -> usize {
            if left == 0 {
                return usize::from(depth == 0);
            }
            let mut total = go(left - 1, depth) + go(left - 1, depth + 1);
            if depth > 0 {
                total += go(left - 1, depth - 1);
            }
            total
        }
        go(m, d)
    }

    #[test]
    fn first_motzkin_numbers() {
        let expected = [1u32, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798, 15511, 41835];
        for (n, &value) in expected.iter().enumerate() {
            assert_eq!(motzkin(n), BigUint::from(value), "M_{n}");
        }
    }

    #[test]
    fn recurrence_matches_convolution() {
        let reference = motzkin_convolution(301);
        for (n, value) in reference.iter().enumerate() {
            assert_eq!(&motzkin(n), value, "M_{n}");
        }
    }

    #[test]
    fn motzkin_more_than_doubles_from_four() {
        for n in 4..200 {
            assert!(motzkin(n) > motzkin(n - 1) * 2u32, "n = {n}");
        }
        assert_eq!(motzkin(3), motzkin(2) * 2u32);
    }

    #[test]
    fn supports_n_500() {
        let m500 = motzkin(500);
        let m499 = motzkin(499);
        assert!(m500 > m499 * 2u32);
        assert_eq!(completions(500, 0), m500);
    }

    #[test]
    fn unique_counts() {
        assert!(matches!(unique_count(0), Err(Error::Argument(_))));
        assert_eq!(unique_count(1).unwrap(), BigUint::from(1u32));
        assert_eq!(unique_count(5).unwrap(), BigUint::from(12u32));
        assert_eq!(unique_count(15).unwrap(), BigUint::from(196_938u32));
    }

    #[test]
    fn completion_examples() {
        assert_eq!(completions(0, 0), BigUint::one());
        assert_eq!(completions(0, 3), BigUint::zero());
        assert_eq!(completions(6, 0), BigUint::from(51u32));
        assert_eq!(completions(2, 1), BigUint::from(brute_completions(2, 1)));
        assert_eq!(completions(2, 1), BigUint::from(2u32));
    }

    #[test]
    fn completions_match_exhaustive_generation() {
        for m in 0..=12 {
            for d in 0..=m + 1 {
                assert_eq!(completions(m, d), BigUint::from(brute_completions(m, d)), "({m}, {d})");
            }
            assert_eq!(completions(m, 0), motzkin(m));
        }
    }

    #[test]
    fn sweep_rows_agree_with_shared_table() {
        for len in [1usize, 2, 3, 7, 16, 37] {
            let sweep = LengthSweep::new(len);
            let mut seen = Vec::new();
            sweep.ascending(len - 1, |m, row| {
                for (d, v) in row.iter().enumerate() {
                    assert_eq!(v, &completions(m, d), "len {len} row {m} depth {d}");
                }
                seen.push(m);
            });
            let mut down = Vec::new();
            sweep.descending(len - 1, |m, row| {
                assert_eq!(row.len(), m.min(len - m) + 1);
                assert_eq!(row[0], completions(m, 0));
                down.push(m);
            });
            down.reverse();
            assert_eq!(seen, down);
        }
    }
}
