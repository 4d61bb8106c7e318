//! The total order of the row: rank, unrank, neighbours and range landmarks.
//!
//! An `n`-word (`n >= 2`) has index `M_{n-1} + local`, where `local` counts the
//! canonical `n`-words before it. The local rank is a left-to-right scan that adds,
//! for every smaller symbol that could have been written instead, the number of
//! ways to complete the word from the depth that symbol leaves behind.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::bigcomb::{self, LengthSweep, SHARED_TABLE_LENGTH};
use crate::error::{Error, Result};
use crate::word::{MotzkinWord, Symbol};

/// Position of a word in the row, starting at 0 for the word `0`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Index(BigUint);

impl Index {
    pub fn new(value: BigUint) -> Self {
        Index(value)
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn into_inner(self) -> BigUint {
        self.0
    }
}

impl From<BigUint> for Index {
    fn from(value: BigUint) -> Self {
        Index(value)
    }
}

impl From<u64> for Index {
    fn from(value: u64) -> Self {
        Index(BigUint::from(value))
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for Index {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Argument(alloc::format!("{text:?} is not a decimal index")));
        }
        BigUint::parse_bytes(text.as_bytes(), 10)
            .map(Index)
            .ok_or_else(|| Error::Argument(alloc::format!("{text:?} is not a decimal index")))
    }
}

/// Row order of two canonical words.
pub fn compare(x: &MotzkinWord, y: &MotzkinWord) -> Ordering {
    x.cmp(y)
}

/// Depth after each prefix and the depth left by every admissible smaller
/// symbol, per offset from the left.
fn smaller_choices(w: &MotzkinWord) -> Vec<Vec<usize>> {
    let mut depth = 0usize;
    w.symbols()
        .iter()
        .enumerate()
        .map(|(offset, &actual)| {
            let choices = Symbol::ALL
                .into_iter()
                .filter(|&s| s < actual && !(offset == 0 && s == Symbol::Zero))
                .filter_map(|s| s.step(depth))
                .collect();
            depth = actual.step(depth).expect("valid word");
            choices
        })
        .collect()
}

/// Index of a canonical word.
pub fn rank(w: &MotzkinWord) -> Index {
    if w.is_zero() {
        return Index(BigUint::zero());
    }
    let n = w.len();
    let choices = smaller_choices(w);
    let mut local = BigUint::zero();
    if n <= SHARED_TABLE_LENGTH {
        bigcomb::with_completions(n - 1, |table| {
            for (offset, depths) in choices.iter().enumerate() {
                let m = n - offset - 1;
                for &d in depths {
                    local += table.get(m, d);
                }
            }
        });
    } else {
        LengthSweep::new(n).ascending(n - 1, |m, row| {
            for &d in &choices[n - 1 - m] {
                if let Some(count) = row.get(d) {
                    local += count;
                }
            }
        });
    }
    Index(bigcomb::motzkin(n - 1) + local)
}

/// Length of the range holding `index`: the unique `n` with `M_{n-1} <= index < M_n`.
pub fn range_of(index: &Index) -> usize {
    if index.0.is_zero() {
        return 1;
    }
    let mut n = 2;
    loop {
        // grow the memo in doubling batches rather than one lock per step
        let found = bigcomb::with_motzkin(2 * n, |m| (n..=2 * n).find(|&k| index.0 < m[k]));
        if let Some(k) = found {
            return k;
        }
        n *= 2;
    }
}

/// Word of a given index.
pub fn unrank(index: &Index) -> MotzkinWord {
    let n = range_of(index);
    if n == 1 {
        return MotzkinWord::zero();
    }
    let mut local = &index.0 - bigcomb::motzkin(n - 1);
    let mut symbols = Vec::with_capacity(n);
    let mut depth = 0usize;
    let mut choose = |m: usize, count_at: &dyn Fn(usize) -> BigUint| {
        let offset = n - 1 - m;
        for s in Symbol::ALL {
            if offset == 0 && s == Symbol::Zero {
                continue;
            }
            let Some(next) = s.step(depth) else { continue };
            let count = count_at(next);
            if local < count {
                symbols.push(s);
                depth = next;
                return;
            }
            local -= count;
        }
        unreachable!("index lies inside its range");
    };
    if n <= SHARED_TABLE_LENGTH {
        bigcomb::with_completions(n - 1, |table| {
            for m in (0..n).rev() {
                choose(m, &|d| table.get(m, d).clone());
            }
        });
    } else {
        LengthSweep::new(n).descending(n - 1, |m, row| {
            choose(m, &|d| row.get(d).cloned().unwrap_or_default());
        });
    }
    MotzkinWord::from_valid(symbols)
}

/// Lexicographically smallest completion of `m` symbols from `depth`.
fn fill_min(depth: usize, m: usize, out: &mut Vec<Symbol>) {
    out.extend(core::iter::repeat_n(Symbol::Zero, m - depth));
    out.extend(core::iter::repeat_n(Symbol::Close, depth));
}

/// Lexicographically largest completion of `m` symbols from `depth`.
fn fill_max(mut depth: usize, m: usize, out: &mut Vec<Symbol>) {
    for left in (0..m).rev() {
        let s = if depth > 0 {
            Symbol::Close
        } else if left >= 1 {
            Symbol::Open
        } else {
            Symbol::Zero
        };
        depth = s.step(depth).unwrap();
        out.push(s);
    }
}

/// Scans right to left for the first symbol that can be replaced by a larger
/// (`up`) or smaller one, then refills the tail minimally or maximally.
fn neighbour(w: &MotzkinWord, up: bool) -> Option<MotzkinWord> {
    let symbols = w.symbols();
    let n = symbols.len();
    let depths: Vec<usize> = symbols
        .iter()
        .scan(0usize, |d, s| {
            let before = *d;
            *d = s.step(*d).unwrap();
            Some(before)
        })
        .collect();
    for offset in (0..n).rev() {
        let m = n - offset - 1;
        let actual = symbols[offset];
        let mut candidates: Vec<Symbol> = Symbol::ALL
            .into_iter()
            .filter(|&s| if up { s > actual } else { s < actual })
            .filter(|&s| !(offset == 0 && s == Symbol::Zero))
            .collect();
        if !up {
            candidates.reverse();
        }
        for s in candidates {
            let Some(next) = s.step(depths[offset]) else { continue };
            if next > m {
                continue;
            }
            let mut out = symbols[..offset].to_vec();
            out.push(s);
            if up {
                fill_min(next, m, &mut out);
            } else {
                fill_max(next, m, &mut out);
            }
            return Some(MotzkinWord::from_valid(out));
        }
    }
    None
}

/// Next word of the row; the successor of a range maximum is the next range minimum.
pub fn successor(w: &MotzkinWord) -> MotzkinWord {
    if w.is_zero() {
        return range_min(2).expect("n >= 1").0;
    }
    neighbour(w, true).unwrap_or_else(|| range_min(w.len() + 1).expect("n >= 1").0)
}

/// Previous word of the row.
pub fn predecessor(w: &MotzkinWord) -> Result<MotzkinWord> {
    if w.is_zero() {
        return Err(Error::Underflow);
    }
    Ok(neighbour(w, false).unwrap_or_else(|| range_max(w.len() - 1).expect("n >= 1").0))
}

fn check_range(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Argument("ranges are numbered from 1".into()));
    }
    Ok(())
}

/// Smallest `n`-word `(0…0)` and its index `M_{n-1}`.
pub fn range_min(n: usize) -> Result<(MotzkinWord, Index)> {
    check_range(n)?;
    if n == 1 {
        return Ok((MotzkinWord::zero(), Index(BigUint::zero())));
    }
    let mut symbols = vec![Symbol::Zero; n];
    symbols[0] = Symbol::Open;
    symbols[n - 1] = Symbol::Close;
    Ok((MotzkinWord::from_valid(symbols), Index(bigcomb::motzkin(n - 1))))
}

/// Largest `n`-word `()()…()[0]` and its index `M_n - 1`.
pub fn range_max(n: usize) -> Result<(MotzkinWord, Index)> {
    check_range(n)?;
    if n == 1 {
        return Ok((MotzkinWord::zero(), Index(BigUint::zero())));
    }
    let mut symbols = Vec::with_capacity(n);
    for _ in 0..n / 2 {
        symbols.push(Symbol::Open);
        symbols.push(Symbol::Close);
    }
    if n % 2 == 1 {
        symbols.push(Symbol::Zero);
    }
    Ok((MotzkinWord::from_valid(symbols), Index(bigcomb::motzkin(n) - BigUint::one())))
}
