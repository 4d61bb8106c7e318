//! Partial addition and subtraction of words through their extended blocks.
//!
//! Operands are right-aligned, the shorter one padded with virtual leading zeros.
//! A sum is defined only when every outer block of each operand lands in a
//! depth-0 zero zone of the other. Merely symbol-disjoint operands are not
//! enough: `(00)` and `()0` overlay to `(())`, whose index 6 is not `4 + 3`.

use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::rowindex::{rank, Index};
use crate::word::{MotzkinWord, Symbol};

/// Bracket depth at every position `1..=total`, read as the depth just left of
/// that position. Entry 0 is unused.
fn depth_profile(w: &MotzkinWord, total: usize) -> Vec<usize> {
    let mut profile = alloc::vec![0usize; total + 1];
    let mut depth = 0usize;
    for k in (1..=total).rev() {
        profile[k] = depth;
        depth = w.symbol_at(k).step(depth).expect("valid word");
    }
    profile
}

/// Every block of `inner` sits on zeros of `host` at depth 0.
fn blocks_fit(inner: &MotzkinWord, host: &MotzkinWord) -> bool {
    let total = inner.len().max(host.len());
    let profile = depth_profile(host, total);
    inner.outer_blocks().iter().all(|b| {
        (b.close..=b.open).all(|k| host.symbol_at(k) == Symbol::Zero && profile[k] == 0)
    })
}

/// Whether `x ⊕ y` is defined.
pub fn noncrossing(x: &MotzkinWord, y: &MotzkinWord) -> bool {
    let total = x.len().max(y.len());
    let disjoint = (1..=total)
        .all(|k| x.symbol_at(k) == Symbol::Zero || y.symbol_at(k) == Symbol::Zero);
    disjoint && blocks_fit(x, y) && blocks_fit(y, x)
}

fn overlay(x: &MotzkinWord, y: &MotzkinWord) -> MotzkinWord {
    let total = x.len().max(y.len());
    let symbols = (1..=total)
        .rev()
        .map(|k| match (x.symbol_at(k), y.symbol_at(k)) {
            (Symbol::Zero, s) | (s, Symbol::Zero) => s,
            _ => unreachable!("noncrossing operands never share a position"),
        })
        .collect();
    MotzkinWord::from_valid(symbols)
}

/// `x ⊕ y`, with `rank(x ⊕ y) = rank(x) + rank(y)`.
pub fn add(x: &MotzkinWord, y: &MotzkinWord) -> Result<MotzkinWord> {
    if !noncrossing(x, y) {
        return Err(Error::Crossing);
    }
    Ok(overlay(x, y))
}

/// Whether every extended block of `y` is also an extended block of `x`.
pub fn includes(x: &MotzkinWord, y: &MotzkinWord) -> bool {
    let host = x.outer_blocks();
    y.outer_blocks().iter().all(|b| {
        host.contains(b) && (b.close..=b.open).all(|k| x.symbol_at(k) == y.symbol_at(k))
    })
}

/// `x ⊖ y`: the blocks of `y` erased from `x`, with `rank(x ⊖ y) = rank(x) - rank(y)`.
pub fn sub(x: &MotzkinWord, y: &MotzkinWord) -> Result<MotzkinWord> {
    if !includes(x, y) {
        return Err(Error::Inclusion);
    }
    let erased = y.outer_blocks();
    let symbols = (1..=x.len())
        .rev()
        .map(|k| if erased.iter().any(|b| b.contains(k)) { Symbol::Zero } else { x.symbol_at(k) })
        .collect();
    Ok(MotzkinWord::from_valid(symbols))
}

/// Extended blocks of `w`, longest first, and the sum of their indexes.
pub fn decompose_sum(w: &MotzkinWord) -> Result<(Vec<MotzkinWord>, Index)> {
    let parts = w.decompose()?;
    let total = parts.iter().fold(BigUint::ZERO, |acc, p| acc + rank(p).into_inner());
    Ok((parts, Index::new(total)))
}
