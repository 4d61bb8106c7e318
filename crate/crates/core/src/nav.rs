//! Moving single brackets and predicting how far the word travels along the row.
//!
//! Each operation edits a word at a site given in right-to-left positions and
//! returns a [`DeltaReport`] holding both the index change its polynomial
//! predicts and the change measured by ranking the two words. For the proved
//! identities (left and right bracket drift, pair removal and insertion) a
//! disagreement is an error. Block merging and splitting rest on an open
//! conjecture and the swap across a zero has no known closed form, so for those
//! the report is returned as is and callers inspect [`DeltaReport::agrees`].

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use spin::Mutex;

use crate::bigcomb::{motzkin, BigNat};
use crate::error::{Error, Result};
use crate::rowindex::{range_max, range_min, rank, Index};
use crate::word::{MotzkinWord, Symbol};

/// How much an operation's polynomial is trusted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    /// Proved identity; a mismatch is reported as [`Error::PolynomialMismatch`].
    Theorem,
    /// Conjectured identity; a mismatch is data.
    Conjecture,
    /// Measured constant with no closed form; a mismatch is data.
    Empirical,
}

/// Outcome of one navigation step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaReport {
    pub before: MotzkinWord,
    pub after: MotzkinWord,
    pub predicted: BigInt,
    pub verified: BigInt,
    /// Positions whose symbols changed.
    pub site: Vec<usize>,
    pub basis: Basis,
}

impl DeltaReport {
    pub fn agrees(&self) -> bool {
        self.predicted == self.verified
    }

    /// The report of the inverse step.
    pub fn reversed(&self) -> DeltaReport {
        DeltaReport {
            before: self.after.clone(),
            after: self.before.clone(),
            predicted: -self.predicted.clone(),
            verified: -self.verified.clone(),
            site: self.site.clone(),
            basis: self.basis,
        }
    }
}

fn m(n: usize) -> BigInt {
    BigInt::from(motzkin(n))
}

fn signed(index: Index) -> BigInt {
    BigInt::from(index.into_inner())
}

/// A word's symbols addressed by position, with room for leading zeros.
struct Sheet {
    symbols: Vec<Symbol>,
}

impl Sheet {
    fn new(w: &MotzkinWord, total: usize) -> Self {
        Sheet { symbols: w.padded_symbols(total.max(w.len())) }
    }

    fn set(&mut self, k: usize, s: Symbol) {
        let n = self.symbols.len();
        self.symbols[n - k] = s;
    }

    fn finish(self, what: &'static str) -> Result<MotzkinWord> {
        MotzkinWord::checked(self.symbols, what)
    }
}

fn finish(
    before: &MotzkinWord,
    after: MotzkinWord,
    predicted: BigInt,
    mut site: Vec<usize>,
    basis: Basis,
) -> Result<DeltaReport> {
    let verified = signed(rank(&after)) - signed(rank(before));
    site.sort_unstable_by(|a, b| b.cmp(a));
    Ok(DeltaReport { before: before.clone(), after, predicted, verified, site, basis })
}

/// Rejects a theorem-backed report whose prediction disagrees with ranking.
fn enforce(report: DeltaReport) -> Result<DeltaReport> {
    if report.basis == Basis::Theorem && !report.agrees() {
        return Err(Error::PolynomialMismatch {
            predicted: format!("{}", report.predicted),
            verified: format!("{}", report.verified),
        });
    }
    Ok(report)
}

fn expect_zero(w: &MotzkinWord, k: usize) -> Result<()> {
    if w.symbol_at(k) == Symbol::Zero {
        Ok(())
    } else {
        Err(Error::Blocked { position: k })
    }
}

fn site(position: usize, reason: &'static str) -> Error {
    Error::Site { position, reason }
}

fn position_arg(k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::Argument("positions start at 1".into()));
    }
    Ok(())
}

/// Moves the opening bracket of the outer block at `k` by `shift` places,
/// left for positive `shift`, swapping it with zeros. Predicts
/// `M_{k-1+shift} - M_{k-1}`.
pub fn shift_open(w: &MotzkinWord, k: usize, shift: i64) -> Result<DeltaReport> {
    shift_open_measured(w, k, shift).and_then(enforce)
}

/// Like [`shift_open`] but returns the report even if prediction and measurement differ.
pub fn shift_open_measured(w: &MotzkinWord, k: usize, shift: i64) -> Result<DeltaReport> {
    position_arg(k)?;
    if shift == 0 {
        return Err(Error::Argument("shift must be nonzero".into()));
    }
    if w.symbol_at(k) != Symbol::Open || w.outer_block_at(k).is_none() {
        return Err(site(k, "not the opening bracket of an outer block"));
    }
    let steps = shift.unsigned_abs() as usize;
    let target = if shift > 0 {
        for p in k + 1..=k + steps {
            expect_zero(w, p)?;
        }
        k + steps
    } else {
        if steps >= k {
            return Err(Error::Validity("bracket would move past position 1"));
        }
        for p in (k - steps..k).rev() {
            expect_zero(w, p)?;
        }
        k - steps
    };
    let mut sheet = Sheet::new(w, target);
    sheet.set(k, Symbol::Zero);
    sheet.set(target, Symbol::Open);
    let after = sheet.finish("shifted opening bracket")?;
    let predicted = m(target - 1) - m(k - 1);
    finish(w, after, predicted, vec![k, target], Basis::Theorem)
}

/// Direction of a closing-bracket move.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Left,
    Right,
}

/// Swaps the closing bracket of the outer block at `k` with the adjacent zero.
/// Moving left predicts `+xi(k)`; moving right predicts `-xi(k - 1)`.
pub fn shift_close(w: &MotzkinWord, k: usize, direction: Direction) -> Result<DeltaReport> {
    shift_close_measured(w, k, direction).and_then(enforce)
}

/// Like [`shift_close`] but returns the report even if prediction and measurement differ.
pub fn shift_close_measured(w: &MotzkinWord, k: usize, direction: Direction) -> Result<DeltaReport> {
    position_arg(k)?;
    if w.symbol_at(k) != Symbol::Close || w.outer_block_closing_at(k).is_none() {
        return Err(site(k, "not the closing bracket of an outer block"));
    }
    let (target, predicted) = match direction {
        Direction::Left => {
            expect_zero(w, k + 1)?;
            (k + 1, BigInt::from(xi(k)?))
        }
        Direction::Right => {
            if k < 2 {
                return Err(Error::Validity("bracket would move past position 1"));
            }
            expect_zero(w, k - 1)?;
            (k - 1, -BigInt::from(xi(k - 1)?))
        }
    };
    let mut sheet = Sheet::new(w, w.len());
    sheet.set(k, Symbol::Zero);
    sheet.set(target, Symbol::Close);
    let after = sheet.finish("shifted closing bracket")?;
    finish(w, after, predicted, vec![k, target], Basis::Theorem)
}

/// `M_{k+2} - 2 M_{k+1} + M_{k-1}`: index gain of a closing bracket drifting left from `k`.
pub fn xi(k: usize) -> Result<BigNat> {
    if k == 0 {
        return Err(Error::Argument("xi is defined for k >= 1".into()));
    }
    Ok(motzkin(k + 2) + motzkin(k - 1) - motzkin(k + 1) * 2u32)
}

fn pair_args(k: usize, l: usize) -> Result<()> {
    if k < 2 || l <= k {
        return Err(Error::Argument(format!("pair sites need l > k >= 2, got k = {k}, l = {l}")));
    }
    Ok(())
}

/// `M_{l+1} - M_l - M_{l-1} + M_{k-1}`: index loss of removing the facing brackets
/// of neighbouring outer blocks at `l` and `k`.
pub fn zeta(k: usize, l: usize) -> Result<BigNat> {
    pair_args(k, l)?;
    Ok(motzkin(l + 1) + motzkin(k - 1) - motzkin(l) - motzkin(l - 1))
}

/// Erases the closing bracket at `l` and the opening bracket at `k` of two
/// neighbouring outer blocks separated only by zeros.
pub fn remove_pair(w: &MotzkinWord, k: usize, l: usize) -> Result<DeltaReport> {
    remove_pair_measured(w, k, l).and_then(enforce)
}

/// Like [`remove_pair`] but returns the report even if prediction and measurement differ.
pub fn remove_pair_measured(w: &MotzkinWord, k: usize, l: usize) -> Result<DeltaReport> {
    pair_args(k, l)?;
    if w.symbol_at(l) != Symbol::Close || w.outer_block_closing_at(l).is_none() {
        return Err(site(l, "not the closing bracket of an outer block"));
    }
    if w.symbol_at(k) != Symbol::Open || w.outer_block_at(k).is_none() {
        return Err(site(k, "not the opening bracket of an outer block"));
    }
    for p in k + 1..l {
        expect_zero(w, p)?;
    }
    let mut sheet = Sheet::new(w, w.len());
    sheet.set(l, Symbol::Zero);
    sheet.set(k, Symbol::Zero);
    let after = sheet.finish("removed bracket pair")?;
    finish(w, after, -BigInt::from(zeta(k, l)?), vec![l, k], Basis::Theorem)
}

/// Writes `)` at `l` and `(` at `k` into a zero run directly inside an outer block,
/// splitting it into two blocks.
pub fn insert_pair(w: &MotzkinWord, k: usize, l: usize) -> Result<DeltaReport> {
    insert_pair_measured(w, k, l).and_then(enforce)
}

/// Like [`insert_pair`] but returns the report even if prediction and measurement differ.
pub fn insert_pair_measured(w: &MotzkinWord, k: usize, l: usize) -> Result<DeltaReport> {
    pair_args(k, l)?;
    for p in [l, k] {
        if w.symbol_at(p) != Symbol::Zero {
            return Err(site(p, "a bracket can only be written over a zero"));
        }
    }
    for p in k + 1..l {
        expect_zero(w, p)?;
    }
    if l > w.len() || w.depth_before(l) != 1 {
        return Err(site(l, "zeros must lie directly inside an outer block"));
    }
    let mut sheet = Sheet::new(w, w.len());
    sheet.set(l, Symbol::Close);
    sheet.set(k, Symbol::Open);
    let after = sheet.finish("inserted bracket pair")?;
    finish(w, after, BigInt::from(zeta(k, l)?), vec![l, k], Basis::Theorem)
}

/// Fuses two touching outer blocks `…)(…` at `k + 1, k` into one by turning the
/// contact into `()`. Conjectured drop: `M_k`.
pub fn merge_adjacent(w: &MotzkinWord, k: usize) -> Result<DeltaReport> {
    position_arg(k)?;
    if w.symbol_at(k + 1) != Symbol::Close || w.outer_block_closing_at(k + 1).is_none() {
        return Err(site(k + 1, "not the closing bracket of an outer block"));
    }
    if w.symbol_at(k) != Symbol::Open || w.outer_block_at(k).is_none() {
        return Err(site(k, "not the opening bracket of an outer block"));
    }
    let mut sheet = Sheet::new(w, w.len());
    sheet.set(k + 1, Symbol::Open);
    sheet.set(k, Symbol::Close);
    let after = sheet.finish("merged blocks")?;
    finish(w, after, -m(k), vec![k + 1, k], Basis::Conjecture)
}

/// Inverse of [`merge_adjacent`]: an adjacent `()` at `k + 1, k` directly inside an
/// outer block becomes the contact `)(` of two blocks. Conjectured gain: `M_k`.
pub fn split_block(w: &MotzkinWord, k: usize) -> Result<DeltaReport> {
    position_arg(k)?;
    if w.symbol_at(k + 1) != Symbol::Open || w.symbol_at(k) != Symbol::Close {
        return Err(site(k, "expected an adjacent \"()\" at positions k + 1, k"));
    }
    if w.depth_before(k + 1) != 1 {
        return Err(site(k + 1, "the pair must lie directly inside an outer block"));
    }
    let mut sheet = Sheet::new(w, w.len());
    sheet.set(k + 1, Symbol::Close);
    sheet.set(k, Symbol::Open);
    let after = sheet.finish("split block")?;
    finish(w, after, m(k), vec![k + 1, k], Basis::Conjecture)
}

/// Turns `)0(` at `k + 2, k + 1, k`, the facing brackets of two outer blocks with a
/// single zero between them, into `(0)`, fusing the blocks. Predicts `-psi(k)`.
pub fn swap_across_zero(w: &MotzkinWord, k: usize) -> Result<DeltaReport> {
    psi_arg(k)?;
    if w.symbol_at(k + 2) != Symbol::Close || w.outer_block_closing_at(k + 2).is_none() {
        return Err(site(k + 2, "not the closing bracket of an outer block"));
    }
    expect_zero(w, k + 1)?;
    if w.symbol_at(k) != Symbol::Open || w.outer_block_at(k).is_none() {
        return Err(site(k, "not the opening bracket of an outer block"));
    }
    let mut sheet = Sheet::new(w, w.len());
    sheet.set(k + 2, Symbol::Open);
    sheet.set(k, Symbol::Close);
    let after = sheet.finish("swapped brackets across a zero")?;
    finish(w, after, -BigInt::from(psi(k)?), vec![k + 2, k], Basis::Empirical)
}

/// Inverse of [`swap_across_zero`]: a `(0)` at `k + 2, k + 1, k` directly inside an
/// outer block becomes `)0(`, splitting the block. Predicts `+psi(k)`.
pub fn split_across_zero(w: &MotzkinWord, k: usize) -> Result<DeltaReport> {
    psi_arg(k)?;
    if w.symbol_at(k + 2) != Symbol::Open || w.symbol_at(k) != Symbol::Close {
        return Err(site(k, "expected \"(0)\" at positions k + 2, k + 1, k"));
    }
    expect_zero(w, k + 1)?;
    if w.depth_before(k + 2) != 1 {
        return Err(site(k + 2, "the pair must lie directly inside an outer block"));
    }
    let mut sheet = Sheet::new(w, w.len());
    sheet.set(k + 2, Symbol::Close);
    sheet.set(k, Symbol::Open);
    let after = sheet.finish("split block across a zero")?;
    finish(w, after, BigInt::from(psi(k)?), vec![k + 2, k], Basis::Empirical)
}

fn psi_arg(k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::Argument("psi is defined for k >= 2".into()));
    }
    Ok(())
}

static PSI: Mutex<BTreeMap<usize, BigUint>> = Mutex::new(BTreeMap::new());

/// Witness pair for `psi(k)`: `()0(0…0)` with the inner block of length `k`,
/// and the word obtained by swapping its brackets at `k + 2` and `k`.
pub fn psi_witness(k: usize) -> Result<(MotzkinWord, MotzkinWord)> {
    psi_arg(k)?;
    let inner = "0".repeat(k - 2);
    let x: MotzkinWord = format!("()0({inner})").parse().expect("well-formed witness");
    let y: MotzkinWord = format!("((0){inner})").parse().expect("well-formed witness");
    Ok((x, y))
}

/// Index drop of the bracket swap across a zero at `k`, measured on the minimal witness.
pub fn psi(k: usize) -> Result<BigNat> {
    psi_arg(k)?;
    if let Some(v) = PSI.lock().get(&k) {
        return Ok(v.clone());
    }
    let (x, y) = psi_witness(k)?;
    let value = rank(&x).into_inner() - rank(&y).into_inner();
    PSI.lock().insert(k, value.clone());
    Ok(value)
}

/// One landmark of an `n`-range with its index from a closed formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ControlPoint {
    pub name: &'static str,
    pub word: MotzkinWord,
    pub index: Index,
}

impl ControlPoint {
    pub fn rank_matches(&self) -> bool {
        rank(&self.word) == self.index
    }
}

/// Seven landmarks of the `n`-range in increasing order: `min, d, b, c, h, a, max`.
pub fn control_points(n: usize) -> Result<Vec<ControlPoint>> {
    if n < 5 {
        return Err(Error::Argument(format!("control points need n >= 5, got {n}")));
    }
    let zeros = |count: usize| "0".repeat(count);
    let word = |text: alloc::string::String| -> MotzkinWord { text.parse().expect("landmark shape") };
    let to_index = |v: BigInt| Index::new(v.to_biguint().expect("landmark indexes are nonnegative"));
    let one = BigInt::one();
    let psi_n3 = BigInt::from(psi(n - 3)?);
    let (min_word, min_index) = range_min(n)?;
    let (max_word, max_index) = range_max(n)?;
    let c_tail = range_max(n - 3)?.0;

    let d = 2 * m(n - 1) - m(n - 2) - m(n - 3) - m(n - 5);
    let b = 2 * m(n - 1) - m(n - 2) - m(n - 3);
    let c = 2 * m(n - 1) - m(n - 2) - &one;
    let h = m(n) - m(n - 2) + m(n - 3) - m(n - 5) - psi_n3;
    let a = m(n) - m(n - 2);

    Ok(vec![
        ControlPoint { name: "min", word: min_word, index: min_index },
        ControlPoint { name: "d", word: word(format!("(0()){}", zeros(n - 5))), index: to_index(d) },
        ControlPoint { name: "b", word: word(format!("(0){}", zeros(n - 3))), index: to_index(b) },
        ControlPoint { name: "c", word: word(format!("(0){c_tail}")), index: to_index(c) },
        ControlPoint { name: "h", word: word(format!("((0)){}", zeros(n - 5))), index: to_index(h) },
        ControlPoint { name: "a", word: word(format!("(){}", zeros(n - 2))), index: to_index(a) },
        ControlPoint { name: "max", word: max_word, index: max_index },
    ])
}
