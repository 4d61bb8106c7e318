//! Motzkin words, their text form and their block structure.
//!
//! Positions are 1-based and counted from the RIGHT end of a word, like digit
//! places of a number. Position `k` of an `n`-word is the symbol at offset
//! `n - k` from the left; positions beyond `n` read as virtual leading zeros.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, ParseError, Result};

/// One letter of the alphabet, ordered `Zero < Open < Close`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Zero,
    Open,
    Close,
}

impl Symbol {
    pub const ALL: [Symbol; 3] = [Symbol::Zero, Symbol::Open, Symbol::Close];

    pub fn to_char(self) -> char {
        match self {
            Symbol::Zero => '0',
            Symbol::Open => '(',
            Symbol::Close => ')',
        }
    }

    pub fn from_char(ch: char) -> Option<Symbol> {
        match ch {
            '0' => Some(Symbol::Zero),
            '(' => Some(Symbol::Open),
            ')' => Some(Symbol::Close),
            _ => None,
        }
    }

    /// Depth after this symbol when read at `depth`; `None` if it would go negative.
    pub fn step(self, depth: usize) -> Option<usize> {
        match self {
            Symbol::Zero => Some(depth),
            Symbol::Open => Some(depth + 1),
            Symbol::Close => depth.checked_sub(1),
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// Checks the balance and prefix conditions.
pub(crate) fn validate(symbols: &[Symbol]) -> core::result::Result<(), ParseError> {
    let mut depth = 0usize;
    for (offset, s) in symbols.iter().enumerate() {
        depth = s.step(depth).ok_or(ParseError::PrefixViolation { offset })?;
    }
    if depth != 0 {
        let opens = symbols.iter().filter(|s| **s == Symbol::Open).count();
        return Err(ParseError::Unbalanced { opens, closes: opens - depth });
    }
    Ok(())
}

/// A canonical Motzkin word: balanced, prefix-valid, and without a leading
/// zero unless it is the one-symbol word `0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MotzkinWord {
    symbols: Vec<Symbol>,
}

/// A canonical word together with a count of virtual leading zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PaddedWord {
    core: MotzkinWord,
    left_padding: usize,
}

/// Span of an outer block, as the positions of its two brackets.
/// `open > close` because positions run right to left.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BlockSpan {
    pub open: usize,
    pub close: usize,
}

impl BlockSpan {
    pub fn contains(&self, position: usize) -> bool {
        self.close <= position && position <= self.open
    }

    pub fn len(&self) -> usize {
        self.open - self.close + 1
    }

    /// Always false: a block holds at least its two brackets.
    pub fn is_empty(&self) -> bool {
        false
    }
}

impl MotzkinWord {
    /// The word `0`, first element of the row.
    pub fn zero() -> Self {
        MotzkinWord { symbols: vec![Symbol::Zero] }
    }

    /// Validates `symbols`, then separates leading zeros into padding.
    pub fn from_symbols(symbols: Vec<Symbol>) -> core::result::Result<PaddedWord, ParseError> {
        if symbols.is_empty() {
            return Err(ParseError::Empty);
        }
        validate(&symbols)?;
        Ok(PaddedWord::split(symbols))
    }

    /// Canonicalizes an already valid symbol string.
    pub(crate) fn from_valid(symbols: Vec<Symbol>) -> Self {
        debug_assert!(validate(&symbols).is_ok());
        PaddedWord::split(symbols).core
    }

    /// Validates and canonicalizes a symbol string built by an operation.
    pub(crate) fn checked(symbols: Vec<Symbol>, what: &'static str) -> Result<Self> {
        validate(&symbols).map_err(|_| Error::Validity(what))?;
        Ok(PaddedWord::split(symbols).core)
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    /// Always false; present for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// True for the word `0`.
    pub fn is_zero(&self) -> bool {
        self.symbols == [Symbol::Zero]
    }

    /// The symbol at 1-based position `k` counted from the right; zero beyond the word.
    pub fn symbol_at(&self, k: usize) -> Symbol {
        assert!(k >= 1, "positions start at 1");
        if k > self.len() {
            Symbol::Zero
        } else {
            self.symbols[self.len() - k]
        }
    }

    /// Bracket depth just left of position `k`, i.e. after reading every symbol
    /// at positions greater than `k`.
    pub fn depth_before(&self, k: usize) -> usize {
        let n = self.len();
        if k >= n {
            return 0;
        }
        self.symbols[..n - k]
            .iter()
            .fold(0, |d, s| s.step(d).expect("valid word"))
    }

    /// Symbols left-padded with zeros to `total` positions (`total >= len`).
    pub(crate) fn padded_symbols(&self, total: usize) -> Vec<Symbol> {
        let mut out = vec![Symbol::Zero; total.saturating_sub(self.len())];
        out.extend_from_slice(&self.symbols);
        out
    }

    /// Position of the bracket matched with the one at position `k`, if any.
    pub fn partner(&self, k: usize) -> Option<usize> {
        let pairs = self.matched_pairs();
        pairs.iter().find_map(|&(open, close)| match k {
            _ if k == open => Some(close),
            _ if k == close => Some(open),
            _ => None,
        })
    }

    /// Every matched pair as `(open, close)` positions, ordered by opening bracket
    /// from left to right.
    pub fn matched_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut stack = Vec::new();
        let mut pairs = Vec::new();
        for (offset, s) in self.symbols.iter().enumerate() {
            match s {
                Symbol::Open => {
                    stack.push(pairs.len());
                    pairs.push((n - offset, 0));
                }
                Symbol::Close => {
                    let slot = stack.pop().expect("valid word");
                    pairs[slot].1 = n - offset;
                }
                Symbol::Zero => {}
            }
        }
        pairs
    }

    /// Maximal depth-0 bracket spans, from left to right.
    pub fn outer_blocks(&self) -> Vec<BlockSpan> {
        let n = self.len();
        let mut depth = 0usize;
        let mut open = 0usize;
        let mut spans = Vec::new();
        for (offset, s) in self.symbols.iter().enumerate() {
            let position = n - offset;
            match s {
                Symbol::Open => {
                    if depth == 0 {
                        open = position;
                    }
                    depth += 1;
                }
                Symbol::Close => {
                    depth -= 1;
                    if depth == 0 {
                        spans.push(BlockSpan { open, close: position });
                    }
                }
                Symbol::Zero => {}
            }
        }
        spans
    }

    /// The outer block starting at position `open`, if there is one.
    pub fn outer_block_at(&self, open: usize) -> Option<BlockSpan> {
        self.outer_blocks().into_iter().find(|b| b.open == open)
    }

    /// The outer block closing at position `close`, if there is one.
    pub fn outer_block_closing_at(&self, close: usize) -> Option<BlockSpan> {
        self.outer_blocks().into_iter().find(|b| b.close == close)
    }

    /// Zeros everything outside `span`. The result is canonical with length `span.open`.
    pub fn extended_block(&self, span: BlockSpan) -> Result<MotzkinWord> {
        if !self.outer_blocks().contains(&span) {
            return Err(Error::Span { open: span.open, close: span.close });
        }
        Ok(self.extended_block_unchecked(span))
    }

    pub(crate) fn extended_block_unchecked(&self, span: BlockSpan) -> MotzkinWord {
        let symbols = (1..=span.open)
            .rev()
            .map(|k| if span.contains(k) { self.symbol_at(k) } else { Symbol::Zero })
            .collect();
        MotzkinWord { symbols }
    }

    /// Extended blocks of every outer block, longest first.
    pub fn decompose(&self) -> Result<Vec<MotzkinWord>> {
        let blocks = self.outer_blocks();
        if blocks.is_empty() {
            return Err(Error::ZeroWord);
        }
        Ok(blocks.into_iter().map(|b| self.extended_block_unchecked(b)).collect())
    }

    /// Writes the word using `zero`, `open`, `close` in place of `0`, `(`, `)`.
    pub fn to_string_with(&self, alphabet: [char; 3]) -> String {
        self.symbols
            .iter()
            .map(|s| match s {
                Symbol::Zero => alphabet[0],
                Symbol::Open => alphabet[1],
                Symbol::Close => alphabet[2],
            })
            .collect()
    }
}

/// Row order: shorter words first, equal lengths compared symbol by symbol.
impl Ord for MotzkinWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.symbols.cmp(&other.symbols))
    }
}

impl PartialOrd for MotzkinWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MotzkinWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.symbols {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for MotzkinWord {
    type Err = ParseError;

    /// Parses and canonicalizes; leading zeros are dropped.
    fn from_str(text: &str) -> core::result::Result<Self, Self::Err> {
        parse(text).map(PaddedWord::into_core)
    }
}

impl PaddedWord {
    fn split(mut symbols: Vec<Symbol>) -> Self {
        let leading = symbols.iter().take_while(|s| **s == Symbol::Zero).count();
        let left_padding = leading.min(symbols.len() - 1);
        symbols.drain(..left_padding);
        PaddedWord { core: MotzkinWord { symbols }, left_padding }
    }

    pub fn new(core: MotzkinWord, left_padding: usize) -> Self {
        PaddedWord { core, left_padding }
    }

    pub fn core(&self) -> &MotzkinWord {
        &self.core
    }

    pub fn into_core(self) -> MotzkinWord {
        self.core
    }

    pub fn left_padding(&self) -> usize {
        self.left_padding
    }

    pub fn is_canonical(&self) -> bool {
        self.left_padding == 0
    }

    /// Physical length including padding.
    pub fn len(&self) -> usize {
        self.core.len() + self.left_padding
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Same as the core's; padding never moves a symbol.
    pub fn symbol_at(&self, k: usize) -> Symbol {
        self.core.symbol_at(k)
    }
}

impl fmt::Display for PaddedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for _ in 0..self.left_padding {
            f.write_str("0")?;
        }
        write!(f, "{}", self.core)
    }
}

/// Parses text over `0`, `(`, `)`. Leading zeros become padding unless the text is `0`.
pub fn parse(text: &str) -> core::result::Result<PaddedWord, ParseError> {
    parse_with(text, ['0', '(', ')'])
}

/// Parses text written in a substitute alphabet for `0`, `(`, `)`.
pub fn parse_with(text: &str, alphabet: [char; 3]) -> core::result::Result<PaddedWord, ParseError> {
    let symbols = text
        .chars()
        .enumerate()
        .map(|(offset, ch)| match ch {
            _ if ch == alphabet[0] => Ok(Symbol::Zero),
            _ if ch == alphabet[1] => Ok(Symbol::Open),
            _ if ch == alphabet[2] => Ok(Symbol::Close),
            _ => Err(ParseError::Alphabet { ch, offset }),
        })
        .collect::<core::result::Result<Vec<_>, _>>()?;
    MotzkinWord::from_symbols(symbols)
}
