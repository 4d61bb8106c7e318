use alloc::format;

use crate::error::{Error, Result};
use crate::bigcomb::motzkin;
use crate::rowindex::Index;
use crate::word::MotzkinWord;

/// Size bounds for the expensive paths.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest range that may be enumerated exhaustively.
    pub max_enumeration_range: usize,
    /// Longest word accepted by rank and unrank front ends.
    pub max_word_length: usize,
}

impl Limits {
    pub const DEFAULT_ENUMERATION_RANGE: usize = 15;
    pub const DEFAULT_WORD_LENGTH: usize = 4096;

    pub fn check_range(&self, n: usize) -> Result<()> {
        if n > self.max_enumeration_range {
            return Err(Error::Limit {
                what: "range",
                value: format!("{n}"),
                limit: self.max_enumeration_range,
            });
        }
        Ok(())
    }

    pub fn check_word(&self, w: &MotzkinWord) -> Result<()> {
        if w.len() > self.max_word_length {
            return Err(Error::Limit {
                what: "word length",
                value: format!("{}", w.len()),
                limit: self.max_word_length,
            });
        }
        Ok(())
    }

    pub fn check_index(&self, index: &Index) -> Result<()> {
        // M_n < 4^n, so anything with more than 2n bits is out of range
        // without tabulating anything
        let limit = self.max_word_length;
        let too_big = index.value().bits() > 2 * limit as u64 || *index.value() >= motzkin(limit);
        if too_big {
            return Err(Error::Limit { what: "index", value: format!("{index}"), limit: self.max_word_length });
        }
        Ok(())
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_enumeration_range: Self::DEFAULT_ENUMERATION_RANGE,
            max_word_length: Self::DEFAULT_WORD_LENGTH,
        }
    }
}
