//! Exact ranking, unranking and index arithmetic for canonical Motzkin words
//! in row order (by length, then lexicographically with `0 < ( < )`).
//!
//! Positions in a word are 1-based and counted from the right. Every word
//! carries infinitely many virtual leading zeros beyond its length.
//!
//! ```
//! use motzkin_row::{rank, unrank, Index, MotzkinWord};
//!
//! let w: MotzkinWord = "()(0)0(0)".parse().unwrap();
//! assert_eq!(rank(&w), Index::from(782));
//! assert_eq!(unrank(&Index::from(782)), w);
//! ```
#![no_std]

extern crate alloc;

pub mod bigcomb;
pub mod blockops;
pub mod error;
pub mod limits;
pub mod nav;
pub mod rowindex;
pub mod verify;
pub mod word;

pub use bigcomb::{motzkin, BigNat};
pub use error::{Error, ParseError, Result};
pub use limits::Limits;
pub use rowindex::{compare, predecessor, rank, successor, unrank, Index};
pub use word::{MotzkinWord, Symbol};
