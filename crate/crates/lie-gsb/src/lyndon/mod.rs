//! Word combinatorics on X*: the prefix-greater lex order, associative
//! Lyndon–Shirshov words (ALSWs), their factorization and bracketings.

mod alsw;
mod bracketing;
mod tree;
mod word;

pub use alsw::{
    enumerate_alsw, is_alsw, is_nondecreasing, longest_alsw_suffix_start, lyndon_factorize,
    words_of_length,
};
pub use bracketing::{chibrikov_bracketing, double_bracketing, special_bracketing, MarkedTree};
pub use tree::{is_nlsw, std_bracketing, std_split, LieTree, Side};
pub use word::{deglex_compare, lex_compare, XWord};

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum LyndonError {
    #[error("{0:?} is not an associative Lyndon–Shirshov word")]
    NotAlsw(XWord),
    #[error("{sub:?} does not occur in {word:?} at position {pos}")]
    NotSubwordAt { word: XWord, sub: XWord, pos: usize },
    #[error("the occurrences overlap")]
    OccurrencesOverlap,
    #[error("words do not form a valid bracketing context")]
    InvalidContext,
}
