//! Associative Lyndon–Shirshov words: recognition, factorization, enumeration.

use std::cmp::Ordering;

use super::word::{lex_compare, XWord};

/// True iff `w` is nonempty and strictly greater than each of its proper
/// rotations. Checked directly from the definition.
pub fn is_alsw(w: &[u32]) -> bool {
    let n = w.len();
    if n == 0 {
        return false;
    }
    (1..n).all(|i| {
        let rot = w[i..].iter().chain(&w[..i]);
        // Equal lengths, so plain lexicographic comparison of letters.
        w.iter().cmp(rot) == Ordering::Greater
    })
}

/// Factors `w` as `c1 c2 ... cn` with each `ci` an ALSW and
/// `c1 <= c2 <= ... <= cn` in [`lex_compare`].
///
/// Duval's algorithm with letter comparisons flipped, since these words are the
/// maximal (not minimal) elements of their conjugacy classes.
pub fn lyndon_factorize(w: &[u32]) -> Vec<XWord> {
    let n = w.len();
    let mut out = Vec::new();
    let mut i = 0;
    while i < n {
        let mut j = i + 1;
        let mut k = i;
        while j < n && w[k] >= w[j] {
            if w[k] > w[j] {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        while i <= k {
            out.push(XWord::from(&w[i..i + j - k]));
            i += j - k;
        }
    }
    out
}

/// Start of the longest proper suffix of `w` that is an ALSW.
pub fn longest_alsw_suffix_start(w: &[u32]) -> Option<usize> {
    (1..w.len()).find(|&i| is_alsw(&w[i..]))
}

/// All ALSWs over letters `0..alphabet_size` of length at most `max_len`, in
/// deg-lex order.
pub fn enumerate_alsw(alphabet_size: u32, max_len: usize) -> Vec<XWord> {
    let mut out = Vec::new();
    for len in 1..=max_len {
        out.extend(words_of_length(alphabet_size, len).filter(|w| is_alsw(w)));
    }
    out.sort();
    out
}

/// Every word of the given length, in increasing lex order.
pub fn words_of_length(alphabet_size: u32, len: usize) -> impl Iterator<Item = XWord> {
    let total = (alphabet_size as u64).checked_pow(len as u32).unwrap_or(0);
    (0..total).map(move |mut code| {
        let mut letters = vec![0u32; len];
        for slot in letters.iter_mut().rev() {
            *slot = (code % alphabet_size as u64) as u32;
            code /= alphabet_size as u64;
        }
        XWord::from(letters)
    })
}

/// Checks the ordering claimed by [`lyndon_factorize`].
pub fn is_nondecreasing(factors: &[XWord]) -> bool {
    factors
        .windows(2)
        .all(|p| lex_compare(&p[0], &p[1]) != Ordering::Greater)
}
