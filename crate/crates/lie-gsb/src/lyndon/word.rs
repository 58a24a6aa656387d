//! Associative words over X and the two orders on them.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Deref;

use smallvec::SmallVec;

/// A word in X*, letters being generator indices (larger index = greater letter).
///
/// `Ord` is deg-lex: length first, then letters.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct XWord(SmallVec<[u32; 8]>);

impl XWord {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn letter(x: u32) -> Self {
        let mut w = Self::empty();
        w.0.push(x);
        w
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn concat(&self, other: &[u32]) -> Self {
        let mut w = self.clone();
        w.0.extend_from_slice(other);
        w
    }

    pub fn concat3(a: &[u32], b: &[u32], c: &[u32]) -> Self {
        let mut w = SmallVec::with_capacity(a.len() + b.len() + c.len());
        w.extend_from_slice(a);
        w.extend_from_slice(b);
        w.extend_from_slice(c);
        XWord(w)
    }

    pub fn slice(&self, from: usize, to: usize) -> Self {
        XWord::from(&self.0[from..to])
    }

    /// All start positions of `u` inside `self`.
    pub fn occurrences(&self, u: &[u32]) -> Vec<usize> {
        if u.is_empty() || u.len() > self.len() {
            return Vec::new();
        }
        (0..=self.len() - u.len())
            .filter(|&i| &self.0[i..i + u.len()] == u)
            .collect()
    }
}

impl Deref for XWord {
    type Target = [u32];
    fn deref(&self) -> &[u32] {
        &self.0
    }
}

impl std::borrow::Borrow<[u32]> for XWord {
    fn borrow(&self) -> &[u32] {
        &self.0
    }
}

impl From<&[u32]> for XWord {
    fn from(s: &[u32]) -> Self {
        XWord(SmallVec::from_slice(s))
    }
}

impl From<Vec<u32>> for XWord {
    fn from(v: Vec<u32>) -> Self {
        XWord(SmallVec::from_vec(v))
    }
}

impl<const N: usize> From<[u32; N]> for XWord {
    fn from(a: [u32; N]) -> Self {
        XWord::from(&a[..])
    }
}

impl FromIterator<u32> for XWord {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        XWord(iter.into_iter().collect())
    }
}

impl Ord for XWord {
    fn cmp(&self, other: &Self) -> Ordering {
        deglex_compare(self, other)
    }
}

impl PartialOrd for XWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for XWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ".")?;
            }
            write!(f, "x{x}")?;
        }
        Ok(())
    }
}

/// Lex order in which a proper prefix is greater than the longer word.
pub fn lex_compare(u: &[u32], v: &[u32]) -> Ordering {
    for (a, b) in u.iter().zip(v) {
        match a.cmp(b) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    v.len().cmp(&u.len())
}

/// Length first, then [`lex_compare`].
pub fn deglex_compare(u: &[u32], v: &[u32]) -> Ordering {
    u.len().cmp(&v.len()).then_with(|| lex_compare(u, v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prefix_is_greater() {
        assert_eq!(lex_compare(&[2], &[2, 1]), Ordering::Greater);
        assert_eq!(lex_compare(&[2, 1], &[1, 2]), Ordering::Greater);
        assert_eq!(lex_compare(&[2, 1], &[2, 1]), Ordering::Equal);
        assert_eq!(lex_compare(&[], &[1]), Ordering::Greater);
    }

    #[test]
    fn deglex_length_first() {
        assert_eq!(deglex_compare(&[2, 1], &[2]), Ordering::Greater);
        assert_eq!(deglex_compare(&[2, 1], &[1, 2]), Ordering::Greater);
        assert_eq!(deglex_compare(&[], &[1]), Ordering::Less);
        assert!(XWord::from([1, 1]) > XWord::from([2]));
    }

    #[test]
    fn occurrences_overlap() {
        let w = XWord::from([2, 2, 2]);
        assert_eq!(w.occurrences(&[2, 2]), vec![0, 1]);
        assert!(w.occurrences(&[]).is_empty());
    }
}
