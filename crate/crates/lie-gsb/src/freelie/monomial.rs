//! Mixed monomials `u = u^Y u^X` in [Y]X*.

use std::cmp::Ordering;

use crate::commutative::YMonomial;
use crate::lyndon::{is_alsw, std_bracketing, LieTree, XWord};

/// A mixed monomial; `Ord` compares the X-parts by deg-lex first and the
/// Y-parts second.
///
/// Used both for T_A (when `x` is an ALSW) and for associative monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub x: XWord,
    pub y: YMonomial,
}

impl Monomial {
    pub fn new(y: YMonomial, x: XWord) -> Self {
        Monomial { x, y }
    }

    pub fn x_only(x: XWord) -> Self {
        Monomial {
            x,
            y: YMonomial::one(),
        }
    }

    pub fn is_ta(&self) -> bool {
        is_alsw(&self.x)
    }

    /// The T_N monomial `u^Y [u^X]`; `None` unless the X-part is an ALSW.
    pub fn to_tn(&self) -> Option<TNMonomial> {
        Some(TNMonomial {
            y: self.y.clone(),
            tree: std_bracketing(&self.x).ok()?,
        })
    }

    pub fn mul_y(&self, b: &YMonomial) -> Monomial {
        Monomial {
            x: self.x.clone(),
            y: self.y.mul(b),
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.x.cmp(&other.x).then_with(|| self.y.cmp(&other.y))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub fn mixed_compare(a: &Monomial, b: &Monomial) -> Ordering {
    a.cmp(b)
}

/// A Y-monomial times an NLSW.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TNMonomial {
    pub y: YMonomial,
    pub tree: LieTree,
}

impl TNMonomial {
    pub fn to_ta(&self) -> Monomial {
        Monomial::new(self.y.clone(), self.tree.foliage())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(y: &[(u32, u32)], x: &[u32]) -> Monomial {
        Monomial::new(YMonomial::from_pairs(y.iter().copied()), XWord::from(x))
    }

    #[test]
    fn x_part_dominates() {
        assert_eq!(m(&[(1, 1)], &[3]).cmp(&m(&[(3, 2)], &[2])), Ordering::Greater);
    }

    #[test]
    fn y_part_breaks_ties() {
        assert_eq!(m(&[(2, 1)], &[2, 1]).cmp(&m(&[(1, 1)], &[2, 1])), Ordering::Greater);
        let u = m(&[(1, 1)], &[2, 1]);
        assert_eq!(u.cmp(&u), Ordering::Equal);
    }

    #[test]
    fn tn_round_trip() {
        let u = m(&[(1, 2)], &[2, 2, 1]);
        assert_eq!(u.to_tn().unwrap().to_ta(), u);
        assert!(m(&[], &[1, 2]).to_tn().is_none());
    }
}
