//! Bracketings of words: binary trees with generator leaves.

use std::cmp::Ordering;
use std::fmt;

use super::alsw::{is_alsw, longest_alsw_suffix_start};
use super::word::{lex_compare, XWord};
use super::LyndonError;

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum LieTree {
    Leaf(u32),
    Node(Box<LieTree>, Box<LieTree>),
}

/// Which child to descend into; a path addresses a subtree from the root.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl LieTree {
    pub fn node(l: LieTree, r: LieTree) -> LieTree {
        LieTree::Node(Box::new(l), Box::new(r))
    }

    pub fn foliage(&self) -> XWord {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        XWord::from(out)
    }

    fn collect_leaves(&self, out: &mut Vec<u32>) {
        match self {
            LieTree::Leaf(x) => out.push(*x),
            LieTree::Node(l, r) => {
                l.collect_leaves(out);
                r.collect_leaves(out);
            }
        }
    }

    pub fn len(&self) -> usize {
        match self {
            LieTree::Leaf(_) => 1,
            LieTree::Node(l, r) => l.len() + r.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn at(&self, path: &[Side]) -> Option<&LieTree> {
        let mut t = self;
        for s in path {
            t = match (t, s) {
                (LieTree::Node(l, _), Side::Left) => l,
                (LieTree::Node(_, r), Side::Right) => r,
                (LieTree::Leaf(_), _) => return None,
            };
        }
        Some(t)
    }

    /// Replaces the subtree at `path`, which must exist.
    pub fn replace(&mut self, path: &[Side], new: LieTree) {
        let mut t = self;
        for s in path {
            t = match (t, s) {
                (LieTree::Node(l, _), Side::Left) => l,
                (LieTree::Node(_, r), Side::Right) => r,
                (LieTree::Leaf(_), _) => panic!("path leaves the tree"),
            };
        }
        *t = new;
    }

    /// Path and start offset of the smallest subtree covering `[from, to)`.
    pub fn covering_subtree(&self, from: usize, to: usize) -> (Vec<Side>, usize) {
        let mut path = Vec::new();
        let mut t = self;
        let mut start = 0;
        loop {
            match t {
                LieTree::Leaf(_) => return (path, start),
                LieTree::Node(l, r) => {
                    let ll = l.len();
                    if to <= start + ll {
                        path.push(Side::Left);
                        t = l;
                    } else if from >= start + ll {
                        path.push(Side::Right);
                        start += ll;
                        t = r;
                    } else {
                        return (path, start);
                    }
                }
            }
        }
    }
}

impl fmt::Debug for LieTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieTree::Leaf(x) => write!(f, "x{x}"),
            LieTree::Node(l, r) => write!(f, "[{l:?},{r:?}]"),
        }
    }
}

/// The unique NLSW bracketing of an ALSW: `[w] = [[u],[v]]` with `v` the
/// longest proper ALSW suffix.
pub fn std_bracketing(w: &[u32]) -> Result<LieTree, LyndonError> {
    if !is_alsw(w) {
        return Err(LyndonError::NotAlsw(XWord::from(w)));
    }
    Ok(std_unchecked(w))
}

pub(crate) fn std_unchecked(w: &[u32]) -> LieTree {
    if w.len() == 1 {
        return LieTree::Leaf(w[0]);
    }
    let k = longest_alsw_suffix_start(w).expect("a single letter suffix is always an ALSW");
    LieTree::node(std_unchecked(&w[..k]), std_unchecked(&w[k..]))
}

/// Length of the longest proper ALSW suffix split, i.e. the position at which
/// `std_bracketing(w)` splits.
pub fn std_split(w: &[u32]) -> Option<usize> {
    if w.len() < 2 {
        None
    } else {
        longest_alsw_suffix_start(w)
    }
}

/// Checks the three NLSW conditions at every node.
pub fn is_nlsw(t: &LieTree) -> bool {
    match t {
        LieTree::Leaf(_) => true,
        LieTree::Node(l, r) => {
            let (lf, rf) = (l.foliage(), r.foliage());
            if !is_alsw(&t.foliage()) || !is_nlsw(l) || !is_nlsw(r) {
                return false;
            }
            if lex_compare(&lf, &rf) != Ordering::Greater {
                return false;
            }
            if let LieTree::Node(_, l2) = l.as_ref() {
                if lex_compare(&l2.foliage(), &rf) == Ordering::Greater {
                    return false;
                }
            }
            true
        }
    }
}
