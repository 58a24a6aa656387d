//! Canonical-form arithmetic in the free Lie algebra Lie_{k[Y]}(X) with the
//! T_N basis, the mixed order on [Y]X*, and the associative envelope k[Y]<X>.

mod element;
mod monomial;
mod structure;

pub use element::{AssocElement, LieElement, Terms};
pub use monomial::{mixed_compare, Monomial, TNMonomial};
pub use structure::{bracket_words, expansion, peel, IntComb};

use crate::lyndon::XWord;

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum FreeLieError {
    #[error("the zero element has no leading term")]
    ZeroElement,
    #[error("not a Lie element")]
    NotALieElement,
    #[error("{0:?} is not an associative Lyndon–Shirshov word")]
    NotAlsw(XWord),
}

pub fn lie_bracket(a: &LieElement, b: &LieElement) -> LieElement {
    a.bracket(b)
}

pub fn to_associative(e: &LieElement) -> AssocElement {
    e.to_associative()
}

pub fn from_associative(a: &AssocElement) -> Result<LieElement, FreeLieError> {
    LieElement::from_associative(a)
}
