//! The coefficient ring k[Y]: exact scalars, deg-lex monomials, polynomials,
//! normal forms and Buchberger completion of the relations R.

mod buchberger;
mod field;
mod poly;
mod ymono;

pub use buchberger::{buchberger_complete, buchberger_complete_with_cap, DEFAULT_ELEMENT_CAP};
pub use field::{is_prime, Field, FieldScalar};
pub use poly::{comm_normal_form, CommPoly};
pub use ymono::YMonomial;

use std::cmp::Ordering;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum CommError {
    #[error("budget exceeded: basis grew past {0} elements")]
    BudgetExceeded(usize),
}

pub fn monomial_compare(a: &YMonomial, b: &YMonomial) -> Ordering {
    a.cmp(b)
}

pub fn monomial_lcm(a: &YMonomial, b: &YMonomial) -> YMonomial {
    a.lcm(b)
}

pub fn monomial_gcd(a: &YMonomial, b: &YMonomial) -> YMonomial {
    a.gcd(b)
}
