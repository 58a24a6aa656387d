//! Polynomials in k[Y].

use std::collections::BTreeMap;

use super::field::{Field, FieldScalar};
use super::ymono::YMonomial;

/// A polynomial in k[Y]; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CommPoly {
    field: Field,
    terms: BTreeMap<YMonomial, FieldScalar>,
}

impl CommPoly {
    pub fn zero(field: Field) -> Self {
        CommPoly {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(field: Field, c: FieldScalar, m: YMonomial) -> Self {
        let mut p = Self::zero(field);
        p.add_term(m, c);
        p
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&YMonomial, &FieldScalar)> {
        self.terms.iter()
    }

    pub fn leading(&self) -> Option<(&YMonomial, &FieldScalar)> {
        self.terms.iter().next_back()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(YMonomial::degree).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: YMonomial, c: FieldScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-&self.field.one()))
    }

    pub fn scale(&self, c: &FieldScalar) -> Self {
        let mut out = Self::zero(self.field);
        if c.is_zero() {
            return out;
        }
        for (m, d) in &self.terms {
            out.terms.insert(m.clone(), d * c);
        }
        out
    }

    pub fn mul_monomial(&self, c: &FieldScalar, m: &YMonomial) -> Self {
        let mut out = Self::zero(self.field);
        if c.is_zero() {
            return out;
        }
        for (n, d) in &self.terms {
            out.terms.insert(n.mul(m), d * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.field);
        for (m, c) in &other.terms {
            out = out.add(&self.mul_monomial(c, m));
        }
        out
    }

    /// Divides by the leading coefficient.
    pub fn make_monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv().expect("leading coefficient is nonzero")),
        }
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|(_, c)| c.is_one())
    }
}

/// Full multivariate division by `basis`; every element of `basis` must be monic.
///
/// Divisors are tried in slice order.
pub fn comm_normal_form(p: &CommPoly, basis: &[CommPoly]) -> CommPoly {
    let mut rest = p.clone();
    let mut rem = CommPoly::zero(p.field());
    while let Some((m, c)) = rest.leading().map(|(m, c)| (m.clone(), c.clone())) {
        let divisor = basis.iter().find_map(|r| {
            let (lm, _) = r.leading()?;
            m.div(lm).map(|q| (r, q))
        });
        match divisor {
            Some((r, q)) => rest = rest.sub(&r.mul_monomial(&c, &q)),
            None => {
                rest.terms.remove(&m);
                rem.add_term(m, c);
            }
        }
    }
    rem
}
