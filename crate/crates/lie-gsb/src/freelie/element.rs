//! Elements of Lie_{k[Y]}(X) and of k[Y]<X> as finite k-combinations of mixed
//! monomials.

use std::collections::btree_map::{self, BTreeMap};

use crate::commutative::{Field, FieldScalar, YMonomial};
use crate::lyndon::{is_alsw, XWord};

use super::monomial::Monomial;
use super::structure::{bracket_words, expansion, peel};
use super::FreeLieError;

/// A k-linear combination of mixed monomials with no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Terms {
    field: Field,
    map: BTreeMap<Monomial, FieldScalar>,
}

impl Terms {
    fn zero(field: Field) -> Self {
        Terms {
            field,
            map: BTreeMap::new(),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.map.is_empty()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Terms in increasing monomial order.
    pub fn iter(&self) -> btree_map::Iter<'_, Monomial, FieldScalar> {
        self.map.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&FieldScalar> {
        self.map.get(m)
    }

    /// Greatest monomial and its coefficient.
    pub fn leading(&self) -> Option<(&Monomial, &FieldScalar)> {
        self.map.iter().next_back()
    }

    pub fn x_degree(&self) -> usize {
        self.map.keys().map(|m| m.x.len()).max().unwrap_or(0)
    }

    pub fn y_degree(&self) -> u32 {
        self.map.keys().map(|m| m.y.degree()).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: Monomial, c: FieldScalar) {
        if c.is_zero() {
            return;
        }
        match self.map.entry(m) {
            btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn remove(&mut self, m: &Monomial) -> Option<FieldScalar> {
        self.map.remove(m)
    }

    /// `self += c * y * other`.
    pub fn add_scaled(&mut self, other: &Terms, c: &FieldScalar, y: &YMonomial) {
        if c.is_zero() {
            return;
        }
        for (m, d) in &other.map {
            self.add_term(m.mul_y(y), d * c);
        }
    }

    fn scaled(&self, c: &FieldScalar, y: &YMonomial) -> Terms {
        let mut out = Terms::zero(self.field);
        if c.is_zero() {
            return out;
        }
        for (m, d) in &self.map {
            out.map.insert(m.mul_y(y), d * c);
        }
        out
    }
}

macro_rules! linear_ops {
    ($t:ident) => {
        impl $t {
            pub fn zero(field: Field) -> Self {
                $t(Terms::zero(field))
            }

            pub fn terms(&self) -> &Terms {
                &self.0
            }

            pub fn add(&self, other: &Self) -> Self {
                let mut out = self.clone();
                out.0.add_scaled(&other.0, &self.0.field.one(), &YMonomial::one());
                out
            }

            pub fn sub(&self, other: &Self) -> Self {
                let mut out = self.clone();
                out.0
                    .add_scaled(&other.0, &-&self.0.field.one(), &YMonomial::one());
                out
            }

            pub fn neg(&self) -> Self {
                self.scale(&-&self.0.field.one())
            }

            pub fn scale(&self, c: &FieldScalar) -> Self {
                $t(self.0.scaled(c, &YMonomial::one()))
            }

            /// Multiplication by `c * y` with `c` in k and `y` in [Y].
            pub fn mul_term(&self, c: &FieldScalar, y: &YMonomial) -> Self {
                $t(self.0.scaled(c, y))
            }

            /// `self += c * y * other`.
            pub fn add_scaled(&mut self, other: &Self, c: &FieldScalar, y: &YMonomial) {
                self.0.add_scaled(&other.0, c, y);
            }

            /// Removes and returns the leading term.
            pub fn pop_leading(&mut self) -> Option<(Monomial, FieldScalar)> {
                self.0.map.pop_last()
            }

            pub fn make_k_monic(&self) -> Result<Self, FreeLieError> {
                let (_, c) = self.0.leading().ok_or(FreeLieError::ZeroElement)?;
                Ok(self.scale(&c.inv().expect("nonzero")))
            }

            pub fn is_k_monic(&self) -> bool {
                self.0.leading().is_some_and(|(_, c)| c.is_one())
            }
        }

        impl std::ops::Deref for $t {
            type Target = Terms;
            fn deref(&self) -> &Terms {
                &self.0
            }
        }
    };
}

/// An element of Lie_{k[Y]}(X), keyed by T_A monomials; the key `u^Y u^X`
/// stands for the T_N monomial `u^Y [u^X]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LieElement(Terms);

/// An element of k[Y]<X>.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AssocElement(Terms);

linear_ops!(LieElement);
linear_ops!(AssocElement);

impl LieElement {
    /// `c * m`, where the X-part of `m` must be an ALSW.
    pub fn monomial(field: Field, c: FieldScalar, m: Monomial) -> Result<Self, FreeLieError> {
        if !is_alsw(&m.x) {
            return Err(FreeLieError::NotAlsw(m.x));
        }
        let mut t = Terms::zero(field);
        t.add_term(m, c);
        Ok(LieElement(t))
    }

    /// Adds `c * m`; `m` must come from an existing Lie element.
    pub(crate) fn add_term_unchecked(&mut self, m: Monomial, c: FieldScalar) {
        debug_assert!(is_alsw(&m.x));
        self.0.add_term(m, c);
    }

    /// The basis element `[w]` for an ALSW `w`.
    pub fn basis(field: Field, w: XWord) -> Self {
        debug_assert!(is_alsw(&w));
        let mut t = Terms::zero(field);
        t.add_term(Monomial::x_only(w), field.one());
        LieElement(t)
    }

    pub fn generator(field: Field, x: u32) -> Self {
        Self::basis(field, XWord::letter(x))
    }

    /// The Lie product, bilinear over k[Y].
    pub fn bracket(&self, other: &Self) -> Self {
        let mut out = Terms::zero(self.0.field);
        for (m1, c1) in self.0.iter() {
            for (m2, c2) in other.0.iter() {
                if m1.x == m2.x {
                    continue;
                }
                let c = c1 * c2;
                let y = m1.y.mul(&m2.y);
                for (w, k) in bracket_words(&m1.x, &m2.x).iter() {
                    out.add_term(Monomial::new(y.clone(), w.clone()), c.mul_i64(*k));
                }
            }
        }
        LieElement(out)
    }

    /// `[self, [w]]`.
    pub fn bracket_basis_right(&self, w: &XWord) -> Self {
        let mut out = Terms::zero(self.0.field);
        for (m, c) in self.0.iter() {
            if &m.x == w {
                continue;
            }
            for (v, k) in bracket_words(&m.x, w).iter() {
                out.add_term(Monomial::new(m.y.clone(), v.clone()), c.mul_i64(*k));
            }
        }
        LieElement(out)
    }

    /// `[[w], self]`.
    pub fn bracket_basis_left(&self, w: &XWord) -> Self {
        self.bracket_basis_right(w).neg()
    }

    /// Grouping `self` as `sum f_i(Y) [u_i]`, true iff the polynomial
    /// coefficient of the greatest NLSW is the constant 1.
    pub fn is_ky_monic(&self) -> bool {
        let Some((lead, c)) = self.0.leading() else {
            return false;
        };
        let same_x = self.0.iter().filter(|(m, _)| m.x == lead.x).count();
        same_x == 1 && lead.y.is_one() && c.is_one()
    }

    /// Expansion into k[Y]<X> via `[a,b] -> ab - ba`.
    pub fn to_associative(&self) -> AssocElement {
        let mut out = Terms::zero(self.0.field);
        for (m, c) in self.0.iter() {
            for (w, k) in expansion(&m.x).iter() {
                out.add_term(Monomial::new(m.y.clone(), w.clone()), c.mul_i64(*k));
            }
        }
        AssocElement(out)
    }

    /// Inverse of [`LieElement::to_associative`] on its image.
    pub fn from_associative(a: &AssocElement) -> Result<Self, FreeLieError> {
        let mut rest = a.0.clone();
        let mut out = Terms::zero(a.0.field);
        while let Some((m, c)) = rest.leading().map(|(m, c)| (m.clone(), c.clone())) {
            if !is_alsw(&m.x) {
                return Err(FreeLieError::NotALieElement);
            }
            for (w, k) in expansion(&m.x).iter() {
                rest.add_term(Monomial::new(m.y.clone(), w.clone()), c.mul_i64(-k));
            }
            out.add_term(m, c);
        }
        Ok(LieElement(out))
    }

    /// Integer-coefficient variant of [`LieElement::from_associative`] used by
    /// tests and oracles.
    pub fn from_int_words(field: Field, p: BTreeMap<XWord, i64>) -> Result<Self, FreeLieError> {
        let comb = peel(p).map_err(|_| FreeLieError::NotALieElement)?;
        let mut out = Terms::zero(field);
        for (w, k) in comb {
            out.add_term(Monomial::x_only(w), field.from_i64(k));
        }
        Ok(LieElement(out))
    }
}

impl AssocElement {
    pub fn monomial(field: Field, c: FieldScalar, m: Monomial) -> Self {
        let mut t = Terms::zero(field);
        t.add_term(m, c);
        AssocElement(t)
    }

    pub fn word(field: Field, w: XWord) -> Self {
        Self::monomial(field, field.one(), Monomial::x_only(w))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Terms::zero(self.0.field);
        for (m1, c1) in self.0.iter() {
            for (m2, c2) in other.0.iter() {
                out.add_term(
                    Monomial::new(m1.y.mul(&m2.y), m1.x.concat(&m2.x)),
                    c1 * c2,
                );
            }
        }
        AssocElement(out)
    }

    /// `c * y * a * self * b` for words `a`, `b`.
    pub fn sandwich(&self, c: &FieldScalar, y: &YMonomial, a: &[u32], b: &[u32]) -> Self {
        let mut out = Terms::zero(self.0.field);
        if c.is_zero() {
            return AssocElement(out);
        }
        for (m, d) in self.0.iter() {
            out.map.insert(
                Monomial::new(m.y.mul(y), XWord::concat3(a, &m.x, b)),
                d * c,
            );
        }
        AssocElement(out)
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }
}
