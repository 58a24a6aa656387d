//! Commutative monomials in the Y generators.

use std::cmp::Ordering;

use smallvec::SmallVec;

/// A monomial `y_{g1}^{e1} ... y_{gk}^{ek}` stored as `(generator, exponent)`
/// pairs sorted by generator index; exponents are always positive.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct YMonomial {
    exps: SmallVec<[(u32, u32); 4]>,
}

impl YMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(g: u32) -> Self {
        Self::pow(g, 1)
    }

    pub fn pow(g: u32, e: u32) -> Self {
        let mut m = Self::one();
        if e > 0 {
            m.exps.push((g, e));
        }
        m
    }

    /// Builds a monomial from arbitrary `(generator, exponent)` pairs; repeated
    /// generators add up and zero exponents are dropped.
    pub fn from_pairs<I: IntoIterator<Item = (u32, u32)>>(pairs: I) -> Self {
        let mut m = Self::one();
        for (g, e) in pairs {
            m = m.mul(&Self::pow(g, e));
        }
        m
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, g: u32) -> u32 {
        self.exps
            .iter()
            .find(|&&(h, _)| h == g)
            .map_or(0, |&(_, e)| e)
    }

    /// `(generator, exponent)` pairs in increasing generator order.
    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.exps
    }

    fn merge(&self, other: &Self, op: impl Fn(u32, u32) -> u32) -> Self {
        let (a, b) = (&self.exps, &other.exps);
        let (mut i, mut j) = (0, 0);
        let mut out = SmallVec::new();
        while i < a.len() || j < b.len() {
            let (g, ea, eb) = match (a.get(i), b.get(j)) {
                (Some(&(ga, ea)), Some(&(gb, eb))) if ga == gb => {
                    i += 1;
                    j += 1;
                    (ga, ea, eb)
                }
                (Some(&(ga, ea)), Some(&(gb, _))) if ga < gb => {
                    i += 1;
                    (ga, ea, 0)
                }
                (Some(&(ga, ea)), None) => {
                    i += 1;
                    (ga, ea, 0)
                }
                (_, Some(&(gb, eb))) => {
                    j += 1;
                    (gb, 0, eb)
                }
                (None, None) => unreachable!(),
            };
            let e = op(ea, eb);
            if e > 0 {
                out.push((g, e));
            }
        }
        YMonomial { exps: out }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        self.merge(other, |a, b| a + b)
    }

    pub fn lcm(&self, other: &Self) -> Self {
        self.merge(other, u32::max)
    }

    pub fn gcd(&self, other: &Self) -> Self {
        self.merge(other, u32::min)
    }

    /// True when `self` divides `other`.
    pub fn divides(&self, other: &Self) -> bool {
        self.exps.iter().all(|&(g, e)| other.exponent(g) >= e)
    }

    /// `self / other`, or `None` if `other` does not divide `self`.
    pub fn div(&self, other: &Self) -> Option<Self> {
        if !other.divides(self) {
            return None;
        }
        Some(self.merge(other, |a, b| a - b))
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.gcd(other).is_one()
    }
}

/// Deg-lex: total degree first; ties go to the exponent of the highest-indexed
/// generator where the two monomials differ.
impl Ord for YMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let d = self.degree().cmp(&other.degree());
        if d != Ordering::Equal {
            return d;
        }
        let (a, b) = (&self.exps, &other.exps);
        let (mut i, mut j) = (a.len(), b.len());
        while i > 0 || j > 0 {
            let ga = if i > 0 { Some(a[i - 1]) } else { None };
            let gb = if j > 0 { Some(b[j - 1]) } else { None };
            let (ea, eb) = match (ga, gb) {
                (Some((x, ex)), Some((y, ey))) if x == y => {
                    i -= 1;
                    j -= 1;
                    (ex, ey)
                }
                (Some((x, ex)), Some((y, _))) if x > y => {
                    i -= 1;
                    (ex, 0)
                }
                (Some((_, ex)), None) => {
                    i -= 1;
                    (ex, 0)
                }
                (_, Some((_, ey))) => {
                    j -= 1;
                    (0, ey)
                }
                (None, None) => unreachable!(),
            };
            if ea != eb {
                return ea.cmp(&eb);
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for YMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
