//! Exact scalars: residues modulo a prime, or arbitrary-precision rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The coefficient field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u32),
}

impl Field {
    /// `Field::Prime(p)` after checking that `p` is prime.
    pub fn prime(p: u32) -> Option<Field> {
        is_prime(p).then_some(Field::Prime(p))
    }

    pub fn characteristic(self) -> u32 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }

    pub fn zero(self) -> FieldScalar {
        self.from_i64(0)
    }

    pub fn one(self) -> FieldScalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> FieldScalar {
        match self {
            Field::Rational => FieldScalar::Rat(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => FieldScalar::Mod {
                value: n.rem_euclid(p as i64) as u32,
                p,
            },
        }
    }

    /// `num / den`; `None` when the denominator vanishes in this field.
    pub fn fraction(self, num: &BigInt, den: &BigInt) -> Option<FieldScalar> {
        match self {
            Field::Rational => {
                if den.is_zero() {
                    None
                } else {
                    Some(FieldScalar::Rat(BigRational::new(num.clone(), den.clone())))
                }
            }
            Field::Prime(p) => {
                let m = BigInt::from(p);
                let reduce = |x: &BigInt| -> u32 {
                    let r = ((x % &m) + &m) % &m;
                    u32::try_from(r).expect("residue fits in u32")
                };
                let n = FieldScalar::Mod { value: reduce(num), p };
                let d = FieldScalar::Mod { value: reduce(den), p };
                Some(&n * &d.inv()?)
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p as u64 {
        if (p as u64).is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of GF(p) or of the rationals.
///
/// Mixing characteristics in one operation is a logic error and panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldScalar {
    Mod { value: u32, p: u32 },
    Rat(BigRational),
}

impl FieldScalar {
    pub fn field(&self) -> Field {
        match self {
            FieldScalar::Mod { p, .. } => Field::Prime(*p),
            FieldScalar::Rat(_) => Field::Rational,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldScalar::Mod { value, .. } => *value == 0,
            FieldScalar::Rat(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldScalar::Mod { value, .. } => *value == 1,
            FieldScalar::Rat(r) => r.is_one(),
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<FieldScalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            FieldScalar::Mod { value, p } => FieldScalar::Mod {
                value: pow_mod(*value as u64, *p as u64 - 2, *p as u64) as u32,
                p: *p,
            },
            FieldScalar::Rat(r) => FieldScalar::Rat(r.recip()),
        })
    }

    /// Scales by an integer; used when mapping integer structure constants.
    pub fn mul_i64(&self, n: i64) -> FieldScalar {
        match self {
            FieldScalar::Mod { value, p } => {
                let m = n.rem_euclid(*p as i64) as u64;
                FieldScalar::Mod {
                    value: ((*value as u64 * m) % *p as u64) as u32,
                    p: *p,
                }
            }
            FieldScalar::Rat(r) => FieldScalar::Rat(r * BigRational::from_integer(BigInt::from(n))),
        }
    }

    /// True when the canonical text form starts with a minus sign.
    pub fn is_negative(&self) -> bool {
        match self {
            FieldScalar::Mod { .. } => false,
            FieldScalar::Rat(r) => r.is_negative(),
        }
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

fn same_p(a: u32, b: u32) -> u32 {
    assert_eq!(a, b, "scalars from different fields");
    a
}

impl Add for &FieldScalar {
    type Output = FieldScalar;
    fn add(self, rhs: &FieldScalar) -> FieldScalar {
        match (self, rhs) {
            (FieldScalar::Mod { value: a, p }, FieldScalar::Mod { value: b, p: q }) => {
                let p = same_p(*p, *q);
                FieldScalar::Mod {
                    value: ((*a as u64 + *b as u64) % p as u64) as u32,
                    p,
                }
            }
            (FieldScalar::Rat(a), FieldScalar::Rat(b)) => FieldScalar::Rat(a + b),
            _ => panic!("scalars from different fields"),
        }
    }
}

impl Sub for &FieldScalar {
    type Output = FieldScalar;
    fn sub(self, rhs: &FieldScalar) -> FieldScalar {
        self + &(-rhs)
    }
}

impl Mul for &FieldScalar {
    type Output = FieldScalar;
    fn mul(self, rhs: &FieldScalar) -> FieldScalar {
        match (self, rhs) {
            (FieldScalar::Mod { value: a, p }, FieldScalar::Mod { value: b, p: q }) => {
                let p = same_p(*p, *q);
                FieldScalar::Mod {
                    value: ((*a as u64 * *b as u64) % p as u64) as u32,
                    p,
                }
            }
            (FieldScalar::Rat(a), FieldScalar::Rat(b)) => FieldScalar::Rat(a * b),
            _ => panic!("scalars from different fields"),
        }
    }
}

impl Neg for &FieldScalar {
    type Output = FieldScalar;
    fn neg(self) -> FieldScalar {
        match self {
            FieldScalar::Mod { value, p } => FieldScalar::Mod {
                value: (p - value) % p,
                p: *p,
            },
            FieldScalar::Rat(r) => FieldScalar::Rat(-r),
        }
    }
}

impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldScalar::Mod { value, .. } => write!(f, "{value}"),
            FieldScalar::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}
