use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::ExactError;

/// An exact rational number, always stored in lowest terms with a positive
/// denominator. Zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// `p/q` in lowest terms.
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self, ExactError> {
        let q = q.into();
        if q.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(p.into(), q)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    /// Always positive.
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn sign(&self) -> Sign {
        self.numer().sign()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// `max(|p|, q)` for the reduced form `p/q`.
    pub fn height(&self) -> BigUint {
        let p = self.numer().magnitude();
        let q = self.denom().magnitude();
        if p > q {
            p.clone()
        } else {
            q.clone()
        }
    }

    pub fn recip(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Self, ExactError> {
        if rhs.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    /// Non-negative integer power.
    pub fn pow(&self, e: u32) -> Self {
        Rational(num_traits::Pow::pow(&self.0, e))
    }

    /// Signed integer power; a negative exponent of zero is an error.
    pub fn powi(&self, e: i32) -> Result<Self, ExactError> {
        if e >= 0 {
            Ok(self.pow(e as u32))
        } else {
            Ok(self.recip()?.pow(e.unsigned_abs()))
        }
    }

    pub fn as_big_rational(&self) -> &BigRational {
        &self.0
    }

    /// Compares by `(height, value)`, the canonical output order for tuples.
    pub fn cmp_height_then_value(&self, other: &Rational) -> Ordering {
        self.height()
            .cmp(&other.height())
            .then_with(|| self.cmp(other))
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Self {
        Rational::from_integer(n)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl $tr<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
        impl $tr<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_int(s: &str, input: &str) -> Result<BigInt, ExactError> {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ExactError::Parse {
            input: input.to_string(),
            reason: "expected an integer or p/q",
        });
    }
    s.parse::<BigInt>().map_err(|_| ExactError::Parse {
        input: input.to_string(),
        reason: "expected an integer or p/q",
    })
}

/// Accepts `p` or `p/q` with `q > 0` and `gcd(p, q) = 1`. Non-reduced input is
/// rejected rather than silently normalized.
impl FromStr for Rational {
    type Err = ExactError;

    fn from_str(input: &str) -> Result<Self, Self::Err> {
        let s = input.trim();
        match s.split_once('/') {
            None => Ok(Rational::from_integer(parse_int(s, input)?)),
            Some((p, q)) => {
                let p = parse_int(p, input)?;
                if q.starts_with(['-', '+']) {
                    return Err(ExactError::Parse {
                        input: input.to_string(),
                        reason: "denominator must be written as a positive integer",
                    });
                }
                let q = parse_int(q, input)?;
                if q.is_zero() {
                    return Err(ExactError::ZeroDenominator);
                }
                if !p.gcd(&q).is_one() {
                    return Err(ExactError::Parse {
                        input: input.to_string(),
                        reason: "fraction is not in lowest terms",
                    });
                }
                Rational::new(p, q)
            }
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
