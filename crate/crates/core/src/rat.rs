//! Exact rational numbers in canonical form, plus the nonnegative subtype
//! used as weights by the extended-field products.
//!
//! A value is always stored reduced: the denominator is strictly positive
//! and coprime with the numerator. Construction from a zero denominator
//! yields zero, and `inv` of zero is zero, so every operation is total.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num::bigint::{BigInt, BigUint};
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Reduced exact rational: `den > 0` and `gcd(|num|, den) = 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rat(BigRational);

#[derive(Debug, Error)]
#[error("invalid rational literal {literal:?}")]
pub struct ParseRatError {
    pub literal: String,
}

impl Rat {
    /// `n / d` in reduced form; `d = 0` gives zero.
    pub fn mk_rat(num: impl Into<BigInt>, den: impl Into<BigUint>) -> Rat {
        let num = num.into();
        let den = BigInt::from(den.into());
        if den.is_zero() {
            Rat::zero()
        } else {
            Rat(BigRational::new(num, den))
        }
    }

    pub fn new(num: i64, den: u64) -> Rat {
        Rat::mk_rat(BigInt::from(num), BigUint::from(den))
    }

    pub fn from_int(n: i64) -> Rat {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Rat {
        Rat(BigRational::zero())
    }

    pub fn one() -> Rat {
        Rat(BigRational::one())
    }

    pub fn num(&self) -> &BigInt {
        self.0.numer()
    }

    /// Strictly positive.
    pub fn den(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }

    /// Multiplicative inverse; zero maps to zero.
    pub fn inv(&self) -> Rat {
        if self.is_zero() {
            Rat::zero()
        } else {
            Rat(self.0.recip())
        }
    }

    /// Natural-number power by repeated squaring.
    pub fn pow(&self, mut n: u32) -> Rat {
        let mut base = self.clone();
        let mut acc = Rat::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        acc
    }

    /// Decimal rendering rounded to `digits` fractional digits
    /// (half away from zero). Trailing zeros are trimmed.
    pub fn to_decimal(&self, digits: usize) -> String {
        let sign = if self.is_negative() { "-" } else { "" };
        let num = self.num().abs();
        let den = self.den().clone();
        let scale = BigInt::from(10u32).pow(digits as u32);
        // round(num * scale / den), ties away from zero
        let scaled = (&num * &scale * 2u32 + &den) / (&den * 2u32);
        let int_part = &scaled / &scale;
        let frac_part = &scaled % &scale;
        if frac_part.is_zero() {
            return format!("{sign}{int_part}");
        }
        let mut frac = format!("{:0width$}", frac_part, width = digits);
        while frac.ends_with('0') {
            frac.pop();
        }
        format!("{sign}{int_part}.{frac}")
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Rat {
        Rat::from_int(n)
    }
}

impl From<BigInt> for Rat {
    fn from(n: BigInt) -> Rat {
        Rat(BigRational::from_integer(n))
    }
}

macro_rules! rat_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat(&self.0 $op &rhs.0)
            }
        }
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                (&self).$method(&rhs)
            }
        }
    };
}

rat_binop!(Add, add, +);
rat_binop!(Sub, sub, -);
rat_binop!(Mul, mul, *);

impl Div for &Rat {
    type Output = Rat;
    /// Total division: `a / b = a * b.inv()`, so division by zero gives zero.
    fn div(self, rhs: &Rat) -> Rat {
        self * &rhs.inv()
    }
}

impl Div for Rat {
    type Output = Rat;
    fn div(self, rhs: Rat) -> Rat {
        &self / &rhs
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |acc, x| acc + x)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den().is_one() {
            write!(f, "{}", self.num())
        } else {
            write!(f, "{}/{}", self.num(), self.den())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Rat {
    type Err = ParseRatError;

    /// Accepts `num` or `num/den` with the denominator unsigned;
    /// unreduced input is normalized.
    fn from_str(s: &str) -> Result<Rat, ParseRatError> {
        let err = || ParseRatError {
            literal: s.to_owned(),
        };
        let t = s.trim();
        match t.split_once('/') {
            Some((n, d)) => {
                let num = BigInt::from_str(n.trim()).map_err(|_| err())?;
                let den = BigUint::from_str(d.trim()).map_err(|_| err())?;
                Ok(Rat::mk_rat(num, den))
            }
            None => {
                let num = BigInt::from_str(t).map_err(|_| err())?;
                Ok(Rat::from(num))
            }
        }
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Rat, D::Error> {
        struct RatVisitor;

        impl de::Visitor<'_> for RatVisitor {
            type Value = Rat;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a rational literal like \"-3/4\" or an integer")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Rat, E> {
                v.parse().map_err(de::Error::custom)
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Rat, E> {
                Ok(Rat::from_int(v))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Rat, E> {
                Ok(Rat::from(BigInt::from(v)))
            }
        }

        deserializer.deserialize_any(RatVisitor)
    }
}

/// Nonnegative rational, the weight type for extended-field products.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NNRat(Rat);

#[derive(Debug, Error)]
#[error("value {0} is negative")]
pub struct NegativeRatError(pub Rat);

impl NNRat {
    pub fn try_new(value: Rat) -> Result<NNRat, NegativeRatError> {
        if value.is_negative() {
            Err(NegativeRatError(value))
        } else {
            Ok(NNRat(value))
        }
    }

    pub fn new(num: u64, den: u64) -> NNRat {
        NNRat(Rat::mk_rat(BigInt::from(num), BigUint::from(den)))
    }

    pub fn zero() -> NNRat {
        NNRat(Rat::zero())
    }

    pub fn one() -> NNRat {
        NNRat(Rat::one())
    }

    pub fn rat(&self) -> &Rat {
        &self.0
    }

    pub fn into_rat(self) -> Rat {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Wraps every entry, failing on the first negative one.
    pub fn try_vec(values: &[Rat]) -> Result<Vec<NNRat>, NegativeRatError> {
        values.iter().map(|r| NNRat::try_new(r.clone())).collect()
    }
}

impl TryFrom<Rat> for NNRat {
    type Error = NegativeRatError;
    fn try_from(value: Rat) -> Result<NNRat, NegativeRatError> {
        NNRat::try_new(value)
    }
}

impl From<u64> for NNRat {
    fn from(n: u64) -> NNRat {
        NNRat(Rat::from(BigInt::from(n)))
    }
}

impl Add for &NNRat {
    type Output = NNRat;
    fn add(self, rhs: &NNRat) -> NNRat {
        NNRat(&self.0 + &rhs.0)
    }
}

impl Mul for &NNRat {
    type Output = NNRat;
    fn mul(self, rhs: &NNRat) -> NNRat {
        NNRat(&self.0 * &rhs.0)
    }
}

impl fmt::Display for NNRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for NNRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
