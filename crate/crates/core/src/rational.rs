//! Exact rational scalars.
//!
//! Scalars are [`num_rational::BigRational`], which keeps every value in lowest
//! terms with a positive denominator. This module adds the string wire format
//! (`"n"` or `"n/d"`) and a few small helpers used throughout the crate.

use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{CmError, Result};

pub type Rational = num_rational::BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn factorial(n: u64) -> Rational {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    Rational::from_integer(acc)
}

/// Lowest terms with a positive denominator.
pub fn is_canonical(q: &Rational) -> bool {
    q.denom().is_positive() && q.numer().gcd(q.denom()).is_one()
}

/// Parses `"n"` or `"n/d"`. Non-reduced input such as `"2/4"` is accepted and
/// reduced; a zero denominator is rejected.
pub fn parse(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || CmError::Parse(format!("invalid rational {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(
            BigInt::from_str(s).map_err(|_| bad())?,
        )),
    }
}

pub fn format(q: &Rational) -> String {
    debug_assert!(is_canonical(q));
    q.to_string()
}

/// Serde adapter for a single rational stored as a string.
pub mod as_string {
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    use super::Rational;

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::format(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        super::parse(&s).map_err(D::Error::custom)
    }
}
