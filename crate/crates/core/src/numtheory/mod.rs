//! Exact integer and rational arithmetic: square roots, primes, p-adic
//! valuations and the field Q(√2).

mod prime;
mod qsqrt2;
mod valuation;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

pub use prime::{is_prime_u64, Prime};
pub use qsqrt2::QSqrt2;
pub use valuation::{p_valuation, p_valuation_int, ValExponent};

use num_integer::Roots;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Exact integer square root: `Some(s)` with `s * s == n` when `n` is a
/// perfect square.
pub fn int_sqrt_exact(n: &BigInt) -> Result<Option<BigInt>> {
    if n.is_negative() {
        return Err(Error::NegativeInput(n.to_string()));
    }
    if n.is_zero() {
        return Ok(Some(BigInt::zero()));
    }
    let s = n.sqrt();
    Ok((&s * &s == *n).then_some(s))
}

/// Square root of a `u64` when it is a perfect square.
pub fn u64_sqrt_exact(n: u64) -> Option<u64> {
    let s = n.sqrt();
    (s * s == n).then_some(s)
}

/// Parses `"p/q"` or `"p"` into a canonical rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(BigRational::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(n))
        }
    }
}

/// Serde adapter writing a `BigInt` as a decimal string.
pub(crate) mod bigint_string {
    use num_bigint::BigInt;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(D::Error::custom)
    }
}

/// Serde adapter writing a `BigRational` as `"p/q"` (or `"p"` when integral).
pub(crate) mod rational_string {
    use super::BigRational;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        super::parse_rational(&s).map_err(D::Error::custom)
    }
}
