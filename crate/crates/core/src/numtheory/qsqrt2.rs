use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::BigRational;
use crate::error::{Error, Result};

/// An element `rat + sqrt2·√2` of Q(√2).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QSqrt2 {
    #[serde(with = "super::rational_string")]
    pub rat: BigRational,
    #[serde(with = "super::rational_string")]
    pub sqrt2: BigRational,
}

impl QSqrt2 {
    pub fn new(rat: BigRational, sqrt2: BigRational) -> Self {
        QSqrt2 { rat, sqrt2 }
    }

    pub fn from_rational(rat: BigRational) -> Self {
        QSqrt2 {
            rat,
            sqrt2: BigRational::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        QSqrt2::from_rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        QSqrt2::from_int(0)
    }

    pub fn one() -> Self {
        QSqrt2::from_int(1)
    }

    /// √2 itself.
    pub fn sqrt2() -> Self {
        QSqrt2::new(BigRational::zero(), BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.sqrt2.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.sqrt2.is_zero()
    }

    /// Galois conjugate `rat - sqrt2·√2`.
    pub fn conjugate(&self) -> Self {
        QSqrt2::new(self.rat.clone(), -self.sqrt2.clone())
    }

    /// Field norm `rat² - 2·sqrt2²`.
    pub fn norm(&self) -> BigRational {
        &self.rat * &self.rat - BigRational::from_integer(BigInt::from(2)) * &self.sqrt2 * &self.sqrt2
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // norm is nonzero: √2 is irrational
        let n = self.norm();
        let c = self.conjugate();
        Ok(QSqrt2::new(c.rat / &n, c.sqrt2 / n))
    }

    /// Exact sign as an ordering against zero.
    pub fn sign(&self) -> Ordering {
        let zero = BigRational::zero();
        let a = self.rat.cmp(&zero);
        let b = self.sqrt2.cmp(&zero);
        match (a, b) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (s, t) if s == t => s,
            (s, _) => {
                // opposite signs: compare a² with 2b²
                let lhs = &self.rat * &self.rat;
                let rhs = BigRational::from_integer(BigInt::from(2)) * &self.sqrt2 * &self.sqrt2;
                match lhs.cmp(&rhs) {
                    Ordering::Greater => s,
                    Ordering::Less => s.reverse(),
                    Ordering::Equal => unreachable!("√2 is irrational"),
                }
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.rat.to_f64().unwrap_or(f64::NAN)
            + self.sqrt2.to_f64().unwrap_or(f64::NAN) * std::f64::consts::SQRT_2
    }

    pub fn square(&self) -> Self {
        self * self
    }
}

impl From<BigRational> for QSqrt2 {
    fn from(r: BigRational) -> Self {
        QSqrt2::from_rational(r)
    }
}

impl fmt::Display for QSqrt2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rat.is_zero(), self.sqrt2.is_zero()) {
            (_, true) => write!(f, "{}", self.rat),
            (true, false) => write!(f, "{}*sqrt2", self.sqrt2),
            (false, false) if self.sqrt2.is_negative() => {
                write!(f, "{}-{}*sqrt2", self.rat, -self.sqrt2.clone())
            }
            (false, false) => write!(f, "{}+{}*sqrt2", self.rat, self.sqrt2),
        }
    }
}

/// Parses the `Display` form: `r`, `s*sqrt2`, `r+s*sqrt2` or `r-s*sqrt2`.
impl std::str::FromStr for QSqrt2 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let Some(body) = s.strip_suffix("sqrt2") else {
            return Ok(QSqrt2::from_rational(super::parse_rational(s)?));
        };
        let body = body.strip_suffix('*').unwrap_or(body);
        // the coefficient's sign is the last '+'/'-' after the first character
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last();
        let (rat, coef) = match split {
            Some(i) => (super::parse_rational(&body[..i])?, &body[i..]),
            None => (BigRational::zero(), body),
        };
        let coef = match coef.trim_start_matches('+') {
            "" => BigRational::one(),
            "-" => -BigRational::one(),
            c => super::parse_rational(c)?,
        };
        Ok(QSqrt2::new(rat, coef))
    }
}

impl Add<&QSqrt2> for &QSqrt2 {
    type Output = QSqrt2;
    fn add(self, rhs: &QSqrt2) -> QSqrt2 {
        QSqrt2::new(&self.rat + &rhs.rat, &self.sqrt2 + &rhs.sqrt2)
    }
}

impl Sub<&QSqrt2> for &QSqrt2 {
    type Output = QSqrt2;
    fn sub(self, rhs: &QSqrt2) -> QSqrt2 {
        QSqrt2::new(&self.rat - &rhs.rat, &self.sqrt2 - &rhs.sqrt2)
    }
}

impl Mul<&QSqrt2> for &QSqrt2 {
    type Output = QSqrt2;
    fn mul(self, rhs: &QSqrt2) -> QSqrt2 {
        let two = BigRational::from_integer(BigInt::from(2));
        QSqrt2::new(
            &self.rat * &rhs.rat + two * &self.sqrt2 * &rhs.sqrt2,
            &self.rat * &rhs.sqrt2 + &self.sqrt2 * &rhs.rat,
        )
    }
}

impl Neg for &QSqrt2 {
    type Output = QSqrt2;
    fn neg(self) -> QSqrt2 {
        QSqrt2::new(-self.rat.clone(), -self.sqrt2.clone())
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr<QSqrt2> for QSqrt2 {
            type Output = QSqrt2;
            fn $m(self, rhs: QSqrt2) -> QSqrt2 { (&self).$m(&rhs) }
        }
        impl $tr<&QSqrt2> for QSqrt2 {
            type Output = QSqrt2;
            fn $m(self, rhs: &QSqrt2) -> QSqrt2 { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for QSqrt2 {
    type Output = QSqrt2;
    fn neg(self) -> QSqrt2 {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(a: i64, b: i64) -> QSqrt2 {
        QSqrt2::new(
            BigRational::from_integer(a.into()),
            BigRational::from_integer(b.into()),
        )
    }

    fn qr(an: i64, ad: i64, bn: i64, bd: i64) -> QSqrt2 {
        QSqrt2::new(
            BigRational::new(an.into(), ad.into()),
            BigRational::new(bn.into(), bd.into()),
        )
    }

    #[test]
    fn examples() {
        assert_eq!(q(1, 1) * q(1, -1), q(-1, 0));
        assert_eq!(q(0, 1).square(), q(2, 0));
        let inv = q(1, 1).inv().unwrap();
        assert_eq!(inv, q(-1, 1));
        assert_eq!(&inv * &q(1, 1), QSqrt2::one());
        assert_eq!(QSqrt2::zero().inv(), Err(Error::DivisionByZero));
        assert!(QSqrt2::zero().is_zero());
        assert!(!q(0, 1).is_zero());
    }

    #[test]
    fn exact_sign() {
        assert_eq!(q(3, -2).sign(), Ordering::Greater); // 3 > 2.828
        assert_eq!(q(-3, 2).sign(), Ordering::Less);
        assert_eq!(q(1, -1).sign(), Ordering::Less);
        assert_eq!(qr(0, 1, -1, 2).sign(), Ordering::Less);
        assert_eq!(q(0, 0).sign(), Ordering::Equal);
        assert_eq!(q(-1, -1).sign(), Ordering::Less);
    }

    #[test]
    fn parse_display_forms() {
        for v in [qr(1, 2, -1, 3), qr(0, 1, 1, 2), q(5, 0), q(-3, 0), qr(-7, 2, 4, 9), q(0, -1), q(0, 1)] {
            assert_eq!(v.to_string().parse::<QSqrt2>().unwrap(), v);
        }
        assert_eq!("sqrt2".parse::<QSqrt2>().unwrap(), q(0, 1));
        assert_eq!("-sqrt2".parse::<QSqrt2>().unwrap(), q(0, -1));
        assert_eq!("1+sqrt2".parse::<QSqrt2>().unwrap(), q(1, 1));
        assert!("1+x*sqrt2".parse::<QSqrt2>().is_err());
    }

    #[test]
    fn display() {
        assert_eq!(qr(1, 2, -1, 3).to_string(), "1/2-1/3*sqrt2");
        assert_eq!(qr(0, 1, 1, 2).to_string(), "1/2*sqrt2");
        assert_eq!(q(5, 0).to_string(), "5");
    }

    fn arb() -> impl Strategy<Value = QSqrt2> {
        (-50i64..50, 1i64..20, -50i64..50, 1i64..20).prop_map(|(a, b, c, d)| qr(a, b, c, d))
    }

    proptest! {
        #[test]
        fn field_axioms(x in arb(), y in arb(), z in arb()) {
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert!((&x - &x).is_zero());
            if !x.is_zero() {
                prop_assert_eq!(&x * &x.inv().unwrap(), QSqrt2::one());
            }
        }

        #[test]
        fn sign_agrees_with_float(x in arb()) {
            let f = x.to_f64();
            if f.abs() > 1e-9 {
                prop_assert_eq!(x.sign(), f.partial_cmp(&0.0).unwrap());
            }
        }
    }
}
