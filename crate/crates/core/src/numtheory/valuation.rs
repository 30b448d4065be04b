use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{BigRational, Prime};

/// Exponent `n` of a p-adic valuation `ν = 2^(-n)`; `Infinite` encodes ν(0) = 0.
///
/// The derived order is the order on exponents, which is the reverse of the
/// order on ν: `ν(x) > ν(y)` exactly when `exp(x) < exp(y)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ValExponent {
    Finite(i64),
    Infinite,
}

impl ValExponent {
    pub fn is_infinite(&self) -> bool {
        matches!(self, ValExponent::Infinite)
    }

    /// `ν(self) > ν(other)`.
    pub fn nu_gt(&self, other: &ValExponent) -> bool {
        self < other
    }

    /// `ν(self) <= ν(other)`.
    pub fn nu_le(&self, other: &ValExponent) -> bool {
        self >= other
    }

    /// ν as a float, for display only.
    pub fn nu(&self) -> f64 {
        match self {
            ValExponent::Finite(n) => 2f64.powi(-(*n as i32)),
            ValExponent::Infinite => 0.0,
        }
    }
}

impl Add for ValExponent {
    type Output = ValExponent;

    fn add(self, rhs: ValExponent) -> ValExponent {
        match (self, rhs) {
            (ValExponent::Finite(a), ValExponent::Finite(b)) => ValExponent::Finite(a + b),
            _ => ValExponent::Infinite,
        }
    }
}

impl PartialOrd<i64> for ValExponent {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        Some(self.cmp(&ValExponent::Finite(*other)))
    }
}

impl PartialEq<i64> for ValExponent {
    fn eq(&self, other: &i64) -> bool {
        *self == ValExponent::Finite(*other)
    }
}

impl fmt::Display for ValExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValExponent::Finite(n) => write!(f, "{n}"),
            ValExponent::Infinite => f.write_str("+inf"),
        }
    }
}

fn multiplicity(n: &BigInt, p: Prime) -> i64 {
    debug_assert!(!n.is_zero());
    if p == Prime::TWO {
        return n.trailing_zeros().unwrap_or(0) as i64;
    }
    let p = BigInt::from(p.get());
    let mut m = n.abs();
    let mut k = 0;
    loop {
        let (q, r) = m.div_rem(&p);
        if !r.is_zero() {
            return k;
        }
        m = q;
        k += 1;
    }
}

/// p-adic valuation exponent of an integer.
pub fn p_valuation_int(n: &BigInt, p: Prime) -> ValExponent {
    if n.is_zero() {
        ValExponent::Infinite
    } else {
        ValExponent::Finite(multiplicity(n, p))
    }
}

/// The exponent `n` with `q = a·p^n`, numerator and denominator of `a` prime to `p`.
pub fn p_valuation(q: &BigRational, p: Prime) -> ValExponent {
    if q.is_zero() {
        return ValExponent::Infinite;
    }
    ValExponent::Finite(multiplicity(q.numer(), p) - multiplicity(q.denom(), p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    /// Exponent of p by repeated trial division on machine integers.
    fn trial_exponent(mut n: i64, p: i64) -> i64 {
        let mut k = 0;
        while n % p == 0 {
            n /= p;
            k += 1;
        }
        k
    }

    #[test]
    fn examples() {
        assert_eq!(p_valuation(&rat(12, 1), p(2)), ValExponent::Finite(2));
        assert_eq!(p_valuation(&rat(0, 1), p(5)), ValExponent::Infinite);
        assert_eq!(p_valuation(&rat(12, 5), p(5)), ValExponent::Finite(-1));
        assert_eq!(p_valuation(&rat(12, 1), p(2)).nu(), 0.25);
        assert_eq!(ValExponent::Infinite.nu(), 0.0);
    }

    #[test]
    fn order_reverses_nu() {
        let small = ValExponent::Finite(-3);
        let big = ValExponent::Finite(4);
        assert!(small.nu_gt(&big));
        assert!(big.nu_gt(&ValExponent::Infinite));
        assert!(ValExponent::Infinite.nu_le(&ValExponent::Infinite));
        assert!(!ValExponent::Infinite.nu_gt(&ValExponent::Infinite));
    }

    proptest! {
        #[test]
        fn matches_trial_division(n in 1i64..1_000_000, pi in 0usize..5) {
            let prime = [2u64, 3, 5, 7, 11][pi];
            let expected = trial_exponent(n, prime as i64);
            prop_assert_eq!(p_valuation_int(&n.into(), p(prime)), ValExponent::Finite(expected));
            prop_assert_eq!(p_valuation_int(&(-n).into(), p(prime)), ValExponent::Finite(expected));
        }

        #[test]
        fn multiplicative(a in -500i64..500, b in 1i64..500, c in -500i64..500, d in 1i64..500, pi in 0usize..4) {
            let prime = p([2u64, 3, 5, 7][pi]);
            let x = rat(a, b);
            let y = rat(c, d);
            prop_assert_eq!(p_valuation(&(&x * &y), prime), p_valuation(&x, prime) + p_valuation(&y, prime));
        }

        #[test]
        fn ultrametric(a in -500i64..500, b in 1i64..500, c in -500i64..500, d in 1i64..500, pi in 0usize..4) {
            let prime = p([2u64, 3, 5, 7][pi]);
            let x = rat(a, b);
            let y = rat(c, d);
            let lhs = p_valuation(&(&x + &y), prime);
            let rhs = p_valuation(&x, prime).min(p_valuation(&y, prime));
            prop_assert!(lhs >= rhs);
        }

        #[test]
        fn sign_invariant(a in -10_000i64..10_000, b in 1i64..10_000) {
            let x = rat(a, b);
            prop_assert_eq!(p_valuation(&-x.clone(), Prime::TWO), p_valuation(&x, Prime::TWO));
        }
    }
}
