//! Exact points on the unit sphere: rational points as primitive Pythagorean
//! quadruples, their parity 3-colouring, stereographic coordinates, and unit
//! vectors with coordinates in Q(√2).

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::{bigint_string, int_sqrt_exact, BigRational, QSqrt2};
use crate::projective::{normalize, Colour3, PrimitiveTriple};

/// The rational unit vector `(a/d, b/d, c/d)` with `a² + b² + c² = d²` and
/// `gcd(a, b, c) = 1`.
///
/// Such a quadruple always has `d` odd and exactly one of `a, b, c` odd.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawQuad")]
pub struct SpherePoint {
    #[serde(with = "bigint_string")]
    a: BigInt,
    #[serde(with = "bigint_string")]
    b: BigInt,
    #[serde(with = "bigint_string")]
    c: BigInt,
    #[serde(with = "bigint_string")]
    d: BigInt,
}

#[derive(Deserialize)]
struct RawQuad {
    #[serde(with = "bigint_string")]
    a: BigInt,
    #[serde(with = "bigint_string")]
    b: BigInt,
    #[serde(with = "bigint_string")]
    c: BigInt,
    #[serde(with = "bigint_string")]
    d: BigInt,
}

impl TryFrom<RawQuad> for SpherePoint {
    type Error = Error;

    fn try_from(r: RawQuad) -> Result<Self> {
        SpherePoint::new(r.a, r.b, r.c, r.d)
    }
}

impl SpherePoint {
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Result<Self> {
        if !d.is_positive() {
            return Err(Error::InvalidSpherePoint(format!("denominator {d} is not positive")));
        }
        if &a * &a + &b * &b + &c * &c != &d * &d {
            return Err(Error::InvalidSpherePoint(format!(
                "({a},{b},{c};{d}) is not on the unit sphere"
            )));
        }
        if !a.gcd(&b).gcd(&c).is_one() {
            return Err(Error::InvalidSpherePoint(format!(
                "({a},{b},{c};{d}) is not primitive"
            )));
        }
        let p = SpherePoint { a, b, c, d };
        debug_assert!(p.d.is_odd() && p.odd_count() == 1);
        Ok(p)
    }

    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        SpherePoint::new(a.into(), b.into(), c.into(), d.into())
    }

    /// The point spanned by a projective triple when `x² + y² + z²` is a square.
    pub fn from_projective(t: &PrimitiveTriple) -> Option<Self> {
        let d = int_sqrt_exact(&t.norm2()).ok()??;
        let [a, b, c] = t.to_array();
        Some(SpherePoint { a, b, c, d })
    }

    /// Reduces exact rational coordinates of a unit vector to a quadruple.
    pub fn from_rational_unit(coords: [BigRational; 3]) -> Result<Self> {
        let l = coords
            .iter()
            .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let [a, b, c] = coords.map(|q| q.numer() * (&l / q.denom()));
        SpherePoint::new(a, b, c, l)
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn numerators(&self) -> [&BigInt; 3] {
        [&self.a, &self.b, &self.c]
    }

    /// `(a, b, c, d)` as machine integers, when they fit.
    pub fn to_i64(&self) -> Option<[i64; 4]> {
        Some([
            self.a.to_i64()?,
            self.b.to_i64()?,
            self.c.to_i64()?,
            self.d.to_i64()?,
        ])
    }

    pub fn odd_count(&self) -> usize {
        self.numerators().iter().filter(|n| n.is_odd()).count()
    }

    /// Parity colouring: the colour of the unique odd coordinate.
    pub fn colour3(&self) -> Colour3 {
        if self.a.is_odd() {
            Colour3::Red
        } else if self.b.is_odd() {
            Colour3::White
        } else {
            Colour3::Black
        }
    }

    /// `aa' + bb' + cc'`; zero exactly when the points are orthogonal.
    pub fn inner_form(&self, other: &SpherePoint) -> BigInt {
        &self.a * &other.a + &self.b * &other.b + &self.c * &other.c
    }

    pub fn inner(&self, other: &SpherePoint) -> Inner {
        let form = self.inner_form(other);
        let value = BigRational::new(form.clone(), &self.d * &other.d);
        Inner { value, form }
    }

    pub fn antipode(&self) -> SpherePoint {
        SpherePoint {
            a: -self.a.clone(),
            b: -self.b.clone(),
            c: -self.c.clone(),
            d: self.d.clone(),
        }
    }

    pub fn is_north_pole(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c == self.d
    }

    pub fn coords(&self) -> [BigRational; 3] {
        self.numerators()
            .map(|n| BigRational::new(n.clone(), self.d.clone()))
    }

    pub fn to_qsqrt2(&self) -> [QSqrt2; 3] {
        self.coords().map(QSqrt2::from_rational)
    }

    /// Floating coordinates, accurate even when `d` exceeds the f64 range.
    pub fn to_f64(&self) -> [f64; 3] {
        self.numerators().map(|n| ratio_to_f64(n, &self.d))
    }

    /// The projective point this vector spans.
    pub fn direction(&self) -> PrimitiveTriple {
        normalize(self.a.clone(), self.b.clone(), self.c.clone()).expect("unit vectors are nonzero")
    }

    /// Cyclic coordinate shift `(x, y, z) -> (y, z, x)`.
    pub fn cycle(&self) -> SpherePoint {
        SpherePoint {
            a: self.b.clone(),
            b: self.c.clone(),
            c: self.a.clone(),
            d: self.d.clone(),
        }
    }

    fn key(&self) -> (&BigInt, &BigInt, &BigInt, &BigInt) {
        (&self.d, &self.a, &self.b, &self.c)
    }
}

/// Canonical order: by denominator, then numerators lexicographically.
impl Ord for SpherePoint {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for SpherePoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SpherePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{};{})", self.a, self.b, self.c, self.d)
    }
}

/// `n / d` as a float for integers of any size.
pub fn ratio_to_f64(n: &BigInt, d: &BigInt) -> f64 {
    let shift = n.bits().max(d.bits()).saturating_sub(60);
    let (n, d) = (n >> shift, d >> shift);
    n.to_f64().unwrap_or(f64::NAN) / d.to_f64().unwrap_or(f64::NAN)
}

/// Inner product of two rational unit vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Inner {
    pub value: BigRational,
    pub form: BigInt,
}

impl Inner {
    pub fn is_orthogonal(&self) -> bool {
        self.form.is_zero()
    }
}

/// Inverse stereographic projection from the north pole `(0,0,1)` onto `z = 0`.
pub fn stereo_inverse(u: &BigRational, v: &BigRational) -> SpherePoint {
    let one = BigRational::one();
    let two = BigRational::from_integer(BigInt::from(2));
    let r = u * u + v * v;
    let den = &one + &r;
    let coords = [&two * u / &den, &two * v / &den, (r - one) / den];
    SpherePoint::from_rational_unit(coords).expect("inverse stereographic image is a unit vector")
}

/// Stereographic projection; `None` only at the north pole.
pub fn stereo_project(p: &SpherePoint) -> Option<(BigRational, BigRational)> {
    if p.is_north_pole() {
        return None;
    }
    let den = p.d() - p.c();
    Some((
        BigRational::new(p.a().clone(), den.clone()),
        BigRational::new(p.b().clone(), den),
    ))
}

/// A unit vector with coordinates in Q(√2).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawAlg")]
pub struct AlgSpherePoint {
    x: QSqrt2,
    y: QSqrt2,
    z: QSqrt2,
}

#[derive(Deserialize)]
struct RawAlg {
    x: QSqrt2,
    y: QSqrt2,
    z: QSqrt2,
}

impl TryFrom<RawAlg> for AlgSpherePoint {
    type Error = Error;

    fn try_from(r: RawAlg) -> Result<Self> {
        AlgSpherePoint::new([r.x, r.y, r.z])
    }
}

impl AlgSpherePoint {
    pub fn new(coords: [QSqrt2; 3]) -> Result<Self> {
        let norm = coords
            .iter()
            .fold(QSqrt2::zero(), |acc, c| acc + c.square());
        if norm != QSqrt2::one() {
            return Err(Error::InvalidSpherePoint(format!(
                "squared coordinates sum to {norm}, not 1"
            )));
        }
        let [x, y, z] = coords;
        Ok(AlgSpherePoint { x, y, z })
    }

    pub fn coords(&self) -> [&QSqrt2; 3] {
        [&self.x, &self.y, &self.z]
    }

    pub fn norm2(&self) -> QSqrt2 {
        self.x.square() + self.y.square() + self.z.square()
    }

    pub fn inner(&self, other: &AlgSpherePoint) -> QSqrt2 {
        &self.x * &other.x + &self.y * &other.y + &self.z * &other.z
    }

    pub fn is_rational(&self) -> bool {
        self.coords().iter().all(|c| c.is_rational())
    }

    pub fn to_f64(&self) -> [f64; 3] {
        self.coords().map(|c| c.to_f64())
    }

    /// The rational point with the same coordinates, if there is one.
    pub fn to_sphere_point(&self) -> Option<SpherePoint> {
        if !self.is_rational() {
            return None;
        }
        SpherePoint::from_rational_unit(self.coords().map(|c| c.rat.clone())).ok()
    }
}

impl From<&SpherePoint> for AlgSpherePoint {
    fn from(p: &SpherePoint) -> Self {
        let [x, y, z] = p.to_qsqrt2();
        AlgSpherePoint { x, y, z }
    }
}

impl fmt::Display for AlgSpherePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x, self.y, self.z)
    }
}

/// The unit vector `t / |t|` when `|t|² = s²` or `2s²`.
pub fn alg_point(t: &PrimitiveTriple) -> Option<AlgSpherePoint> {
    alg_unit(t.to_array())
}

/// `v / |v|` for any nonzero integer vector whose squared norm is `s²` or `2s²`.
pub fn alg_unit(v: [BigInt; 3]) -> Option<AlgSpherePoint> {
    let n = &v[0] * &v[0] + &v[1] * &v[1] + &v[2] * &v[2];
    if n.is_zero() {
        return None;
    }
    if let Some(s) = int_sqrt_exact(&n).ok()? {
        let coords = v.map(|c| QSqrt2::from_rational(BigRational::new(c, s.clone())));
        return AlgSpherePoint::new(coords).ok();
    }
    if n.is_even() {
        if let Some(s) = int_sqrt_exact(&(&n / 2)).ok()? {
            // c / (s√2) = (c / 2s)·√2
            let two_s = BigInt::from(2) * s;
            let coords = v.map(|c| QSqrt2::new(BigRational::zero(), BigRational::new(c, two_s.clone())));
            return AlgSpherePoint::new(coords).ok();
        }
    }
    None
}

pub fn alg_orthogonal(p: &AlgSpherePoint, q: &AlgSpherePoint) -> bool {
    p.inner(q).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtheory::Prime;
    use crate::projective::{colour_valuation, normalize_i64};
    use proptest::prelude::*;

    fn sp(a: i64, b: i64, c: i64, d: i64) -> SpherePoint {
        SpherePoint::from_i64(a, b, c, d).unwrap()
    }

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn construction_rejects_bad_quadruples() {
        assert!(SpherePoint::from_i64(1, 1, 1, 2).is_err());
        assert!(SpherePoint::from_i64(2, 4, 4, 6).is_err());
        assert!(SpherePoint::from_i64(1, 0, 0, -1).is_err());
        assert!(SpherePoint::from_i64(-1, 0, 0, 1).is_ok());
    }

    #[test]
    fn from_projective_examples() {
        let t = normalize_i64(1, 2, 2).unwrap();
        assert_eq!(SpherePoint::from_projective(&t), Some(sp(1, 2, 2, 3)));
        let t = normalize_i64(0, 0, 1).unwrap();
        assert_eq!(SpherePoint::from_projective(&t), Some(sp(0, 0, 1, 1)));
        let t = normalize_i64(1, 1, 0).unwrap();
        assert_eq!(SpherePoint::from_projective(&t), None);
    }

    #[test]
    fn colour3_examples() {
        assert_eq!(sp(3, 4, 0, 5).colour3(), Colour3::Red);
        assert_eq!(sp(2, 2, 1, 3).colour3(), Colour3::Black);
        assert_eq!(sp(1, 0, 0, 1).colour3(), Colour3::Red);
        assert_eq!(sp(2, 1, 2, 3).colour3(), Colour3::White);
    }

    #[test]
    fn inner_examples() {
        let p = sp(1, 2, 2, 3);
        assert!(p.inner(&sp(2, 1, -2, 3)).is_orthogonal());
        let i = p.inner(&sp(3, 4, 0, 5));
        assert_eq!(i.form, BigInt::from(11));
        assert_eq!(i.value, r(11, 15));
        let i = p.inner(&p);
        assert_eq!(i.form, BigInt::from(9));
        assert_eq!(i.value, r(1, 1));
    }

    #[test]
    fn antipode_examples() {
        let p = sp(1, 2, 2, 3);
        assert_eq!(p.antipode(), sp(-1, -2, -2, 3));
        assert_eq!(p.antipode().colour3(), Colour3::Red);
        assert_eq!(sp(0, 0, 1, 1).antipode(), sp(0, 0, -1, 1));
        assert_eq!(sp(0, 0, -1, 1).colour3(), Colour3::Black);
        assert_eq!(p.antipode().antipode(), p);
    }

    #[test]
    fn stereo_examples() {
        assert_eq!(stereo_inverse(&r(0, 1), &r(0, 1)), sp(0, 0, -1, 1));
        assert_eq!(stereo_inverse(&r(1, 1), &r(0, 1)), sp(1, 0, 0, 1));
        assert_eq!(stereo_inverse(&r(1, 2), &r(0, 1)), sp(4, 0, -3, 5));
        assert_eq!(stereo_project(&sp(0, 0, -1, 1)), Some((r(0, 1), r(0, 1))));
        assert_eq!(stereo_project(&sp(0, 0, 1, 1)), None);
        assert_eq!(stereo_project(&sp(4, 0, -3, 5)), Some((r(1, 2), r(0, 1))));
    }

    #[test]
    fn alg_point_examples() {
        let p = alg_point(&normalize_i64(1, 1, 0).unwrap()).unwrap();
        let half_root = QSqrt2::new(r(0, 1), r(1, 2));
        assert_eq!(p.coords(), [&half_root, &half_root, &QSqrt2::zero()]);
        assert_eq!(p.norm2(), QSqrt2::one());

        let q = alg_point(&normalize_i64(1, 2, 2).unwrap()).unwrap();
        assert!(q.is_rational());
        assert_eq!(q.to_sphere_point(), Some(sp(1, 2, 2, 3)));

        assert_eq!(alg_point(&normalize_i64(1, 1, 1).unwrap()), None);
        // 1 + 1 + 16 = 2·3²
        assert!(alg_point(&normalize_i64(1, 1, 4).unwrap()).is_some());
    }

    #[test]
    fn alg_orthogonality_examples() {
        let a = alg_point(&normalize_i64(1, 1, 0).unwrap()).unwrap();
        let b = alg_point(&normalize_i64(-1, 1, 0).unwrap()).unwrap();
        let z = alg_point(&normalize_i64(0, 0, 1).unwrap()).unwrap();
        assert!(alg_orthogonal(&a, &b));
        assert!(alg_orthogonal(&a, &z));
        assert!(!alg_orthogonal(&a, &a));
        assert_eq!(a.inner(&a), QSqrt2::one());
    }

    #[test]
    fn json_shape() {
        let p = sp(-1, 2, 2, 3);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"a":"-1","b":"2","c":"2","d":"3"}"#);
        let back: SpherePoint = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<SpherePoint>(r#"{"a":"1","b":"1","c":"1","d":"2"}"#).is_err());

        let big = "98765432109876543210987654321";
        let json = format!(r#"{{"a":"{big}","b":"0","c":"0","d":"{big}"}}"#);
        assert!(serde_json::from_str::<SpherePoint>(&json).is_err()); // not primitive
    }

    fn rational() -> impl Strategy<Value = BigRational> {
        (-200i64..200, 1i64..200).prop_map(|(n, d)| r(n, d))
    }

    proptest! {
        #[test]
        fn stereo_round_trip(u in rational(), v in rational()) {
            let p = stereo_inverse(&u, &v);
            prop_assert!(!p.is_north_pole());
            prop_assert_eq!(p.odd_count(), 1);
            prop_assert!(p.d().is_odd());
            prop_assert_eq!(stereo_project(&p), Some((u, v)));
        }

        #[test]
        fn parity_duality_and_valuation(u1 in rational(), v1 in rational(), u2 in rational(), v2 in rational()) {
            let p = stereo_inverse(&u1, &v1);
            let q = stereo_inverse(&u2, &v2);
            let same = p.colour3() == q.colour3();
            prop_assert_eq!(same, p.inner_form(&q).is_odd());
            let t = normalize(p.a().clone(), p.b().clone(), p.c().clone()).unwrap();
            prop_assert_eq!(colour_valuation(&t, Prime::TWO), p.colour3());
        }
    }
}
