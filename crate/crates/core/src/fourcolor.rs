//! A proper 4-colouring of the whole sphere, determined by sign patterns.
//!
//! The three coordinate great circles split the sphere into 26 cells: six
//! axis points, twelve open quadrant arcs and eight open octants. Every cell
//! is the set of unit vectors with one fixed sign pattern, so a colouring that
//! is constant on cells is a finite table, and whether two cells contain an
//! orthogonal pair depends only on the two patterns. [`Colour4Table::verify`]
//! checks all 26 × 26 ordered pairs, which certifies the colouring is proper.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::{BigRational, QSqrt2};

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Colour4 {
    Red,
    White,
    Black,
    Blue,
}

impl Colour4 {
    pub const ALL: [Colour4; 4] = [Colour4::Red, Colour4::White, Colour4::Black, Colour4::Blue];
}

impl fmt::Display for Colour4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Neg,
    Zero,
    Pos,
}

impl Sign {
    fn from_ordering(o: Ordering) -> Sign {
        match o {
            Ordering::Less => Sign::Neg,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Pos,
        }
    }

    fn as_i8(self) -> i8 {
        self as i8 - 1
    }

    fn symbol(self) -> char {
        match self {
            Sign::Neg => '-',
            Sign::Zero => '0',
            Sign::Pos => '+',
        }
    }
}

impl std::ops::Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Neg => Sign::Pos,
            Sign::Zero => Sign::Zero,
            Sign::Pos => Sign::Neg,
        }
    }
}

/// Exact sign of a coordinate value.
pub trait ExactSign {
    fn exact_sign(&self) -> Ordering;
}

impl ExactSign for BigInt {
    fn exact_sign(&self) -> Ordering {
        if self.is_positive() {
            Ordering::Greater
        } else if self.is_negative() {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    }
}

impl ExactSign for BigRational {
    fn exact_sign(&self) -> Ordering {
        self.numer().exact_sign()
    }
}

impl ExactSign for QSqrt2 {
    fn exact_sign(&self) -> Ordering {
        self.sign()
    }
}

impl ExactSign for i64 {
    fn exact_sign(&self) -> Ordering {
        self.cmp(&0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CellKind {
    Axis,
    Arc,
    Octant,
}

/// Coordinate-wise sign of a nonzero vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignPattern([Sign; 3]);

impl SignPattern {
    pub fn new(signs: [Sign; 3]) -> Result<Self> {
        if signs == [Sign::Zero; 3] {
            Err(Error::ZeroVector)
        } else {
            Ok(SignPattern(signs))
        }
    }

    pub fn signs(&self) -> [Sign; 3] {
        self.0
    }

    /// All 26 patterns in a fixed order.
    pub fn all() -> Vec<SignPattern> {
        const S: [Sign; 3] = [Sign::Neg, Sign::Zero, Sign::Pos];
        let mut out = Vec::with_capacity(26);
        for x in S {
            for y in S {
                for z in S {
                    if let Ok(p) = SignPattern::new([x, y, z]) {
                        out.push(p);
                    }
                }
            }
        }
        out
    }

    pub fn kind(&self) -> CellKind {
        match self.0.iter().filter(|&&s| s == Sign::Zero).count() {
            2 => CellKind::Axis,
            1 => CellKind::Arc,
            _ => CellKind::Octant,
        }
    }

    pub fn antipode(&self) -> SignPattern {
        SignPattern(self.0.map(|s| -s))
    }

    fn index(&self) -> usize {
        self.0.iter().fold(0, |acc, &s| acc * 3 + s as usize)
    }
}

impl fmt::Display for SignPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.0.iter().map(|s| s.symbol()).collect();
        f.write_str(&s)
    }
}

impl FromStr for SignPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let signs: Vec<Sign> = s
            .chars()
            .map(|c| match c {
                '+' => Ok(Sign::Pos),
                '-' => Ok(Sign::Neg),
                '0' => Ok(Sign::Zero),
                _ => Err(Error::Parse(format!("bad sign pattern {s:?}"))),
            })
            .collect::<Result<_>>()?;
        let signs: [Sign; 3] = signs
            .try_into()
            .map_err(|_| Error::Parse(format!("sign pattern {s:?} needs three symbols")))?;
        SignPattern::new(signs)
    }
}

impl Serialize for SignPattern {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for SignPattern {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

pub fn sign_pattern<T: ExactSign>(v: &[T; 3]) -> Result<SignPattern> {
    SignPattern::new([0, 1, 2].map(|i| Sign::from_ordering(v[i].exact_sign())))
}

/// Whether two cells contain an orthogonal pair of vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrthoClass {
    /// Every pair of vectors from the two cells is orthogonal.
    Always,
    /// Some pair is orthogonal.
    Possible,
    /// The inner product has a fixed nonzero sign.
    Never,
}

pub fn ortho_class(p1: SignPattern, p2: SignPattern) -> OrthoClass {
    let products = [0, 1, 2].map(|i| p1.0[i].as_i8() * p2.0[i].as_i8());
    let pos = products.iter().any(|&s| s > 0);
    let neg = products.iter().any(|&s| s < 0);
    match (pos, neg) {
        (false, false) => OrthoClass::Always,
        (true, true) => OrthoClass::Possible,
        _ => OrthoClass::Never,
    }
}

/// A colour for each of the 26 sign patterns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Colour4Table {
    cells: [Option<Colour4>; 27],
}

impl Colour4Table {
    /// Axes Red/White/Black for x/y/z; each quadrant arc takes a colour of
    /// one of its two endpoints; the upper octants get all four colours and
    /// each lower octant copies its antipode.
    pub fn standard() -> Self {
        use Colour4::*;
        const ENTRIES: [(&str, Colour4); 26] = [
            ("+00", Red),
            ("-00", Red),
            ("0+0", White),
            ("0-0", White),
            ("00+", Black),
            ("00-", Black),
            ("++0", Red),
            ("-+0", White),
            ("--0", Red),
            ("+-0", White),
            ("+0+", Red),
            ("-0+", Black),
            ("-0-", Red),
            ("+0-", Black),
            ("0++", White),
            ("0-+", Black),
            ("0--", White),
            ("0+-", Black),
            ("+++", Red),
            ("-++", White),
            ("--+", Black),
            ("+-+", Blue),
            ("---", Red),
            ("+--", White),
            ("++-", Black),
            ("-+-", Blue),
        ];
        let mut table = Colour4Table { cells: [None; 27] };
        for (p, c) in ENTRIES {
            table = table.with(p.parse().expect("valid literal"), c);
        }
        table
    }

    pub fn colour(&self, p: SignPattern) -> Colour4 {
        self.cells[p.index()].expect("every pattern is assigned")
    }

    /// A copy with one cell recoloured.
    pub fn with(mut self, p: SignPattern, c: Colour4) -> Self {
        self.cells[p.index()] = Some(c);
        self
    }

    pub fn entries(&self) -> Vec<(SignPattern, Colour4)> {
        SignPattern::all()
            .into_iter()
            .map(|p| (p, self.colour(p)))
            .collect()
    }

    /// Pattern string to colour name.
    pub fn to_json_map(&self) -> BTreeMap<String, Colour4> {
        self.entries()
            .into_iter()
            .map(|(p, c)| (p.to_string(), c))
            .collect()
    }

    /// Checks all ordered pattern pairs: any pair of cells that can hold an
    /// orthogonal pair of vectors must get different colours.
    pub fn verify(&self) -> TableReport {
        let mut constraints = Vec::new();
        let mut violations = Vec::new();
        let mut checked = 0;
        let patterns = SignPattern::all();
        for &p1 in &patterns {
            for &p2 in &patterns {
                checked += 1;
                let class = ortho_class(p1, p2);
                if class == OrthoClass::Never {
                    continue;
                }
                let c = Constraint {
                    p1,
                    p2,
                    class,
                    colour1: self.colour(p1),
                    colour2: self.colour(p2),
                };
                if c.colour1 == c.colour2 {
                    violations.push(c.clone());
                }
                constraints.push(c);
            }
        }
        TableReport {
            passed: violations.is_empty(),
            checked,
            constraints,
            violations,
        }
    }
}

impl Default for Colour4Table {
    fn default() -> Self {
        Colour4Table::standard()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Constraint {
    pub p1: SignPattern,
    pub p2: SignPattern,
    pub class: OrthoClass,
    pub colour1: Colour4,
    pub colour2: Colour4,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableReport {
    pub passed: bool,
    /// Ordered pattern pairs examined.
    pub checked: usize,
    /// Pairs that can be orthogonal, hence must differ in colour.
    pub constraints: Vec<Constraint>,
    pub violations: Vec<Constraint>,
}

pub fn colour4(p: SignPattern) -> Colour4 {
    Colour4Table::standard().colour(p)
}

pub fn verify_table() -> TableReport {
    Colour4Table::standard().verify()
}

/// Colour of an exact nonzero vector.
pub fn colour4_exact<T: ExactSign>(v: &[T; 3]) -> Result<Colour4> {
    Ok(colour4(sign_pattern(v)?))
}

/// Float front-end: coordinates within `tol` of zero snap to zero.
pub fn colour4_float(v: [f64; 3], tol: f64) -> Result<Colour4> {
    if !(tol >= 0.0) || v.iter().any(|c| !c.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "need finite coordinates and tol >= 0, got {v:?}, tol {tol}"
        )));
    }
    let norm = v.iter().map(|c| c * c).sum::<f64>().sqrt();
    if norm < 10.0 * tol {
        return Err(Error::NormBelowTolerance {
            norm,
            limit: 10.0 * tol,
        });
    }
    let signs = v.map(|c| {
        if c.abs() <= tol {
            Sign::Zero
        } else if c > 0.0 {
            Sign::Pos
        } else {
            Sign::Neg
        }
    });
    Ok(colour4(SignPattern::new(signs)?))
}
