//! Integer representatives of rational projective points and the valuation
//! 3-colouring of the rational projective plane.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::{bigint_string, p_valuation_int, Prime, ValExponent};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Colour3 {
    Red,
    White,
    Black,
}

impl Colour3 {
    pub const ALL: [Colour3; 3] = [Colour3::Red, Colour3::White, Colour3::Black];

    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Colour3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A point of the rational projective plane: coprime integers, first nonzero
/// coordinate positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PrimitiveTriple {
    #[serde(with = "bigint_string")]
    x: BigInt,
    #[serde(with = "bigint_string")]
    y: BigInt,
    #[serde(with = "bigint_string")]
    z: BigInt,
}

impl PrimitiveTriple {
    pub fn x(&self) -> &BigInt {
        &self.x
    }

    pub fn y(&self) -> &BigInt {
        &self.y
    }

    pub fn z(&self) -> &BigInt {
        &self.z
    }

    pub fn coords(&self) -> [&BigInt; 3] {
        [&self.x, &self.y, &self.z]
    }

    pub fn to_array(&self) -> [BigInt; 3] {
        [self.x.clone(), self.y.clone(), self.z.clone()]
    }

    /// `x² + y² + z²`.
    pub fn norm2(&self) -> BigInt {
        &self.x * &self.x + &self.y * &self.y + &self.z * &self.z
    }

    /// Max-norm height.
    pub fn height(&self) -> BigInt {
        self.coords().into_iter().map(|c| c.abs()).max().unwrap()
    }

    pub fn dot(&self, other: &PrimitiveTriple) -> BigInt {
        &self.x * &other.x + &self.y * &other.y + &self.z * &other.z
    }
}

impl fmt::Display for PrimitiveTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x, self.y, self.z)
    }
}

/// Divides by the gcd and flips the global sign so the first nonzero
/// coordinate is positive.
pub fn normalize(x: BigInt, y: BigInt, z: BigInt) -> Result<PrimitiveTriple> {
    let g = x.gcd(&y).gcd(&z);
    if g.is_zero() {
        return Err(Error::ZeroVector);
    }
    let (mut x, mut y, mut z) = (x / &g, y / &g, z / &g);
    let lead = [&x, &y, &z].into_iter().find(|c| !c.is_zero()).unwrap();
    if lead.is_negative() {
        x = -x;
        y = -y;
        z = -z;
    }
    Ok(PrimitiveTriple { x, y, z })
}

pub fn normalize_i64(x: i64, y: i64, z: i64) -> Result<PrimitiveTriple> {
    normalize(x.into(), y.into(), z.into())
}

/// Colour rule on valuation exponents. The three branches partition all
/// inputs: Black when z attains the minimal exponent, else White when y
/// does, else Red.
pub fn colour_from_exponents(ex: ValExponent, ey: ValExponent, ez: ValExponent) -> Colour3 {
    let red = ex.nu_gt(&ey) && ex.nu_gt(&ez);
    let white = ex.nu_le(&ey) && ey.nu_gt(&ez);
    let black = ex.nu_le(&ez) && ey.nu_le(&ez);
    debug_assert_eq!(red as u8 + white as u8 + black as u8, 1);
    if red {
        Colour3::Red
    } else if white {
        Colour3::White
    } else {
        Colour3::Black
    }
}

/// Valuation colour of any nonzero integer vector, without normalizing.
pub fn colour_of_vector(v: [&BigInt; 3], p: Prime) -> Result<Colour3> {
    if v.iter().all(|c| c.is_zero()) {
        return Err(Error::ZeroVector);
    }
    Ok(colour_from_exponents(
        p_valuation_int(v[0], p),
        p_valuation_int(v[1], p),
        p_valuation_int(v[2], p),
    ))
}

/// Colour of a projective point under the p-adic valuation.
pub fn colour_valuation(t: &PrimitiveTriple, p: Prime) -> Colour3 {
    colour_from_exponents(
        p_valuation_int(&t.x, p),
        p_valuation_int(&t.y, p),
        p_valuation_int(&t.z, p),
    )
}

/// Points of a projective line up to a height bound, with their colours.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LineScan {
    pub line: [i64; 3],
    pub height: i64,
    pub prime: u64,
    pub points: Vec<(PrimitiveTriple, Colour3)>,
    pub colours: BTreeSet<Colour3>,
}

/// Every primitive `(x,y,z)` with max-norm `<= height` on `ax + by + cz = 0`.
pub fn line_scan(line: [i64; 3], height: i64, p: Prime) -> Result<LineScan> {
    if line == [0, 0, 0] {
        return Err(Error::ZeroVector);
    }
    if height < 1 {
        return Err(Error::InvalidArgument(format!(
            "height bound must be >= 1, got {height}"
        )));
    }
    // solve for the coordinate with the largest coefficient
    let k = (0..3).max_by_key(|&i| (line[i].abs(), std::cmp::Reverse(i))).unwrap();
    let (i, j) = match k {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    };
    let mut found = BTreeSet::new();
    for s in -height..=height {
        for t in -height..=height {
            let rest = line[i] as i128 * s as i128 + line[j] as i128 * t as i128;
            if rest % line[k] as i128 != 0 {
                continue;
            }
            let u = -rest / line[k] as i128;
            if u.abs() > height as i128 {
                continue;
            }
            let mut v = [0i64; 3];
            v[i] = s;
            v[j] = t;
            v[k] = u as i64;
            if v == [0, 0, 0] || v[0].gcd(&v[1]).gcd(&v[2]) != 1 {
                continue;
            }
            if v.iter().find(|&&c| c != 0).is_some_and(|&c| c < 0) {
                continue;
            }
            found.insert(v);
        }
    }
    let points: Vec<_> = found
        .into_iter()
        .map(|[x, y, z]| {
            let t = PrimitiveTriple {
                x: x.into(),
                y: y.into(),
                z: z.into(),
            };
            let c = colour_valuation(&t, p);
            (t, c)
        })
        .collect();
    let colours = points.iter().map(|(_, c)| *c).collect();
    Ok(LineScan {
        line,
        height,
        prime: p.get(),
        points,
        colours,
    })
}
