use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numtheory::BigRational;
use crate::projective::Colour3;
use crate::sphere::SpherePoint;

/// A rotation matrix with rational entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactRotation {
    m: [[BigRational; 3]; 3],
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

impl ExactRotation {
    /// Checks `MᵀM = I` and `det M = 1`.
    pub fn new(m: [[BigRational; 3]; 3]) -> Result<Self> {
        let r = ExactRotation { m };
        if r.transpose().mul(&r) != ExactRotation::identity() {
            return Err(Error::InvalidArgument("matrix is not orthogonal".into()));
        }
        if r.det() != BigRational::one() {
            return Err(Error::InvalidArgument("matrix has determinant -1".into()));
        }
        Ok(r)
    }

    pub fn identity() -> Self {
        let e = |i: usize, j: usize| if i == j { q(1, 1) } else { q(0, 1) };
        ExactRotation {
            m: [0, 1, 2].map(|i| [0, 1, 2].map(|j| e(i, j))),
        }
    }

    pub fn entries(&self) -> &[[BigRational; 3]; 3] {
        &self.m
    }

    pub fn transpose(&self) -> Self {
        ExactRotation {
            m: [0, 1, 2].map(|i| [0, 1, 2].map(|j| self.m[j][i].clone())),
        }
    }

    pub fn mul(&self, rhs: &ExactRotation) -> Self {
        ExactRotation {
            m: [0, 1, 2].map(|i| {
                [0, 1, 2].map(|j| {
                    (0..3).fold(BigRational::zero(), |acc, k| acc + &self.m[i][k] * &rhs.m[k][j])
                })
            }),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(ExactRotation::identity(), |acc, _| acc.mul(self))
    }

    pub fn det(&self) -> BigRational {
        let m = &self.m;
        &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
            - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
            + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
    }

    /// Applies the rotation and reduces back to a primitive quadruple.
    pub fn apply(&self, p: &SpherePoint) -> SpherePoint {
        let l = self
            .m
            .iter()
            .flatten()
            .fold(BigInt::one(), |acc, e| acc.lcm(e.denom()));
        let scaled = self
            .m
            .clone()
            .map(|row| row.map(|e| e.numer() * (&l / e.denom())));
        let v = p.numerators();
        let n = scaled.map(|row| &row[0] * v[0] + &row[1] * v[1] + &row[2] * v[2]);
        let den = &l * p.d();
        let g = n[0].gcd(&n[1]).gcd(&n[2]).gcd(&den);
        if den.is_odd() {
            // only odd factors can cancel, so parities survive the reduction
            assert!(g.is_odd());
        }
        let [a, b, c] = n.map(|x| x / &g);
        SpherePoint::new(a, b, c, den / g).expect("rotations preserve the unit sphere")
    }
}

/// Rotation about the z-axis by the angle with cosine 3/5 and sine 4/5.
pub fn rotation_z() -> ExactRotation {
    ExactRotation::new([
        [q(3, 5), q(-4, 5), q(0, 1)],
        [q(4, 5), q(3, 5), q(0, 1)],
        [q(0, 1), q(0, 1), q(1, 1)],
    ])
    .expect("valid rotation")
}

/// Rotation about the y-axis by the angle with cosine 3/5 and sine 4/5.
pub fn rotation_y() -> ExactRotation {
    ExactRotation::new([
        [q(3, 5), q(0, 1), q(4, 5)],
        [q(0, 1), q(1, 1), q(0, 1)],
        [q(-4, 5), q(0, 1), q(3, 5)],
    ])
    .expect("valid rotation")
}

/// `start, R·start, …, R^(n-1)·start` with their parity colours.
pub fn orbit(r: &ExactRotation, start: &SpherePoint, n: usize) -> Vec<(SpherePoint, Colour3)> {
    let mut out = Vec::with_capacity(n);
    let mut cur = start.clone();
    for i in 0..n {
        if i > 0 {
            cur = r.apply(&cur);
        }
        let c = cur.colour3();
        out.push((cur.clone(), c));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{enum_points, EnumMode};

    fn sp(a: i64, b: i64, c: i64, d: i64) -> SpherePoint {
        SpherePoint::from_i64(a, b, c, d).unwrap()
    }

    #[test]
    fn rotation_examples() {
        let x = sp(1, 0, 0, 1);
        let r = rotation_z();
        assert_eq!(r.apply(&x), sp(3, 4, 0, 5));
        assert_eq!(r.apply(&x).colour3(), Colour3::Red);
        assert_eq!(r.pow(2).apply(&x), sp(-7, 24, 0, 25));
        assert_eq!(r.pow(0), ExactRotation::identity());
        assert_eq!(rotation_y().apply(&x), sp(3, 0, -4, 5));
    }

    #[test]
    fn entry_set() {
        let allowed = [q(3, 5), q(-3, 5), q(4, 5), q(-4, 5), q(0, 1), q(1, 1)];
        for r in [rotation_z(), rotation_y()] {
            assert!(r.entries().iter().flatten().all(|e| allowed.contains(e)));
        }
    }

    #[test]
    fn the_literal_angle_breaks_monochromaticity() {
        // sin = 3/5, cos = 4/5 sends (1,0,0) to (4/5, 3/5, 0)
        let literal = ExactRotation::new([
            [q(4, 5), q(-3, 5), q(0, 1)],
            [q(3, 5), q(4, 5), q(0, 1)],
            [q(0, 1), q(0, 1), q(1, 1)],
        ])
        .unwrap();
        let img = literal.apply(&sp(1, 0, 0, 1));
        assert_eq!(img, sp(4, 3, 0, 5));
        assert_eq!(img.colour3(), Colour3::White);
        // its square is the repaired rotation up to the angle's sign pattern
        assert_eq!(literal.pow(2).apply(&sp(1, 0, 0, 1)), sp(7, 24, 0, 25));
    }

    #[test]
    fn rejects_non_rotations() {
        let reflect = [
            [q(1, 1), q(0, 1), q(0, 1)],
            [q(0, 1), q(1, 1), q(0, 1)],
            [q(0, 1), q(0, 1), q(-1, 1)],
        ];
        assert!(ExactRotation::new(reflect).is_err());
        let shear = [
            [q(1, 1), q(1, 1), q(0, 1)],
            [q(0, 1), q(1, 1), q(0, 1)],
            [q(0, 1), q(0, 1), q(1, 1)],
        ];
        assert!(ExactRotation::new(shear).is_err());
    }

    #[test]
    fn orbits() {
        let x = sp(1, 0, 0, 1);
        let o = orbit(&rotation_z(), &x, 3);
        assert_eq!(o.len(), 3);
        assert!(o.iter().all(|(_, c)| *c == Colour3::Red));
        assert_eq!(orbit(&rotation_z(), &x, 1), vec![(x.clone(), Colour3::Red)]);
        for (p, _) in orbit(&rotation_z(), &x, 20) {
            assert!(orbit(&rotation_y(), &p, 20).iter().all(|(_, c)| *c == Colour3::Red));
        }
    }

    #[test]
    fn rotations_preserve_every_colour_class() {
        for p in enum_points(EnumMode::Quadruple, 21) {
            for r in [rotation_z(), rotation_y()] {
                let img = r.apply(&p);
                assert_eq!(img.colour3(), p.colour3(), "{p}");
                assert_eq!(img.inner(&img).value, BigRational::one());
            }
        }
    }
}
