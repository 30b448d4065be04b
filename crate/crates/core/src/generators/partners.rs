use num_integer::{Integer, Roots};

use crate::error::{Error, Result};
use crate::sphere::SpherePoint;

type V3 = [i128; 3];

fn dot(u: V3, v: V3) -> i128 {
    u[0] * v[0] + u[1] * v[1] + u[2] * v[2]
}

fn axpy(k: i128, u: V3, v: V3) -> V3 {
    [v[0] + k * u[0], v[1] + k * u[1], v[2] + k * u[2]]
}

/// A basis of the rank-2 lattice `{w ∈ Z³ : w·p = 0}` for primitive `p`.
fn orthogonal_lattice([a, b, c]: V3) -> (V3, V3) {
    let e = a.extended_gcd(&b);
    let g = e.gcd;
    if g == 0 {
        return ([1, 0, 0], [0, 1, 0]);
    }
    // cross product of the two vectors is -p, so they span the whole lattice
    ([b / g, -a / g, 0], [-c * e.x, -c * e.y, g])
}

/// Lagrange–Gauss reduction.
fn reduce(mut e1: V3, mut e2: V3) -> (V3, V3) {
    loop {
        if dot(e2, e2) < dot(e1, e1) {
            std::mem::swap(&mut e1, &mut e2);
        }
        let n = dot(e1, e1);
        let t = dot(e1, e2);
        let mu = Integer::div_floor(&(2 * t + n), &(2 * n));
        if mu == 0 {
            return (e1, e2);
        }
        e2 = axpy(-mu, e1, e2);
    }
}

/// Every rational sphere point with denominator at most `bound` that is
/// orthogonal to `p`, in canonical order.
///
/// Such points are the primitive vectors of square norm in the lattice
/// orthogonal to `p`; the search enumerates that lattice inside the ball of
/// radius `bound` over a reduced basis.
pub fn orthogonal_partners(p: &SpherePoint, bound: u64) -> Result<Vec<SpherePoint>> {
    let [a, b, c, _] = p.to_i64().ok_or_else(|| {
        Error::InvalidArgument(format!("{p} is too large for the lattice search"))
    })?;
    if bound > 1 << 24 {
        return Err(Error::InvalidArgument(format!("bound {bound} too large")));
    }
    let (e1, e2) = orthogonal_lattice([a as i128, b as i128, c as i128]);
    let (e1, e2) = reduce(e1, e2);
    let (qa, qb, qc) = (dot(e1, e1), dot(e1, e2), dot(e2, e2));
    let det = qa * qc - qb * qb;
    let h2 = (bound as i128) * (bound as i128);
    let mut out = Vec::new();
    let mut push = |m: i128, n: i128| {
        let q = qa * m * m + 2 * qb * m * n + qc * n * n;
        if q > h2 {
            return;
        }
        let s = q.sqrt();
        if s * s != q {
            return;
        }
        let w = axpy(n, e2, [m * e1[0], m * e1[1], m * e1[2]]);
        for sign in [1, -1] {
            let [x, y, z] = w.map(|t| sign * t);
            out.push(
                SpherePoint::new(x.into(), y.into(), z.into(), s.into())
                    .expect("primitive lattice vector of square norm"),
            );
        }
    };
    // half lattice: (m, 0) with m > 0, and (m, n) with n > 0
    push(1, 0);
    // det·n² <= qa·h2 is necessary for a vector of norm <= h2
    let mut n = 1i128;
    while det * n * n <= qa * h2 {
        let disc = qa * h2 - det * n * n;
        let root = disc.sqrt() + 1;
        let lo = Integer::div_floor(&(-qb * n - root), &qa);
        let hi = Integer::div_ceil(&(-qb * n + root), &qa);
        for m in lo..=hi {
            if m.gcd(&n) == 1 {
                push(m, n);
            }
        }
        n += 1;
    }
    out.sort_unstable();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{enum_points, EnumMode};

    fn sp(a: i64, b: i64, c: i64, d: i64) -> SpherePoint {
        SpherePoint::from_i64(a, b, c, d).unwrap()
    }

    #[test]
    fn lattice_basis_spans() {
        for p in [[1, 2, 2], [0, 0, 1], [2, 3, 6], [0, 3, 4], [1, 0, 0], [-4, 0, 3]] {
            let (e1, e2) = orthogonal_lattice(p);
            assert_eq!(dot(e1, p), 0);
            assert_eq!(dot(e2, p), 0);
            let cross = [
                e1[1] * e2[2] - e1[2] * e2[1],
                e1[2] * e2[0] - e1[0] * e2[2],
                e1[0] * e2[1] - e1[1] * e2[0],
            ];
            assert_eq!(dot(cross, cross), dot(p, p), "{p:?}");
        }
    }

    #[test]
    fn axis_partners() {
        let got = orthogonal_partners(&sp(0, 0, 1, 1), 5).unwrap();
        // circle z = 0: (±1,0),(0,±1),(±3,±4),(±4,±3)
        assert_eq!(got.len(), 12);
        assert!(got.iter().all(|q| q.c() == &0.into()));
    }

    #[test]
    fn matches_brute_force() {
        let h = 35;
        let all: Vec<_> = enum_points(EnumMode::Quadruple, h).collect();
        for p in all.iter().step_by(37).chain([&sp(1, 2, 2, 3), &sp(1, 0, 0, 1)]) {
            let brute: Vec<_> = all
                .iter()
                .filter(|q| p.inner_form(q) == 0.into())
                .cloned()
                .collect();
            assert_eq!(orthogonal_partners(p, h).unwrap(), brute, "{p}");
        }
    }
}
