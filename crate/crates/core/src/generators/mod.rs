//! Generation of exact sphere points: enumeration by height, rotation
//! orbits, coverage statistics, circle scans and orthogonal partners.

mod circle;
mod coverage;
mod partners;
mod rotation;

pub use circle::{circle_scan, circle_scan_in, CircleScan};
pub use coverage::{coverage, CoverageGrid, CoverageReport};
pub use partners::orthogonal_partners;
pub use rotation::{orbit, rotation_y, rotation_z, ExactRotation};

use num_integer::{Integer, Roots};
use serde::{Deserialize, Serialize};

use crate::sphere::SpherePoint;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EnumMode {
    /// Inverse stereographic images of `(u, v)` with numerators and
    /// denominators of magnitude at most the bound.
    Stereo,
    /// All primitive quadruples with `d` at most the bound.
    Quadruple,
}

impl std::str::FromStr for EnumMode {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "stereo" => Ok(EnumMode::Stereo),
            "quadruple" => Ok(EnumMode::Quadruple),
            _ => Err(crate::Error::Parse(format!("unknown enumeration mode {s:?}"))),
        }
    }
}

/// Deterministic, duplicate-free stream of sphere points.
///
/// Quadruple mode yields points in canonical order (by `d`, then `a, b, c`).
pub fn enum_points(mode: EnumMode, bound: u64) -> Box<dyn Iterator<Item = SpherePoint>> {
    match mode {
        EnumMode::Quadruple => Box::new((1..=bound).step_by(2).flat_map(|d| {
            quadruples_with_d(d as i64)
                .into_iter()
                .map(|[a, b, c, d]| SpherePoint::from_i64(a, b, c, d).expect("valid quadruple"))
        })),
        EnumMode::Stereo => {
            let fracs = fractions(bound as i64);
            let second = fracs.clone();
            Box::new(fracs.into_iter().flat_map(move |u| {
                second
                    .clone()
                    .into_iter()
                    .map(move |v| stereo_inverse_small(u, v))
            }))
        }
    }
}

/// Primitive quadruples with `d` at most `bound`, as machine integers, in
/// canonical order.
pub fn quadruples_i64(bound: u64) -> Vec<[i64; 4]> {
    (1..=bound as i64)
        .step_by(2)
        .flat_map(quadruples_with_d)
        .collect()
}

/// All primitive `(a, b, c)` with `a² + b² + c² = d²`, sorted.
fn quadruples_with_d(d: i64) -> Vec<[i64; 4]> {
    let d2 = d * d;
    let mut out = Vec::new();
    for a in 0..=d {
        let rem_a = d2 - a * a;
        for b in 0..=rem_a.sqrt() {
            let rem = rem_a - b * b;
            let c = rem.sqrt();
            if c * c != rem || a.gcd(&b).gcd(&c) != 1 {
                continue;
            }
            for sa in signs(a) {
                for sb in signs(b) {
                    for sc in signs(c) {
                        out.push([sa * a, sb * b, sc * c, d]);
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

fn signs(x: i64) -> &'static [i64] {
    if x == 0 {
        &[1]
    } else {
        &[-1, 1]
    }
}

/// Reduced fractions `n/m` with `|n| <= bound`, `1 <= m <= bound`.
fn fractions(bound: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for m in 1..=bound {
        for n in -bound..=bound {
            if n.gcd(&m) == 1 {
                out.push((n, m));
            }
        }
    }
    out
}

/// Inverse stereographic projection of `(p/q, r/s)` in machine arithmetic.
fn stereo_inverse_small((p, q): (i64, i64), (r, s): (i64, i64)) -> SpherePoint {
    let (p, q, r, s) = (p as i128, q as i128, r as i128, s as i128);
    let qs = q * q * s * s;
    let ps = p * p * s * s;
    let rq = r * r * q * q;
    let den = qs + ps + rq;
    let mut v = [2 * p * q * s * s, 2 * r * s * q * q, ps + rq - qs, den];
    let g = v.iter().fold(0i128, |g, x| g.gcd(x));
    for x in &mut v {
        *x /= g;
    }
    SpherePoint::new(v[0].into(), v[1].into(), v[2].into(), v[3].into())
        .expect("inverse stereographic image is a unit vector")
}
