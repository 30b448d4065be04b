use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::generators::{enum_points, EnumMode};
use crate::projective::Colour3;
use crate::sphere::SpherePoint;

/// Rational points of height at most a bound on the circle `x·u = v·u`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CircleScan {
    pub u: SpherePoint,
    pub v: SpherePoint,
    pub u_colour: Colour3,
    pub v_colour: Colour3,
    pub points: Vec<(SpherePoint, Colour3)>,
    /// Every found point has the colour of `u`.
    pub all_match_u: bool,
    /// No found point has the colour of `u`.
    pub none_match_u: bool,
}

impl CircleScan {
    /// True when the outcome is the one parity predicts for this pair.
    pub fn dichotomy_holds(&self) -> bool {
        if self.u_colour == self.v_colour {
            self.all_match_u
        } else {
            self.none_match_u
        }
    }
}

pub fn circle_scan(u: &SpherePoint, v: &SpherePoint, height: u64) -> Result<CircleScan> {
    let candidates: Vec<_> = enum_points(EnumMode::Quadruple, height).collect();
    circle_scan_in(u, v, &candidates)
}

/// Filters `candidates` by the exact equation `x·u = v·u`.
pub fn circle_scan_in(u: &SpherePoint, v: &SpherePoint, candidates: &[SpherePoint]) -> Result<CircleScan> {
    if *u == v.antipode() {
        return Err(Error::AntipodalCircle);
    }
    // (x·u)(d_x d_u) = form(x, u), so x·u = v·u  <=>  form(x,u)·d_v = form(v,u)·d_x
    let vu = v.inner_form(u);
    let points: Vec<_> = match (u.to_i64(), v.to_i64(), vu.clone().try_into().ok()) {
        (Some(us), Some(vs), Some(vu)) => {
            let vu: i128 = vu;
            candidates
                .iter()
                .filter(|x| match x.to_i64() {
                    Some(xs) => {
                        let xu: i128 = (0..3).map(|i| xs[i] as i128 * us[i] as i128).sum();
                        xu * vs[3] as i128 == vu * xs[3] as i128
                    }
                    None => on_circle(x, u, v, &vu.into()),
                })
                .map(|x| (x.clone(), x.colour3()))
                .collect()
        }
        _ => candidates
            .iter()
            .filter(|x| on_circle(x, u, v, &vu))
            .map(|x| (x.clone(), x.colour3()))
            .collect(),
    };
    let u_colour = u.colour3();
    Ok(CircleScan {
        u: u.clone(),
        v: v.clone(),
        u_colour,
        v_colour: v.colour3(),
        all_match_u: points.iter().all(|(_, c)| *c == u_colour),
        none_match_u: points.iter().all(|(_, c)| *c != u_colour),
        points,
    })
}

fn on_circle(x: &SpherePoint, u: &SpherePoint, v: &SpherePoint, vu: &BigInt) -> bool {
    x.inner_form(u) * v.d() == vu * x.d()
}
