//! Every checkable assertion about the colourings, evaluated exactly.

use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;
use serde_json::{json, Value};

use crate::fourcolor::verify_table;
use crate::generators::{enum_points, orbit, rotation_y, rotation_z, EnumMode, ExactRotation};
use crate::numtheory::{BigRational, Prime};
use crate::projective::{colour_valuation, normalize_i64, Colour3};
use crate::sphere::{alg_orthogonal, alg_point, SpherePoint};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum ClaimStatus {
    Pass,
    Fail,
    /// The computation contradicts the statement as written; reported, not failed.
    Discrepancy,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Claim {
    pub id: &'static str,
    pub statement: &'static str,
    pub status: ClaimStatus,
    pub values: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClaimsReport {
    pub height: u64,
    pub orbit_length: usize,
    pub claims: Vec<Claim>,
}

impl ClaimsReport {
    pub fn all_pass(&self) -> bool {
        self.claims.iter().all(|c| c.status != ClaimStatus::Fail)
    }

    pub fn get(&self, id: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.id == id)
    }
}

fn status(ok: bool) -> ClaimStatus {
    if ok {
        ClaimStatus::Pass
    } else {
        ClaimStatus::Fail
    }
}

fn colour(v: [i64; 3], p: Prime) -> Colour3 {
    colour_valuation(&normalize_i64(v[0], v[1], v[2]).expect("nonzero"), p)
}

fn alg_orth(u: [i64; 3], v: [i64; 3]) -> Option<bool> {
    let a = alg_point(&normalize_i64(u[0], u[1], u[2]).ok()?)?;
    let b = alg_point(&normalize_i64(v[0], v[1], v[2]).ok()?)?;
    Some(alg_orthogonal(&a, &b))
}

fn dot(u: [i64; 3], v: [i64; 3]) -> i64 {
    u[0] * v[0] + u[1] * v[1] + u[2] * v[2]
}

fn pair_white_for_odd_primes() -> Claim {
    let (u, v) = ([1, 1, 0], [-1, 1, 0]);
    let mut rows = Vec::new();
    let mut ok = true;
    for p in [2, 3, 5, 7, 11] {
        let p = Prime::new(p).unwrap();
        let (cu, cv) = (colour(u, p), colour(v, p));
        ok &= cu == Colour3::White && cv == Colour3::White;
        rows.push(json!({ "p": p.get(), "colours": [cu, cv] }));
    }
    let orth = alg_orth(u, v);
    ok &= orth == Some(true);
    Claim {
        id: "a",
        statement: "(1,1,0) and (-1,1,0) are both White for p in {2,3,5,7,11}, and their unit vectors in Q(√2)^3 are orthogonal",
        status: status(ok),
        values: json!({ "colours": rows, "inner_form": dot(u, v), "qsqrt2_orthogonal": orth }),
    }
}

fn pair_black_at_two() -> Claim {
    let (u, v) = ([-7, 0, 1], [1, 0, 7]);
    let (cu, cv) = (colour(u, Prime::TWO), colour(v, Prime::TWO));
    let orth = alg_orth(u, v);
    let ok = cu == Colour3::Black && cv == Colour3::Black && dot(u, v) == 0 && orth == Some(true);
    Claim {
        id: "b",
        statement: "(-7,0,1) and (1,0,7) are both Black for p = 2 and orthogonal",
        status: status(ok),
        values: json!({ "colours": [cu, cv], "inner_form": dot(u, v), "qsqrt2_orthogonal": orth }),
    }
}

fn pair_black_for_all_primes() -> Claim {
    let (u, v) = ([-1, 3, 1], [-5, 2, 1]);
    let primes = Prime::up_to(100);
    let failures: Vec<u64> = primes
        .iter()
        .filter(|&&p| colour(u, p) != Colour3::Black || colour(v, p) != Colour3::Black)
        .map(|p| p.get())
        .collect();
    let inner = dot(u, v);
    let colours_ok = failures.is_empty();
    Claim {
        id: "c",
        statement: "(-1,3,1) and (-5,2,1) are both Black for every prime p <= 100; as a counterexample pair they would also need to be orthogonal",
        status: match (colours_ok, inner == 0) {
            (false, _) => ClaimStatus::Fail,
            (true, true) => ClaimStatus::Pass,
            (true, false) => ClaimStatus::Discrepancy,
        },
        values: json!({
            "primes_checked": primes.len(),
            "colour_failures": failures,
            "inner_form": inner,
            "norms": [dot(u, u), dot(v, v)],
            "note": "inner product is 5 + 6 + 1 = 12, so the pair is not orthogonal",
        }),
    }
}

fn exactly_one_odd(height: u64) -> Claim {
    let mut total = 0u64;
    let mut bad = Vec::new();
    for p in enum_points(EnumMode::Quadruple, height) {
        total += 1;
        if (p.odd_count() != 1 || p.d().is_even()) && bad.len() < 10 {
            bad.push(p.to_string());
        }
    }
    Claim {
        id: "d",
        statement: "every primitive rational point (a,b,c;d) has exactly one odd numerator and odd d",
        status: status(bad.is_empty()),
        values: json!({ "height": height, "points": total, "violations": bad }),
    }
}

fn first_step(r: &ExactRotation) -> (SpherePoint, Colour3) {
    let x = SpherePoint::from_i64(1, 0, 0, 1).unwrap();
    let p = r.apply(&x);
    let c = p.colour3();
    (p, c)
}

fn orbit_monochromatic(length: usize) -> Claim {
    let x = SpherePoint::from_i64(1, 0, 0, 1).unwrap();
    let z_orbit = orbit(&rotation_z(), &x, length);
    let z_red = z_orbit.iter().all(|(_, c)| *c == Colour3::Red);
    let inner = length.min(30);
    let y_red = z_orbit.iter().take(inner).all(|(p, _)| {
        orbit(&rotation_y(), p, inner)
            .iter()
            .all(|(_, c)| *c == Colour3::Red)
    });
    let (repaired, rc) = first_step(&rotation_z());
    Claim {
        id: "e",
        statement: "orbits of (1,0,0) under the 3-4-5 rotations about z, then y, are entirely Red (cos = 3/5, sin = 4/5)",
        status: status(z_red && y_red),
        values: json!({
            "z_orbit_length": length,
            "y_orbits": [inner, inner],
            "first_step": { "point": repaired, "colour": rc },
        }),
    }
}

fn literal_angle() -> Claim {
    let q = |n: i64| BigRational::new(n.into(), 5.into());
    let z = BigRational::from_integer(BigInt::from(0));
    let o = BigRational::from_integer(BigInt::from(1));
    let literal = ExactRotation::new([
        [q(4), q(-3), z.clone()],
        [q(3), q(4), z.clone()],
        [z.clone(), z, o],
    ])
    .expect("valid rotation");
    let (lp, lc) = first_step(&literal);
    let (rp, rc) = first_step(&rotation_z());
    Claim {
        id: "h",
        statement: "with sin = 3/5 and cos = 4/5 the first rotation step keeps (1,0,0) Red",
        status: if lc == Colour3::Red { ClaimStatus::Pass } else { ClaimStatus::Discrepancy },
        values: json!({
            "literal": { "sin": "3/5", "cos": "4/5", "point": lp, "colour": lc },
            "repaired": { "sin": "4/5", "cos": "3/5", "point": rp, "colour": rc },
            "note": "numerators (4,3) put the odd coordinate second; swapping sine and cosine restores (odd, even)",
        }),
    }
}

fn table_certificate() -> Claim {
    let r = verify_table();
    Claim {
        id: "f",
        statement: "the octant 4-colouring is proper: no two cells that contain an orthogonal pair share a colour",
        status: status(r.passed && r.checked == 676),
        values: json!({ "pairs_checked": r.checked, "constraints": r.constraints.len(), "violations": r.violations.len() }),
    }
}

fn third_rule_label() -> Claim {
    // the third valuation case at p = 2 agrees with "z odd" on every point
    let ok = enum_points(EnumMode::Quadruple, 41).all(|p| {
        let third = colour_valuation(&p.direction(), Prime::TWO) == Colour3::Black;
        third == p.c().is_odd()
    });
    Claim {
        id: "g",
        statement: "the third valuation case (neither the Red nor the White condition) is the Black class, not a second red class",
        status: if ok { ClaimStatus::Discrepancy } else { ClaimStatus::Fail },
        values: json!({ "checked_height": 41, "third_case_is_z_odd": ok }),
    }
}

pub fn claims(height: u64, orbit_length: usize) -> ClaimsReport {
    ClaimsReport {
        height,
        orbit_length,
        claims: vec![
            pair_white_for_odd_primes(),
            pair_black_at_two(),
            pair_black_for_all_primes(),
            exactly_one_odd(height),
            orbit_monochromatic(orbit_length),
            table_certificate(),
            third_rule_label(),
            literal_angle(),
        ],
    }
}
