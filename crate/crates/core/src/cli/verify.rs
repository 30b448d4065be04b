//! Randomised and exhaustive property checks for every module, runnable from
//! the command line. Each check carries its own small oracle.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::fourcolor::{colour4, colour4_float, verify_table, SignPattern};
use crate::generators::{
    circle_scan_in, enum_points, orbit, quadruples_i64, rotation_y, rotation_z, EnumMode,
};
use crate::graphs::{build_graph, chromatic_number_adj, ExactPoint, SolverOptions};
use crate::numtheory::{p_valuation, BigRational, Prime, QSqrt2, ValExponent};
use crate::projective::{colour_valuation, line_scan, normalize, normalize_i64, Colour3};
use crate::sphere::{alg_point, stereo_inverse, stereo_project, SpherePoint};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub module: &'static str,
    pub check: &'static str,
    pub passed: bool,
    pub cases: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub p: u64,
    pub height: u64,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// One line per check, aligned.
    pub fn matrix(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            s.push_str(&format!("{mark}  {:<11} {:<38} {:>8}", c.module, c.check, c.cases));
            if let Some(ce) = &c.counterexample {
                s.push_str(&format!("  counterexample: {ce}"));
            }
            s.push('\n');
        }
        s
    }
}

struct Check {
    module: &'static str,
    check: &'static str,
    cases: u64,
    counterexample: Option<String>,
}

impl Check {
    fn new(module: &'static str, check: &'static str) -> Self {
        Check { module, check, cases: 0, counterexample: None }
    }

    fn case(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(describe());
        }
    }

    fn done(self) -> CheckResult {
        CheckResult {
            module: self.module,
            check: self.check,
            passed: self.counterexample.is_none(),
            cases: self.cases,
            counterexample: self.counterexample,
        }
    }
}

fn rand_rational(rng: &mut ChaCha8Rng, nonzero: bool) -> BigRational {
    loop {
        let n: i64 = rng.gen_range(-2000..=2000);
        let d: i64 = rng.gen_range(1..=2000);
        if !nonzero || n != 0 {
            return BigRational::new(n.into(), d.into());
        }
    }
}

fn rand_vec(rng: &mut ChaCha8Rng, h: i64) -> [i64; 3] {
    loop {
        let v = [(); 3].map(|_| rng.gen_range(-h..=h));
        if v != [0, 0, 0] {
            return v;
        }
    }
}

/// Exponent of p in a nonzero integer by repeated division.
fn naive_exponent(mut n: i64, p: i64) -> i64 {
    let mut k = 0;
    while n % p == 0 {
        n /= p;
        k += 1;
    }
    k
}

fn numtheory(p: Prime, rng: &mut ChaCha8Rng) -> Vec<CheckResult> {
    let mut naive = Check::new("numtheory", "valuation matches trial division");
    for _ in 0..2000 {
        let n = rng.gen_range(1..=1_000_000i64) * if rng.gen() { 1 } else { -1 };
        let d = rng.gen_range(1..=1_000_000i64);
        let q = BigRational::new(n.into(), d.into());
        // reduce first so the naive count sees coprime parts
        let g = n.gcd(&d);
        let want = naive_exponent(n / g, p.get() as i64) - naive_exponent(d / g, p.get() as i64);
        naive.case(p_valuation(&q, p) == ValExponent::Finite(want), || format!("{q}"));
    }

    let mut mult = Check::new("numtheory", "valuation multiplicative");
    let mut ultra = Check::new("numtheory", "valuation ultrametric");
    for _ in 0..2000 {
        let a = rand_rational(rng, false);
        let b = rand_rational(rng, false);
        let prod = p_valuation(&(&a * &b), p);
        mult.case(prod == p_valuation(&a, p) + p_valuation(&b, p), || format!("{a}, {b}"));
        let (va, vb) = (p_valuation(&a, p), p_valuation(&b, p));
        let max_nu = if va.nu_le(&vb) { vb } else { va };
        let vs = p_valuation(&(&a + &b), p);
        ultra.case(!vs.nu_gt(&max_nu), || format!("{a}, {b}"));
    }

    let mut field = Check::new("numtheory", "Q(sqrt2) field laws");
    for _ in 0..1000 {
        let x = QSqrt2::new(rand_rational(rng, false), rand_rational(rng, false));
        let y = QSqrt2::new(rand_rational(rng, false), rand_rational(rng, false));
        let z = QSqrt2::new(rand_rational(rng, false), rand_rational(rng, false));
        let mut ok = &(&x * &y) * &z == &x * &(&y * &z);
        ok &= &x * &(&y + &z) == &(&x * &y) + &(&x * &z);
        if !x.is_zero() {
            ok &= &x * &x.inv().unwrap() == QSqrt2::one();
        }
        // sign agrees with floating point when far from zero
        let f = x.to_f64();
        if f.abs() > 1e-6 {
            ok &= (f > 0.0) == (x.sign() == std::cmp::Ordering::Greater);
        }
        field.case(ok, || format!("{x}, {y}, {z}"));
    }
    vec![naive.done(), mult.done(), ultra.done(), field.done()]
}

fn projective(p: Prime, height: u64, rng: &mut ChaCha8Rng) -> Vec<CheckResult> {
    let mut inv = Check::new("projective", "colour scale and sign invariant");
    for _ in 0..2000 {
        let v = rand_vec(rng, 1000);
        let t = normalize_i64(v[0], v[1], v[2]).unwrap();
        let c = colour_valuation(&t, p);
        let k: i64 = rng.gen_range(1..=50) * if rng.gen() { 1 } else { -1 };
        let w = v.map(|x| BigInt::from(x * k));
        let s = normalize(w[0].clone(), w[1].clone(), w[2].clone()).unwrap();
        inv.case(colour_valuation(&s, p) == c && s == t, || format!("{v:?} * {k}"));
    }

    // direct recomputation of the three rules from exponents of the raw vector
    let mut rules = Check::new("projective", "colour rules by direct exponents");
    let pp = p.get() as i64;
    for _ in 0..2000 {
        let v = rand_vec(rng, 100_000);
        let e = v.map(|x| if x == 0 { i64::MAX } else { naive_exponent(x, pp) });
        let want = if e[0] < e[1] && e[0] < e[2] {
            Colour3::Red
        } else if e[0] >= e[1] && e[1] < e[2] {
            Colour3::White
        } else {
            Colour3::Black
        };
        let t = normalize_i64(v[0], v[1], v[2]).unwrap();
        rules.case(colour_valuation(&t, p) == want, || format!("{v:?}"));
    }

    let mut lines = Check::new("projective", "lines carry at most two colours");
    let lh = height.min(20) as i64;
    for _ in 0..20 {
        let l = rand_vec(rng, 12);
        let scan = line_scan(l, lh, p).unwrap();
        lines.case(scan.colours.len() <= 2, || format!("line {l:?}"));
    }
    vec![inv.done(), rules.done(), lines.done()]
}

fn sphere(height: u64, rng: &mut ChaCha8Rng) -> Vec<CheckResult> {
    let pts: Vec<[i64; 4]> = quadruples_i64(height);
    let mut odd = Check::new("sphere", "exactly one odd numerator, odd d");
    for q in &pts {
        let n_odd = q[..3].iter().filter(|x| x.rem_euclid(2) == 1).count();
        odd.case(n_odd == 1 && q[3] % 2 == 1, || format!("{q:?}"));
    }

    let mut colour = Check::new("sphere", "parity colour equals 2-adic colour");
    let mut dual = Check::new("sphere", "same parity colour iff odd inner form");
    for _ in 0..5000 {
        let x = pts[rng.gen_range(0..pts.len())];
        let y = pts[rng.gen_range(0..pts.len())];
        let px = SpherePoint::from_i64(x[0], x[1], x[2], x[3]).unwrap();
        let py = SpherePoint::from_i64(y[0], y[1], y[2], y[3]).unwrap();
        colour.case(px.colour3() == colour_valuation(&px.direction(), Prime::TWO), || px.to_string());
        let form = x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
        dual.case((px.colour3() == py.colour3()) == (form % 2 != 0), || format!("{px}, {py}"));
    }

    let mut stereo = Check::new("sphere", "stereographic round trip");
    for _ in 0..2000 {
        let u = rand_rational(rng, false);
        let v = rand_rational(rng, false);
        let p = stereo_inverse(&u, &v);
        stereo.case(stereo_project(&p) == Some((u.clone(), v.clone())), || format!("{u}, {v}"));
    }

    let mut alg = Check::new("sphere", "Q(sqrt2) points have unit norm");
    for _ in 0..2000 {
        let v = rand_vec(rng, 60);
        let t = normalize_i64(v[0], v[1], v[2]).unwrap();
        let n = t.norm2();
        let reachable = [BigInt::one(), BigInt::from(2)].iter().any(|k| {
            let (q, r) = n.div_rem(k);
            r.is_zero() && q.sqrt().pow(2) == q
        });
        match alg_point(&t) {
            Some(a) => alg.case(reachable && a.norm2() == QSqrt2::one(), || t.to_string()),
            None => alg.case(!reachable, || t.to_string()),
        }
    }
    vec![odd.done(), colour.done(), dual.done(), stereo.done(), alg.done()]
}

fn fourcolor(tol: f64, rng: &mut ChaCha8Rng) -> Vec<CheckResult> {
    let mut table = Check::new("fourcolor", "table certificate (676 pairs)");
    let r = verify_table();
    table.case(r.passed && r.checked == 676, || format!("{} violations", r.violations.len()));

    let mut anti = Check::new("fourcolor", "antipodal cells agree");
    for p in SignPattern::all() {
        anti.case(colour4(p) == colour4(p.antipode()), || p.to_string());
    }

    let mut float = Check::new("fourcolor", "random orthogonal pairs differ");
    let floor = 10.0 * tol;
    while float.cases < 20_000 {
        let u: [f64; 3] = [(); 3].map(|_| rng.gen_range(-1.0..1.0));
        let w: [f64; 3] = [(); 3].map(|_| rng.gen_range(-1.0..1.0));
        let v = [
            u[1] * w[2] - u[2] * w[1],
            u[2] * w[0] - u[0] * w[2],
            u[0] * w[1] - u[1] * w[0],
        ];
        if u.iter().chain(v.iter()).any(|c| c.abs() < floor) {
            continue;
        }
        let (a, b) = (colour4_float(u, tol).unwrap(), colour4_float(v, tol).unwrap());
        float.case(a != b, || format!("{u:?} {v:?}"));
    }
    vec![table.done(), anti.done(), float.done()]
}

/// Exhaustive k^n colouring search.
fn brute_chi(n: usize, edges: &[(usize, usize)]) -> usize {
    if n == 0 {
        return 0;
    }
    for k in 1..=n {
        let mut c = vec![0usize; n];
        loop {
            if edges.iter().all(|&(i, j)| c[i] != c[j]) {
                return k;
            }
            let mut i = 0;
            while i < n {
                c[i] += 1;
                if c[i] < k {
                    break;
                }
                c[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
        }
    }
    n
}

fn graphs(rng: &mut ChaCha8Rng) -> Vec<CheckResult> {
    let mut solver = Check::new("graphs", "solver matches brute force");
    for _ in 0..60 {
        let n = rng.gen_range(1..=8);
        let mut adj = vec![Vec::new(); n];
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(0.45) {
                    adj[i].push(j);
                    adj[j].push(i);
                    edges.push((i, j));
                }
            }
        }
        let got = chromatic_number_adj(&adj, SolverOptions::default()).unwrap().chi;
        solver.case(got == brute_chi(n, &edges), || format!("{edges:?}"));
    }

    let mut rational = Check::new("graphs", "rational graphs are 3-colourable");
    let pool: Vec<SpherePoint> = enum_points(EnumMode::Quadruple, 25).collect();
    for _ in 0..20 {
        let pts: Vec<ExactPoint> = (0..16)
            .map(|_| ExactPoint::Rational(pool[rng.gen_range(0..pool.len())].clone()))
            .collect();
        let g = build_graph(pts);
        let chi = chromatic_number_adj(g.adjacency(), SolverOptions::default()).unwrap().chi;
        let parity = g.parity_colouring().map(|c| crate::graphs::validate_colouring(&g, &c));
        let ok = chi <= 3 && matches!(parity, Some(Ok(v)) if v.valid);
        rational.case(ok, || format!("{} vertices", g.len()));
    }
    vec![solver.done(), rational.done()]
}

fn generators(height: u64, orbit_len: usize, rng: &mut ChaCha8Rng) -> Vec<CheckResult> {
    let mut enum_check = Check::new("generators", "enumeration complete");
    let h = height.min(25) as i64;
    let mut brute = Vec::new();
    for d in (1..=h).step_by(2) {
        for a in -d..=d {
            for b in -d..=d {
                for c in -d..=d {
                    if a * a + b * b + c * c == d * d && a.gcd(&b).gcd(&c).gcd(&d) == 1 {
                        brute.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    brute.sort_by_key(|q| (q[3], q[0], q[1], q[2]));
    let got: Vec<[i64; 4]> = enum_points(EnumMode::Quadruple, h as u64)
        .map(|p| p.to_i64().unwrap())
        .collect();
    enum_check.case(got == brute, || format!("{} vs {} points", got.len(), brute.len()));

    let mut orb = Check::new("generators", "3-4-5 orbits stay Red");
    let x = SpherePoint::from_i64(1, 0, 0, 1).unwrap();
    let zs = orbit(&rotation_z(), &x, orbit_len);
    for (p, c) in &zs {
        orb.case(*c == Colour3::Red, || p.to_string());
    }
    for (p, _) in zs.iter().take(10) {
        for (q, c) in orbit(&rotation_y(), p, 10) {
            orb.case(c == Colour3::Red, || q.to_string());
        }
    }

    let mut circles = Check::new("generators", "circle dichotomy");
    let pts: Vec<SpherePoint> = enum_points(EnumMode::Quadruple, height.min(60)).collect();
    let small: Vec<&SpherePoint> = pts.iter().filter(|p| p.d() <= &BigInt::from(9)).collect();
    for _ in 0..10 {
        let u = small[rng.gen_range(0..small.len())];
        let v = small[rng.gen_range(0..small.len())];
        if *u == v.antipode() {
            continue;
        }
        let scan = circle_scan_in(u, v, &pts).unwrap();
        circles.case(scan.dichotomy_holds(), || format!("{u}, {v}"));
    }
    vec![enum_check.done(), orb.done(), circles.done()]
}

/// Runs every suite with the given parameters.
pub fn verify_all(p: Prime, height: u64, orbit_len: usize, tol: f64, seed: u64) -> VerifyReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = Vec::new();
    checks.extend(numtheory(p, &mut rng));
    checks.extend(projective(p, height, &mut rng));
    checks.extend(sphere(height, &mut rng));
    checks.extend(fourcolor(tol, &mut rng));
    checks.extend(graphs(&mut rng));
    checks.extend(generators(height, orbit_len, &mut rng));
    VerifyReport { p: p.get(), height, seed, checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes() {
        let r = verify_all(Prime::new(3).unwrap(), 30, 50, 1e-9, 7);
        assert!(r.passed(), "{}", r.matrix());
    }

    #[test]
    fn brute_chi_small() {
        assert_eq!(brute_chi(3, &[(0, 1), (1, 2), (0, 2)]), 3);
        assert_eq!(brute_chi(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]), 2);
        assert_eq!(brute_chi(2, &[]), 1);
    }
}
