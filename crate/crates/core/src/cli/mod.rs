//! The `orthochroma` command line.

mod claims;
mod verify;

pub use claims::{claims, Claim, ClaimStatus, ClaimsReport};
pub use verify::{verify_all, CheckResult, VerifyReport};

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::fourcolor::{colour4_exact, colour4_float, Colour4, Colour4Table, SignPattern};
use crate::generators::{circle_scan, enum_points, orbit, rotation_y, rotation_z, EnumMode};
use crate::graphs::{
    build_graph, chromatic_number, chromatic_number_adj, from_json, parse_dimacs, search_4chromatic,
    to_dimacs, to_json, ExactPoint, OrthoGraph, PointSource, SearchConfig, SolverOptions, Strategy,
    DEFAULT_CAP,
};
use crate::numtheory::{p_valuation_int, parse_rational, BigRational, Prime};
use crate::projective::{colour_valuation, normalize};
use crate::sphere::SpherePoint;

/// Environment variable capping the worker pool size.
pub const THREADS_VAR: &str = "ORTHOCHROMA_THREADS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Dimacs,
    Text,
}

/// Settings shared by every subcommand.
#[derive(Debug, Clone, PartialEq, Args, Serialize)]
pub struct RunConfig {
    /// Prime for valuation colourings.
    #[arg(long = "p", global = true, default_value_t = 2)]
    pub p: u64,
    /// Height bound.
    #[arg(long = "H", global = true, default_value_t = 100)]
    pub height: u64,
    /// Orbit length.
    #[arg(long = "N", global = true, default_value_t = 1000)]
    pub orbit_length: usize,
    /// Zero tolerance for float input.
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol: f64,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Candidate budget for search.
    #[arg(long, global = true, default_value_t = 100)]
    pub budget: usize,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    #[serde(skip)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Parser)]
#[command(name = "orthochroma", version, about = "Colourings of rational points on the sphere")]
struct Cli {
    #[command(flatten)]
    config: RunConfig,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ColourMode {
    /// Parity colouring of a rational unit vector.
    Three,
    /// p-adic valuation colouring of a direction.
    Valuation,
    /// Sign-pattern 4-colouring.
    Four,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenMode {
    Stereo,
    Quadruple,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Axis {
    Z,
    Y,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SearchStrategy {
    Random,
    Grow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SourceKind {
    Rational,
    Qsqrt2,
    Orbit,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Enumerate rational sphere points up to the height bound.
    Gen {
        #[arg(long, value_enum, default_value_t = GenMode::Quadruple)]
        mode: GenMode,
    },
    /// Colour a vector given as three fractions or floats.
    Color {
        #[arg(long, value_enum, default_value_t = ColourMode::Three)]
        mode: ColourMode,
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
        #[arg(allow_hyphen_values = true)]
        z: String,
    },
    /// Run the property suites of every module.
    Verify,
    /// Build an orthogonality graph from a file of direction vectors.
    Graph { input: PathBuf },
    /// Exact chromatic number of a points file, JSON graph or DIMACS graph.
    Chromatic {
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Rotation orbit of a rational point.
    Orbit {
        #[arg(long, value_enum, default_value_t = Axis::Z)]
        axis: Axis,
        /// Start point; defaults to 1 0 0.
        #[arg(allow_hyphen_values = true, requires = "y")]
        x: Option<String>,
        #[arg(allow_hyphen_values = true, requires = "z")]
        y: Option<String>,
        #[arg(allow_hyphen_values = true)]
        z: Option<String>,
    },
    /// Rational points on the circle x·u = v·u.
    Circle {
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
    },
    /// Evaluate every checkable claim about the colourings.
    Claims,
    /// Print the 4-colouring table and its certificate.
    Table {
        /// Check this JSON table (pattern -> colour) instead of the built-in one.
        #[arg(long)]
        check: Option<PathBuf>,
    },
    /// Search for induced subgraphs with chromatic number four.
    Search {
        #[arg(long, value_enum, default_value_t = SearchStrategy::Random)]
        strategy: SearchStrategy,
        #[arg(long, default_value_t = 12)]
        size: usize,
        #[arg(long, value_enum, value_delimiter = ',', default_values_t = [SourceKind::Rational, SourceKind::Qsqrt2])]
        sources: Vec<SourceKind>,
        /// Height bound for the point pool.
        #[arg(long, default_value_t = 9)]
        pool_height: u64,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: Vec<u8>,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String, success: bool) -> Self {
        Outcome {
            code: if success { 0 } else { 1 },
            stdout: stdout.into_bytes(),
            stderr: String::new(),
        }
    }

    fn usage(msg: String) -> Self {
        Outcome { code: 2, stdout: Vec::new(), stderr: msg }
    }
}

/// Parses arguments (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome::ok(text, true)
                }
                _ => Outcome::usage(text),
            };
        }
    };
    let out = cli.config.out.clone();
    let mut outcome = match dispatch(&cli.config, &cli.command) {
        Ok(o) => o,
        Err(e) => Outcome::usage(format!("error: {e}\n")),
    };
    if let Some(path) = out {
        if let Err(e) = std::fs::write(&path, &outcome.stdout) {
            return Outcome::usage(format!("error: cannot write {}: {e}\n", path.display()));
        }
        outcome.stdout.clear();
    }
    outcome
}

/// Sizes the global worker pool from `ORTHOCHROMA_THREADS`, if set.
pub fn configure_threads() {
    if let Some(n) = std::env::var(THREADS_VAR).ok().and_then(|s| s.trim().parse::<usize>().ok()) {
        // an already-initialised pool is left alone
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

fn dispatch(cfg: &RunConfig, cmd: &Command) -> Result<Outcome> {
    if cfg.format == Format::Dimacs && !matches!(cmd, Command::Graph { .. }) {
        return Err(Error::InvalidArgument("--format dimacs only applies to graph".into()));
    }
    if !(cfg.tol >= 0.0) {
        return Err(Error::InvalidArgument(format!("tolerance must be >= 0, got {}", cfg.tol)));
    }
    let p = Prime::new(cfg.p)?;
    match cmd {
        Command::Gen { mode } => gen(cfg, *mode),
        Command::Color { mode, x, y, z } => color(cfg, p, *mode, &[x.clone(), y.clone(), z.clone()]),
        Command::Verify => {
            let r = verify_all(p, cfg.height, cfg.orbit_length, cfg.tol, cfg.seed);
            let text = match cfg.format {
                Format::Text => format!("{}{}", header_text(cfg), r.matrix()),
                _ => json_doc(cfg, json!({ "passed": r.passed(), "checks": r.checks })),
            };
            Ok(Outcome::ok(text, r.passed()))
        }
        Command::Graph { input } => {
            let g = build_graph(read_points(&std::fs::read_to_string(input).map_err(io_err)?)?);
            let text = match cfg.format {
                Format::Dimacs => to_dimacs(&g),
                Format::Json => to_json(&g) + "\n",
                Format::Text => format!("{}{} vertices, {} edges\n", header_text(cfg), g.len(), g.edges().len()),
            };
            Ok(Outcome::ok(text, true))
        }
        Command::Chromatic { input, cap } => chromatic(cfg, input, *cap),
        Command::Orbit { axis, x, y, z } => {
            let start: Vec<String> = [x, y, z].into_iter().flatten().cloned().collect();
            orbit_cmd(cfg, *axis, &start)
        }
        Command::Circle { u, v } => {
            let u = rational_point(&split_tokens(std::slice::from_ref(u)))?;
            let v = rational_point(&split_tokens(std::slice::from_ref(v)))?;
            let scan = circle_scan(&u, &v, cfg.height)?;
            let holds = scan.dichotomy_holds();
            let text = match cfg.format {
                Format::Text => {
                    let mut s = header_text(cfg);
                    let _ = writeln!(s, "u = {} ({}), v = {} ({})", scan.u, scan.u_colour, scan.v, scan.v_colour);
                    for (x, c) in &scan.points {
                        let _ = writeln!(s, "{x} {c}");
                    }
                    let _ = writeln!(s, "{} points, dichotomy {}", scan.points.len(), pass_word(holds));
                    s
                }
                _ => json_doc(cfg, json!({ "scan": scan, "dichotomy_holds": holds })),
            };
            Ok(Outcome::ok(text, holds))
        }
        Command::Claims => {
            let r = claims(cfg.height, cfg.orbit_length);
            let text = match cfg.format {
                Format::Text => {
                    let mut s = header_text(cfg);
                    for c in &r.claims {
                        let _ = writeln!(s, "[{}] ({}) {}", status_word(c.status), c.id, c.statement);
                        let _ = writeln!(s, "    {}", c.values);
                    }
                    s
                }
                _ => json_doc(cfg, serde_json::to_value(&r).expect("serialisable")),
            };
            Ok(Outcome::ok(text, r.all_pass()))
        }
        Command::Table { check } => table(cfg, check.as_ref()),
        Command::Search { strategy, size, sources, pool_height, cap } => {
            let sources = sources
                .iter()
                .map(|s| match s {
                    SourceKind::Rational => PointSource::Rational { bound: *pool_height },
                    SourceKind::Qsqrt2 => PointSource::Qsqrt2 { height: (*pool_height).min(i64::MAX as u64) as i64 },
                    SourceKind::Orbit => PointSource::Orbit { length: cfg.orbit_length },
                })
                .collect();
            let strategy = match strategy {
                SearchStrategy::Random => Strategy::Random { size: *size },
                SearchStrategy::Grow => Strategy::Grow { size: *size },
            };
            let config = SearchConfig { sources, strategy, budget: cfg.budget, seed: cfg.seed, cap: *cap };
            let r = search_4chromatic(&config)?;
            let text = match cfg.format {
                Format::Text => format!(
                    "{}pool {} vertices / {} edges, {} candidates, max chi {}, best lower bound {}, {} hits\n",
                    header_text(cfg),
                    r.pool_size,
                    r.pool_edges,
                    r.candidates,
                    r.max_chi,
                    r.best_lower_bound,
                    r.hits.len()
                ),
                _ => config_line(cfg) + &r.to_json_lines(),
            };
            Ok(Outcome::ok(text, true))
        }
    }
}

fn io_err(e: std::io::Error) -> Error {
    Error::InvalidArgument(e.to_string())
}

fn pass_word(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn status_word(s: ClaimStatus) -> &'static str {
    match s {
        ClaimStatus::Pass => "PASS",
        ClaimStatus::Fail => "FAIL",
        ClaimStatus::Discrepancy => "DISCREPANCY",
    }
}

fn header_text(cfg: &RunConfig) -> String {
    format!(
        "# p={} H={} N={} tol={:e} seed={}\n",
        cfg.p, cfg.height, cfg.orbit_length, cfg.tol, cfg.seed
    )
}

fn config_line(cfg: &RunConfig) -> String {
    serde_json::to_string(&json!({ "config": cfg })).expect("serialisable") + "\n"
}

/// A single JSON document with the run configuration attached.
fn json_doc(cfg: &RunConfig, body: Value) -> String {
    let mut body = match body {
        Value::Object(m) => m,
        other => {
            let mut m = serde_json::Map::new();
            m.insert("result".into(), other);
            m
        }
    };
    body.insert("config".into(), serde_json::to_value(cfg).expect("serialisable"));
    serde_json::to_string_pretty(&Value::Object(body)).expect("serialisable") + "\n"
}

/// A vector read from the command line or a file.
#[derive(Debug, Clone, PartialEq)]
pub enum InputVector {
    Exact([BigRational; 3]),
    Float([f64; 3]),
}

impl InputVector {
    /// Fractions are read exactly; any token with a decimal point or
    /// exponent switches to floats.
    pub fn parse(tokens: &[String]) -> Result<Self> {
        if tokens.len() != 3 {
            return Err(Error::Parse(format!("expected three coordinates, got {}", tokens.len())));
        }
        let floaty = tokens.iter().any(|t| {
            let t = t.to_ascii_lowercase();
            t.contains('.') || t.contains('e') || t.contains("inf") || t.contains("nan")
        });
        if floaty {
            let mut v = [0.0; 3];
            for (slot, t) in v.iter_mut().zip(tokens) {
                *slot = t.parse().map_err(|_| Error::Parse(format!("not a number: {t:?}")))?;
            }
            Ok(InputVector::Float(v))
        } else {
            let v: Vec<BigRational> = tokens.iter().map(|t| parse_rational(t)).collect::<Result<_>>()?;
            Ok(InputVector::Exact(v.try_into().expect("three entries")))
        }
    }

    fn exact(&self) -> Result<&[BigRational; 3]> {
        match self {
            InputVector::Exact(v) => Ok(v),
            InputVector::Float(_) => Err(Error::InvalidArgument(
                "this mode needs exact input; write coordinates as integers or fractions".into(),
            )),
        }
    }
}

/// Splits arguments on whitespace and commas, so both `1 0 0` and `"1,0,0"` work.
fn split_tokens(args: &[String]) -> Vec<String> {
    args.iter()
        .flat_map(|a| a.split(|c: char| c.is_whitespace() || c == ',').map(str::to_owned).collect::<Vec<_>>())
        .filter(|t| !t.is_empty())
        .collect()
}

/// Clears denominators, keeping the direction and sign.
fn integer_vector(v: &[BigRational; 3]) -> Result<[BigInt; 3]> {
    if v.iter().all(|q| q.is_zero()) {
        return Err(Error::ZeroVector);
    }
    let l = v.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    Ok([0, 1, 2].map(|i| v[i].numer() * (&l / v[i].denom())))
}

fn rational_point(tokens: &[String]) -> Result<SpherePoint> {
    let v = InputVector::parse(tokens)?;
    match ExactPoint::from_vector(integer_vector(v.exact()?)?)? {
        ExactPoint::Rational(p) => Ok(p),
        ExactPoint::Qsqrt2(p) => Err(Error::InvalidArgument(format!("the unit vector {p} is not rational"))),
    }
}

/// Parses a points file: one direction per line, `#` starts a comment.
pub fn read_points(text: &str) -> Result<Vec<ExactPoint>> {
    let mut out = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens = split_tokens(&[line.to_owned()]);
        let point = InputVector::parse(&tokens)
            .and_then(|v| v.exact().and_then(integer_vector))
            .and_then(ExactPoint::from_vector)
            .map_err(|e| Error::Parse(format!("line {}: {e}", n + 1)))?;
        out.push(point);
    }
    Ok(out)
}

fn gen(cfg: &RunConfig, mode: GenMode) -> Result<Outcome> {
    let mode = match mode {
        GenMode::Stereo => EnumMode::Stereo,
        GenMode::Quadruple => EnumMode::Quadruple,
    };
    let mut s = match cfg.format {
        Format::Text => header_text(cfg),
        _ => config_line(cfg),
    };
    for p in enum_points(mode, cfg.height) {
        match cfg.format {
            Format::Text => {
                let _ = writeln!(s, "{p} {}", p.colour3());
            }
            _ => {
                s.push_str(&serde_json::to_string(&json!({ "point": p, "colour": p.colour3() })).expect("serialisable"));
                s.push('\n');
            }
        }
    }
    Ok(Outcome::ok(s, true))
}

fn color(cfg: &RunConfig, p: Prime, mode: ColourMode, vector: &[String]) -> Result<Outcome> {
    let tokens = split_tokens(vector);
    let v = InputVector::parse(&tokens)?;
    let (colour, extra): (String, Value) = match mode {
        ColourMode::Three => {
            let pt = rational_point(&tokens)?;
            (pt.colour3().to_string(), json!({ "point": pt }))
        }
        ColourMode::Valuation => {
            let [x, y, z] = integer_vector(v.exact()?)?;
            let t = normalize(x, y, z)?;
            let exps: Vec<String> = t.coords().iter().map(|c| p_valuation_int(c, p).to_string()).collect();
            (colour_valuation(&t, p).to_string(), json!({ "direction": t, "exponents": exps, "p": p.get() }))
        }
        ColourMode::Four => {
            let c: Colour4 = match &v {
                InputVector::Exact(q) => colour4_exact(q)?,
                InputVector::Float(f) => colour4_float(*f, cfg.tol)?,
            };
            (c.to_string(), json!({ "exact": matches!(v, InputVector::Exact(_)) }))
        }
    };
    let text = match cfg.format {
        Format::Text => colour + "\n",
        _ => {
            let mut body = json!({ "input": tokens, "colour": colour });
            if let (Value::Object(b), Value::Object(e)) = (&mut body, extra) {
                b.extend(e);
            }
            json_doc(cfg, body)
        }
    };
    Ok(Outcome::ok(text, true))
}

fn load_graph(text: &str) -> Result<(Option<OrthoGraph>, Vec<Vec<usize>>)> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .unwrap_or("");
    if first.starts_with('{') {
        let g = from_json(text)?;
        let adj = g.adjacency().to_vec();
        return Ok((Some(g), adj));
    }
    if first.starts_with("c ") || first.starts_with("p ") || first == "c" {
        let d = parse_dimacs(text)?;
        let adj = d.adjacency();
        let g = if d.vertices.is_some() { Some(d.into_graph()?) } else { None };
        return Ok((g, adj));
    }
    let g = build_graph(read_points(text)?);
    let adj = g.adjacency().to_vec();
    Ok((Some(g), adj))
}

fn chromatic(cfg: &RunConfig, input: &PathBuf, cap: usize) -> Result<Outcome> {
    let text = std::fs::read_to_string(input).map_err(io_err)?;
    let (graph, adj) = load_graph(&text)?;
    let opts = SolverOptions { cap };
    let solved = match &graph {
        Some(g) => chromatic_number(g, opts),
        None => chromatic_number_adj(&adj, opts),
    };
    let edges = adj.iter().map(Vec::len).sum::<usize>() / 2;
    let r = match solved {
        Ok(r) => r,
        Err(Error::TooLarge { vertices, cap, lower, upper }) => {
            let msg = json_doc(
                cfg,
                json!({ "vertices": vertices, "edges": edges, "chi": null, "cap": cap, "lower": lower, "upper": upper }),
            );
            return Ok(Outcome {
                code: 1,
                stdout: msg.into_bytes(),
                stderr: format!("graph exceeds the exact-solve cap of {cap} vertices\n"),
            });
        }
        Err(e) => return Err(e),
    };
    let text = match cfg.format {
        Format::Text => format!(
            "{}{} vertices, {} edges, chi = {} (clique {}, greedy {})\n",
            header_text(cfg),
            adj.len(),
            edges,
            r.chi,
            r.clique_lower,
            r.dsatur_upper
        ),
        _ => json_doc(
            cfg,
            json!({
                "vertices": adj.len(),
                "edges": edges,
                "chi": r.chi,
                "clique_lower": r.clique_lower,
                "dsatur_upper": r.dsatur_upper,
                "clique": r.clique,
                "witness": r.witness,
            }),
        ),
    };
    Ok(Outcome::ok(text, true))
}

fn orbit_cmd(cfg: &RunConfig, axis: Axis, start: &[String]) -> Result<Outcome> {
    let start = if start.is_empty() {
        SpherePoint::from_i64(1, 0, 0, 1)?
    } else {
        rational_point(&split_tokens(start))?
    };
    let r = match axis {
        Axis::Z => rotation_z(),
        Axis::Y => rotation_y(),
    };
    let points = orbit(&r, &start, cfg.orbit_length);
    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    for (_, c) in &points {
        *counts.entry(c.to_string()).or_default() += 1;
    }
    let mut s = match cfg.format {
        Format::Text => header_text(cfg),
        _ => config_line(cfg),
    };
    for (k, (p, c)) in points.iter().enumerate() {
        match cfg.format {
            Format::Text => {
                let _ = writeln!(s, "{k} {p} {c}");
            }
            _ => {
                s.push_str(&serde_json::to_string(&json!({ "step": k, "point": p, "colour": c })).expect("serialisable"));
                s.push('\n');
            }
        }
    }
    let mono = counts.len() <= 1;
    match cfg.format {
        Format::Text => {
            let _ = writeln!(s, "monochromatic: {mono}");
        }
        _ => {
            s.push_str(&serde_json::to_string(&json!({ "summary": { "length": points.len(), "colours": counts, "monochromatic": mono } })).expect("serialisable"));
            s.push('\n');
        }
    }
    Ok(Outcome::ok(s, true))
}

fn table(cfg: &RunConfig, check: Option<&PathBuf>) -> Result<Outcome> {
    let t = match check {
        None => Colour4Table::standard(),
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(io_err)?;
            let map: BTreeMap<String, Colour4> =
                serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
            let mut t = Colour4Table::standard();
            let mut seen = 0;
            for (k, c) in map {
                let p: SignPattern = k.parse()?;
                t = t.with(p, c);
                seen += 1;
            }
            if seen != 26 {
                return Err(Error::InvalidArgument(format!("table must list all 26 patterns, got {seen}")));
            }
            t
        }
    };
    let r = t.verify();
    let text = match cfg.format {
        Format::Text => {
            let mut s = header_text(cfg);
            for (p, c) in t.entries() {
                let _ = writeln!(s, "{p} {c}");
            }
            let _ = writeln!(
                s,
                "certificate: {} ({} pairs, {} constraints, {} violations)",
                pass_word(r.passed),
                r.checked,
                r.constraints.len(),
                r.violations.len()
            );
            s
        }
        _ => json_doc(
            cfg,
            json!({
                "table": t.to_json_map(),
                "certificate": {
                    "passed": r.passed,
                    "checked": r.checked,
                    "constraints": r.constraints.len(),
                    "violations": r.violations,
                },
            }),
        ),
    };
    Ok(Outcome::ok(text, r.passed))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("orthochroma").chain(args.iter().copied()))
    }

    #[test]
    fn four_colour_of_z_axis() {
        let o = run_args(&["color", "--mode", "four", "--format", "text", "0", "0", "1"]);
        assert_eq!(o.code, 0);
        assert_eq!(String::from_utf8(o.stdout).unwrap(), "Black\n");
    }

    #[test]
    fn negative_and_fractional_input() {
        let o = run_args(&["--format", "text", "color", "--mode", "valuation", "-7", "0", "1"]);
        assert_eq!(String::from_utf8(o.stdout).unwrap(), "Black\n");
        let o = run_args(&["--format", "text", "color", "3/5", "4/5", "0"]);
        assert_eq!(String::from_utf8(o.stdout).unwrap(), "Red\n");
        let o = run_args(&["--format", "text", "color", "--mode", "four", "0.5", "-1e-12", "-0.2"]);
        assert_eq!(o.code, 0);
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_args(&["frobnicate"]).code, 2);
        assert_eq!(run_args(&["color", "1", "2"]).code, 2);
        assert_eq!(run_args(&["--p", "4", "claims"]).code, 2);
        assert_eq!(run_args(&["color", "1", "1", "1"]).code, 2);
        assert_eq!(run_args(&["--format", "dimacs", "claims"]).code, 2);
    }

    #[test]
    fn float_front_end_only_for_four() {
        assert_eq!(run_args(&["color", "--mode", "three", "0.6", "0.8", "0"]).code, 2);
    }

    #[test]
    fn points_file() {
        let pts = read_points("1 0 0\n0 1 0 # y axis\n\n0,0,1\n1 1 0\n").unwrap();
        assert_eq!(pts.len(), 4);
        assert!(read_points("1 2\n").is_err());
        assert!(read_points("1 1 1\n").is_err());
    }
}
