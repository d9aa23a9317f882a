//! The `superspace` command line.
//!
//! Every subcommand reads one JSON document (a file path, or stdin when the
//! path is omitted or `-`), calls the matching library operation and prints
//! canonical JSON. Exit codes: 0 success, 1 a check or verification failed,
//! 2 bad usage or input, 3 a mathematical domain error such as a singular block.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::config::Config;
use crate::error::{Error, Result};
use crate::geometry;
use crate::json::{algebra_for_q, parse_value, to_canonical_string, Codec, Mode};
use crate::liesuper::{self, AlgebraElement};
use crate::realform::{self, ConjugationConfig, JSign};
use crate::superflag::{self, FlagChartPair};
use crate::verify::{self, Sizes, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_MATH: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "superspace", version, about = "Exact computations on conformal superspace")]
pub struct Cli {
    /// Sign of j in the group conjugation.
    #[arg(long, global = true, allow_hyphen_values = true, value_name = "+i|-i")]
    pub j: Option<JSign>,

    /// Seed for randomized suites.
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// Number of Grassmann generators for expression input.
    #[arg(long = "algebra-q", global = true, value_name = "Q")]
    pub algebra_q: Option<usize>,

    /// Supernumbers are JSON term objects (default).
    #[arg(long, global = true, conflicts_with = "expr")]
    pub json: bool,

    /// Supernumbers and scalars are expression strings such as "1 + x1*x2".
    #[arg(long, global = true)]
    pub expr: bool,

    /// Defaults file of `key = value` lines; `./superspace.toml` is read when present.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Input {
    /// Input file; stdin when omitted or `-`.
    pub input: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Berezinian of an even supermatrix.
    Ber(Input),
    /// Superbracket of `{"X": .., "Y": ..}` in gl(4|1).
    Bracket(Input),
    /// p + n split and root decomposition of an sl(4|1) element.
    Decompose(Input),
    /// The conjugation sigma on gl(4|1).
    Sigma(Input),
    /// Group conjugation xi on a 4|1 supermatrix, or on a big-cell point.
    Xi(Input),
    /// Plucker coordinates of a plane `{"basis": 4x2}`.
    Plucker(Input),
    /// Whether `{"y": [...]}` satisfies the Klein relation.
    KleinCheck(Input),
    /// Big cell, affine cone or quadric at infinity.
    Cone(Input),
    /// `A -> N + R A L^-1` for `{"L", "R", "N", "A"}`.
    ActPoincare(Input),
    /// The chart pi of a 4|1 supermatrix.
    Pi(Input),
    /// Super-Poincare action `{"P": .., "point": ..}` on the big cell.
    ActSuper(Input),
    /// Twistor relation for `{"A", "alpha", "B", "beta"}` or for a big-cell point.
    TwistorCheck(Input),
    /// Real coordinates (A', alpha) of a big-cell point.
    RealCoords(Input),
    /// Roots of p and n.
    Roots,
    /// Run invariant suites.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(default_value = "all", value_parser = ["all", "grassmann", "berezinian", "liesuper", "realform", "geometry", "superflag"])]
    pub suite: String,

    /// Draw as many random instances as the acceptance criteria ask for.
    #[arg(long)]
    pub thorough: bool,

    /// Check super-Jacobi on all 25^3 basis triples.
    #[arg(long)]
    pub full_jacobi: bool,

    /// Swap in det(s^-1) det(p - q s r) for the Berezinian.
    #[arg(long, hide = true)]
    pub printed_berezinian: bool,
}

struct Env {
    codec: Codec,
    conj: ConjugationConfig,
    seed: u64,
}

fn read_input(input: &Input) -> Result<Value> {
    let mut text = String::new();
    match input.input.as_deref() {
        None => read_stdin(&mut text)?,
        Some(p) if p == Path::new("-") => read_stdin(&mut text)?,
        Some(p) => {
            text = std::fs::read_to_string(p).map_err(|e| Error::Json(format!("{}: {e}", p.display())))?;
        }
    }
    parse_value(&text)
}

fn read_stdin(buf: &mut String) -> Result<()> {
    std::io::stdin().read_to_string(buf).map_err(|e| Error::Json(format!("stdin: {e}")))?;
    Ok(())
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| Error::Json(format!("missing key {key:?}")))
}

fn element(env: &Env, v: &Value) -> Result<AlgebraElement> {
    AlgebraElement::new(env.codec.decode_supermatrix(v)?)
}

/// Output document and whether the command's check passed.
fn dispatch(cmd: &Command, env: &Env) -> Result<(Value, bool)> {
    let c = &env.codec;
    let ok = |v: Value| Ok((v, true));
    match cmd {
        Command::Ber(i) => {
            let m = c.decode_supermatrix(&read_input(i)?)?;
            ok(json!({ "berezinian": c.encode_number(&m.berezinian()?) }))
        }
        Command::Bracket(i) => {
            let v = read_input(i)?;
            let x = element(env, field(&v, "X")?)?;
            let y = element(env, field(&v, "Y")?)?;
            ok(json!({ "bracket": c.encode_supermatrix(liesuper::bracket(&x, &y).matrix()) }))
        }
        Command::Decompose(i) => {
            let x = element(env, &read_input(i)?)?;
            let (xp, xn) = liesuper::split_pn(&x)?;
            let d = liesuper::root_decomposition(&x);
            let roots: Vec<Value> = d
                .components
                .iter()
                .map(|(root, comp)| {
                    let (r, s) = root.position();
                    json!({
                        "root": root.to_string(),
                        "summand": root.summand().as_str(),
                        "value": c.encode_number(comp.get(r, s)),
                    })
                })
                .collect();
            let cartan: Vec<Value> = (0..liesuper::DIM).map(|k| c.encode_number(d.cartan.get(k, k))).collect();
            ok(json!({
                "p": c.encode_supermatrix(xp.matrix()),
                "n": c.encode_supermatrix(xn.matrix()),
                "cartan": cartan,
                "roots": roots,
            }))
        }
        Command::Sigma(i) => {
            let x = element(env, &read_input(i)?)?;
            let s = realform::sigma(&x);
            ok(json!({ "sigma": c.encode_supermatrix(s.matrix()), "fixed": s == x }))
        }
        Command::Xi(i) => {
            let v = read_input(i)?;
            if v.get("entries").is_some() {
                let g = c.decode_supermatrix(&v)?;
                let x = realform::xi_group(&g, &env.conj)?;
                ok(json!({ "xi": c.encode_supermatrix(&x), "fixed": x == g, "j": env.conj.j.as_str() }))
            } else {
                let pt = c.decode_point(&v)?;
                let x = superflag::xi_bigcell(&pt, &env.conj)?;
                ok(json!({ "xi": c.encode_point(&x), "fixed": x == pt, "j": env.conj.j.as_str() }))
            }
        }
        Command::Plucker(i) => {
            let p = c.decode_plane(&read_input(i)?)?;
            ok(c.encode_plucker(&geometry::plucker(&p)))
        }
        Command::KleinCheck(i) => {
            let y = c.decode_bivector(&read_input(i)?)?;
            let q = y.quadratic_form();
            let holds = q.is_zero() && !y.is_zero();
            Ok((json!({ "holds": holds, "quadratic_form": c.encode_scalar(&q) }), holds))
        }
        Command::Cone(i) => {
            let y = c.decode_bivector(&read_input(i)?)?;
            ok(json!({ "class": geometry::cone_membership(&y)?.as_str() }))
        }
        Command::ActPoincare(i) => {
            let v = read_input(i)?;
            let m = |k| c.decode_scalar_mat(field(&v, k)?);
            let a = geometry::poincare_act(&m("L")?, &m("R")?, &m("N")?, &m("A")?)?;
            ok(json!({ "A": c.encode_scalar_mat(&a) }))
        }
        Command::Pi(i) => {
            let g = c.decode_supermatrix(&read_input(i)?)?;
            ok(json!({ "point": c.encode_point(&superflag::pi_chart(&g)?) }))
        }
        Command::ActSuper(i) => {
            let v = read_input(i)?;
            let p = c.decode_superpoincare(field(&v, "P")?)?;
            let pt = c.decode_point(field(&v, "point")?)?;
            ok(json!({ "point": c.encode_point(&superflag::superpoincare_act(&p, &pt)?) }))
        }
        Command::TwistorCheck(i) => {
            let v = read_input(i)?;
            let pair = if v.get("B").is_some() {
                FlagChartPair {
                    a_g1: c.decode_mat(field(&v, "A")?)?,
                    alpha_g1: c.decode_mat(field(&v, "alpha")?)?,
                    b: c.decode_mat(field(&v, "B")?)?,
                    beta2: c.decode_mat(field(&v, "beta")?)?,
                }
            } else {
                FlagChartPair::from_point(&c.decode_point(&v)?)
            };
            if pair.a_g1.algebra() != pair.b.algebra()
                || pair.a_g1.rows() != 2
                || pair.b.rows() != 2
                || pair.alpha_g1.rows() != 1
                || pair.beta2.cols() != 1
            {
                return Err(Error::ShapeMismatch("expected 2x2 A, B, 1x2 alpha and 2x1 beta".into()));
            }
            let holds = superflag::twistor_check(&pair);
            Ok((json!({ "holds": holds }), holds))
        }
        Command::RealCoords(i) => {
            let pt = c.decode_point(&read_input(i)?)?;
            let (a_prime, alpha) = superflag::real_coordinates(&pt, &env.conj);
            let (a_ok, beta_ok) = superflag::reality_conditions(&pt, &env.conj);
            ok(json!({
                "A_prime": c.encode_mat(&a_prime),
                "alpha": c.encode_mat(&alpha),
                "real": a_ok && beta_ok,
                "j": env.conj.j.as_str(),
            }))
        }
        Command::Roots => {
            let names = |rs: Vec<liesuper::Root>| rs.iter().map(ToString::to_string).collect::<Vec<_>>();
            ok(json!({ "p": names(liesuper::poincare_roots()), "n": names(liesuper::translation_roots()) }))
        }
        Command::Verify(_) => unreachable!("handled by run"),
    }
}

fn exit_code(e: &Error) -> i32 {
    if e.is_math_domain() {
        EXIT_MATH
    } else {
        EXIT_USAGE
    }
}

fn environment(cli: &Cli) -> Result<Env> {
    let cfg = match &cli.config {
        Some(p) => Config::load(p)?,
        None if Path::new("superspace.toml").exists() => Config::load(Path::new("superspace.toml"))?,
        None => Config::default(),
    };
    let q = cli.algebra_q.or(cfg.algebra_q).unwrap_or(8);
    let mode = if cli.expr { Mode::Expr } else { Mode::Json };
    Ok(Env {
        codec: Codec::new(mode, algebra_for_q(q)?),
        conj: ConjugationConfig::new(cli.j.or(cfg.j_sign).unwrap_or_default()),
        seed: cli.seed.or(cfg.seed).unwrap_or(0),
    })
}

fn run_verify(args: &VerifyArgs, env: &Env, out: &mut dyn Write) -> Result<bool> {
    let suite = Suite::parse(&args.suite)?;
    let opts = verify::Options {
        seed: env.seed,
        conj: env.conj,
        sizes: if args.thorough { Sizes::thorough() } else { Sizes::quick() },
        full_jacobi: args.full_jacobi,
        printed_berezinian: args.printed_berezinian,
    };
    let report = verify::run(suite, &opts);
    let io = |e: std::io::Error| Error::Json(e.to_string());
    for check in &report.checks {
        writeln!(out, "{check}").map_err(io)?;
    }
    if let Some(j) = report.resolved_j {
        writeln!(out, "resolved j sign: {j}").map_err(io)?;
    }
    writeln!(
        out,
        "{} checks, {} failed (suite {}, seed {})",
        report.checks.len(),
        report.failures(),
        suite,
        env.seed
    )
    .map_err(io)?;
    Ok(report.all_passed())
}

/// Parses `args` (including the program name) and runs one command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let env = match environment(&cli) {
        Ok(env) => env,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let result = match &cli.command {
        Command::Verify(args) => run_verify(args, &env, out).map(|ok| (None, ok)),
        cmd => dispatch(cmd, &env).map(|(v, ok)| (Some(v), ok)),
    };
    match result {
        Ok((doc, passed)) => {
            if let Some(doc) = doc {
                let _ = writeln!(out, "{}", to_canonical_string(&doc));
            }
            if passed {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
