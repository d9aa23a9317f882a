//! Invariant suites behind `superspace verify`.
//!
//! Every suite draws from its own seeded generator, so a suite's outcome does
//! not depend on which other suites run or in what order. `all` runs the
//! suites on scoped threads and reports them in a fixed order.

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::geometry::{self, PoincareParams};
use crate::grassmann::{GrassmannAlgebra, Parity, SuperNumber};
use crate::liesuper::{self, bracket, position_is_odd, AlgebraElement, PatternName, SubspacePattern, DIM};
use crate::matrix::Mat;
use crate::random::{self, Grade, SuiteRng};
use crate::realform::{self, sigma, ConjugationConfig, JSign};
use crate::scalar::GaussianRational;
use crate::superflag::{self, BigCellPoint, FlagChartPair};
use crate::supermatrix::{BlockShape, SuperMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    All,
    Grassmann,
    Berezinian,
    Liesuper,
    Realform,
    Geometry,
    Superflag,
}

impl Suite {
    pub const EACH: [Suite; 6] = [
        Suite::Grassmann,
        Suite::Berezinian,
        Suite::Liesuper,
        Suite::Realform,
        Suite::Geometry,
        Suite::Superflag,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Grassmann => "grassmann",
            Suite::Berezinian => "berezinian",
            Suite::Liesuper => "liesuper",
            Suite::Realform => "realform",
            Suite::Geometry => "geometry",
            Suite::Superflag => "superflag",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        std::iter::once(Suite::All)
            .chain(Suite::EACH)
            .find(|x| x.as_str() == s)
            .ok_or_else(|| Error::Config(format!("unknown suite {s:?}")))
    }

    fn salt(&self) -> u64 {
        (*self as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// How many random instances each randomized check draws.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Sizes {
    pub grassmann_pairs: usize,
    pub ber_per_shape: usize,
    pub jacobi_triples: usize,
    pub lorentz_pairs: usize,
    pub group_pairs: usize,
    pub planes: usize,
    pub plane_pairs: usize,
    pub pi_pairs: usize,
    pub real_points: usize,
}

impl Sizes {
    pub fn quick() -> Self {
        Self {
            grassmann_pairs: 100,
            ber_per_shape: 20,
            jacobi_triples: 2000,
            lorentz_pairs: 20,
            group_pairs: 10,
            planes: 100,
            plane_pairs: 30,
            pi_pairs: 10,
            real_points: 20,
        }
    }

    pub fn thorough() -> Self {
        Self {
            grassmann_pairs: 500,
            ber_per_shape: 200,
            jacobi_triples: 2000,
            lorentz_pairs: 100,
            group_pairs: 100,
            planes: 500,
            plane_pairs: 100,
            pi_pairs: 50,
            real_points: 100,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Options {
    pub seed: u64,
    pub conj: ConjugationConfig,
    pub sizes: Sizes,
    /// Run the super-Jacobi identity on all 25³ basis triples.
    pub full_jacobi: bool,
    /// Replace the Berezinian by `det(s⁻¹) det(p − q s r)`; the multiplicativity
    /// checks must then fail.
    pub printed_berezinian: bool,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            seed: 0,
            conj: ConjugationConfig::default(),
            sizes: Sizes::quick(),
            full_jacobi: false,
            printed_berezinian: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub suite: Suite,
    pub anchor: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} [{}] {}", self.suite, self.anchor)?;
        if !self.detail.is_empty() {
            write!(f, " ({})", self.detail)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub checks: Vec<Check>,
    /// Sign of `j` picked by the bootstrap, when the realform suite ran.
    pub resolved_j: Option<JSign>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed).count()
    }
}

struct Ctx<'a> {
    suite: Suite,
    opts: &'a Options,
    rng: SuiteRng,
    checks: Vec<Check>,
}

impl<'a> Ctx<'a> {
    fn new(suite: Suite, opts: &'a Options) -> Self {
        Self { suite, opts, rng: random::rng(opts.seed ^ suite.salt()), checks: Vec::new() }
    }

    /// Records one check; an `Err` counts as a failure with the error as detail.
    fn check(&mut self, anchor: &'static str, outcome: Result<Outcome>) {
        let (passed, detail) = match outcome {
            Ok(Outcome { passed, detail }) => (passed, detail),
            Err(e) => (false, e.to_string()),
        };
        self.checks.push(Check { suite: self.suite, anchor, passed, detail });
    }
}

struct Outcome {
    passed: bool,
    detail: String,
}

fn pass_if(passed: bool, detail: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome { passed, detail: detail.into() })
}

/// Runs every instance and reports how many held.
fn count(n: usize, mut f: impl FnMut() -> Result<bool>) -> Result<Outcome> {
    let mut ok = 0;
    for _ in 0..n {
        if f()? {
            ok += 1;
        }
    }
    pass_if(ok == n, format!("{ok}/{n}"))
}

pub fn run(suite: Suite, opts: &Options) -> Report {
    let suites: Vec<Suite> = if suite == Suite::All { Suite::EACH.to_vec() } else { vec![suite] };
    let results: Vec<(Vec<Check>, Option<JSign>)> = std::thread::scope(|s| {
        let handles: Vec<_> = suites.iter().map(|&x| s.spawn(move || run_one(x, opts))).collect();
        handles.into_iter().map(|h| h.join().expect("suite thread panicked")).collect()
    });
    let mut report = Report::default();
    for (checks, j) in results {
        report.checks.extend(checks);
        report.resolved_j = report.resolved_j.or(j);
    }
    report
}

fn run_one(suite: Suite, opts: &Options) -> (Vec<Check>, Option<JSign>) {
    let mut ctx = Ctx::new(suite, opts);
    let mut j = None;
    match suite {
        Suite::Grassmann => grassmann_suite(&mut ctx),
        Suite::Berezinian => berezinian_suite(&mut ctx),
        Suite::Liesuper => liesuper_suite(&mut ctx),
        Suite::Realform => j = realform_suite(&mut ctx),
        Suite::Geometry => geometry_suite(&mut ctx),
        Suite::Superflag => superflag_suite(&mut ctx),
        Suite::All => unreachable!("expanded by run"),
    }
    (ctx.checks, j)
}

fn sign(odd_a: bool, odd_b: bool) -> GaussianRational {
    GaussianRational::from_int(if odd_a && odd_b { -1 } else { 1 })
}

fn grassmann_suite(ctx: &mut Ctx) {
    ctx.check("supercommutativity, associativity, distributivity and bar on monomials, q <= 4", {
        let mut ok = true;
        for q in 0..=4usize {
            let alg = GrassmannAlgebra::paired(q / 2);
            let alg = if q % 2 == 1 { alg.extended(1).expect("small q") } else { alg };
            let monos: Vec<SuperNumber> = (0..1u64 << q)
                .map(|m| SuperNumber::monomial(&alg, m, GaussianRational::from_parts((1, 1), (m as i64, 1))))
                .collect();
            for x in &monos {
                ok &= x.bar().bar() == *x;
                for y in &monos {
                    let odd = |v: &SuperNumber| v.parity() == Parity::Odd;
                    ok &= x * y == (y * x).scale(&sign(odd(x), odd(y)));
                    ok &= (x * y).bar() == &x.bar() * &y.bar();
                    for z in &monos {
                        ok &= &(x * y) * z == x * &(y * z);
                        ok &= x * &(y + z) == &(x * y) + &(x * z);
                    }
                }
            }
        }
        pass_if(ok, "")
    });

    let alg = GrassmannAlgebra::default_working();
    let n = ctx.opts.sizes.grassmann_pairs;
    let rng = &mut ctx.rng;
    let outcome = count(n, || {
        let odd_a = rng.gen_bool(0.5);
        let odd_b = rng.gen_bool(0.5);
        let pick = |rng: &mut SuiteRng, odd: bool| if odd { random::random_odd(rng, &alg) } else { random::random_even(rng, &alg) };
        let a = pick(rng, odd_a);
        let b = pick(rng, odd_b);
        let c = random::random_element(rng, &alg, 4);
        Ok(&a * &b == (&b * &a).scale(&sign(odd_a, odd_b))
            && &(&a * &b) * &c == &a * &(&b * &c)
            && &a * &(&b + &c) == &(&a * &b) + &(&a * &c)
            && (&a * &c).bar() == &a.bar() * &c.bar()
            && c.bar().bar() == c)
    });
    ctx.check("ring axioms and bar on random pairs at q = 8", outcome);

    let rng = &mut ctx.rng;
    let outcome = count(n / 4 + 1, || {
        let x = &random::random_even_unit(rng, &alg) + &random::random_soul(rng, &alg, Grade::Any, 4);
        Ok((&x * &x.invert()?).is_one())
    });
    ctx.check("elements with nonzero body are invertible", outcome);
}

fn berezinian_suite(ctx: &mut Ctx) {
    let alg = GrassmannAlgebra::default_working();
    let printed = ctx.opts.printed_berezinian;
    let ber = |m: &SuperMatrix| if printed { m.berezinian_without_inverse() } else { m.berezinian() };
    let n = ctx.opts.sizes.ber_per_shape;
    for (shape, anchor) in [
        ((1, 1), "Berezinian is multiplicative, shape 1|1"),
        ((2, 1), "Berezinian is multiplicative, shape 2|1"),
        ((2, 2), "Berezinian is multiplicative, shape 2|2"),
        ((4, 1), "Berezinian is multiplicative, shape 4|1"),
    ] {
        let shape = BlockShape { m: shape.0, n: shape.1 };
        let rng = &mut ctx.rng;
        let outcome = count(n, || {
            let g = random::random_invertible_supermatrix(rng, &alg, shape);
            let h = random::random_invertible_supermatrix(rng, &alg, shape);
            Ok(ber(&g.mul(&h)?)? == &ber(&g)? * &ber(&h)?)
        });
        ctx.check(anchor, outcome);
    }

    let rng = &mut ctx.rng;
    let outcome = count(n, || {
        let g = random::random_invertible_supermatrix(rng, &alg, BlockShape { m: 2, n: 1 });
        let (p, q, r, s) = g.blocks();
        let schur = &s - &(&(&r * &p.inverse()?) * &q);
        let other = &p.det()? * &schur.det()?.invert()?;
        Ok(ber(&g)? == other)
    });
    ctx.check("Berezinian agrees with det(p) / det(s - r p^-1 q)", outcome);

    let rng = &mut ctx.rng;
    let outcome = count(n, || {
        let g = random::random_invertible_supermatrix(rng, &alg, BlockShape { m: 4, n: 1 });
        let id = SuperMatrix::identity(&alg, g.shape());
        let inv = g.inverse()?;
        Ok(g.mul(&inv)? == id && inv.mul(&g)? == id)
    });
    ctx.check("block inverse is two-sided", outcome);
}

fn liesuper_suite(ctx: &mut Ctx) {
    let alg = GrassmannAlgebra::real(0);
    let basis = liesuper::gl_basis(&alg);
    let odd = |k: usize| position_is_odd(k / DIM, k % DIM);
    let jacobi = |a: usize, b: usize, c: usize| {
        let (x, y, z) = (&basis[a], &basis[b], &basis[c]);
        let t1 = bracket(x, &bracket(y, z)).scale(&sign(odd(a), odd(c)));
        let t2 = bracket(y, &bracket(z, x)).scale(&sign(odd(b), odd(a)));
        let t3 = bracket(z, &bracket(x, y)).scale(&sign(odd(c), odd(b)));
        t1.add(&t2).and_then(|s| s.add(&t3)).map(|s| s.is_zero())
    };
    let outcome = if ctx.opts.full_jacobi {
        let mut all = Vec::with_capacity(25 * 25 * 25);
        for a in 0..25 {
            for b in 0..25 {
                for c in 0..25 {
                    all.push((a, b, c));
                }
            }
        }
        let mut it = all.into_iter();
        count(25 * 25 * 25, || {
            let (a, b, c) = it.next().expect("sized");
            jacobi(a, b, c)
        })
    } else {
        let rng = &mut ctx.rng;
        count(ctx.opts.sizes.jacobi_triples, || jacobi(rng.gen_range(0..25), rng.gen_range(0..25), rng.gen_range(0..25)))
    };
    ctx.check("super-Jacobi identity on homogeneous basis triples of gl(4|1)", outcome);

    let dims = |p: PatternName| SubspacePattern::get(p).dims();
    ctx.check(
        "sl(4|1) = p + n with dimensions 16|8 = 12|4 + 4|4",
        pass_if(
            dims(PatternName::Sl) == (16, 8) && dims(PatternName::P) == (12, 4) && dims(PatternName::N) == (4, 4),
            format!("sl {:?}, p {:?}, n {:?}", dims(PatternName::Sl), dims(PatternName::P), dims(PatternName::N)),
        ),
    );
    ctx.check(
        "p and n are subalgebras",
        pass_if(
            SubspacePattern::get(PatternName::P).is_closed_under_bracket()
                && SubspacePattern::get(PatternName::N).is_closed_under_bracket(),
            "",
        ),
    );
    let report = liesuper::verify_translation_algebra(PatternName::N);
    ctx.check(
        "translation relations [n0,n0] = 0, [n0,n1] = 0, 0 != [n1,n1] in n0",
        pass_if(report.is_translation_algebra(), format!("n0 dim {}, n1 dim {}", report.even_dim, report.odd_dim)),
    );

    let p = SubspacePattern::get(PatternName::P);
    let n = SubspacePattern::get(PatternName::N);
    let roots_ok = liesuper::poincare_roots().iter().all(|r| {
        let (i, j) = r.position();
        p.allows(i, j) && !n.allows(i, j)
    }) && liesuper::translation_roots().iter().all(|r| {
        let (i, j) = r.position();
        n.allows(i, j) && !p.allows(i, j)
    }) && liesuper::poincare_roots().len() + liesuper::translation_roots().len() == 20;
    ctx.check("root lists of p and n match their block patterns", pass_if(roots_ok, ""));

    let wa = GrassmannAlgebra::default_working();
    let rng = &mut ctx.rng;
    let outcome = count(ctx.opts.sizes.lorentz_pairs, || {
        let (x1, y1) = (random::random_sl_scalar(rng, &wa, 2), random::random_sl_scalar(rng, &wa, 2));
        let (x2, y2) = (random::random_sl_scalar(rng, &wa, 2), random::random_sl_scalar(rng, &wa, 2));
        let gamma = random::random_block(rng, &wa, 2, 1, true);
        let delta = random::random_block(rng, &wa, 1, 2, true);
        let gamma2 = random::random_block(rng, &wa, 2, 1, true);
        let delta2 = random::random_block(rng, &wa, 1, 2, true);
        // group action: (x2 x1, y2 y1) acts as the composite
        let (g1, d1) = liesuper::lorentz_act(&x1, &y1, &gamma, &delta)?;
        let (g12, d12) = liesuper::lorentz_act(&x2, &y2, &g1, &d1)?;
        let composite = liesuper::lorentz_act(&x2.try_mul(&x1)?, &y2.try_mul(&y1)?, &gamma, &delta)?;
        let is_action = (g12, d12) == composite;
        // q = det on the odd pairing is preserved
        let v = liesuper::n1_element(&gamma, &delta)?;
        let w = liesuper::n1_element(&gamma2, &delta2)?;
        let before = liesuper::quadratic_form(&liesuper::odd_pair(&v, &w)?)?;
        let (gv, dv) = liesuper::lorentz_act(&x1, &y1, &gamma, &delta)?;
        let (gw, dw) = liesuper::lorentz_act(&x1, &y1, &gamma2, &delta2)?;
        let moved = liesuper::odd_pair(&liesuper::n1_element(&gv, &dv)?, &liesuper::n1_element(&gw, &dw)?)?;
        let after = liesuper::quadratic_form(&moved)?;
        Ok(is_action && before == after)
    });
    ctx.check("Lorentz action (x gamma, delta y^-1) is a group action preserving q = det", outcome);
}

fn realform_suite(ctx: &mut Ctx) -> Option<JSign> {
    let alg = GrassmannAlgebra::real(0);
    let basis = liesuper::gl_basis(&alg);
    let i = GaussianRational::i();
    let coeffs = [GaussianRational::one(), i.clone(), GaussianRational::from_parts((1, 2), (-3, 1))];

    let ok = basis.iter().all(|b| {
        coeffs.iter().all(|c| {
            let x = b.scale(c);
            sigma(&x) == sigma(b).scale(&c.conj()) && sigma(&sigma(&x)) == x
        })
    });
    ctx.check("sigma is antilinear and involutive", pass_if(ok, ""));

    let ok = basis.iter().all(|x| {
        let ix = x.scale(&i);
        basis.iter().all(|y| {
            sigma(&bracket(x, y)) == bracket(&sigma(x), &sigma(y))
                && sigma(&bracket(&ix, y)) == bracket(&sigma(&ix), &sigma(y))
        })
    });
    ctx.check("sigma preserves the bracket", pass_if(ok, ""));

    let keeps = |name: PatternName| {
        SubspacePattern::get(name)
            .basis(&alg)
            .iter()
            .all(|b| liesuper::subspace_membership(&sigma(b), name) && liesuper::subspace_membership(&sigma(&b.scale(&i)), name))
    };
    let ok = basis.iter().all(|x| sigma(x).parity() == x.parity()) && keeps(PatternName::P) && keeps(PatternName::N);
    ctx.check("sigma preserves parity and leaves p and n invariant", pass_if(ok, ""));

    let fixed = realform::sigma_fixed_basis();
    let all: Vec<&AlgebraElement> = fixed.all().collect();
    let closed = all.iter().all(|x| all.iter().all(|y| realform::is_sigma_fixed(&bracket(x, y))));
    ctx.check(
        "sigma-fixed real form has real dimension 16|8 and is closed",
        pass_if(fixed.real_dims() == (16, 8) && closed, format!("{:?}", fixed.real_dims())),
    );

    let rng = &mut ctx.rng;
    let outcome = count(ctx.opts.sizes.real_points, || {
        let m = random::random_block(rng, &alg, 2, 2, false);
        let embed = |a: &Mat| -> Result<AlgebraElement> {
            let mut x = Mat::zeros(&alg, DIM, DIM);
            x.set_block(0, 2, a);
            AlgebraElement::from_mat(x)
        };
        let skew = &m - &m.dagger();
        let herm = &m + &m.dagger();
        let fixed_skew = realform::is_sigma_fixed(&embed(&skew)?);
        let fixed_other = herm.is_zero() || !realform::is_sigma_fixed(&embed(&(&skew + &herm))?);
        Ok(fixed_skew && fixed_other)
    });
    ctx.check("sigma-fixed translations n0 are the skew-hermitian 2x2 matrices", outcome);

    let resolved = realform::bootstrap_j_sign();
    let j = resolved.as_ref().ok().copied();
    ctx.check(
        "d(xi) at the identity equals sigma for the bootstrapped j",
        resolved.map(|j| Outcome { passed: true, detail: format!("j = {j}") }),
    );

    let wa = GrassmannAlgebra::default_working();
    let cfg = ctx.opts.conj;
    let shape = BlockShape { m: 4, n: 1 };
    let n = ctx.opts.sizes.group_pairs;
    let rng = &mut ctx.rng;
    let outcome = count(n, || {
        let g = random::random_invertible_supermatrix(rng, &wa, shape);
        let h = random::random_invertible_supermatrix(rng, &wa, shape);
        let lhs = realform::theta_group(&h.mul(&g)?, &cfg)?;
        let rhs = realform::theta_group(&g, &cfg)?.mul(&realform::theta_group(&h, &cfg)?)?;
        let xg = realform::xi_group(&g, &cfg)?;
        Ok(lhs == rhs && realform::xi_group(&xg, &cfg)? == g)
    });
    ctx.check("(hg)^theta = g^theta h^theta and xi is an involution", outcome);

    let rng = &mut ctx.rng;
    let outcome = count(n, || {
        let g = random::random_invertible_supermatrix(rng, &wa, shape);
        let ber = g.berezinian()?;
        let mut m = g.as_mat().clone();
        for c in 0..DIM {
            m.set(4, c, &ber * m.get(4, c));
        }
        let g1 = SuperMatrix::even(shape, m)?;
        Ok(g1.berezinian()?.is_one() && realform::xi_group(&g1, &cfg)?.berezinian()?.is_one())
    });
    ctx.check("xi preserves Berezinian one", outcome);

    let rng = &mut ctx.rng;
    let outcome = count(ctx.opts.sizes.real_points, || {
        let r = random::random_invertible_even_block(rng, &wa, 2);
        let varphi = random::random_block(rng, &wa, 1, 2, true);
        let m0 = random::random_block(rng, &wa, 2, 2, false);
        let d = SuperNumber::scalar(&wa, GaussianRational::from_parts((3, 5), (4, 5)));
        let p = realform::real_poincare_element(&r, &varphi, &(&m0 - &m0.dagger()), &d, &cfg)?;
        Ok(realform::reality_conditions_poincare(&p.to_supermatrix(), &cfg)?.all_hold())
    });
    ctx.check("real super-Poincare elements satisfy the reality conditions and are xi-fixed", outcome);
    j
}

fn geometry_suite(ctx: &mut Ctx) {
    let alg = geometry::scalars();
    let sizes = ctx.opts.sizes;

    let rng = &mut ctx.rng;
    let outcome = count(sizes.planes, || Ok(geometry::plucker(&random::random_plane(rng)).bivector().quadratic_form().is_zero()));
    ctx.check("Klein relation y12 y34 + y23 y14 + y31 y24 = 0 for random planes", outcome);

    let rng = &mut ctx.rng;
    let outcome = count(sizes.planes, || {
        let a = random::random_block(rng, &alg, 2, 2, false);
        let y = geometry::plucker(&geometry::cell_to_plane(&a)?);
        Ok(geometry::chart_to_cell(&y)? == a)
    });
    ctx.check("big-cell chart roundtrip", outcome);

    ctx.check("big-cell Plucker coordinates (1, -a, -b, d, -c, ad - bc)", {
        let sym_alg = GrassmannAlgebra::real(8);
        let sym = |k: usize| -> Result<SuperNumber> {
            Ok(&SuperNumber::generator(&sym_alg, 2 * k + 1)? * &SuperNumber::generator(&sym_alg, 2 * k + 2)?)
        };
        (|| {
            let (a, b, c, d) = (sym(0)?, sym(1)?, sym(2)?, sym(3)?);
            let m = Mat::from_rows(&sym_alg, vec![vec![a.clone(), b.clone()], vec![c.clone(), d.clone()]])?;
            let expected = [SuperNumber::one(&sym_alg), -&a, -&b, d.clone(), -&c, &(&a * &d) - &(&b * &c)];
            pass_if(geometry::big_cell_coordinates(&m) == expected, "")
        })()
    });

    let rng = &mut ctx.rng;
    let outcome = count(sizes.plane_pairs, || {
        let g = random::random_gl_scalar(rng, &alg, 4);
        let p = random::random_plane(rng);
        let b = geometry::Bivector::new(std::array::from_fn(|_| random::small_complex(rng)));
        let gy = geometry::conformal_act_wedge(&g, &b)?;
        let det = g.det()?.body();
        let planes_agree = geometry::conformal_act_wedge(&g, geometry::plucker(&p).bivector())?
            == *geometry::plucker(&p.transform(&g)?).bivector();
        Ok(gy.quadratic_form() == &det * &b.quadratic_form() && planes_agree)
    });
    ctx.check("Q(g y) = det(g) Q(y) and the wedge action matches the action on planes", outcome);

    let sig = geometry::qr_signature();
    ctx.check("real form Q_R has signature (4,2)", pass_if(sig == (4, 2), format!("{sig:?}")));

    let rng = &mut ctx.rng;
    let outcome = count(sizes.plane_pairs, || {
        let l = random::random_gl_scalar(rng, &alg, 2);
        let r = random::random_gl_scalar(rng, &alg, 2);
        let n = random::random_block(rng, &alg, 2, 2, false);
        let a = random::random_block(rng, &alg, 2, 2, false);
        let params = PoincareParams::new(l.clone(), r.clone(), n.clone())?;
        let moved = geometry::poincare_act(&l, &r, &n, &a)?;
        let plane = geometry::cell_to_plane(&a)?.transform(&params.matrix())?;
        let expected = geometry::plucker(&geometry::cell_to_plane(&moved)?);
        Ok(geometry::plucker(&plane).projectively_equal(&expected))
    });
    ctx.check("Poincare action A -> N + R A L^-1 commutes with the Plucker embedding", outcome);
}

fn superflag_suite(ctx: &mut Ctx) {
    let alg = GrassmannAlgebra::default_working();
    let sizes = ctx.opts.sizes;
    let cfg = ctx.opts.conj;

    let rng = &mut ctx.rng;
    let outcome = count(sizes.real_points, || {
        let pt = random::random_bigcell_point(rng, &alg);
        Ok(superflag::twistor_check(&FlagChartPair::from_point(&pt)))
    });
    ctx.check("twistor relation A = B + beta alpha", outcome);

    let rng = &mut ctx.rng;
    let outcome = count(sizes.pi_pairs, || {
        let p = random::random_superpoincare(rng, &alg);
        let g = random::random_big_cell_group_element(rng, &alg);
        let lhs = superflag::pi_chart(&p.to_supermatrix().mul(&g)?)?;
        let rhs = superflag::superpoincare_act(&p, &superflag::pi_chart(&g)?)?;
        Ok(lhs == rhs)
    });
    ctx.check("pi is equivariant: pi(P g) = P . pi(g)", outcome);

    let rng = &mut ctx.rng;
    let outcome = count(sizes.pi_pairs, || loop {
        let g = random::random_invertible_supermatrix(rng, &alg, BlockShape { m: 4, n: 1 });
        let mut m = g.as_mat().clone();
        for (i, j) in [(2, 0), (2, 1), (3, 0), (3, 1), (2, 4), (3, 4), (4, 0), (4, 1)] {
            m.set(i, j, SuperNumber::zero(&alg));
        }
        if superflag::stabilizer_membership(&m) {
            let h = SuperMatrix::even(BlockShape { m: 4, n: 1 }, m)?;
            return Ok(superflag::pi_chart(&h)?.is_origin());
        }
    });
    ctx.check("pi maps the stabilizer H to the base point", outcome);

    let rng = &mut ctx.rng;
    let outcome = count(sizes.pi_pairs, || {
        let mut p = random::random_superpoincare(rng, &alg);
        p.chi = Mat::zeros(&alg, 2, 1);
        p.varphi = Mat::zeros(&alg, 1, 2);
        let a = random::random_block(rng, &alg, 2, 2, false);
        let pt = BigCellPoint::new(a.clone(), Mat::zeros(&alg, 1, 2), Mat::zeros(&alg, 2, 1))?;
        let moved = superflag::superpoincare_act(&p, &pt)?;
        Ok(moved.a == geometry::poincare_act(&p.l, &p.r, &p.n, &a)? && moved.alpha.is_zero() && moved.beta.is_zero())
    });
    ctx.check("with odd parameters zero the action reduces to the classical one", outcome);

    ctx.check("d(pi) at the identity is bijective from the n-transpose pattern onto 4|4", superflag::dpi_is_bijective().and_then(|b| pass_if(b, "")));

    let rng = &mut ctx.rng;
    let outcome = count(sizes.pi_pairs, || {
        let p = random::random_superpoincare(rng, &alg);
        Ok(superflag::big_cell_invariance_check(&p.to_matrix()))
    });
    ctx.check("super-Poincare elements keep the big cell", outcome);

    let rng = &mut ctx.rng;
    let outcome = count(sizes.real_points, || {
        let pt = random::random_bigcell_point(rng, &alg);
        let image = superflag::xi_bigcell(&pt, &cfg)?;
        Ok(image == superflag::xi_bigcell_formula(&pt, &cfg) && superflag::xi_bigcell(&image, &cfg)? == pt)
    });
    ctx.check("xi on the big cell is the involution (-A^+ - alpha^+ beta^+, -j beta^+, -j alpha^+)", outcome);

    let rng = &mut ctx.rng;
    let outcome = count(sizes.real_points, || {
        let m = random::random_block(rng, &alg, 2, 2, false);
        let a_prime = &m - &m.dagger();
        let alpha = random::random_block(rng, &alg, 1, 2, true);
        let pt = superflag::point_from_real_coordinates(&a_prime, &alpha, &cfg)?;
        let (back, back_alpha) = superflag::real_coordinates(&pt, &cfg);
        Ok(superflag::xi_bigcell(&pt, &cfg)? == pt
            && superflag::reality_conditions(&pt, &cfg) == (true, true)
            && back == a_prime
            && back_alpha == alpha)
    });
    ctx.check("real points: A = -A^+ - j alpha^+ alpha, beta = -j alpha^+, A' = A + j alpha^+ alpha / 2 skew-hermitian", outcome);
}
