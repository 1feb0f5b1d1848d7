//! Command-line front end: verification suites, fixed subalgebras, Kac
//! coordinates and class reports. Commands return an [`Outcome`] so the
//! binary only has to print and exit.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::albert::{AlbertCoords, CubicJordan, HermitianAlbert, TitsAlbert};
use crate::brown::BrownAlgebra;
use crate::cda::CdAlgebra;
use crate::error::{Error, Result};
use crate::invol::{
    conjugate, fixed_report, lift_c_to_j, make_s, make_t_canonical, make_theta_tits,
    make_torus_element, make_uv_bridge, random_automorphism, verify_conjugacy_transport,
    JContext, Space, TorusLevel,
};
use crate::kac::MarkedAffineDiagram;
use crate::linmap::LinMap;
use crate::qclass::{report, GroupLevel};
use crate::scalar::{FieldSpec, Sampler, Scalar};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "e6kit", version, about = "Exact checks for the E6 algebra tower")]
pub struct Cli {
    /// Field for element arithmetic: Q or Fp:<prime>
    #[arg(long, global = true, default_value = "Fp:7")]
    pub field: String,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Samples per identity in `verify`
    #[arg(long, global = true, default_value_t = 200)]
    pub samples: usize,
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run an invariant suite
    Verify {
        #[arg(value_enum)]
        suite: Suite,
    },
    /// Fixed subalgebra of an involution descriptor such as `s`, `t.varpi`
    Fixed {
        descriptor: String,
        #[arg(long, default_value = "B")]
        space: String,
    },
    /// Enumerate Kac coordinates of order m
    Kac {
        /// `e6~`, `e6~2` or a path to a diagram JSON file
        diagram: String,
        m: u64,
        /// Keep tuples whose entries share a common factor
        #[arg(long, conflicts_with = "gcd")]
        no_gcd: bool,
        /// Drop tuples whose entries share a common factor
        #[arg(long)]
        gcd: bool,
        /// Read residual diagrams on the folded diagram
        #[arg(long)]
        folded: bool,
    },
    /// Count involution classes over a field: Kbar, Fp:p, R, Qp:p or Q
    Classify { field: String, group: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Composition,
    Albert,
    Brown,
    Involutions,
    All,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub field: FieldSpec,
    pub seed: u64,
    pub samples: usize,
    pub json: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            field: FieldSpec::PrimeField(7),
            seed: 0,
            samples: 200,
            json: false,
        }
    }
}

impl RunConfig {
    /// Checks that build 27x27 or 56x56 matrices per sample run this often.
    fn heavy(&self) -> usize {
        (self.samples / 20).max(2)
    }
}

/// Text destined for stdout and stderr, plus the exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { stdout, stderr: String::new(), code: EXIT_OK }
    }

    fn config_error(e: &Error) -> Self {
        Self {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: EXIT_CONFIG,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub counterexample: Option<Value>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub field: FieldSpec,
    pub seed: u64,
    pub samples: usize,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "field": self.field.to_string(),
            "seed": self.seed,
            "samples": self.samples,
            "passed": self.passed(),
            "checks": self.checks.iter().map(|c| json!({
                "name": c.name,
                "passed": c.passed,
                "counterexample": c.counterexample,
            })).collect::<Vec<_>>(),
        })
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let verdict = if c.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{}: {verdict}", c.name);
            if let Some(cx) = &c.counterexample {
                let _ = writeln!(out, "  counterexample: {cx}");
            }
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        let _ = writeln!(
            out,
            "{} checks, {failed} failed (field {}, seed {}, samples {})",
            self.checks.len(),
            self.field,
            self.seed,
            self.samples
        );
        out
    }
}

type CheckResult = std::result::Result<(), Value>;

fn coords_json(v: &[Scalar]) -> Value {
    json!(v.iter().map(|s| s.to_string()).collect::<Vec<_>>())
}

fn error_json(e: Error) -> Value {
    json!({ "error": e.to_string() })
}

fn require(cond: bool, cx: impl FnOnce() -> Value) -> CheckResult {
    if cond {
        Ok(())
    } else {
        Err(cx())
    }
}

#[derive(Default)]
struct Recorder {
    checks: Vec<Check>,
}

impl Recorder {
    fn run(&mut self, name: impl Into<String>, f: impl FnOnce() -> CheckResult) {
        let res = f();
        self.checks.push(Check {
            name: name.into(),
            passed: res.is_ok(),
            counterexample: res.err(),
        });
    }
}

fn composition_suite(cfg: &RunConfig, rec: &mut Recorder) -> Result<()> {
    let oct = CdAlgebra::split_octonions(cfg.field)?;
    let mut s = Sampler::new(cfg.field, cfg.seed, 9)?;
    let pairs: Vec<_> = (0..cfg.samples)
        .map(|_| (oct.elem(s.vector(8)), oct.elem(s.vector(8))))
        .map(|(x, y)| Ok((x?, y?)))
        .collect::<Result<_>>()?;
    let pair_cx = |x: &crate::cda::CompElem, y: &crate::cda::CompElem| {
        json!({ "x": coords_json(x.coords()), "y": coords_json(y.coords()) })
    };
    rec.run("N(xy) = N(x)N(y)", || {
        for (x, y) in &pairs {
            require(x.mul(y).qnorm() == &x.qnorm() * &y.qnorm(), || pair_cx(x, y))?;
        }
        Ok(())
    });
    rec.run("conj(xy) = conj(y)conj(x)", || {
        for (x, y) in &pairs {
            require(x.mul(y).conj() == y.conj().mul(&x.conj()), || pair_cx(x, y))?;
        }
        Ok(())
    });
    rec.run("x(xy) = (xx)y and (yx)x = y(xx)", || {
        for (x, y) in &pairs {
            let xx = x.mul(x);
            let ok = x.mul(&x.mul(y)) == xx.mul(y) && y.mul(x).mul(x) == y.mul(&xx);
            require(ok, || pair_cx(x, y))?;
        }
        Ok(())
    });
    rec.run("x conj(x) = N(x)1", || {
        for (x, y) in &pairs {
            let n = oct.unit().scale(&x.qnorm());
            require(x.mul(&x.conj()) == n, || pair_cx(x, y))?;
        }
        Ok(())
    });
    rec.run("1x = x1 = x", || {
        let e = oct.unit();
        for (x, y) in &pairs {
            require(e.mul(x) == *x && x.mul(&e) == *x, || pair_cx(x, y))?;
        }
        Ok(())
    });
    Ok(())
}

/// Linear coefficient of `t -> N(x + t y)`, interpolated at `t = -1, 0, 1, 2`.
fn norm_derivative<J: CubicJordan>(j: &J, x: &J::Elem, y: &J::Elem) -> Scalar {
    let f = j.field();
    let p = |t: i64| j.norm(&j.add(x, &j.scale(&f.int(t), y)));
    let (p0, p1, pm1, p2) = (p(0), p(1), p(-1), p(2));
    let c2 = &(&p1 + &pm1).half() - &p0;
    let odd = (&p1 - &pm1).half();
    let num = &(&(&(&f.int(8) * &odd) + &p0) + &(&f.int(4) * &c2)) - &p2;
    num.checked_div(&f.int(6)).expect("6 is invertible")
}

fn albert_checks<J: CubicJordan>(j: &J, label: &str, cfg: &RunConfig, rec: &mut Recorder) -> Result<()> {
    let mut s = Sampler::new(cfg.field, cfg.seed, 5)?;
    let pairs: Vec<_> = (0..cfg.samples).map(|_| (j.sample(&mut s), j.sample(&mut s))).collect();
    let cx = |x: &J::Elem, y: &J::Elem| json!({ "x": coords_json(x.coords()), "y": coords_json(y.coords()) });
    let e = j.unit();
    let name = |n: &str| format!("{label}: {n}");
    rec.run(name("N(1) = 1 and 1^# = 1"), || {
        require(j.norm(&e).is_one() && j.sharp(&e) == e, || json!("unit"))
    });
    rec.run(name("T(x^#, y) = dN(x)(y)"), || {
        for (x, y) in &pairs {
            require(j.trform(&j.sharp(x), y) == norm_derivative(j, x, y), || cx(x, y))?;
        }
        Ok(())
    });
    rec.run(name("(x^#)^# = N(x)x"), || {
        for (x, y) in &pairs {
            require(j.sharp(&j.sharp(x)) == j.scale(&j.norm(x), x), || cx(x, y))?;
        }
        Ok(())
    });
    rec.run(name("1 # x = T(x)1 - x"), || {
        for (x, y) in &pairs {
            let rhs = j.sub(&j.scale(&j.trace(x), &e), x);
            require(j.cross(&e, x) == rhs, || cx(x, y))?;
        }
        Ok(())
    });
    rec.run(name("T(x^#, x) = 3N(x)"), || {
        for (x, y) in &pairs {
            let rhs = &cfg.field.int(3) * &j.norm(x);
            require(j.trform(&j.sharp(x), x) == rhs, || cx(x, y))?;
        }
        Ok(())
    });
    rec.run(name("(x^2 y)x = x^2(yx)"), || {
        for (x, y) in &pairs {
            let x2 = j.jsquare(x);
            require(
                j.jmul(&j.jmul(&x2, y), x) == j.jmul(&x2, &j.jmul(y, x)),
                || cx(x, y),
            )?;
        }
        Ok(())
    });
    let heavy = &pairs[..cfg.heavy().min(pairs.len())];
    rec.run(name("U_x formulas agree"), || {
        for (x, y) in heavy {
            require(j.uop(x) == j.uop_quadratic(x), || cx(x, y))?;
        }
        Ok(())
    });
    rec.run(name("N(U_x y) = N(x)^2 N(y)"), || {
        for (x, y) in heavy {
            let nx = j.norm(x);
            require(
                j.norm(&j.uapply(x, y)) == &(&nx * &nx) * &j.norm(y),
                || cx(x, y),
            )?;
        }
        Ok(())
    });
    Ok(())
}

fn albert_suite(cfg: &RunConfig, rec: &mut Recorder) -> Result<()> {
    albert_checks(&HermitianAlbert::split(cfg.field)?, "hermitian", cfg, rec)?;
    albert_checks(&TitsAlbert::split(cfg.field)?, "tits", cfg, rec)
}

fn brown_checks<J: CubicJordan>(j: J, label: &str, cfg: &RunConfig, rec: &mut Recorder) -> Result<()> {
    let b = BrownAlgebra::split(j);
    let mut s = Sampler::new(cfg.field, cfg.seed, 5)?;
    let elem = |s: &mut Sampler| {
        let jj = b.jordan();
        b.elem(s.scalar(), s.scalar(), jj.sample(s), jj.sample(s))
    };
    let pairs: Vec<_> = (0..cfg.samples).map(|_| (elem(&mut s), elem(&mut s))).collect();
    let cx = |x: &crate::brown::BrownElem<J::Elem>, y: &crate::brown::BrownElem<J::Elem>| {
        json!({ "x": coords_json(&b.to_coords(x)), "y": coords_json(&b.to_coords(y)) })
    };
    let name = |n: &str| format!("{label}: {n}");
    rec.run(name("1x = x1 = x"), || {
        for (x, y) in &pairs {
            require(b.bmul(&b.unit(), x) == *x && b.bmul(x, &b.unit()) == *x, || cx(x, y))?;
        }
        Ok(())
    });
    rec.run(name("bar(xy) = bar(y)bar(x)"), || {
        for (x, y) in &pairs {
            require(
                b.binv(&b.bmul(x, y)) == b.bmul(&b.binv(y), &b.binv(x)),
                || cx(x, y),
            )?;
        }
        Ok(())
    });
    rec.run(name("bar(bar(x)) = x"), || {
        for (x, y) in &pairs {
            require(b.binv(&b.binv(x)) == *x, || cx(x, y))?;
        }
        Ok(())
    });
    let varpi = b.varpi();
    rec.run(name("varpi is an automorphism of order two"), || {
        require(varpi.is_involution() && b.preserves_product(&varpi), || json!("varpi"))
    });
    rec.run(name("varpi commutes with the involution"), || {
        require(b.commutes_with_binv(&varpi), || json!("varpi"))
    });
    Ok(())
}

fn expect_dim(field: FieldSpec, desc: &str, space: Space, dim: usize) -> CheckResult {
    let r = fixed_report(field, desc, space).map_err(error_json)?;
    require(r.dimension == dim && r.closed, || r.to_json())
}

fn brown_suite(cfg: &RunConfig, rec: &mut Recorder) -> Result<()> {
    brown_checks(HermitianAlbert::split(cfg.field)?, "hermitian", cfg, rec)?;
    brown_checks(TitsAlbert::split(cfg.field)?, "tits", cfg, rec)?;
    for (desc, dim) in [("s", 24), ("t", 32), ("varpi", 28), ("t.varpi", 28), ("s.varpi", 28)] {
        rec.run(format!("dim B^{desc} = {dim}"), || {
            expect_dim(cfg.field, desc, Space::B, dim)
        });
    }
    Ok(())
}

/// `U_y diag(N(y)^-2, 1, 1)`, which has norm one.
fn unit_norm_element(j: &HermitianAlbert, s: &mut Sampler) -> crate::albert::HerElem {
    loop {
        let y = j.sample(s);
        let n = j.norm(&y);
        if n.is_zero() {
            continue;
        }
        let f = j.field();
        let d = j.diag([n.pow(-2).expect("nonzero"), f.one(), f.one()]);
        return j.uapply(&y, &d);
    }
}

fn map_cx(m: &LinMap) -> Value {
    json!({ "map": m.basis_tag() })
}

fn involutions_suite(cfg: &RunConfig, rec: &mut Recorder) -> Result<()> {
    let f = cfg.field;
    let j = HermitianAlbert::split(f)?;
    let ctx = JContext::new(j.clone());
    let b = BrownAlgebra::split(j.clone());
    let mut s = Sampler::new(f, cfg.seed, 4)?;
    let n = cfg.heavy();
    let units: Vec<_> = (0..n).map(|_| unit_norm_element(&j, &mut s)).collect();
    let t_hat = lift_c_to_j(&j, &make_t_canonical(j.octonions())?)?;
    let s_map = make_s(&j);

    for (desc, dim) in [("s", 11), ("t", 15), ("t*", 15)] {
        rec.run(format!("dim J^{desc} = {dim}"), || expect_dim(f, desc, Space::J, dim));
    }
    rec.run("dagger(U_x) = U_{x^-1} for N(x) = 1", || {
        for x in &units {
            let d = ctx.dagger(&j.uop(x)).map_err(error_json)?;
            let inv = j.jinverse(x).map_err(error_json)?;
            require(d == j.uop(&inv), || json!({ "x": coords_json(x.coords()) }))?;
        }
        Ok(())
    });
    rec.run("dagger(t) = t", || {
        require(ctx.dagger(&t_hat).map_err(error_json)? == t_hat, || map_cx(&t_hat))
    });
    rec.run("varpi lift(phi) varpi = lift(dagger(phi))", || {
        let varpi = b.varpi();
        let phis = units.iter().map(|x| j.uop(x)).chain([t_hat.clone(), s_map.clone()]);
        for phi in phis {
            let lhs = varpi
                .then_after(&b.lift_inv_with(&ctx, &phi).map_err(error_json)?)
                .then_after(&varpi);
            let dag = ctx.dagger(&phi).map_err(error_json)?;
            let rhs = b.lift_inv_with(&ctx, &dag).map_err(error_json)?;
            require(lhs == rhs, || map_cx(&phi))?;
        }
        Ok(())
    });
    rec.run("U_V^2 = s and dagger(U_V) = U_V^-1", || {
        let uv = make_uv_bridge(&j).map_err(error_json)?;
        let dag = ctx.dagger(&uv).map_err(error_json)?;
        require(uv.square() == s_map && dag == uv.inverse().map_err(error_json)?, || map_cx(&uv))
    });
    rec.run("lift(U_V) maps B^varpi onto B^svarpi", || {
        let uv = make_uv_bridge(&j).map_err(error_json)?;
        let lift = b.lift_inv_with(&ctx, &uv).map_err(error_json)?;
        let varpi = b.varpi();
        let s_varpi = b
            .lift_inv_with(&ctx, &s_map)
            .and_then(|m| m.compose(&varpi))
            .map_err(error_json)?;
        let ok = verify_conjugacy_transport(&lift, &varpi, &s_varpi).map_err(error_json)?;
        require(ok, || map_cx(&uv))
    });
    rec.run("theta dagger(phi) theta = phi^-1 on the torus", || {
        let tj = TitsAlbert::split(f).map_err(error_json)?;
        let tctx = JContext::new(tj.clone());
        let theta = make_theta_tits(&tj).map_err(error_json)?;
        let mut ts = Sampler::new(f, cfg.seed ^ 0x7e7a, 6).map_err(error_json)?;
        for _ in 0..n {
            let ps: Vec<Scalar> = (0..6).map(|_| ts.nonzero()).collect();
            let phi = make_torus_element(f, &ps, TorusLevel::E6).map_err(error_json)?;
            let lhs = theta
                .then_after(&tctx.dagger(&phi).map_err(error_json)?)
                .then_after(&theta);
            require(lhs == phi.inverse().map_err(error_json)?, || coords_json(&ps))?;
        }
        Ok(())
    });
    rec.run("g(fix t) = fix(g t g^-1) for random automorphisms g", || {
        let mut gs = Sampler::new(f, cfg.seed.wrapping_add(1), 4).map_err(error_json)?;
        for _ in 0..(n / 2).max(1) {
            let g = random_automorphism(&j, &mut gs).map_err(error_json)?;
            for t in [&s_map, &t_hat] {
                let t2 = conjugate(&g, t).map_err(error_json)?;
                let ok = verify_conjugacy_transport(&g, t, &t2).map_err(error_json)?;
                require(ok && t2.is_involution(), || map_cx(t))?;
            }
        }
        Ok(())
    });
    rec.run("grading laws for s and t", || {
        let mul = ctx.jordan_product();
        for t in [&s_map, &t_hat] {
            let g = ctx.grade_decompose(t).map_err(error_json)?;
            require(g.grading_law_holds(&mul) && g.orthogonal(ctx.gram()), || map_cx(t))?;
        }
        Ok(())
    });
    Ok(())
}

/// Runs one suite (or all) and collects the per-identity verdicts.
pub fn run_suite(suite: Suite, cfg: &RunConfig) -> Result<SuiteReport> {
    if !cfg.field.is_arithmetic() {
        return Err(Error::NonArithmeticField(cfg.field.to_string()));
    }
    let mut rec = Recorder::default();
    let all = suite == Suite::All;
    if all || suite == Suite::Composition {
        composition_suite(cfg, &mut rec)?;
    }
    if all || suite == Suite::Albert {
        albert_suite(cfg, &mut rec)?;
    }
    if all || suite == Suite::Brown {
        brown_suite(cfg, &mut rec)?;
    }
    if all || suite == Suite::Involutions {
        involutions_suite(cfg, &mut rec)?;
    }
    Ok(SuiteReport {
        field: cfg.field,
        seed: cfg.seed,
        samples: cfg.samples,
        checks: rec.checks,
    })
}

fn emit(cfg: &RunConfig, value: Value, text: String) -> String {
    if cfg.json {
        format!("{}\n", serde_json::to_string_pretty(&value).expect("serializable"))
    } else {
        text
    }
}

pub fn cmd_verify(suite: Suite, cfg: &RunConfig) -> Outcome {
    match run_suite(suite, cfg) {
        Ok(r) => Outcome {
            stdout: emit(cfg, r.to_json(), r.render()),
            stderr: String::new(),
            code: if r.passed() { EXIT_OK } else { EXIT_FAILURE },
        },
        Err(e) => Outcome::config_error(&e),
    }
}

pub fn cmd_fixed(descriptor: &str, space: &str, cfg: &RunConfig) -> Outcome {
    let run = || -> Result<Outcome> {
        let space: Space = space.parse()?;
        let r = fixed_report(cfg.field, descriptor, space)?;
        let stable = match r.involution_stable {
            Some(true) => "yes",
            Some(false) => "no",
            None => "n/a",
        };
        let text = format!(
            "descriptor: {}\nspace: {}\nmodel: {}\ndimension: {}\nclosed: {}\ninvolution-stable: {stable}\nshape: {}\n",
            r.descriptor, r.space, r.model, r.dimension, r.closed, r.shape
        );
        Ok(Outcome::ok(emit(cfg, r.to_json(), text)))
    };
    run().unwrap_or_else(|e| Outcome::config_error(&e))
}

/// `gcd` overrides the default filter: on for untwisted diagrams, off for
/// diagrams with a folding.
pub fn cmd_kac(diagram: &str, m: u64, gcd: Option<bool>, folded: bool, cfg: &RunConfig) -> Outcome {
    let run = || -> Result<Outcome> {
        let d = MarkedAffineDiagram::load(diagram)?;
        let gcd = gcd.unwrap_or(!d.has_folding());
        let folded = folded || d.has_folding();
        let sols = d.enumerate(m, gcd, folded)?;
        let mut text = format!(
            "diagram {} (marks {:?}), m = {m}, gcd filter {}, {}\n",
            d.name,
            d.marks,
            if gcd { "on" } else { "off" },
            if folded { "folded" } else { "unfolded" }
        );
        for sol in &sols {
            let s: Vec<String> = sol.s.iter().map(u64::to_string).collect();
            let _ = writeln!(text, "({})  {}", s.join(","), sol.residual);
        }
        let _ = writeln!(text, "{} solutions", sols.len());
        let value = json!({
            "diagram": d.name,
            "m": m,
            "gcd_filter": gcd,
            "folded": folded,
            "solutions": sols.iter().map(|s| s.to_json()).collect::<Vec<_>>(),
        });
        Ok(Outcome::ok(emit(cfg, value, text)))
    };
    run().unwrap_or_else(|e| Outcome::config_error(&e))
}

pub fn cmd_classify(field: &str, group: &str, cfg: &RunConfig) -> Outcome {
    let run = || -> Result<Outcome> {
        let field: FieldSpec = field.parse()?;
        let level: GroupLevel = group.parse()?;
        let r = report(field, level);
        let mut text = format!("{level} over {field}\n");
        for (kind, c) in &r.classes {
            let _ = writeln!(text, "  {kind}: {c}");
        }
        let _ = writeln!(text, "  total: {}", r.total);
        let _ = writeln!(text, "representatives: {}", r.representatives.join(" "));
        if !r.family.is_empty() {
            let _ = writeln!(text, "division family: {} ...", r.family.join(" "));
        }
        Ok(Outcome::ok(emit(cfg, r.to_json(), text)))
    };
    run().unwrap_or_else(|e| Outcome::config_error(&e))
}

/// Dispatches parsed arguments.
pub fn run(cli: &Cli) -> Outcome {
    let field = match cli.field.parse::<FieldSpec>() {
        Ok(f) => f,
        Err(e) => return Outcome::config_error(&e),
    };
    let cfg = RunConfig {
        field,
        seed: cli.seed,
        samples: cli.samples,
        json: cli.json,
    };
    match &cli.command {
        Command::Verify { suite } => cmd_verify(*suite, &cfg),
        Command::Fixed { descriptor, space } => cmd_fixed(descriptor, space, &cfg),
        Command::Kac { diagram, m, no_gcd, gcd, folded } => {
            let filter = match (*gcd, *no_gcd) {
                (true, _) => Some(true),
                (_, true) => Some(false),
                _ => None,
            };
            cmd_kac(diagram, *m, filter, *folded, &cfg)
        }
        Command::Classify { field, group } => cmd_classify(field, group, &cfg),
    }
}
