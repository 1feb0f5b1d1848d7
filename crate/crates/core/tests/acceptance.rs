//! Acceptance gate: each numbered criterion runs with its sample counts and
//! time limits and prints one PASS/FAIL line.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use e6kit::albert::{CubicJordan, HerElem, HermitianAlbert, TitsAlbert};
use e6kit::brown::{BrownAlgebra, BROWN_DIM};
use e6kit::cda::CdAlgebra;
use e6kit::invol::{
    fixed_report, lift_c_to_j, make_s, make_t_canonical, make_theta_tits, make_uv_bridge,
    random_automorphism, JContext, Space,
};
use e6kit::kac::MarkedAffineDiagram;
use e6kit::linalg::{Matrix, Subspace};
use e6kit::linmap::LinMap;
use e6kit::qclass::{e6_class_report, hilbert_symbol, is_split, Place, QuatPresentation};
use e6kit::scalar::{Cardinality, FieldSpec, Sampler, Scalar};
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn f7() -> FieldSpec {
    FieldSpec::PrimeField(7)
}

fn unit_norm(j: &HermitianAlbert, s: &mut Sampler) -> HerElem {
    loop {
        let y = j.sample(s);
        let n = j.norm(&y);
        if n.is_zero() {
            continue;
        }
        let f = j.field();
        let x = j.uapply(&y, &j.diag([n.pow(-2).unwrap(), f.one(), f.one()]));
        assert!(j.norm(&x).is_one());
        return x;
    }
}

fn t_hat(j: &HermitianAlbert) -> LinMap {
    lift_c_to_j(j, &make_t_canonical(j.octonions()).unwrap()).unwrap()
}

fn c1_composition() -> Outcome {
    for field in [f7(), FieldSpec::PrimeField(11), FieldSpec::Rationals] {
        let oct = CdAlgebra::split_octonions(field).unwrap();
        let mut s = Sampler::new(field, 1, 9).unwrap();
        for i in 0..1000 {
            let x = oct.elem(s.vector(8)).unwrap();
            let y = oct.elem(s.vector(8)).unwrap();
            ensure(x.mul(&y).qnorm() == &x.qnorm() * &y.qnorm(), || {
                format!("{field} sample {i}: {x:?} {y:?}")
            })?;
        }
    }
    Ok(())
}

/// Linear coefficient of `t -> N(x + t y)` from values at `t = -1, 0, 1, 2`.
fn norm_derivative<J: CubicJordan>(j: &J, x: &J::Elem, y: &J::Elem) -> Scalar {
    let f = j.field();
    let p = |t: i64| j.norm(&j.add(x, &j.scale(&f.int(t), y)));
    let (p0, p1, pm1, p2) = (p(0), p(1), p(-1), p(2));
    let c2 = &(&p1 + &pm1).half() - &p0;
    let odd = (&p1 - &pm1).half();
    let num = &(&(&(&f.int(8) * &odd) + &p0) + &(&f.int(4) * &c2)) - &p2;
    num.checked_div(&f.int(6)).unwrap()
}

fn sharped_axioms<J: CubicJordan>(j: &J, n: usize, seed: u64, closed: impl Fn(&J::Elem) -> Scalar) -> Outcome {
    let mut s = Sampler::new(j.field(), seed, 4).unwrap();
    let e = j.unit();
    ensure(j.norm(&e).is_one(), || "N(1) != 1".into())?;
    for i in 0..n {
        let x = j.sample(&mut s);
        let y = j.sample(&mut s);
        let tag = || format!("{} over {} sample {i}", j.model_name(), j.field());
        ensure(j.norm(&x) == closed(&x), || format!("norm formula, {}", tag()))?;
        let sx = j.sharp(&x);
        ensure(j.trform(&sx, &y) == norm_derivative(j, &x, &y), || format!("T(x#,y), {}", tag()))?;
        ensure(j.sharp(&sx) == j.scale(&j.norm(&x), &x), || format!("(x#)#, {}", tag()))?;
        let rhs = j.sub(&j.scale(&j.trace(&x), &e), &x);
        ensure(j.cross(&e, &x) == rhs, || format!("1 # x, {}", tag()))?;
    }
    Ok(())
}

fn c2_sharped_cubic_forms() -> Outcome {
    for field in [f7(), FieldSpec::Rationals] {
        let her = HermitianAlbert::split(field).unwrap();
        sharped_axioms(&her, 500, 2, |x| her.norm_closed_form(x).unwrap())?;
        let tits = TitsAlbert::split(field).unwrap();
        sharped_axioms(&tits, 500, 3, |x| tits.norm_formula(x))?;
    }
    Ok(())
}

fn u_coherence<J: CubicJordan>(j: &J, n: usize) -> Outcome {
    let mut s = Sampler::new(j.field(), 4, 4).unwrap();
    for i in 0..n {
        let x = j.sample(&mut s);
        let y = j.sample(&mut s);
        ensure(j.uop(&x) == j.uop_quadratic(&x), || format!("{} U formulas, sample {i}", j.model_name()))?;
        let nx = j.norm(&x);
        ensure(j.norm(&j.uapply(&x, &y)) == &(&nx * &nx) * &j.norm(&y), || {
            format!("{} N(U_x y), sample {i}", j.model_name())
        })?;
    }
    Ok(())
}

fn c3_u_operators() -> Outcome {
    for field in [f7(), FieldSpec::Rationals] {
        u_coherence(&HermitianAlbert::split(field).unwrap(), 100)?;
        u_coherence(&TitsAlbert::split(field).unwrap(), 100)?;
    }
    Ok(())
}

fn c4_dagger_laws() -> Outcome {
    let j = HermitianAlbert::split(f7()).unwrap();
    let ctx = JContext::new(j.clone());
    let b = BrownAlgebra::split(j.clone());
    let varpi = b.varpi();
    let mut s = Sampler::new(f7(), 5, 4).unwrap();
    for i in 0..50 {
        let x = unit_norm(&j, &mut s);
        let ux = j.uop(&x);
        let dx = ctx.dagger(&ux).unwrap();
        ensure(dx == j.uop(&j.jinverse(&x).unwrap()), || format!("dagger(U_x), sample {i}"))?;
        // φ(a) # φ(b) = φ†(a # b)
        let (a, c) = (j.sample(&mut s), j.sample(&mut s));
        ensure(
            j.cross(&j.apply(&ux, &a), &j.apply(&ux, &c)) == j.apply(&dx, &j.cross(&a, &c)),
            || format!("sharp intertwining, sample {i}"),
        )?;
        // ϖ φ^ ϖ = (φ†)^ with (φ†)^ = (α, β, φ† j, φ l)
        let lhs = varpi
            .then_after(&b.lift_inv_with(&ctx, &ux).unwrap())
            .then_after(&varpi);
        ensure(lhs == b.block_lift(&dx, &ux).unwrap(), || format!("varpi lift, sample {i}"))?;
    }
    let t = t_hat(&j);
    ensure(ctx.dagger(&t).unwrap() == t, || "dagger(t) != t".into())
}

fn c5_fixed_dimensions() -> Vec<(String, Outcome, Duration)> {
    let cases = [
        ("B^s", "s", Space::B, 24),
        ("B^t", "t", Space::B, 32),
        ("B^varpi", "varpi", Space::B, 28),
        ("B^tvarpi", "t.varpi", Space::B, 28),
        ("J^s", "s", Space::J, 11),
        ("J^t", "t", Space::J, 15),
    ];
    cases
        .into_iter()
        .map(|(name, desc, space, dim)| {
            let start = Instant::now();
            let r = fixed_report(f7(), desc, space).map_err(|e| e.to_string());
            let out = r.and_then(|r| {
                ensure(r.dimension == dim && r.closed, || format!("{name}: got {} closed {}", r.dimension, r.closed))
            });
            (name.to_string(), out, start.elapsed())
        })
        .collect()
}

fn c6_uv_bridge() -> Outcome {
    let j = HermitianAlbert::split(f7()).unwrap();
    let ctx = JContext::new(j.clone());
    let uv = make_uv_bridge(&j).unwrap();
    let s = make_s(&j);
    ensure(uv.square() == s, || "U_V^2 != s".into())?;
    ensure(ctx.dagger(&uv).unwrap() == uv.inverse().unwrap(), || "dagger(U_V) != U_V^-1".into())?;
    let b = BrownAlgebra::split(j.clone());
    let lift = b.lift_inv_with(&ctx, &uv).unwrap();
    let varpi = b.varpi();
    let s_varpi = b.lift_inv(&s).unwrap().compose(&varpi).unwrap();
    let image: Vec<Vec<Scalar>> = varpi.fixed_space().iter().map(|v| lift.apply(v)).collect();
    let image = Subspace::span(f7(), BROWN_DIM, &image);
    let target = Subspace::span(f7(), BROWN_DIM, &s_varpi.fixed_space());
    ensure(image.dim() == 28 && image.same_as(&target), || {
        format!("image dim {} vs target dim {}", image.dim(), target.dim())
    })
}

fn c7_torus_inversion() -> Outcome {
    let f = f7();
    let j = TitsAlbert::split(f).unwrap();
    let ctx = JContext::new(j.clone());
    let theta = make_theta_tits(&j).unwrap();
    let mut s = Sampler::new(f, 7, 6).unwrap();
    let diag = |s: &mut Sampler| {
        let (a, b) = (s.nonzero(), s.nonzero());
        let c = (&a * &b).inv().unwrap();
        Matrix::diagonal(f, &[a, b, c])
    };
    for i in 0..20 {
        let (u, v, w) = (diag(&mut s), diag(&mut s), diag(&mut s));
        let phi = j.tits_phi(&u, &v, &w).unwrap();
        let lhs = theta.then_after(&ctx.dagger(&phi).unwrap()).then_after(&theta);
        ensure(lhs == phi.inverse().unwrap(), || format!("triple {i}"))?;
    }
    Ok(())
}

/// Brute-force Kac coordinates on the extended E6 diagram.
fn brute_kac(m: u64) -> Vec<Vec<u64>> {
    let marks = [1u64, 1, 2, 3, 2, 2, 1];
    let mut out = Vec::new();
    let mut s = vec![0u64; 7];
    fn rec(i: usize, left: u64, marks: &[u64], s: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if i == marks.len() {
            if left == 0 {
                out.push(s.clone());
            }
            return;
        }
        for v in 0..=left / marks[i] {
            s[i] = v;
            rec(i + 1, left - v * marks[i], marks, s, out);
        }
        s[i] = 0;
    }
    rec(0, m, &marks, &mut s, &mut out);
    let gcd = |a: u64, b: u64| num_integer::Integer::gcd(&a, &b);
    out.retain(|s| s.iter().fold(0, |g, &x| gcd(g, x)) == 1);
    out
}

fn c8_kac() -> Outcome {
    let e6 = MarkedAffineDiagram::e6_extended();
    let sols = e6.enumerate(2, true, false).unwrap();
    let mut got: Vec<Vec<u64>> = sols.iter().map(|s| s.s.clone()).collect();
    let mut brute = brute_kac(2);
    got.sort();
    brute.sort();
    ensure(got == brute && got.len() == 6, || format!("solutions {got:?} vs {brute:?}"))?;
    let mut types: Vec<String> = sols.iter().map(|s| s.residual.to_string()).collect();
    types.sort();
    ensure(types == ["A5×A1", "A5×A1", "A5×A1", "D5", "D5", "D5"], || format!("{types:?}"))?;
    let has = |v: &[u64], t: &str| sols.iter().any(|s| s.s == v && s.residual.to_string() == t);
    ensure(has(&[1, 1, 0, 0, 0, 0, 0], "D5"), || "missing (1,1,0,0,0,0,0) -> D5".into())?;
    ensure(has(&[0, 0, 1, 0, 0, 0, 0], "A5×A1"), || "missing (0,0,1,0,0,0,0) -> A5×A1".into())?;
    let twisted = MarkedAffineDiagram::e6_twisted().enumerate(2, false, true).unwrap();
    let has_t = |v: &[u64], t: &str| twisted.iter().any(|s| s.s == v && s.residual.to_string() == t);
    ensure(has_t(&[2, 0, 0, 0, 0, 0, 0], "F4"), || "missing (2,0,...,0) -> F4".into())?;
    ensure(has_t(&[0, 1, 0, 0, 0, 0, 1], "C4"), || "missing (0,1,0,0,0,0,1) -> C4".into())
}

fn c9_class_counts() -> Outcome {
    let expect = |f: FieldSpec, total: u64| -> Outcome {
        let r = e6_class_report(f);
        ensure(r.total == Cardinality::Finite(total), || format!("{f}: total {}", r.total))?;
        let one = Cardinality::Finite(1);
        ensure(r.classes[0] == ("sigma", one) && r.classes[2] == ("dagger", one), || {
            format!("{f}: {:?}", r.classes)
        })
    };
    expect(FieldSpec::AlgClosedMarker, 4)?;
    expect(FieldSpec::PrimeField(7), 4)?;
    expect(FieldSpec::PrimeField(13), 4)?;
    expect(FieldSpec::RealPlace, 6)?;
    for p in [2, 3, 5, 7] {
        expect(FieldSpec::PadicPlace(p), 6)?;
    }
    let q = e6_class_report(FieldSpec::Rationals);
    ensure(q.total == Cardinality::Infinite, || "Q total should be infinite".into())
}

fn squarefree(mut n: i64) -> i64 {
    let mut d = 2;
    while d * d <= n.abs() {
        while n % (d * d) == 0 {
            n /= d * d;
        }
        d += 1;
    }
    n
}

/// Nonzero solution of `z^2 = a x^2 + b y^2` with `0 <= x, y <= 40`.
fn isotropic(a: i64, b: i64) -> bool {
    (0..=40i64).any(|x| {
        (0..=40i64).any(|y| {
            let r = a * x * x + b * y * y;
            (x, y) != (0, 0) && r >= 0 && {
                let z = (r as f64).sqrt().round() as i64;
                (z - 1..=z + 1).any(|z| z >= 0 && z * z == r)
            }
        })
    })
}

fn c10_hilbert() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for i in 0..100 {
        let draw = |rng: &mut ChaCha8Rng| loop {
            let n: i64 = rng.random_range(-500..=500);
            let d: i64 = rng.random_range(1..=60);
            if n != 0 {
                return BigRational::new(n.into(), d.into());
            }
        };
        let (a, b) = (draw(&mut rng), draw(&mut rng));
        let q = QuatPresentation::new(a.clone(), b.clone()).unwrap();
        let mut prod = hilbert_symbol(&a, &b, Place::Real).unwrap();
        for p in q.bad_primes() {
            prod *= hilbert_symbol(&a, &b, Place::Padic(p)).unwrap();
        }
        ensure(prod == 1, || format!("pair {i}: ({a}, {b})"))?;
    }
    for a in -20i64..=20 {
        for b in -20i64..=20 {
            if a == 0 || b == 0 {
                continue;
            }
            let q = QuatPresentation::from_ints(a, b).unwrap();
            let split = is_split(&q, FieldSpec::Rationals).unwrap();
            ensure(split == isotropic(squarefree(a), squarefree(b)), || format!("({a},{b})"))?;
        }
    }
    Ok(())
}

fn c11_conjugacy() -> Outcome {
    let f = f7();
    let j = HermitianAlbert::split(f).unwrap();
    let ctx = JContext::new(j.clone());
    let ts = [make_s(&j), t_hat(&j)];
    let mut s = Sampler::new(f, 11, 4).unwrap();
    for i in 0..20 {
        let g = random_automorphism(&j, &mut s).unwrap();
        ensure(ctx.is_aut_member(&g).unwrap(), || format!("g {i} not an automorphism"))?;
        let ginv = g.inverse().unwrap();
        for t in &ts {
            let t2 = g.then_after(t).then_after(&ginv);
            let image: Vec<Vec<Scalar>> = t.fixed_space().iter().map(|v| g.apply(v)).collect();
            let lhs = Subspace::span(f, 27, &image);
            let rhs = Subspace::span(f, 27, &t2.fixed_space());
            ensure(lhs.same_as(&rhs), || format!("conjugation {i} of {}", t.basis_tag()))?;
        }
    }
    let mul = ctx.jordan_product();
    for t in &ts {
        let g = ctx.grade_decompose(t).unwrap();
        ensure(g.grading_law_holds(&mul), || format!("grading law for {}", t.basis_tag()))?;
        ensure(g.plus.len() + g.minus.len() == 27, || "eigenspaces do not span".into())?;
    }
    Ok(())
}

fn timed(f: impl FnOnce() -> Outcome) -> (Outcome, Duration) {
    let start = Instant::now();
    let out = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
        let msg = e
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic".into());
        Err(msg)
    });
    (out, start.elapsed())
}

fn main() {
    let secs = |s: u64| Some(Duration::from_secs(s));
    let mut lines: Vec<(String, Outcome, Duration, Option<Duration>)> = Vec::new();
    let mut push = |name: &str, f: fn() -> Outcome, limit: Option<Duration>| {
        let (out, dt) = timed(f);
        lines.push((name.to_string(), out, dt, limit));
    };
    push("1 composition law", c1_composition, secs(5));
    push("2 sharped cubic forms", c2_sharped_cubic_forms, secs(10));
    push("3 U-operator coherence", c3_u_operators, secs(10));
    push("4 dagger laws", c4_dagger_laws, None);
    for (name, out, dt) in c5_fixed_dimensions() {
        lines.push((format!("5 fixed dimension {name}"), out, dt, secs(5)));
    }
    let mut push = |name: &str, f: fn() -> Outcome, limit: Option<Duration>| {
        let (out, dt) = timed(f);
        lines.push((name.to_string(), out, dt, limit));
    };
    push("6 U_V bridge", c6_uv_bridge, None);
    push("7 torus inversion", c7_torus_inversion, None);
    push("8 Kac enumeration", c8_kac, secs(1));
    push("9 class counts", c9_class_counts, None);
    push("10 Hilbert symbols", c10_hilbert, None);
    push("11 conjugacy transport", c11_conjugacy, None);

    let mut failed = 0;
    for (name, out, dt, limit) in &lines {
        let slow = limit.is_some_and(|l| *dt > l);
        let verdict = match (out, slow) {
            (Ok(()), false) => "PASS".to_string(),
            (Ok(()), true) => format!("FAIL (over the {:.0?} limit)", limit.unwrap()),
            (Err(e), _) => format!("FAIL ({e})"),
        };
        if verdict != "PASS" {
            failed += 1;
        }
        println!("criterion {name}: {verdict} [{:.2}s]", dt.as_secs_f64());
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all {} acceptance checks passed", lines.len());
}
