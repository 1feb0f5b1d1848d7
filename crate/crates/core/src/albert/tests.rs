use super::*;
use crate::cda::CdAlgebra;
use crate::linalg::Matrix;
use crate::scalar::{FieldSpec, Sampler};

fn q() -> FieldSpec {
    FieldSpec::Rationals
}

fn f11() -> FieldSpec {
    FieldSpec::PrimeField(11)
}

fn hermitian_models() -> Vec<HermitianAlbert> {
    let mut out = vec![
        HermitianAlbert::split(q()).unwrap(),
        HermitianAlbert::split(f11()).unwrap(),
    ];
    for (field, g) in [(q(), [1, 2, 3]), (q(), [-1, 1, 1]), (f11(), [2, 5, 7])] {
        let oct = CdAlgebra::split_octonions(field).unwrap();
        out.push(HermitianAlbert::new(oct, g.map(|x| field.int(x))).unwrap());
    }
    let division = CdAlgebra::parse("cd:Q:-1,-1,-1").unwrap();
    out.push(HermitianAlbert::new(division, [q().int(1), q().int(1), q().int(1)]).unwrap());
    out
}

fn tits_models() -> Vec<TitsAlbert> {
    vec![
        TitsAlbert::split(q()).unwrap(),
        TitsAlbert::split(f11()).unwrap(),
        TitsAlbert::new(q(), q().int(3)).unwrap(),
        TitsAlbert::new(f11(), f11().int(5)).unwrap(),
    ]
}

/// Linear coefficient of `t -> N(x + t y)`, interpolated from four values.
fn directional_derivative<J: CubicJordan>(j: &J, x: &J::Elem, y: &J::Elem) -> Scalar {
    let f = j.field();
    let p = |t: i64| j.norm(&j.add(x, &j.scale(&f.int(t), y)));
    let (p0, p1, pm1, p2) = (p(0), p(1), p(-1), p(2));
    let c2 = &(&p1 + &pm1).half() - &p0;
    let s = (&p1 - &pm1).half();
    let num = &(&(&(&f.int(8) * &s) + &p0) + &(&f.int(4) * &c2)) - &p2;
    num.checked_div(&f.int(6)).unwrap()
}

fn check_sharped_axioms<J: CubicJordan>(j: &J, seed: u64, n: usize) {
    let mut s = Sampler::new(j.field(), seed, 5).unwrap();
    let e = j.unit();
    assert!(j.norm(&e).is_one());
    assert_eq!(j.sharp(&e), e);
    for _ in 0..n {
        let x = j.sample(&mut s);
        let y = j.sample(&mut s);
        let sx = j.sharp(&x);
        assert_eq!(j.trform(&sx, &y), directional_derivative(j, &x, &y), "T(x#, y)");
        assert_eq!(j.sharp(&sx), j.scale(&j.norm(&x), &x), "(x#)# = N(x) x");
        let rhs = j.sub(&j.scale(&j.trace(&x), &e), &x);
        assert_eq!(j.cross(&e, &x), rhs, "1 # x");
        assert_eq!(j.trform(&sx, &x), &j.field().int(3) * &j.norm(&x));
        assert_eq!(j.jmul(&e, &x), x);
        assert_eq!(j.jmul(&x, &y), j.jmul(&y, &x));
        // x^2 . x = x . x^2 and the Jordan identity (x^2 . y) . x = x^2 . (y . x)
        let x2 = j.jsquare(&x);
        assert_eq!(j.jmul(&j.jmul(&x2, &y), &x), j.jmul(&x2, &j.jmul(&y, &x)));
    }
}

#[test]
fn sharped_cubic_form_axioms_hermitian() {
    for (i, j) in hermitian_models().iter().enumerate() {
        check_sharped_axioms(j, i as u64, 6);
    }
}

#[test]
fn sharped_cubic_form_axioms_tits() {
    for (i, j) in tits_models().iter().enumerate() {
        check_sharped_axioms(j, 100 + i as u64, 6);
    }
}

#[test]
fn tits_norm_matches_formula() {
    for (i, j) in tits_models().iter().enumerate() {
        let mut s = Sampler::new(j.field(), i as u64, 9).unwrap();
        for _ in 0..20 {
            let x = j.sample(&mut s);
            assert_eq!(j.norm(&x), j.norm_formula(&x));
        }
    }
}

#[test]
fn hermitian_norm_matches_closed_form() {
    for field in [q(), f11()] {
        let j = HermitianAlbert::split(field).unwrap();
        let mut s = Sampler::new(field, 7, 9).unwrap();
        for _ in 0..30 {
            let x = j.sample(&mut s);
            assert_eq!(j.norm(&x), j.norm_closed_form(&x).unwrap());
        }
    }
    let oct = CdAlgebra::split_octonions(q()).unwrap();
    let twisted = HermitianAlbert::new(oct, [q().int(1), q().int(2), q().int(1)]).unwrap();
    assert!(twisted.norm_closed_form(&twisted.unit()).is_err());
}

#[test]
fn diagonal_examples() {
    let j = HermitianAlbert::split(q()).unwrap();
    let d = |a, b, c| j.diag_ints([a, b, c]);
    assert_eq!(j.jmul(&d(1, 2, 3), &d(4, 5, 6)), d(4, 10, 18));
    assert_eq!(j.norm(&d(2, 3, 4)), q().int(24));
    assert_eq!(j.sharp(&d(2, 3, 4)), d(12, 8, 6));
    assert_eq!(j.trform(&j.unit(), &j.unit()), q().int(3));
    assert_eq!(j.uapply(&d(1, 2, 3), &d(5, 7, 11)), d(5, 28, 99));
    assert_eq!(j.uapply_quadratic(&d(1, 2, 3), &d(5, 7, 11)), d(5, 28, 99));
    let inv = j.jinverse(&d(2, 3, 4)).unwrap();
    let h = |n: i64, m: i64| q().ratio(n, m).unwrap();
    assert_eq!(inv, j.diag([h(1, 2), h(1, 3), h(1, 4)]));
    assert_eq!(j.jinverse(&j.unit()).unwrap(), j.unit());
    assert_eq!(j.jinverse(&d(1, 0, 1)), Err(Error::SingularElement));
}

#[test]
fn tits_unit_law() {
    let j = TitsAlbert::split(FieldSpec::PrimeField(7)).unwrap();
    let mut s = Sampler::new(j.field(), 3, 1).unwrap();
    let x = j.sample(&mut s);
    assert_eq!(j.jmul(&j.unit(), &x), x);
}

#[test]
fn gram_matrices_are_nondegenerate() {
    for j in hermitian_models() {
        assert_eq!(j.gram().rank(), ALBERT_DIM);
    }
    for j in tits_models() {
        assert_eq!(j.gram().rank(), ALBERT_DIM);
    }
    let j = TitsAlbert::split(FieldSpec::PrimeField(7)).unwrap();
    assert_eq!(j.gram().rank(), ALBERT_DIM);
}

fn check_u_operators<J: CubicJordan>(j: &J, seed: u64, n: usize) {
    let mut s = Sampler::new(j.field(), seed, 4).unwrap();
    assert!(j.uop(&j.unit()).is_identity());
    for _ in 0..n {
        let x = j.sample(&mut s);
        let y = j.sample(&mut s);
        assert_eq!(j.uop(&x), j.uop_quadratic(&x));
        let nx = j.norm(&x);
        assert_eq!(j.norm(&j.uapply(&x, &y)), &(&nx * &nx) * &j.norm(&y));
        if let Ok(xi) = j.jinverse(&x) {
            assert_eq!(j.uapply(&x, &xi), x);
            assert!(j.uop(&x).then_after(&j.uop(&xi)).is_identity());
        }
    }
}

#[test]
fn u_operator_formulas_agree() {
    for (i, j) in hermitian_models().iter().enumerate().take(4) {
        check_u_operators(j, 10 + i as u64, 2);
    }
    for (i, j) in tits_models().iter().enumerate() {
        check_u_operators(j, 20 + i as u64, 2);
    }
}

/// `U` operator of the isotope `J<y>`, assembled from its own product.
fn isotope_uop<J: CubicJordan>(j: &J, x: &J::Elem, y: &J::Elem) -> LinMap {
    let l = j.linmap(|b| j.triple(x, y, b));
    let xx = j.triple(x, y, x);
    let l2 = j.linmap(|b| j.triple(&xx, y, b));
    let two = j.field().int(2);
    let m = l.matrix().mul(l.matrix()).scale(&two).sub(l2.matrix());
    LinMap::new(m, crate::linmap::Carrier::AlbertSpace, "iso").unwrap()
}

fn check_isotopes<J: CubicJordan>(j: &J, seed: u64) {
    let mut s = Sampler::new(j.field(), seed, 4).unwrap();
    let mut nonsingular = || loop {
        let x = j.sample(&mut s);
        if !j.norm(&x).is_zero() {
            return x;
        }
    };
    let u = nonsingular();
    let y = nonsingular();
    let z = nonsingular();
    let x = nonsingular();
    let uinv = j.jinverse(&u).unwrap();
    for b in j.basis().iter().step_by(5) {
        assert_eq!(&j.isotope_mul(&uinv, &u, b).unwrap(), b, "isotope unit");
    }
    assert_eq!(isotope_uop(j, &x, &y), j.uop(&x).then_after(&j.uop(&y)));
    // (J<y>)<z> and J<U_y z> share a product
    let a = nonsingular();
    let b = nonsingular();
    let iso = |p: &J::Elem, q: &J::Elem| j.triple(p, &y, q);
    let lhs = j.sub(
        &j.add(&iso(&iso(&a, &z), &b), &iso(&iso(&b, &z), &a)),
        &iso(&iso(&a, &b), &z),
    );
    assert_eq!(lhs, j.triple(&a, &j.uapply(&y, &z), &b));
    assert_eq!(j.triple(&a, &j.unit(), &b), j.jmul(&a, &b));
}

#[test]
fn isotope_identities() {
    check_isotopes(&HermitianAlbert::split(q()).unwrap(), 1);
    check_isotopes(&HermitianAlbert::split(f11()).unwrap(), 2);
    check_isotopes(&TitsAlbert::split(f11()).unwrap(), 3);
    let j = HermitianAlbert::split(q()).unwrap();
    let u = j.diag_ints([2, 3, 4]);
    let uinv = j.jinverse(&u).unwrap();
    let mut s = Sampler::new(q(), 4, 4).unwrap();
    let x = j.sample(&mut s);
    assert_eq!(j.isotope_mul(&uinv, &u, &x).unwrap(), x);
    assert_eq!(
        j.isotope_mul(&x, &j.diag_ints([1, 0, 0]), &x),
        Err(Error::SingularElement)
    );
}

#[test]
fn norm_similarities() {
    let j = HermitianAlbert::split(q()).unwrap();
    let mut s = Sampler::new(q(), 5, 6).unwrap();
    let two = q().int(2);
    let three = q().int(3);
    assert!(j.phi_lambda_map(&q().one()).unwrap().is_identity());
    assert!(j.nu_g_map(&q().one()).unwrap().is_identity());
    assert_eq!(j.phi_lambda(&q().zero(), &j.unit()), Err(Error::ZeroMultiplier));
    assert_eq!(j.nu_g(&q().zero(), &j.unit()), Err(Error::ZeroMultiplier));
    for _ in 0..20 {
        let x = j.sample(&mut s);
        let nx = j.norm(&x);
        let px = j.phi_lambda(&two, &x).unwrap();
        assert_eq!(j.norm(&px), &two * &nx);
        let ppx = j.phi_lambda(&three, &px).unwrap();
        assert_eq!(j.norm(&ppx), &(&two * &three) * &nx);
        assert_eq!(j.norm(&j.nu_g(&three, &x).unwrap()), nx);
    }
    let u = j.primitive_idempotent();
    let g = q().int(2);
    let g4inv = g.pow(-4).unwrap();
    assert_eq!(j.nu_g(&g, &u).unwrap(), j.scale(&g4inv, &u));
}

#[test]
fn beth_is_an_eleven_dimensional_subalgebra() {
    for field in [q(), f11()] {
        let j = HermitianAlbert::split(field).unwrap();
        let basis = j.beth_basis();
        assert_eq!(basis.len(), 11);
        let vecs: Vec<Vec<Scalar>> = basis.iter().map(|b| b.coords().to_vec()).collect();
        assert_eq!(Matrix::from_rows(field, vecs.clone()).rank(), 11);
        assert!(j.is_jordan_closed(&vecs));
        let u = &basis[0];
        assert_eq!(&j.jsquare(u), u);
        assert_eq!(j.trform(u, u).half(), field.one().half());
    }
}

#[test]
fn tits_phi_preserves_norm_and_composes() {
    let f = FieldSpec::PrimeField(7);
    let j = TitsAlbert::split(f).unwrap();
    let elementary = |r: usize, c: usize, t: i64| {
        let mut m = Matrix::identity(f, 3);
        m[(r, c)] = f.int(t);
        m
    };
    let u = elementary(0, 1, 3).mul(&elementary(2, 0, 5));
    let v = elementary(1, 2, 4);
    let w = elementary(2, 1, 6).mul(&elementary(0, 2, 1));
    let phi = j.tits_phi(&u, &v, &w).unwrap();
    let psi = j.tits_phi(&v, &w, &u).unwrap();
    let both = j.tits_phi(&u.mul(&v), &v.mul(&w), &w.mul(&u)).unwrap();
    assert_eq!(phi.then_after(&psi), both);
    let id = Matrix::identity(f, 3);
    assert!(j.tits_phi(&id, &id, &id).unwrap().is_identity());
    let mut s = Sampler::new(f, 9, 1).unwrap();
    for _ in 0..20 {
        let x = j.sample(&mut s);
        assert_eq!(j.norm(&j.apply(&phi, &x)), j.norm(&x));
    }
    let bad = Matrix::diagonal(f, &[f.int(2), f.int(1), f.int(1)]);
    assert_eq!(j.tits_phi(&bad, &id, &id), Err(Error::NotUnimodular));
}

#[test]
fn tits_torus_scales_coordinates_by_characters() {
    let f = q();
    let j = TitsAlbert::split(f).unwrap();
    let d = |a: i64, b: i64| {
        Matrix::diagonal(f, &[f.int(a), f.int(b), f.ratio(1, a * b).unwrap()])
    };
    let (us, vs, ws) = ([2, 3], [5, -1], [7, 2]);
    let phi = j.tits_phi(&d(us[0], us[1]), &d(vs[0], vs[1]), &d(ws[0], ws[1])).unwrap();
    let diag = |p: [i64; 2]| {
        [f.int(p[0]), f.int(p[1]), f.ratio(1, p[0] * p[1]).unwrap()]
    };
    let (u, v, w) = (diag(us), diag(vs), diag(ws));
    // a0[r][c] scales by u_r / v_c, a1 by v_r / w_c, a2 by w_r / u_c
    for (part, (left, right)) in [(&u, &v), (&v, &w), (&w, &u)].into_iter().enumerate() {
        for (r, lr) in left.iter().enumerate() {
            for (c, rc) in right.iter().enumerate() {
                let k = 9 * part + 3 * r + c;
                let expect = lr.checked_div(rc).unwrap();
                assert_eq!(phi.matrix()[(k, k)], expect);
            }
        }
    }
    let mut offdiag = 0;
    for r in 0..27 {
        for c in 0..27 {
            if r != c && !phi.matrix()[(r, c)].is_zero() {
                offdiag += 1;
            }
        }
    }
    assert_eq!(offdiag, 0);
}

#[test]
fn json_round_trips_and_model_checks() {
    let f = FieldSpec::PrimeField(7);
    let h = HermitianAlbert::split(f).unwrap();
    let t = TitsAlbert::split(f).unwrap();
    let mut s = Sampler::new(f, 1, 1).unwrap();
    let x = h.sample(&mut s);
    let y = t.sample(&mut s);
    assert_eq!(h.from_json(&h.to_json(&x)).unwrap(), x);
    assert_eq!(t.from_json(&t.to_json(&y)).unwrap(), y);
    assert!(matches!(h.from_json(&t.to_json(&y)), Err(Error::ModelMismatch(_))));
    let (view, xe) = AlbertView::from_json(f, &h.to_json(&x)).unwrap();
    let (tview, ye) = AlbertView::from_json(f, &t.to_json(&y)).unwrap();
    assert!(matches!(view.jmul(&xe, &ye), Err(Error::ModelMismatch(_))));
    assert_eq!(view.jmul(&xe, &view.unit()).unwrap(), xe);
    let (_, _, n) = tview.cubic_data(&ye).unwrap();
    assert_eq!(n, t.norm(&y));
    assert_eq!(view.to_json(&xe).unwrap(), h.to_json(&x));
}
