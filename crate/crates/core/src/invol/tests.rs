use proptest::prelude::*;

use super::*;
use crate::albert::{HerElem, HermitianAlbert, TitsAlbert};
use crate::cda::CdAlgebra;
use crate::linalg::Subspace;
use crate::scalar::{FieldSpec, Sampler};

fn f7() -> FieldSpec {
    FieldSpec::PrimeField(7)
}

fn her(f: FieldSpec) -> HermitianAlbert {
    HermitianAlbert::split(f).unwrap()
}

/// `U_y diag(N(y)^-2, 1, 1)`, an element of norm one.
fn unit_norm_sample(j: &HermitianAlbert, s: &mut Sampler) -> HerElem {
    loop {
        let y = j.sample(s);
        let n = j.norm(&y);
        if n.is_zero() {
            continue;
        }
        let f = j.field();
        let d = j.diag([n.pow(-2).unwrap(), f.one(), f.one()]);
        let x = j.uapply(&y, &d);
        assert!(j.norm(&x).is_one());
        return x;
    }
}

fn t_hat(j: &HermitianAlbert) -> LinMap {
    lift_c_to_j(j, &make_t_canonical(j.octonions()).unwrap()).unwrap()
}

#[test]
fn inv_membership_examples() {
    for f in [f7(), FieldSpec::Rationals] {
        let j = her(f);
        let ctx = JContext::new(j.clone());
        assert!(ctx.is_inv_member(&LinMap::identity(f, Carrier::AlbertSpace)).unwrap());
        assert!(!ctx.is_inv_member(&j.phi_lambda_map(&f.int(2)).unwrap()).unwrap());
        let mut s = Sampler::new(f, 3, 3).unwrap();
        let x = unit_norm_sample(&j, &mut s);
        assert!(ctx.is_inv_member(&j.uop(&x)).unwrap());
        // a norm similarity with multiplier 1 that is not an automorphism
        let nu = j.nu_g_map(&f.int(2)).unwrap();
        assert!(ctx.is_inv_member(&nu).unwrap());
        assert!(!ctx.is_aut_member(&nu).unwrap());
    }
    let ctx = JContext::new(her(f7()));
    let wrong = LinMap::identity(f7(), Carrier::OctonionSpace);
    assert!(matches!(ctx.is_inv_member(&wrong), Err(Error::CarrierMismatch { .. })));
}

#[test]
fn aut_membership_examples() {
    let f = f7();
    let j = her(f);
    let ctx = JContext::new(j.clone());
    assert!(ctx.is_aut_member(&t_hat(&j)).unwrap());
    assert!(!ctx.is_aut_member(&j.phi_lambda_map(&f.int(3)).unwrap()).unwrap());
    assert!(ctx.is_aut_member(&j.uop(&j.diag_ints([1, 1, -1]))).unwrap());
}

#[test]
fn dagger_laws() {
    let f = f7();
    let j = her(f);
    let ctx = JContext::new(j.clone());
    let mut s = Sampler::new(f, 11, 3).unwrap();
    let x = unit_norm_sample(&j, &mut s);
    let y = unit_norm_sample(&j, &mut s);
    let (ux, uy) = (j.uop(&x), j.uop(&y));
    let dx = ctx.dagger(&ux).unwrap();
    assert_eq!(dx, j.uop(&j.jinverse(&x).unwrap()));
    assert_eq!(dx, ux.inverse().unwrap());
    assert_eq!(ctx.dagger(&dx).unwrap(), ux);
    let prod = ux.then_after(&uy);
    assert_eq!(
        ctx.dagger(&prod).unwrap(),
        dx.then_after(&ctx.dagger(&uy).unwrap())
    );
    let t = t_hat(&j);
    assert_eq!(ctx.dagger(&t).unwrap(), t);
    // sharp characterization: φ(a) # φ(b) = φ†(a # b)
    let (a, b) = (j.sample(&mut s), j.sample(&mut s));
    let lhs = j.cross(&j.apply(&ux, &a), &j.apply(&ux, &b));
    assert_eq!(lhs, j.apply(&dx, &j.cross(&a, &b)));
    assert_eq!(
        ctx.dagger(&j.phi_lambda_map(&f.int(2)).unwrap()),
        Err(Error::NotNormPreserving)
    );
}

#[test]
fn tits_dagger_swaps_first_two_factors() {
    let f = f7();
    let j = TitsAlbert::split(f).unwrap();
    let ctx = JContext::new(j.clone());
    let u = Matrix::from_ints(f, &[&[1, 2, 0], &[0, 1, 0], &[3, 0, 1]]);
    let v = Matrix::from_ints(f, &[&[2, 0, 0], &[1, 4, 0], &[0, 5, 1]]);
    let w = Matrix::from_ints(f, &[&[0, 1, 0], &[-1, 0, 0], &[0, 0, 1]]);
    let phi = j.tits_phi(&u, &v, &w).unwrap();
    assert!(ctx.is_inv_member(&phi).unwrap());
    assert_eq!(ctx.dagger(&phi).unwrap(), j.tits_phi(&v, &u, &w).unwrap());
}

#[test]
fn quaternion_maps_on_octonions() {
    let f = f7();
    let oct = CdAlgebra::split_octonions(f).unwrap();
    let t = make_t_canonical(&oct).unwrap();
    assert!(t.is_involution());
    assert_eq!(t.fixed_space().len(), 4);
    assert!(is_oct_automorphism(&oct, &t).unwrap());
    let p = oct.from_ints(&[2, 1, 3, 2, 0, 0, 0, 0]).unwrap();
    let q = oct.from_ints(&[1, 5, 0, 1, 0, 0, 0, 0]).unwrap();
    let (fp, fq) = (make_t(&oct, &p).unwrap(), make_t(&oct, &q).unwrap());
    assert!(is_oct_automorphism(&oct, &fp).unwrap());
    assert_eq!(fp.then_after(&fq), make_t(&oct, &p.mul(&q)).unwrap());
    let bad = oct.from_ints(&[2, 0, 0, 1, 0, 0, 0, 0]).unwrap();
    assert_eq!(make_t(&oct, &bad), Err(Error::NotUnitNorm));
    let outside = oct.from_ints(&[1, 0, 0, 1, 0, 0, 0, 0]).unwrap().add(&oct.basis()[5]);
    assert!(make_t(&oct, &outside).is_err());
    // the diagonal torus f_diag(η, η^-1) commutes with the G2 torus
    let d = oct.from_ints(&[3, 0, 0, 5, 0, 0, 0, 0]).unwrap();
    let g = g2_torus(&oct, &f.int(2), &f.int(3)).unwrap();
    assert!(make_t(&oct, &d).unwrap().commutes_with(&g));
}

#[test]
fn t_star_in_the_default_basis() {
    let f = f7();
    let oct = CdAlgebra::split_octonions(f).unwrap();
    let ts = make_t_star(&oct).unwrap();
    assert!(ts.basis_tag().ends_with("[0, 1, 2, 3];[0, 1, 2, 3]"));
    assert!(ts.square().is_identity());
    let fixed = ts.fixed_space();
    assert_eq!(fixed.len(), 4);
    let span = Subspace::span(f, 8, &fixed);
    for x in &fixed {
        assert!(span.contains(&oct.conj_coords(x)));
        for y in &fixed {
            assert!(span.contains(&oct.mul_coords(x, y)));
        }
    }
    // anti-diagonal in both blocks
    for i in 0..8 {
        let target = (i / 4) * 4 + 3 - i % 4;
        assert!(ts.matrix()[(target, i)].is_one());
    }
}

#[test]
fn g2_torus_is_a_torus_of_automorphisms() {
    let f = f7();
    let oct = CdAlgebra::split_octonions(f).unwrap();
    let a = g2_torus(&oct, &f.int(2), &f.int(3)).unwrap();
    let b = g2_torus(&oct, &f.int(5), &f.int(4)).unwrap();
    assert!(is_oct_automorphism(&oct, &a).unwrap());
    assert_eq!(a.then_after(&b), g2_torus(&oct, &f.int(10), &f.int(12)).unwrap());
    assert_eq!(g2_torus(&oct, &f.zero(), &f.one()), Err(Error::ZeroParameter));
    let mut s = Sampler::new(f, 1, 3).unwrap();
    let oct_c = CdAlgebra::new(f, vec![s.nonzero(), f.int(1), f.int(3)], false).unwrap();
    assert!(matches!(g2_torus(&oct_c, &f.one(), &f.one()), Err(Error::ModelMismatch(_))));
}

#[test]
fn lifted_t_fixes_fifteen_dimensions() {
    let f = f7();
    let j = her(f);
    let t = t_hat(&j);
    assert!(t.is_involution());
    assert_eq!(JContext::new(j.clone()).fixed_subalgebra(&t).unwrap().dim, 15);
    let id = lift_c_to_j(&j, &LinMap::identity(f, Carrier::OctonionSpace)).unwrap();
    assert!(id.is_identity());
    let not_aut = LinMap::from_fn(f, Carrier::OctonionSpace, |v| v.iter().map(|x| x + x).collect());
    assert!(matches!(lift_c_to_j(&j, &not_aut), Err(Error::NotAutomorphism(_))));
}

#[test]
fn type_two_map() {
    let f = f7();
    let j = her(f);
    let s = make_s(&j);
    assert!(s.is_involution());
    let ctx = JContext::new(j.clone());
    assert!(ctx.is_aut_member(&s).unwrap());
    let fixed = ctx.fixed_subalgebra(&s).unwrap();
    assert_eq!(fixed.dim, 11);
    assert!(fixed.closed);
    let beth: Vec<Vec<Scalar>> = j.beth_basis().iter().map(|x| x.coords().to_vec()).collect();
    assert!(Subspace::span(f, 27, &beth).same_as(&Subspace::span(f, 27, &fixed.basis)));
    assert_eq!(s, j.uop_quadratic(&j.diag_ints([1, -1, -1])));
    let mut sm = Sampler::new(f, 2, 3).unwrap();
    let x = j.sample(&mut sm);
    let mut expect = x.coords().to_vec();
    for c in &mut expect[11..] {
        *c = -&*c;
    }
    assert_eq!(j.apply(&s, &x).coords(), &expect[..]);
}

#[test]
fn theta_inverts_the_tits_torus() {
    let f = f7();
    let j = TitsAlbert::split(f).unwrap();
    let ctx = JContext::new(j.clone());
    let theta = make_theta_tits(&j).unwrap();
    assert!(theta.is_involution());
    let mut s = Sampler::new(f, 5, 3).unwrap();
    for _ in 0..5 {
        let x = j.sample(&mut s);
        assert_eq!(j.norm(&j.apply(&theta, &x)), j.norm(&x));
    }
    for _ in 0..3 {
        let ps: Vec<Scalar> = (0..6).map(|_| s.nonzero()).collect();
        let phi = make_torus_element(f, &ps, TorusLevel::E6).unwrap();
        let lhs = theta.then_after(&ctx.dagger(&phi).unwrap()).then_after(&theta);
        assert_eq!(lhs, phi.inverse().unwrap());
    }
    let twisted = TitsAlbert::new(f, f.int(3)).unwrap();
    assert!(matches!(make_theta_tits(&twisted), Err(Error::ModelMismatch(_))));
}

#[test]
fn torus_elements() {
    let f = f7();
    let ints = |v: &[i64]| v.iter().map(|&i| f.int(i)).collect::<Vec<_>>();
    assert!(make_torus_element(f, &ints(&[1; 6]), TorusLevel::E6).unwrap().is_identity());
    let t = make_torus_element(f, &ints(&[1, 1, 1, 1, -1, 1]), TorusLevel::E6).unwrap();
    assert!(t.is_involution());
    let a = make_torus_element(f, &ints(&[2, 3, 4, 5, 6, 2]), TorusLevel::E6).unwrap();
    let b = make_torus_element(f, &ints(&[3, 3, 2, 1, 5, 4]), TorusLevel::E6).unwrap();
    let ab = make_torus_element(f, &ints(&[6, 9, 8, 5, 30, 8]), TorusLevel::E6).unwrap();
    assert_eq!(a.then_after(&b), ab);
    // not "only if": over F_7, diag(2, 2, 1/4) = 2 and the element is trivial
    let two = make_torus_element(f, &ints(&[2; 6]), TorusLevel::E6).unwrap();
    assert!(two.is_identity() && !(&f.int(2) * &f.int(2)).is_one());
    assert_eq!(
        make_torus_element(f, &ints(&[1, 0, 1, 1]), TorusLevel::F4),
        Err(Error::ZeroParameter)
    );
    assert_eq!(
        make_torus_element(f, &ints(&[1, 1, 1]), TorusLevel::F4),
        Err(Error::ArityMismatch { expected: 4, actual: 3 })
    );
    let g2 = make_torus_element(f, &ints(&[-1, -1]), TorusLevel::G2).unwrap();
    assert_eq!(g2.carrier(), Carrier::OctonionSpace);
    assert!(g2.is_involution());
    let f4 = make_torus_element(f, &ints(&[1, -1, 1, 1]), TorusLevel::F4).unwrap();
    assert!(JContext::new(TitsAlbert::split(f).unwrap()).is_aut_member(&f4).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn unit_square_parameters_give_order_dividing_two(signs in proptest::collection::vec(any::<bool>(), 6)) {
        let f = f7();
        let ps: Vec<Scalar> = signs.iter().map(|&b| if b { f.one() } else { -f.one() }).collect();
        let t = make_torus_element(f, &ps, TorusLevel::E6).unwrap();
        prop_assert!(t.square().is_identity());
    }
}

#[test]
fn uv_bridge() {
    let f = f7();
    let j = her(f);
    let ctx = JContext::new(j.clone());
    let v = find_v(j.octonions()).unwrap();
    assert_eq!(v.qnorm(), -f.one());
    assert_eq!(v.mul(&v), j.octonions().unit());
    let uv = make_uv_bridge(&j).unwrap();
    let s = make_s(&j);
    assert_eq!(uv.square(), s);
    assert!(ctx.is_inv_member(&uv).unwrap());
    assert_eq!(ctx.dagger(&uv).unwrap(), uv.inverse().unwrap());
    let b = BrownAlgebra::split(j.clone());
    let lift = b.lift_inv_with(&ctx, &uv).unwrap();
    let varpi = b.varpi();
    let s_varpi = b.lift_inv_with(&ctx, &s).unwrap().compose(&varpi).unwrap();
    assert!(verify_conjugacy_transport(&lift, &varpi, &s_varpi).unwrap());
    assert!(b.preserves_product(&lift));
    let compact = CdAlgebra::new(f, vec![f.int(-1), f.int(-1), f.int(-1)], false).unwrap();
    // -1 is not a norm from the compact octonions over Q; over F_7 it is
    assert!(find_v(&compact).is_ok());
    let q = FieldSpec::Rationals;
    let compact_q = CdAlgebra::new(q, vec![q.int(-1), q.int(-1), q.int(-1)], false).unwrap();
    assert_eq!(find_v(&compact_q).unwrap_err(), Error::NoSuchV);
}

#[test]
fn outer_fixed_condition_examples() {
    let f = f7();
    let j = her(f);
    let ctx = JContext::new(j.clone());
    let s = make_s(&j);
    let t = t_hat(&j);
    assert!(ctx.outer_fixed_condition(&t, &s).unwrap());
    assert!(ctx
        .outer_fixed_condition(&LinMap::identity(f, Carrier::AlbertSpace), &s)
        .unwrap());
    let mut sm = Sampler::new(f, 9, 3).unwrap();
    let x = unit_norm_sample(&j, &mut sm);
    assert!(!ctx.outer_fixed_condition(&j.uop(&x), &s).unwrap());
    let not_two = j.uop(&x);
    assert_eq!(ctx.outer_fixed_condition(&t, &not_two), Err(Error::NotOrderTwo));
}

#[test]
fn isotope_automorphisms() {
    let f = f7();
    let j = her(f);
    let ctx = JContext::new(j.clone());
    let e = j.unit();
    assert!(ctx.isotope_automorphism_check(&e, &e).unwrap());
    assert!(ctx.isotope_automorphism_check(&j.diag_ints([1, -1, -1]), &e).unwrap());
    let (x, y) = (j.diag_ints([4, 2, 6]), j.diag_ints([2, 3, 1]));
    assert!(ctx.isotope_automorphism_check(&x, &y).unwrap());
    assert_eq!(
        ctx.isotope_automorphism_check(&j.diag_ints([1, 0, 1]), &e),
        Err(Error::SingularElement)
    );
    assert_eq!(
        ctx.isotope_automorphism_check(&j.diag_ints([2, 1, 1]), &e),
        Err(Error::NotOrderTwo)
    );
}

#[test]
fn brown_fixed_dimensions_and_shapes() {
    let f = f7();
    for (desc, dim, shape) in [
        ("s", 24, "B^s"),
        ("t", 32, "B^t"),
        ("varpi", 28, "B^varpi"),
        ("t.varpi", 28, "B^tvarpi"),
        ("s.varpi", 28, "B^svarpi"),
        ("t:1,1,1,1,-1,1", 32, "B^t"),
    ] {
        let r = fixed_report(f, desc, Space::B).unwrap();
        assert_eq!((r.dimension, r.shape.as_str()), (dim, shape), "{desc}");
        assert!(r.closed, "{desc}");
        assert_eq!(r.involution_stable, Some(true), "{desc}");
    }
    for (desc, dim) in [("s", 11), ("t", 15), ("t*", 15), ("t:1,1,1,1,-1,1", 15)] {
        let r = fixed_report(f, desc, Space::J).unwrap();
        assert_eq!(r.dimension, dim, "{desc}");
        assert!(r.closed);
    }
}

#[test]
fn descriptor_errors() {
    let f = f7();
    let parse = |s: &str| InvolutionDescriptor::parse(f, s);
    assert!(matches!(parse("s.theta").unwrap().model(), Err(Error::ModelMismatch(_))));
    assert!(matches!(parse("bogus"), Err(Error::Parse(_))));
    assert!(matches!(parse("t:1,2,3"), Err(Error::ArityMismatch { .. })));
    assert!(matches!(
        parse("varpi").unwrap().realize(Space::J),
        Err(Error::CarrierMismatch { .. })
    ));
    assert_eq!(parse("t:2,1").unwrap().realize(Space::J).unwrap_err(), Error::NotOrderTwo);
    assert_eq!(parse("s.s").unwrap().realize(Space::J).unwrap_err(), Error::NotOrderTwo);
    assert_eq!(parse("t.varpi").unwrap().to_string(), "t.varpi");
    let theta = parse("theta").unwrap().realize(Space::J).unwrap();
    assert_eq!(theta.model, Model::Tits);
}

#[test]
fn grading_of_the_type_two_map() {
    let f = f7();
    let j = her(f);
    let ctx = JContext::new(j.clone());
    let id = LinMap::identity(f, Carrier::AlbertSpace);
    let g = ctx.grade_decompose(&id).unwrap();
    assert_eq!((g.plus.len(), g.minus.len()), (27, 0));
    let g = ctx.grade_decompose(&make_s(&j)).unwrap();
    assert_eq!((g.plus.len(), g.minus.len()), (11, 16));
    assert!(g.grading_law_holds(ctx.jordan_product()));
    assert!(g.orthogonal(ctx.gram()));
    let mut m = Matrix::identity(f, 27);
    m[(0, 1)] = f.one();
    m[(1, 1)] = -f.one();
    let shear = LinMap::new(m, Carrier::AlbertSpace, "shear").unwrap();
    assert!(shear.is_involution());
    assert_eq!(ctx.grade_decompose(&shear).unwrap_err(), Error::FormNotInvariant);
}

#[test]
fn random_conjugation_transports_fixed_spaces() {
    for f in [f7(), FieldSpec::Rationals] {
        let j = her(f);
        let ctx = JContext::new(j.clone());
        let mut sm = Sampler::new(f, 21, 4).unwrap();
        let g = random_automorphism(&j, &mut sm).unwrap();
        assert!(ctx.is_aut_member(&g).unwrap());
        for t in [make_s(&j), t_hat(&j)] {
            let t2 = ctx.conjugate_involution(&g, &t).unwrap();
            assert!(t2.is_involution());
            assert_eq!(t2.fixed_space().len(), t.fixed_space().len());
            assert!(verify_conjugacy_transport(&g, &t, &t2).unwrap());
            assert!(!verify_conjugacy_transport(&LinMap::identity(f, Carrier::AlbertSpace), &t, &t2).unwrap()
                || t == t2);
        }
        let id = LinMap::identity(f, Carrier::AlbertSpace);
        let s = make_s(&j);
        assert_eq!(ctx.conjugate_involution(&id, &s).unwrap(), s);
        let bad = j.phi_lambda_map(&f.int(2)).unwrap();
        assert!(matches!(ctx.conjugate_involution(&bad, &s), Err(Error::NotAutomorphism(_))));
    }
}

#[test]
fn automorphisms_intertwine_u_operators() {
    let f = f7();
    let j = her(f);
    let ctx = JContext::new(j.clone());
    let mut sm = Sampler::new(f, 4, 3).unwrap();
    let g = random_automorphism(&j, &mut sm).unwrap();
    for phi in [make_s(&j), t_hat(&j), g] {
        for _ in 0..3 {
            let x = j.sample(&mut sm);
            assert!(ctx.intertwines_u(&phi, &x));
        }
    }
}

#[test]
fn orthogonal_conjugation_by_permutation() {
    let f = FieldSpec::Rationals;
    let j = her(f);
    let p = Matrix::from_ints(f, &[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
    let m = orthogonal_conjugation(&j, &p).unwrap();
    assert!(JContext::new(j.clone()).is_aut_member(&m).unwrap());
    let d = j.diag_ints([1, 2, 3]);
    assert_eq!(j.apply(&m, &d), j.diag_ints([2, 1, 3]));
    let not_orth = Matrix::from_ints(f, &[&[2, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
    assert!(orthogonal_conjugation(&j, &not_orth).is_err());
}
