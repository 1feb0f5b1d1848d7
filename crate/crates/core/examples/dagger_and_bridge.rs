//! The outer map phi -> phi^dagger on norm isometries, the element U_V
//! whose square is s, and the torus inverted by theta composed with dagger.

use e6kit::albert::{CubicJordan, HermitianAlbert, TitsAlbert};
use e6kit::brown::BrownAlgebra;
use e6kit::invol::{
    make_s, make_theta_tits, make_torus_element, make_uv_bridge, uv_element,
    verify_conjugacy_transport, JContext, TorusLevel,
};
use e6kit::scalar::{FieldSpec, Scalar};
use e6kit::Result;

pub fn run() -> Result<()> {
    let f = FieldSpec::PrimeField(7);
    let j = HermitianAlbert::split(f)?;
    let ctx = JContext::new(j.clone());

    // U_x with N(x) = 1 is a norm isometry; its dagger is U_{x^-1}
    let x = j.diag_ints([2, 4, 1]);
    assert!(j.norm(&x).is_one());
    let ux = j.uop(&x);
    let dx = ctx.dagger(&ux)?;
    println!("dagger(U_x) = U_(x^-1): {}", dx == j.uop(&j.jinverse(&x)?));

    let v = uv_element(&j)?;
    let uv = make_uv_bridge(&j)?;
    let s = make_s(&j);
    let a: Vec<String> = v.a().iter().map(|c| c.to_string()).collect();
    println!("V has off-diagonal entry ({})", a.join(", "));
    println!("U_V^2 = s: {}", uv.square() == s);
    println!("dagger(U_V) = U_V^-1: {}", ctx.dagger(&uv)? == uv.inverse()?);

    let b = BrownAlgebra::split(j.clone());
    let lift = b.lift_inv_with(&ctx, &uv)?;
    let varpi = b.varpi();
    let s_varpi = b.lift_inv_with(&ctx, &s)?.compose(&varpi)?;
    println!(
        "lift(U_V) carries B^varpi onto B^(s varpi): {}",
        verify_conjugacy_transport(&lift, &varpi, &s_varpi)?
    );

    let tits = TitsAlbert::split(f)?;
    let tctx = JContext::new(tits.clone());
    let theta = make_theta_tits(&tits)?;
    let ps: Vec<Scalar> = [2, 3, 5, 6, 3, 4].iter().map(|&n| f.int(n)).collect();
    let phi = make_torus_element(f, &ps, TorusLevel::E6)?;
    let lhs = theta.then_after(&tctx.dagger(&phi)?).then_after(&theta);
    println!("theta dagger(t) theta = t^-1 for t(2,3,5,6,3,4): {}", lhs == phi.inverse()?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
