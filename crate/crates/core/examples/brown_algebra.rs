//! The 56-dimensional Brown algebra over a split Albert algebra, its
//! involution and the swap automorphism varpi.

use e6kit::albert::{CubicJordan, HermitianAlbert};
use e6kit::brown::{BrownAlgebra, BROWN_DIM};
use e6kit::scalar::{FieldSpec, Sampler};
use e6kit::Result;

pub fn run() -> Result<()> {
    let f = FieldSpec::PrimeField(7);
    let b = BrownAlgebra::split(HermitianAlbert::split(f)?);
    let j = b.jordan();
    let mut s = Sampler::new(f, 0, 3)?;
    let x = b.elem(s.scalar(), s.scalar(), j.sample(&mut s), j.sample(&mut s));
    let y = b.elem(s.scalar(), s.scalar(), j.sample(&mut s), j.sample(&mut s));

    println!("dim B = {BROWN_DIM}, type {:?}", b.type_of());
    let xy = b.bmul(&x, &y);
    println!("xy has scalar entries ({}, {})", xy.alpha, xy.beta);
    assert_eq!(b.binv(&xy), b.bmul(&b.binv(&y), &b.binv(&x)));
    println!("the involution reverses products");

    let s0 = b.s0();
    assert_eq!(b.bmul(&s0, &s0), b.unit());
    println!("skew elements: {} (spanned by s0, s0^2 = 1)", b.skew_space().len());

    let varpi = b.varpi();
    println!(
        "varpi: order two {}, automorphism {}, commutes with bar {}, fixed dim {}",
        varpi.is_involution(),
        b.preserves_product(&varpi),
        b.commutes_with_binv(&varpi),
        varpi.fixed_space().len()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
