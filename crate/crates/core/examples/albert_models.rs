//! The two models of the split Albert algebra: hermitian 3x3 matrices over
//! the split octonions and the first Tits construction from 3x3 matrices.

use e6kit::albert::{CubicJordan, HermitianAlbert, TitsAlbert};
use e6kit::scalar::{FieldSpec, Sampler};
use e6kit::Result;

fn tour<J: CubicJordan>(j: &J) -> Result<()> {
    let mut s = Sampler::new(j.field(), 3, 4)?;
    let x = j.sample(&mut s);
    let y = j.sample(&mut s);
    let (t, sr, n) = j.cubic_data(&x);
    println!("{} over {}: T(x) = {t}, S(x) = {sr}, N(x) = {n}", j.model_name(), j.field());

    let sx = j.sharp(&x);
    assert_eq!(j.sharp(&sx), j.scale(&n, &x));
    println!("  (x^#)^# = N(x) x holds");

    let nx = j.norm(&x);
    let uxy = j.uapply(&x, &y);
    assert_eq!(j.norm(&uxy), &(&nx * &nx) * &j.norm(&y));
    assert_eq!(j.uop(&x), j.uop_quadratic(&x));
    println!("  N(U_x y) = N(x)^2 N(y) = {}", j.norm(&uxy));

    match j.jinverse(&x) {
        Ok(inv) => {
            assert_eq!(j.jmul(&x, &inv), j.unit());
            println!("  x is invertible, x^-1 = x^# / N(x)");
        }
        Err(e) => println!("  x is not invertible: {e}"),
    }
    Ok(())
}

pub fn run() -> Result<()> {
    let her = HermitianAlbert::split(FieldSpec::Rationals)?;
    tour(&her)?;
    let d = her.diag_ints([2, 3, 4]);
    println!("  N(diag(2,3,4)) = {}", her.norm(&d));
    println!("  json: {}", her.to_json(&d));

    let tits = TitsAlbert::split(FieldSpec::PrimeField(11))?;
    tour(&tits)?;
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
