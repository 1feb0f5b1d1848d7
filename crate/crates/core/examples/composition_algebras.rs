//! Cayley-Dickson doubling: split octonions over F_7 and Q, and a division
//! octonion algebra over Q.

use e6kit::cda::CdAlgebra;
use e6kit::invol::find_v;
use e6kit::scalar::{FieldSpec, Sampler};
use e6kit::Result;

pub fn run() -> Result<()> {
    for field in [FieldSpec::PrimeField(7), FieldSpec::Rationals] {
        let oct = CdAlgebra::split_octonions(field)?;
        let mut s = Sampler::new(field, 1, 5)?;
        let x = oct.elem(s.vector(8))?;
        let y = oct.elem(s.vector(8))?;
        let xy = x.mul(&y);
        println!("{}: dim {}", oct.descriptor(), oct.dim());
        println!("  N(x) = {}, N(y) = {}, N(xy) = {}", x.qnorm(), y.qnorm(), xy.qnorm());
        assert_eq!(xy.qnorm(), &x.qnorm() * &y.qnorm());

        // an element with v^2 = 1 and N(v) = -1 exists because the algebra is split
        let v = find_v(&oct)?;
        let vs: Vec<String> = v.coords().iter().map(|c| c.to_string()).collect();
        println!("  v = ({}), N(v) = {}", vs.join(", "), v.qnorm());
    }

    // (-1, -1, -1) gives the compact octonions over Q: the norm is anisotropic
    let compact = CdAlgebra::parse("cd:Q:-1,-1,-1")?;
    let e = compact.basis();
    let n: Vec<String> = e.iter().map(|b| b.qnorm().to_string()).collect();
    println!("{}: norms of basis vectors {}", compact.descriptor(), n.join(" "));
    println!("  find_v: {:?}", find_v(&compact).map(|_| ()));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
