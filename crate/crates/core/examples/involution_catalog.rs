//! Fixed subalgebras of the catalog of order-two automorphisms on the
//! Albert algebra J and the Brown algebra B.

use e6kit::invol::{fixed_report, Space};
use e6kit::scalar::FieldSpec;
use e6kit::Result;

pub fn run() -> Result<()> {
    let f = FieldSpec::PrimeField(7);
    let cases = [
        ("s", Space::J),
        ("t", Space::J),
        ("t*", Space::J),
        ("theta", Space::J),
        ("s", Space::B),
        ("t", Space::B),
        ("varpi", Space::B),
        ("s.varpi", Space::B),
        ("t.varpi", Space::B),
        ("t:1,1,1,1,-1,1", Space::B),
    ];
    println!("{:<18} {:<6} {:<6} {:>4}  {:<7} shape", "descriptor", "space", "model", "dim", "closed");
    for (desc, space) in cases {
        let r = fixed_report(f, desc, space)?;
        println!(
            "{:<18} {:<6} {:<6} {:>4}  {:<7} {}",
            r.descriptor, r.space.to_string(), r.model.to_string(), r.dimension, r.closed, r.shape
        );
    }
    // the identity torus element does not have order two
    println!("t:1,1,1,1,1,1 -> {:?}", fixed_report(f, "t:1,1,1,1,1,1", Space::J).map(|r| r.dimension));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
