//! Kac coordinates on the extended E6 diagram and its twisted folding.

use e6kit::kac::MarkedAffineDiagram;
use e6kit::Result;

fn table(d: &MarkedAffineDiagram, m: u64, gcd: bool, folded: bool) -> Result<()> {
    let sols = d.enumerate(m, gcd, folded)?;
    println!("{} m = {m} gcd {gcd} folded {folded}: {} solutions", d.name, sols.len());
    for sol in sols {
        println!("  {:?} -> {}", sol.s, sol.residual);
    }
    Ok(())
}

pub fn run() -> Result<()> {
    let e6 = MarkedAffineDiagram::e6_extended();
    println!("marks {:?}", e6.marks);
    table(&e6, 1, true, false)?;
    table(&e6, 2, true, false)?;
    table(&e6, 3, true, false)?;
    table(&MarkedAffineDiagram::e6_twisted(), 2, false, true)?;
    println!("{}", e6.to_json());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
