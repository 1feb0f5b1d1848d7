//! Running the invariant suites from code instead of the command line.

use e6kit::cli::{run_suite, RunConfig, Suite};
use e6kit::scalar::FieldSpec;
use e6kit::Result;

pub fn run() -> Result<()> {
    let cfg = RunConfig { field: FieldSpec::PrimeField(11), seed: 3, samples: 40, json: false };
    let report = run_suite(Suite::All, &cfg)?;
    print!("{}", report.render());
    assert!(report.passed());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
