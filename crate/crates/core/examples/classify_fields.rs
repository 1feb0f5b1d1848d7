//! Hilbert symbols, quaternion splitting and involution class counts over
//! Kbar, F_p, R, Q_p and Q.

use e6kit::qclass::{
    e6_class_report, f4_class_report, g2_class_report, hilbert_symbol, is_split, Place,
    QuatPresentation,
};
use e6kit::scalar::FieldSpec;
use e6kit::Result;
use num_rational::BigRational;

pub fn run() -> Result<()> {
    let r = |n: i64| BigRational::from_integer(n.into());
    for (a, b) in [(-1, -1), (2, 5), (-1, 3), (3, 7)] {
        let places = [Place::Real, Place::Padic(2), Place::Padic(3), Place::Padic(5), Place::Padic(7)];
        let syms: Vec<String> = places
            .iter()
            .map(|&p| Ok(format!("{p}:{:+}", hilbert_symbol(&r(a), &r(b), p)?)))
            .collect::<Result<_>>()?;
        let q = QuatPresentation::from_ints(a, b)?;
        println!("({a},{b}) {}  split over Q: {}", syms.join(" "), is_split(&q, FieldSpec::Rationals)?);
    }

    let fields = [
        FieldSpec::AlgClosedMarker,
        FieldSpec::PrimeField(7),
        FieldSpec::RealPlace,
        FieldSpec::PadicPlace(2),
        FieldSpec::PadicPlace(5),
        FieldSpec::Rationals,
    ];
    for f in fields {
        let (g2, f4, e6) = (g2_class_report(f), f4_class_report(f), e6_class_report(f));
        println!("{f}: G2 {}  F4 {}  E6 {}", g2.total, f4.total, e6.total);
        println!("  E6 representatives {}", e6.representatives.join(" "));
    }
    println!("{}", e6_class_report(FieldSpec::PadicPlace(5)).to_json());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
