//! Quaternion algebras `(a, b)` over `R`, `F_p`, `Q_p` and `Q` through
//! Hilbert symbols, and the resulting counts of involution classes for the
//! split groups of type G2, F4 and E6.
//!
//! Representatives are written as descriptor strings. For the `θ`-type
//! classes a string `t:...` names the torus parameter `t` of `θ I_t`, and a
//! trailing `.varpi` marks the outer `θ†` classes.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::scalar::{is_prime, pow_mod, Cardinality, FieldSpec};

/// A completion of `Q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Place {
    Real,
    Padic(u64),
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Real => f.write_str("inf"),
            Place::Padic(p) => write!(f, "{p}"),
        }
    }
}

/// The quaternion algebra with `i^2 = a`, `j^2 = b`, `ij = -ji`; its norm
/// form is `<1, -a, -b, ab>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuatPresentation {
    a: BigRational,
    b: BigRational,
}

impl QuatPresentation {
    pub fn new(a: BigRational, b: BigRational) -> Result<Self> {
        if a.is_zero() || b.is_zero() {
            return Err(Error::ZeroArgument);
        }
        Ok(Self { a, b })
    }

    pub fn from_ints(a: i64, b: i64) -> Result<Self> {
        Self::new(BigRational::from_integer(a.into()), BigRational::from_integer(b.into()))
    }

    pub fn a(&self) -> &BigRational {
        &self.a
    }

    pub fn b(&self) -> &BigRational {
        &self.b
    }

    /// Primes where the symbol can be nontrivial: those dividing `2ab`.
    pub fn bad_primes(&self) -> Vec<u64> {
        let mut ps = vec![2u64];
        for n in [self.a.numer(), self.a.denom(), self.b.numer(), self.b.denom()] {
            for p in prime_factors(n) {
                if !ps.contains(&p) {
                    ps.push(p);
                }
            }
        }
        ps.sort_unstable();
        ps
    }
}

fn prime_factors(n: &BigInt) -> Vec<u64> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut d = 2u64;
    while BigInt::from(d) * BigInt::from(d) <= n {
        let bd = BigInt::from(d);
        if (&n % &bd).is_zero() {
            out.push(d);
            while (&n % &bd).is_zero() {
                n /= &bd;
            }
        }
        d += 1;
    }
    if n > BigInt::one() {
        out.push(n.to_u64().expect("factor fits in u64"));
    }
    out
}

/// `x = p^v u` with `u` a `p`-adic unit, returned as `(v, numerator,
/// denominator)` of `u`.
fn split_valuation(x: &BigRational, p: u64) -> (i64, BigInt, BigInt) {
    let bp = BigInt::from(p);
    let (mut n, mut d) = (x.numer().clone(), x.denom().clone());
    let mut v = 0i64;
    while (&n % &bp).is_zero() {
        n /= &bp;
        v += 1;
    }
    while (&d % &bp).is_zero() {
        d /= &bp;
        v -= 1;
    }
    (v, n, d)
}

fn residue(n: &BigInt, m: u64) -> u64 {
    n.mod_floor(&BigInt::from(m)).to_u64().expect("small residue")
}

/// Legendre symbol of the unit `n/d` at the odd prime `p`, as `±1`.
fn legendre_unit(n: &BigInt, d: &BigInt, p: u64) -> i8 {
    let e = (p - 1) / 2;
    let r = (pow_mod(residue(n, p), e, p) as u128 * pow_mod(residue(d, p), e, p) as u128) % p as u128;
    if r == 1 {
        1
    } else {
        -1
    }
}

/// Smallest positive quadratic nonresidue modulo the odd prime `p`.
pub fn smallest_nonresidue(p: u64) -> u64 {
    (2..p)
        .find(|&z| pow_mod(z, (p - 1) / 2, p) == p - 1)
        .expect("odd primes have nonresidues")
}

/// `(a, b)_v`: `+1` iff `z^2 = a x^2 + b y^2` has a nonzero solution over
/// the completion at `v`.
pub fn hilbert_symbol(a: &BigRational, b: &BigRational, place: Place) -> Result<i8> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroArgument);
    }
    match place {
        Place::Real => Ok(if a.is_negative() && b.is_negative() { -1 } else { 1 }),
        Place::Padic(p) if !is_prime(p) => Err(Error::InvalidField(format!("Qp:{p}"))),
        Place::Padic(2) => {
            let (alpha, un, ud) = split_valuation(a, 2);
            let (beta, vn, vd) = split_valuation(b, 2);
            // a unit n/d is ≡ n d mod 8 since d^2 ≡ 1
            let u = (residue(&un, 8) * residue(&ud, 8)) % 8;
            let v = (residue(&vn, 8) * residue(&vd, 8)) % 8;
            let eps = |x: u64| ((x - 1) / 2) % 2;
            let omega = |x: u64| ((x * x - 1) / 8) % 2;
            let e = eps(u) * eps(v)
                + alpha.rem_euclid(2) as u64 * omega(v)
                + beta.rem_euclid(2) as u64 * omega(u);
            Ok(if e.is_multiple_of(2) { 1 } else { -1 })
        }
        Place::Padic(p) => {
            let (alpha, un, ud) = split_valuation(a, p);
            let (beta, vn, vd) = split_valuation(b, p);
            let (alpha, beta) = (alpha.rem_euclid(2), beta.rem_euclid(2));
            let mut s: i8 = 1;
            if alpha * beta % 2 == 1 && (p - 1) / 2 % 2 == 1 {
                s = -s;
            }
            if beta == 1 {
                s *= legendre_unit(&un, &ud, p);
            }
            if alpha == 1 {
                s *= legendre_unit(&vn, &vd, p);
            }
            Ok(s)
        }
    }
}

/// Whether `(a, b)` is a matrix algebra over `field`.
pub fn is_split(q: &QuatPresentation, field: FieldSpec) -> Result<bool> {
    Ok(match field {
        FieldSpec::AlgClosedMarker | FieldSpec::PrimeField(_) => true,
        FieldSpec::RealPlace => hilbert_symbol(&q.a, &q.b, Place::Real)? == 1,
        FieldSpec::PadicPlace(p) => hilbert_symbol(&q.a, &q.b, Place::Padic(p))? == 1,
        FieldSpec::Rationals => {
            if hilbert_symbol(&q.a, &q.b, Place::Real)? != 1 {
                return Ok(false);
            }
            for p in q.bad_primes() {
                if hilbert_symbol(&q.a, &q.b, Place::Padic(p))? != 1 {
                    return Ok(false);
                }
            }
            true
        }
    })
}

/// Number of quaternion algebras over `field` up to isomorphism.
pub fn quaternion_class_count(field: FieldSpec) -> Cardinality {
    match field {
        FieldSpec::AlgClosedMarker | FieldSpec::PrimeField(_) => Cardinality::Finite(1),
        FieldSpec::RealPlace | FieldSpec::PadicPlace(_) => Cardinality::Finite(2),
        FieldSpec::Rationals => Cardinality::Infinite,
    }
}

/// A quaternion division algebra over the field, or `None` if every
/// quaternion algebra splits (or over `Q`, where there are infinitely many).
pub fn division_presentation(field: FieldSpec) -> Option<QuatPresentation> {
    let q = match field {
        FieldSpec::RealPlace | FieldSpec::PadicPlace(2) => QuatPresentation::from_ints(-1, -1),
        FieldSpec::PadicPlace(p) => QuatPresentation::from_ints(smallest_nonresidue(p) as i64, p as i64),
        _ => return None,
    };
    q.ok()
}

/// Primes `p ≡ 3 mod 4` up to `bound`; `(-1, p)` is a division algebra
/// over `Q` for each of them.
pub fn rational_division_family(bound: u64) -> Vec<u64> {
    (3..=bound).filter(|&p| p % 4 == 3 && is_prime(p)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupLevel {
    G2,
    F4,
    E6,
}

impl std::str::FromStr for GroupLevel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "G2" | "g2" => Ok(GroupLevel::G2),
            "F4" | "f4" => Ok(GroupLevel::F4),
            "E6" | "e6" => Ok(GroupLevel::E6),
            _ => Err(Error::Parse(format!("unknown group {s:?}, expected G2, F4 or E6"))),
        }
    }
}

impl fmt::Display for GroupLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupLevel::G2 => "G2",
            GroupLevel::F4 => "F4",
            GroupLevel::E6 => "E6",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassReport {
    pub field: FieldSpec,
    pub level: GroupLevel,
    /// Class counts per kind, in display order.
    pub classes: Vec<(&'static str, Cardinality)>,
    pub total: Cardinality,
    pub representatives: Vec<String>,
    /// Over `Q`: primes `p` with `(-1, p)` division, each giving a class.
    pub family: Vec<String>,
}

fn card_json(c: Cardinality) -> Value {
    match c {
        Cardinality::Finite(n) => json!(n),
        Cardinality::Infinite => json!("infinite"),
    }
}

fn card_from_json(v: &Value) -> Result<Cardinality> {
    match v {
        Value::Number(n) => n
            .as_u64()
            .map(Cardinality::Finite)
            .ok_or_else(|| Error::Parse(format!("bad count {n}"))),
        Value::String(s) if s == "infinite" => Ok(Cardinality::Infinite),
        _ => Err(Error::Parse(format!("bad count {v}"))),
    }
}

fn sum(cs: &[(&'static str, Cardinality)]) -> Cardinality {
    cs.iter().try_fold(0u64, |acc, (_, c)| c.finite().map(|n| acc + n))
        .map_or(Cardinality::Infinite, Cardinality::Finite)
}

impl ClassReport {
    pub fn to_json(&self) -> Value {
        let mut classes = Map::new();
        for (k, c) in &self.classes {
            classes.insert((*k).to_string(), card_json(*c));
        }
        let mut v = json!({
            "field": self.field.to_string(),
            "group": self.level.to_string(),
            "classes": classes,
            "total": card_json(self.total),
            "representatives": self.representatives,
        });
        if !self.family.is_empty() {
            v["family"] = json!(self.family);
        }
        v
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let get = |k: &str| v.get(k).ok_or_else(|| Error::Parse(format!("missing {k:?}")));
        let field: FieldSpec = get("field")?
            .as_str()
            .ok_or_else(|| Error::Parse("field must be a string".into()))?
            .parse()?;
        let level: GroupLevel = v
            .get("group")
            .and_then(Value::as_str)
            .unwrap_or("E6")
            .parse()?;
        let template = report(field, level);
        let obj = get("classes")?
            .as_object()
            .ok_or_else(|| Error::Parse("classes must be an object".into()))?;
        let mut classes = Vec::new();
        for (k, _) in &template.classes {
            let c = obj.get(*k).ok_or_else(|| Error::Parse(format!("missing class {k:?}")))?;
            classes.push((*k, card_from_json(c)?));
        }
        let strings = |k: &str| -> Result<Vec<String>> {
            match v.get(k) {
                None => Ok(Vec::new()),
                Some(Value::Array(a)) => a
                    .iter()
                    .map(|s| {
                        s.as_str()
                            .map(String::from)
                            .ok_or_else(|| Error::Parse(format!("{k} must hold strings")))
                    })
                    .collect(),
                Some(_) => Err(Error::Parse(format!("{k} must be an array"))),
            }
        };
        Ok(Self {
            field,
            level,
            classes,
            total: card_from_json(get("total")?)?,
            representatives: strings("representatives")?,
            family: strings("family")?,
        })
    }
}

/// Torus parameters of the `θ` classes: one per quaternion class, split
/// first. Each entry is `(G2 parameters, F4 parameters, E6 parameters)`.
fn theta_parameters(field: FieldSpec) -> Vec<(String, String, String)> {
    let row = |g: &str, f: &str, e: &str| (g.to_string(), f.to_string(), e.to_string());
    match field {
        FieldSpec::AlgClosedMarker | FieldSpec::PrimeField(_) => {
            vec![row("1,1", "1,1,1,1", "1,1,1,1,1,1")]
        }
        FieldSpec::RealPlace | FieldSpec::PadicPlace(2) => vec![
            row("1,1", "1,1,-1,1", "1,1,1,1,-1,1"),
            row("1,-1", "1,1,1,1", "1,1,1,1,1,1"),
        ],
        FieldSpec::PadicPlace(p) => {
            let z = smallest_nonresidue(p);
            vec![
                row("1,1", "1,1,-1,1", "1,1,1,1,-1,1"),
                (
                    format!("-{z},-{p}/{z}"),
                    format!("1,1,-{p},-{z}"),
                    format!("1,1,1,1,-{p},-{z}"),
                ),
            ]
        }
        FieldSpec::Rationals => vec![row("1,1", "1,1,-1,1", "1,1,1,1,-1,1")],
    }
}

fn family(field: FieldSpec) -> Vec<String> {
    if field == FieldSpec::Rationals {
        rational_division_family(31)
            .into_iter()
            .map(|p| format!("(-1,{p})"))
            .collect()
    } else {
        Vec::new()
    }
}

/// Classes of order-two automorphisms of split G2: one per isomorphism
/// class of quaternion subalgebras.
pub fn g2_class_report(field: FieldSpec) -> ClassReport {
    let c = quaternion_class_count(field);
    let classes = vec![("theta", c)];
    ClassReport {
        field,
        level: GroupLevel::G2,
        total: sum(&classes),
        classes,
        representatives: theta_parameters(field)
            .into_iter()
            .map(|(g, _, _)| format!("t:{g}"))
            .collect(),
        family: family(field),
    }
}

/// Type I classes (fixed `Her_3(D, γ)`) and the single type II class.
pub fn f4_class_report(field: FieldSpec) -> ClassReport {
    let type_one = match field {
        FieldSpec::RealPlace => Cardinality::Finite(3),
        other => quaternion_class_count(other),
    };
    let classes = vec![("type_I", type_one), ("type_II", Cardinality::Finite(1))];
    let mut reps: Vec<String> = theta_parameters(field)
        .into_iter()
        .map(|(_, f, _)| format!("t:{f}"))
        .collect();
    if field == FieldSpec::RealPlace {
        // the definite D with γ = (-1, 1, 1)
        reps.push("t:-1,1,1,1".into());
    }
    reps.push("s".into());
    ClassReport {
        field,
        level: GroupLevel::F4,
        total: sum(&classes),
        classes,
        representatives: reps,
        family: family(field),
    }
}

/// Conjugacy classes `σ, θ, †, θ†` of involutions of `Aut⁺(B, -)`.
pub fn e6_class_report(field: FieldSpec) -> ClassReport {
    let c = quaternion_class_count(field);
    let one = Cardinality::Finite(1);
    let classes = vec![("sigma", one), ("theta", c), ("dagger", one), ("theta_dagger", c)];
    let thetas: Vec<String> = theta_parameters(field)
        .into_iter()
        .map(|(_, _, e)| format!("t:{e}"))
        .collect();
    let mut reps = vec!["s".to_string()];
    reps.extend(thetas.iter().cloned());
    reps.push("varpi".into());
    reps.extend(thetas.iter().map(|t| format!("{t}.varpi")));
    ClassReport {
        field,
        level: GroupLevel::E6,
        total: sum(&classes),
        classes,
        representatives: reps,
        family: family(field),
    }
}

pub fn report(field: FieldSpec, level: GroupLevel) -> ClassReport {
    match level {
        GroupLevel::G2 => g2_class_report(field),
        GroupLevel::F4 => f4_class_report(field),
        GroupLevel::E6 => e6_class_report(field),
    }
}
