//! Exact scalars over `Q` and `F_p` (p >= 5), field descriptors, seeded
//! sampling and square-class counts.
//!
//! Real and p-adic places, and the algebraically closed marker, appear only
//! as classification tags; they carry no element arithmetic.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Largest supported prime modulus; keeps residue products inside `u128`
/// comfortably and string parsing simple.
pub const MAX_PRIME: u64 = (1 << 31) - 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
    RealPlace,
    PadicPlace(u64),
    AlgClosedMarker,
}

/// A finite count or the "infinitely many" sentinel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cardinality {
    Finite(u64),
    Infinite,
}

impl Cardinality {
    pub fn finite(self) -> Option<u64> {
        match self {
            Cardinality::Finite(n) => Some(n),
            Cardinality::Infinite => None,
        }
    }
}

impl fmt::Display for Cardinality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cardinality::Finite(n) => write!(f, "{n}"),
            Cardinality::Infinite => f.write_str("infinite"),
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl FieldSpec {
    /// `F_p`, rejecting composites, 2, 3 and oversized moduli.
    pub fn prime_field(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if p < 5 {
            return Err(Error::InvalidField(format!(
                "characteristic {p} is not supported (need p >= 5)"
            )));
        }
        if p > MAX_PRIME {
            return Err(Error::InvalidField(format!("{p} exceeds {MAX_PRIME}")));
        }
        Ok(FieldSpec::PrimeField(p))
    }

    pub fn padic(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(FieldSpec::PadicPlace(p))
    }

    pub fn is_arithmetic(&self) -> bool {
        matches!(self, FieldSpec::Rationals | FieldSpec::PrimeField(_))
    }

    fn require_arithmetic(&self) -> Result<()> {
        if self.is_arithmetic() {
            Ok(())
        } else {
            Err(Error::NonArithmeticField(self.to_string()))
        }
    }

    /// The integer `n` as a field element.
    ///
    /// Panics on a classification-only field; use [`FieldSpec::try_int`] when
    /// the field comes from user input.
    pub fn int(&self, n: i64) -> Scalar {
        self.try_int(n).expect("integer in a non-arithmetic field")
    }

    pub fn try_int(&self, n: i64) -> Result<Scalar> {
        match *self {
            FieldSpec::Rationals => Ok(Scalar::Rational(BigRational::from_integer(n.into()))),
            FieldSpec::PrimeField(p) => Ok(Scalar::Residue {
                value: n.rem_euclid(p as i64) as u64,
                modulus: p,
            }),
            _ => Err(Error::NonArithmeticField(self.to_string())),
        }
    }

    pub fn zero(&self) -> Scalar {
        self.int(0)
    }

    pub fn one(&self) -> Scalar {
        self.int(1)
    }

    /// `num / den` in this field.
    pub fn ratio(&self, num: i64, den: i64) -> Result<Scalar> {
        let n = self.try_int(num)?;
        let d = self.try_int(den)?;
        n.checked_div(&d)
    }

    /// Parses `"3"`, `"-5/6"` into this field.
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        self.require_arithmetic()?;
        let s = s.trim();
        let bad = || Error::Parse(format!("bad scalar {s:?}"));
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (
                BigInt::from_str(n.trim()).map_err(|_| bad())?,
                BigInt::from_str(d.trim()).map_err(|_| bad())?,
            ),
            None => (BigInt::from_str(s).map_err(|_| bad())?, BigInt::one()),
        };
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match *self {
            FieldSpec::Rationals => Ok(Scalar::Rational(BigRational::new(num, den))),
            FieldSpec::PrimeField(p) => {
                let reduce = |x: BigInt| {
                    let m = BigInt::from(p);
                    x.mod_floor(&m).to_u64().expect("residue fits")
                };
                let n = Scalar::Residue {
                    value: reduce(num),
                    modulus: p,
                };
                let d = Scalar::Residue {
                    value: reduce(den),
                    modulus: p,
                };
                n.checked_div(&d)
            }
            _ => unreachable!(),
        }
    }

    /// Order of `k* / (k*)^2`.
    pub fn square_class_count(&self) -> Cardinality {
        match *self {
            FieldSpec::AlgClosedMarker => Cardinality::Finite(1),
            FieldSpec::PrimeField(_) | FieldSpec::RealPlace => Cardinality::Finite(2),
            FieldSpec::PadicPlace(2) => Cardinality::Finite(8),
            FieldSpec::PadicPlace(_) => Cardinality::Finite(4),
            FieldSpec::Rationals => Cardinality::Infinite,
        }
    }

    /// Whether `x` is a square in this (arithmetic) field.
    pub fn is_square(&self, x: &Scalar) -> Result<bool> {
        self.require_arithmetic()?;
        x.check_field(self)?;
        Ok(match x {
            Scalar::Rational(q) => {
                if q.is_negative() {
                    false
                } else {
                    is_perfect_square(q.numer()) && is_perfect_square(q.denom())
                }
            }
            Scalar::Residue { value, modulus } => {
                *value == 0 || pow_mod(*value, (modulus - 1) / 2, *modulus) == 1
            }
        })
    }
}

fn is_perfect_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc: u64 = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % m as u128) as u64;
        }
        base = ((base as u128 * base as u128) % m as u128) as u64;
        exp >>= 1;
    }
    acc
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => f.write_str("Q"),
            FieldSpec::PrimeField(p) => write!(f, "Fp:{p}"),
            FieldSpec::RealPlace => f.write_str("R"),
            FieldSpec::PadicPlace(p) => write!(f, "Qp:{p}"),
            FieldSpec::AlgClosedMarker => f.write_str("Kbar"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (kind, arg) = match s.split_once(':') {
            Some((k, a)) => (k, Some(a)),
            None => (s, None),
        };
        let prime = |a: Option<&str>| -> Result<u64> {
            let a = a.ok_or_else(|| Error::InvalidField(format!("{s}: missing prime")))?;
            a.parse::<u64>()
                .map_err(|_| Error::InvalidField(format!("{s}: bad prime {a:?}")))
        };
        match (kind, arg) {
            ("Q", None) => Ok(FieldSpec::Rationals),
            ("R", None) => Ok(FieldSpec::RealPlace),
            ("Kbar", None) => Ok(FieldSpec::AlgClosedMarker),
            ("Fp", a) => FieldSpec::prime_field(prime(a)?),
            ("Qp", a) => FieldSpec::padic(prime(a)?),
            _ => Err(Error::InvalidField(s.to_string())),
        }
    }
}

/// An exact field element. Rationals are kept in lowest terms with a
/// positive denominator (guaranteed by `BigRational`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked binary arithmetic: mixed fields and zero divisors are errors.
pub fn arith(x: &Scalar, y: &Scalar, op: ArithOp) -> Result<Scalar> {
    if x.field() != y.field() {
        return Err(Error::MixedFields(x.field().to_string(), y.field().to_string()));
    }
    Ok(match op {
        ArithOp::Add => x + y,
        ArithOp::Sub => x - y,
        ArithOp::Mul => x * y,
        ArithOp::Div => x.checked_div(y)?,
    })
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::Residue { modulus, .. } => FieldSpec::PrimeField(*modulus),
        }
    }

    fn check_field(&self, field: &FieldSpec) -> Result<()> {
        if self.field() == *field {
            Ok(())
        } else {
            Err(Error::MixedFields(self.field().to_string(), field.to_string()))
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar> {
        if self.field() != rhs.field() {
            return Err(Error::MixedFields(self.field().to_string(), rhs.field().to_string()));
        }
        Ok(self * &rhs.inv()?)
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, exp: i64) -> Result<Scalar> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut acc = self.field().one();
        for _ in 0..exp.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    pub fn half(&self) -> Scalar {
        let two = self.field().int(2);
        self.checked_div(&two).expect("characteristic is not 2")
    }

    pub fn third(&self) -> Scalar {
        let three = self.field().int(3);
        self.checked_div(&three).expect("characteristic is not 3")
    }

    /// The rational value, if this is an element of `Q`.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            Scalar::Residue { .. } => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("mixed-field arithmetic: {} vs {}", a.field(), b.field())
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident, $rat:expr, $res:expr) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            #[allow(clippy::suspicious_arithmetic_impl)]
            fn $method(self, rhs: &Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational($rat(a, b)),
                    (
                        Scalar::Residue { value: a, modulus: p },
                        Scalar::Residue { value: b, modulus: q },
                    ) if p == q => Scalar::Residue {
                        value: $res(*a, *b, *p),
                        modulus: *p,
                    },
                    _ => mismatch(self, rhs),
                }
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

impl_binop!(
    Add,
    add,
    |a: &BigRational, b: &BigRational| a + b,
    |a: u64, b: u64, p: u64| (a + b) % p
);
impl_binop!(
    Sub,
    sub,
    |a: &BigRational, b: &BigRational| a - b,
    |a: u64, b: u64, p: u64| (a + p - b) % p
);
impl_binop!(
    Mul,
    mul,
    |a: &BigRational, b: &BigRational| a * b,
    |a: u64, b: u64, p: u64| ((a as u128 * b as u128) % p as u128) as u64
);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Deterministic scalar source driven by a ChaCha stream.
#[derive(Debug, Clone)]
pub struct Sampler {
    rng: ChaCha8Rng,
    field: FieldSpec,
    bound: u64,
}

impl Sampler {
    pub fn new(field: FieldSpec, seed: u64, bound: u64) -> Result<Self> {
        field.require_arithmetic()?;
        Ok(Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
            field,
            bound: bound.max(1),
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// Uniform residue over `F_p`; over `Q` a fraction `n/d` with
    /// `|n| <= bound` and `1 <= d <= bound`.
    pub fn scalar(&mut self) -> Scalar {
        match self.field {
            FieldSpec::PrimeField(p) => Scalar::Residue {
                value: self.rng.random_range(0..p),
                modulus: p,
            },
            FieldSpec::Rationals => {
                let b = self.bound as i64;
                let n = self.rng.random_range(-b..=b);
                let d = self.rng.random_range(1..=b);
                Scalar::Rational(BigRational::new(n.into(), d.into()))
            }
            _ => unreachable!("checked in Sampler::new"),
        }
    }

    pub fn nonzero(&mut self) -> Scalar {
        loop {
            let s = self.scalar();
            if !s.is_zero() {
                return s;
            }
        }
    }

    pub fn small_int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.random_range(lo..=hi)
    }

    pub fn coin(&mut self) -> bool {
        self.rng.random()
    }

    pub fn vector(&mut self, n: usize) -> Vec<Scalar> {
        (0..n).map(|_| self.scalar()).collect()
    }
}

/// One deterministic sample for `(field, seed, bound)`.
pub fn sample(field: FieldSpec, seed: u64, bound: u64) -> Result<Scalar> {
    Ok(Sampler::new(field, seed, bound)?.scalar())
}
