//! First Tits construction `J(Mat_3(k), ς)` on triples `(a0, a1, a2)` of
//! 3x3 matrices, stored row-major one after another.
//!
//! ```text
//! N(a)    = det a0 + ς det a1 + ς^-1 det a2 - tr(a0 a1 a2)
//! T(a, b) = tr(a0 b0) + tr(a1 b2) + tr(a2 b1)
//! a^#     = (a0^# - a1 a2, ς^-1 a2^# - a0 a1, ς a1^# - a2 a0)
//! ```
//!
//! where `m^#` is the adjugate. The unit is `(1, 0, 0)`.

use serde_json::{json, Value};

use super::{AlbertCoords, CubicJordan, ALBERT_DIM};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::linmap::LinMap;
use crate::scalar::{FieldSpec, Scalar};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TitsElem {
    coords: Vec<Scalar>,
}

impl std::fmt::Debug for TitsElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = (0..3)
            .map(|i| {
                self.part(i)
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "tits([{}], [{}], [{}])", parts[0], parts[1], parts[2])
    }
}

impl AlbertCoords for TitsElem {
    fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    fn from_coords_unchecked(coords: Vec<Scalar>) -> Self {
        debug_assert_eq!(coords.len(), ALBERT_DIM);
        Self { coords }
    }
}

impl TitsElem {
    /// `a_i` as 9 row-major entries.
    pub fn part(&self, i: usize) -> &[Scalar] {
        &self.coords[9 * i..9 * i + 9]
    }

    pub fn part_matrix(&self, i: usize) -> Matrix {
        let f = self.coords[0].field();
        let p = self.part(i);
        Matrix::from_rows(f, (0..3).map(|r| p[3 * r..3 * r + 3].to_vec()).collect())
    }
}

pub(crate) type M3 = [Scalar; 9];


pub(crate) fn m3_mul(a: &[Scalar], b: &[Scalar]) -> M3 {
    std::array::from_fn(|k| {
        let (r, c) = (k / 3, k % 3);
        &(&(&a[3 * r] * &b[c]) + &(&a[3 * r + 1] * &b[3 + c])) + &(&a[3 * r + 2] * &b[6 + c])
    })
}

pub(crate) fn m3_trace(a: &[Scalar]) -> Scalar {
    &(&a[0] + &a[4]) + &a[8]
}

pub(crate) fn m3_trace_mul(a: &[Scalar], b: &[Scalar]) -> Scalar {
    let f = a[0].field();
    let mut acc = f.zero();
    for r in 0..3 {
        for c in 0..3 {
            acc = &acc + &(&a[3 * r + c] * &b[3 * c + r]);
        }
    }
    acc
}

pub(crate) fn m3_det(a: &[Scalar]) -> Scalar {
    let adj = m3_adj(a);
    &(&(&a[0] * &adj[0]) + &(&a[1] * &adj[3])) + &(&a[2] * &adj[6])
}

/// Adjugate (classical adjoint), so that `a adj(a) = det(a) 1`.
pub(crate) fn m3_adj(a: &[Scalar]) -> M3 {
    let m = |r: usize, c: usize| &a[3 * r + c];
    let minor = |r0: usize, r1: usize, c0: usize, c1: usize| {
        &(m(r0, c0) * m(r1, c1)) - &(m(r0, c1) * m(r1, c0))
    };
    [
        minor(1, 2, 1, 2),
        -minor(0, 2, 1, 2),
        minor(0, 1, 1, 2),
        -minor(1, 2, 0, 2),
        minor(0, 2, 0, 2),
        -minor(0, 1, 0, 2),
        minor(1, 2, 0, 1),
        -minor(0, 2, 0, 1),
        minor(0, 1, 0, 1),
    ]
}

/// Polarized adjugate `adj(a + b) - adj(a) - adj(b)`.
pub(crate) fn m3_adj_cross(a: &[Scalar], b: &[Scalar]) -> M3 {
    let s: Vec<Scalar> = a.iter().zip(b).map(|(x, y)| x + y).collect();
    let (p, q, r) = (m3_adj(&s), m3_adj(a), m3_adj(b));
    std::array::from_fn(|i| &(&p[i] - &q[i]) - &r[i])
}

pub(crate) fn m3_transpose(a: &[Scalar]) -> M3 {
    std::array::from_fn(|k| a[3 * (k % 3) + k / 3].clone())
}

fn m3_lin(terms: &[(&Scalar, &[Scalar])]) -> M3 {
    let f = terms[0].0.field();
    std::array::from_fn(|i| {
        terms
            .iter()
            .fold(f.zero(), |acc, (s, m)| &acc + &(*s * &m[i]))
    })
}

pub(crate) fn matrix_to_m3(m: &Matrix) -> Result<M3> {
    if m.rows() != 3 || m.cols() != 3 {
        return Err(Error::CarrierMismatch {
            expected: 3,
            actual: m.rows().max(m.cols()),
        });
    }
    Ok(std::array::from_fn(|k| m[(k / 3, k % 3)].clone()))
}

/// `J(Mat_3(k), ς)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TitsAlbert {
    field: FieldSpec,
    varsigma: Scalar,
    varsigma_inv: Scalar,
}

impl TitsAlbert {
    pub fn new(field: FieldSpec, varsigma: Scalar) -> Result<Self> {
        if !field.is_arithmetic() {
            return Err(Error::NonArithmeticField(field.to_string()));
        }
        if varsigma.field() != field {
            return Err(Error::MixedFields(field.to_string(), varsigma.field().to_string()));
        }
        let varsigma_inv = varsigma.inv().map_err(|_| Error::ZeroMultiplier)?;
        Ok(Self {
            field,
            varsigma,
            varsigma_inv,
        })
    }

    /// `ς = 1`, a split Albert algebra.
    pub fn split(field: FieldSpec) -> Result<Self> {
        Self::new(field, field.try_int(1)?)
    }

    pub fn varsigma(&self) -> &Scalar {
        &self.varsigma
    }

    pub fn from_parts(&self, parts: [&Matrix; 3]) -> Result<TitsElem> {
        let mut coords = Vec::with_capacity(ALBERT_DIM);
        for p in parts {
            coords.extend(matrix_to_m3(p)?);
        }
        self.elem(coords)
    }

    /// The norm written out directly, independent of the sharp map.
    pub fn norm_formula(&self, x: &TitsElem) -> Scalar {
        let (a0, a1, a2) = (x.part(0), x.part(1), x.part(2));
        let prod = m3_mul(&m3_mul(a0, a1), a2);
        &(&(&m3_det(a0) + &(&self.varsigma * &m3_det(a1))) + &(&self.varsigma_inv * &m3_det(a2)))
            - &m3_trace(&prod)
    }

    /// `φ(u, v, w)(a0, a1, a2) = (u a0 v^-1, v a1 w^-1, w a2 u^-1)` for
    /// `u, v, w` of determinant one.
    pub fn tits_phi(&self, u: &Matrix, v: &Matrix, w: &Matrix) -> Result<LinMap> {
        for m in [u, v, w] {
            if !m.is_square() || m.rows() != 3 {
                return Err(Error::CarrierMismatch {
                    expected: 3,
                    actual: m.rows(),
                });
            }
            if !m.determinant().is_one() {
                return Err(Error::NotUnimodular);
            }
        }
        let (um, vm, wm) = (matrix_to_m3(u)?, matrix_to_m3(v)?, matrix_to_m3(w)?);
        let (ui, vi, wi) = (
            matrix_to_m3(&u.inverse()?)?,
            matrix_to_m3(&v.inverse()?)?,
            matrix_to_m3(&w.inverse()?)?,
        );
        Ok(self
            .linmap(|x| {
                let mut c = Vec::with_capacity(ALBERT_DIM);
                c.extend(m3_mul(&m3_mul(&um, x.part(0)), &vi));
                c.extend(m3_mul(&m3_mul(&vm, x.part(1)), &wi));
                c.extend(m3_mul(&m3_mul(&wm, x.part(2)), &ui));
                TitsElem { coords: c }
            })
            .with_tag("tits:phi"))
    }

    pub fn to_json(&self, x: &TitsElem) -> Value {
        let part = |i: usize| x.part(i).iter().map(|c| c.to_string()).collect::<Vec<_>>();
        json!({
            "model": "tits",
            "parts": [part(0), part(1), part(2)],
            "varsigma": self.varsigma.to_string(),
        })
    }

    pub fn from_json(&self, v: &Value) -> Result<TitsElem> {
        if let Some(m) = v.get("model").and_then(Value::as_str) {
            if m != "tits" {
                return Err(Error::ModelMismatch(format!("expected a Tits element, got {m:?}")));
            }
        }
        if let Some(s) = v.get("varsigma") {
            let s = super::view::scalars_from_json(self.field, &Value::Array(vec![s.clone()]), 1)?;
            if s[0] != self.varsigma {
                return Err(Error::AlgebraMismatch("varsigma differs from the algebra's".into()));
            }
        }
        let parts = v
            .get("parts")
            .and_then(Value::as_array)
            .filter(|p| p.len() == 3)
            .ok_or_else(|| Error::Parse("\"parts\" must hold three 9-entry arrays".into()))?;
        let mut coords = Vec::with_capacity(ALBERT_DIM);
        for p in parts {
            coords.extend(super::view::scalars_from_json(self.field, p, 9)?);
        }
        self.elem(coords)
    }
}

impl CubicJordan for TitsAlbert {
    type Elem = TitsElem;

    fn field(&self) -> FieldSpec {
        self.field
    }

    fn model_name(&self) -> &'static str {
        "tits"
    }

    fn unit(&self) -> TitsElem {
        let f = self.field;
        let mut c = vec![f.zero(); ALBERT_DIM];
        for i in [0, 4, 8] {
            c[i] = f.one();
        }
        TitsElem { coords: c }
    }

    /// `x.y = ½(x # y + T(x) y + T(y) x - (T(x) T(y) - T(x, y)) 1)`.
    fn jmul(&self, x: &TitsElem, y: &TitsElem) -> TitsElem {
        let (tx, ty) = (self.trace(x), self.trace(y));
        let s = &(&tx * &ty) - &self.trform(x, y);
        let r = self.add(
            &self.cross(x, y),
            &self.add(&self.scale(&tx, y), &self.scale(&ty, x)),
        );
        let r = self.sub(&r, &self.scale(&s, &self.unit()));
        TitsElem {
            coords: r.coords.iter().map(Scalar::half).collect(),
        }
    }

    fn trace(&self, x: &TitsElem) -> Scalar {
        m3_trace(x.part(0))
    }

    fn trform(&self, x: &TitsElem, y: &TitsElem) -> Scalar {
        &(&m3_trace_mul(x.part(0), y.part(0)) + &m3_trace_mul(x.part(1), y.part(2)))
            + &m3_trace_mul(x.part(2), y.part(1))
    }

    fn sharp(&self, x: &TitsElem) -> TitsElem {
        let (a0, a1, a2) = (x.part(0), x.part(1), x.part(2));
        let one = self.field.one();
        let m1 = -&one;
        let mut c = Vec::with_capacity(ALBERT_DIM);
        c.extend(m3_lin(&[(&one, &m3_adj(a0)), (&m1, &m3_mul(a1, a2))]));
        c.extend(m3_lin(&[(&self.varsigma_inv, &m3_adj(a2)), (&m1, &m3_mul(a0, a1))]));
        c.extend(m3_lin(&[(&self.varsigma, &m3_adj(a1)), (&m1, &m3_mul(a2, a0))]));
        TitsElem { coords: c }
    }

    fn cross(&self, x: &TitsElem, y: &TitsElem) -> TitsElem {
        let (a0, a1, a2) = (x.part(0), x.part(1), x.part(2));
        let (b0, b1, b2) = (y.part(0), y.part(1), y.part(2));
        let one = self.field.one();
        let m1 = -&one;
        let mut c = Vec::with_capacity(ALBERT_DIM);
        c.extend(m3_lin(&[
            (&one, &m3_adj_cross(a0, b0)),
            (&m1, &m3_mul(a1, b2)),
            (&m1, &m3_mul(b1, a2)),
        ]));
        c.extend(m3_lin(&[
            (&self.varsigma_inv, &m3_adj_cross(a2, b2)),
            (&m1, &m3_mul(a0, b1)),
            (&m1, &m3_mul(b0, a1)),
        ]));
        c.extend(m3_lin(&[
            (&self.varsigma, &m3_adj_cross(a1, b1)),
            (&m1, &m3_mul(a2, b0)),
            (&m1, &m3_mul(b2, a0)),
        ]));
        TitsElem { coords: c }
    }
}
