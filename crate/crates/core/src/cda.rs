//! Composition algebras of dimension 1, 2, 4 and 8 built by Cayley-Dickson
//! doubling, optionally starting from the split quaternions `M_2(k)`.
//!
//! Coordinates are ordered recursively as (first copy, second copy). The
//! `M_2(k)` base uses the basis `(E11, E12, E21, E22)`.
//!
//! The doubling rules are
//!
//! ```text
//! (a1, a2)(b1, b2) = (a1 b1 + k conj(b2) a2, b2 a1 + a2 conj(b1))
//! conj(a1, a2)     = (conj(a1), -a2)
//! q(a1, a2)        = q(a1) - k q(a2)
//! ```

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{FieldSpec, Scalar};

#[derive(Debug)]
struct Inner {
    field: FieldSpec,
    kappas: Vec<Scalar>,
    split_quaternion_base: bool,
    dim: usize,
    /// `table[i * dim + j]` lists the nonzero `(k, c)` with `e_i e_j = sum c e_k`.
    table: Vec<Vec<(usize, Scalar)>>,
    conj_signs: Vec<Scalar>,
    conj_perm: Vec<usize>,
}

/// A Cayley-Dickson algebra. Cheap to clone; equality compares the
/// defining data.
#[derive(Clone)]
pub struct CdAlgebra(Arc<Inner>);

impl PartialEq for CdAlgebra {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.field == other.0.field
                && self.0.split_quaternion_base == other.0.split_quaternion_base
                && self.0.kappas == other.0.kappas)
    }
}

impl Eq for CdAlgebra {}

impl fmt::Debug for CdAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CdAlgebra({})", self.descriptor())
    }
}

impl fmt::Display for CdAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.descriptor())
    }
}

impl CdAlgebra {
    /// Doubles `k` (or `M_2(k)` when `split_quaternion_base`) once per kappa.
    pub fn new(field: FieldSpec, kappas: Vec<Scalar>, split_quaternion_base: bool) -> Result<Self> {
        if !field.is_arithmetic() {
            return Err(Error::NonArithmeticField(field.to_string()));
        }
        for k in &kappas {
            if k.field() != field {
                return Err(Error::MixedFields(field.to_string(), k.field().to_string()));
            }
            if k.is_zero() {
                return Err(Error::InvalidField("doubling parameter must be nonzero".into()));
            }
        }
        let base = if split_quaternion_base { 4 } else { 1 };
        let dim = base << kappas.len();
        if dim > 8 {
            return Err(Error::InvalidField(format!(
                "composition algebras have dimension at most 8, got {dim}"
            )));
        }
        let mut inner = Inner {
            field,
            kappas,
            split_quaternion_base,
            dim,
            table: Vec::new(),
            conj_signs: Vec::new(),
            conj_perm: Vec::new(),
        };
        let basis: Vec<Vec<Scalar>> = (0..dim).map(|i| unit_vector(field, dim, i)).collect();
        let mut table = Vec::with_capacity(dim * dim);
        for x in &basis {
            for y in &basis {
                let prod = rec_mul(&inner, inner.kappas.len(), x, y);
                table.push(
                    prod.into_iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .collect(),
                );
            }
        }
        inner.table = table;
        // conj is a signed permutation of the basis in every model here
        for (i, b) in basis.iter().enumerate() {
            let c = rec_conj(&inner, inner.kappas.len(), b);
            let (k, s) = c
                .iter()
                .enumerate()
                .find(|(_, s)| !s.is_zero())
                .map(|(k, s)| (k, s.clone()))
                .expect("conjugate of a basis vector is nonzero");
            debug_assert_eq!(c.iter().filter(|s| !s.is_zero()).count(), 1, "basis {i}");
            inner.conj_perm.push(k);
            inner.conj_signs.push(s);
        }
        Ok(Self(Arc::new(inner)))
    }

    /// Split octonions: `M_2(k)` doubled once with kappa = 1.
    pub fn split_octonions(field: FieldSpec) -> Result<Self> {
        Self::new(field, vec![field.try_int(1)?], true)
    }

    /// Split quaternions `M_2(k)`.
    pub fn split_quaternions(field: FieldSpec) -> Result<Self> {
        Self::new(field, Vec::new(), true)
    }

    /// Parses `"cd:<field>:<k1,k2,...>"`; a leading `M` in the kappa list
    /// selects the `M_2(k)` base, e.g. `"cd:Q:M,1"` for split octonions.
    pub fn parse(desc: &str) -> Result<Self> {
        let rest = desc
            .strip_prefix("cd:")
            .ok_or_else(|| Error::Parse(format!("{desc:?}: expected cd:<field>:<kappas>")))?;
        let (field, kappas) = rest
            .rsplit_once(':')
            .ok_or_else(|| Error::Parse(format!("{desc:?}: missing kappa list")))?;
        let field: FieldSpec = field.parse()?;
        let mut split_base = false;
        let mut ks = Vec::new();
        for (i, tok) in kappas.split(',').map(str::trim).enumerate() {
            if tok.is_empty() {
                continue;
            }
            if tok == "M" && i == 0 {
                split_base = true;
            } else {
                ks.push(field.parse_scalar(tok)?);
            }
        }
        Self::new(field, ks, split_base)
    }

    pub fn descriptor(&self) -> String {
        let mut toks: Vec<String> = Vec::new();
        if self.0.split_quaternion_base {
            toks.push("M".into());
        }
        toks.extend(self.0.kappas.iter().map(|k| k.to_string()));
        format!("cd:{}:{}", self.0.field, toks.join(","))
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn field(&self) -> FieldSpec {
        self.0.field
    }

    pub fn kappas(&self) -> &[Scalar] {
        &self.0.kappas
    }

    pub fn split_quaternion_base(&self) -> bool {
        self.0.split_quaternion_base
    }

    /// Coordinates of the unit.
    pub fn unit_coords(&self) -> Vec<Scalar> {
        let f = self.0.field;
        let mut v = vec![f.zero(); self.0.dim];
        v[0] = f.one();
        if self.0.split_quaternion_base {
            v[3] = f.one();
        }
        v
    }

    pub fn mul_coords(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.0.dim;
        debug_assert!(x.len() == n && y.len() == n);
        let mut out = vec![self.0.field.zero(); n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let xy = xi * yj;
                for (k, c) in &self.0.table[i * n + j] {
                    out[*k] = &out[*k] + &(&xy * c);
                }
            }
        }
        out
    }

    pub fn conj_coords(&self, x: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.0.field.zero(); self.0.dim];
        for (i, xi) in x.iter().enumerate() {
            out[self.0.conj_perm[i]] = xi * &self.0.conj_signs[i];
        }
        out
    }

    pub fn qnorm_coords(&self, x: &[Scalar]) -> Scalar {
        rec_q(&self.0, self.0.kappas.len(), x)
    }

    /// `<x, y> = q(x + y) - q(x) - q(y)`.
    pub fn bilin_coords(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let q = |v: &[Scalar]| self.qnorm_coords(v);
        let s: Vec<Scalar> = x.iter().zip(y).map(|(a, b)| a + b).collect();
        &(&q(&s) - &q(x)) - &q(y)
    }

    pub fn elem(&self, coords: Vec<Scalar>) -> Result<CompElem> {
        if coords.len() != self.dim() {
            return Err(Error::CarrierMismatch {
                expected: self.dim(),
                actual: coords.len(),
            });
        }
        if let Some(bad) = coords.iter().find(|c| c.field() != self.field()) {
            return Err(Error::MixedFields(self.field().to_string(), bad.field().to_string()));
        }
        Ok(CompElem {
            coords,
            alg: self.clone(),
        })
    }

    pub fn from_ints(&self, coords: &[i64]) -> Result<CompElem> {
        self.elem(coords.iter().map(|&c| self.field().int(c)).collect())
    }

    pub fn unit(&self) -> CompElem {
        CompElem {
            coords: self.unit_coords(),
            alg: self.clone(),
        }
    }

    pub fn zero(&self) -> CompElem {
        CompElem {
            coords: vec![self.field().zero(); self.dim()],
            alg: self.clone(),
        }
    }

    pub fn basis(&self) -> Vec<CompElem> {
        (0..self.dim())
            .map(|i| CompElem {
                coords: unit_vector(self.field(), self.dim(), i),
                alg: self.clone(),
            })
            .collect()
    }

    /// Gram matrix of the bilinear form on the standard basis.
    pub fn gram(&self) -> Matrix {
        let basis = self.basis();
        let rows = basis
            .iter()
            .map(|x| basis.iter().map(|y| self.bilin_coords(&x.coords, &y.coords)).collect())
            .collect();
        Matrix::from_rows(self.field(), rows)
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.gram().rank() == self.dim()
    }

    pub fn mul(&self, x: &CompElem, y: &CompElem) -> CompElem {
        x.mul(y)
    }

    pub fn elem_to_json(&self, x: &CompElem) -> serde_json::Value {
        serde_json::Value::Array(
            x.coords
                .iter()
                .map(|c| serde_json::Value::String(c.to_string()))
                .collect(),
        )
    }

    pub fn elem_from_json(&self, v: &serde_json::Value) -> Result<CompElem> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Parse("element must be a JSON array".into()))?;
        let coords = arr
            .iter()
            .map(|s| match s {
                serde_json::Value::String(s) => self.field().parse_scalar(s),
                serde_json::Value::Number(n) => self.field().parse_scalar(&n.to_string()),
                _ => Err(Error::Parse(format!("bad scalar {s}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        self.elem(coords)
    }
}

fn unit_vector(field: FieldSpec, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}

fn base_dim(inner: &Inner) -> usize {
    if inner.split_quaternion_base {
        4
    } else {
        1
    }
}

/// Product in the algebra obtained after `level` doublings.
fn rec_mul(inner: &Inner, level: usize, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    if level == 0 {
        if base_dim(inner) == 1 {
            return vec![&x[0] * &y[0]];
        }
        let m = |r: usize, c: usize, v: &[Scalar]| v[2 * r + c].clone();
        let mut out = Vec::with_capacity(4);
        for r in 0..2 {
            for c in 0..2 {
                out.push(&(&m(r, 0, x) * &m(0, c, y)) + &(&m(r, 1, x) * &m(1, c, y)));
            }
        }
        return out;
    }
    let h = x.len() / 2;
    let kappa = &inner.kappas[level - 1];
    let (a1, a2) = x.split_at(h);
    let (b1, b2) = y.split_at(h);
    let sub = level - 1;
    let first: Vec<Scalar> = {
        let p = rec_mul(inner, sub, a1, b1);
        let q = rec_mul(inner, sub, &rec_conj(inner, sub, b2), a2);
        p.iter().zip(&q).map(|(u, v)| u + &(kappa * v)).collect()
    };
    let second: Vec<Scalar> = {
        let p = rec_mul(inner, sub, b2, a1);
        let q = rec_mul(inner, sub, a2, &rec_conj(inner, sub, b1));
        p.iter().zip(&q).map(|(u, v)| u + v).collect()
    };
    first.into_iter().chain(second).collect()
}

fn rec_conj(inner: &Inner, level: usize, x: &[Scalar]) -> Vec<Scalar> {
    if level == 0 {
        if base_dim(inner) == 1 {
            return x.to_vec();
        }
        return vec![x[3].clone(), -&x[1], -&x[2], x[0].clone()];
    }
    let h = x.len() / 2;
    let mut out = rec_conj(inner, level - 1, &x[..h]);
    out.extend(x[h..].iter().map(|c| -c));
    out
}

fn rec_q(inner: &Inner, level: usize, x: &[Scalar]) -> Scalar {
    if level == 0 {
        if base_dim(inner) == 1 {
            return &x[0] * &x[0];
        }
        return &(&x[0] * &x[3]) - &(&x[1] * &x[2]);
    }
    let h = x.len() / 2;
    let kappa = &inner.kappas[level - 1];
    &rec_q(inner, level - 1, &x[..h]) - &(kappa * &rec_q(inner, level - 1, &x[h..]))
}

/// An element of a [`CdAlgebra`].
#[derive(Clone, PartialEq, Eq)]
pub struct CompElem {
    coords: Vec<Scalar>,
    alg: CdAlgebra,
}

impl fmt::Debug for CompElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.coords.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", c.join(", "))
    }
}

impl CompElem {
    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.coords
    }

    pub fn algebra(&self) -> &CdAlgebra {
        &self.alg
    }

    fn same_algebra(&self, other: &CompElem) -> Result<()> {
        if self.alg == other.alg {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch(format!("{} vs {}", self.alg, other.alg)))
        }
    }

    /// Product; panics when the operands come from different algebras.
    pub fn mul(&self, y: &CompElem) -> CompElem {
        self.try_mul(y).expect("operands from different algebras")
    }

    pub fn try_mul(&self, y: &CompElem) -> Result<CompElem> {
        self.same_algebra(y)?;
        Ok(CompElem {
            coords: self.alg.mul_coords(&self.coords, &y.coords),
            alg: self.alg.clone(),
        })
    }

    pub fn conj(&self) -> CompElem {
        CompElem {
            coords: self.alg.conj_coords(&self.coords),
            alg: self.alg.clone(),
        }
    }

    pub fn qnorm(&self) -> Scalar {
        self.alg.qnorm_coords(&self.coords)
    }

    pub fn bilin(&self, y: &CompElem) -> Result<Scalar> {
        self.same_algebra(y)?;
        Ok(self.alg.bilin_coords(&self.coords, &y.coords))
    }

    pub fn add(&self, y: &CompElem) -> CompElem {
        CompElem {
            coords: self.coords.iter().zip(&y.coords).map(|(a, b)| a + b).collect(),
            alg: self.alg.clone(),
        }
    }

    pub fn sub(&self, y: &CompElem) -> CompElem {
        CompElem {
            coords: self.coords.iter().zip(&y.coords).map(|(a, b)| a - b).collect(),
            alg: self.alg.clone(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> CompElem {
        CompElem {
            coords: self.coords.iter().map(|a| s * a).collect(),
            alg: self.alg.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    /// Trace `t(x)`, defined by `x + conj(x) = t(x) e`.
    pub fn trace(&self) -> Scalar {
        // the unit has coordinate 1 in slot 0 in every model
        &self.coords[0] + &self.alg.conj_coords(&self.coords)[0]
    }
}
