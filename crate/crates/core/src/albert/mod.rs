//! Albert algebras in two coordinate models: γ-Hermitian 3x3 matrices over
//! an octonion algebra, and the first Tits construction on three copies of
//! `Mat_3(k)`.
//!
//! Both models implement [`CubicJordan`], which supplies everything derived
//! from the unit, trace form and sharp map: cubic norm, U-operators,
//! inverses, triple products and isotopes.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{dot, Matrix, Subspace};
use crate::linmap::{Carrier, LinMap};
use crate::scalar::{FieldSpec, Sampler, Scalar};

mod hermitian;
pub(crate) mod tits;
mod view;

pub use hermitian::{HerElem, HermitianAlbert};
pub use tits::{TitsAlbert, TitsElem};
pub use view::{AlbertView, JElem};

pub const ALBERT_DIM: usize = 27;

/// Element types of an Albert model: a thin wrapper over 27 coordinates.
pub trait AlbertCoords: Clone + PartialEq + Eq + fmt::Debug + Send + Sync {
    fn coords(&self) -> &[Scalar];
    fn from_coords_unchecked(coords: Vec<Scalar>) -> Self;
}

/// A 27-dimensional Jordan algebra presented by a sharped cubic form.
pub trait CubicJordan: Clone + fmt::Debug + Send + Sync {
    type Elem: AlbertCoords;

    fn field(&self) -> FieldSpec;
    /// Short name used in map tags and reports.
    fn model_name(&self) -> &'static str;
    fn unit(&self) -> Self::Elem;
    fn jmul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn trace(&self, x: &Self::Elem) -> Scalar;
    fn trform(&self, x: &Self::Elem, y: &Self::Elem) -> Scalar;
    fn sharp(&self, x: &Self::Elem) -> Self::Elem;

    /// `x # y = (x + y)^# - x^# - y^#`.
    fn cross(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        let s = self.sharp(&self.add(x, y));
        self.sub(&self.sub(&s, &self.sharp(x)), &self.sharp(y))
    }

    fn elem(&self, coords: Vec<Scalar>) -> Result<Self::Elem> {
        if coords.len() != ALBERT_DIM {
            return Err(Error::CarrierMismatch {
                expected: ALBERT_DIM,
                actual: coords.len(),
            });
        }
        if let Some(bad) = coords.iter().find(|c| c.field() != self.field()) {
            return Err(Error::MixedFields(self.field().to_string(), bad.field().to_string()));
        }
        Ok(Self::Elem::from_coords_unchecked(coords))
    }

    fn zero(&self) -> Self::Elem {
        Self::Elem::from_coords_unchecked(vec![self.field().zero(); ALBERT_DIM])
    }

    fn basis(&self) -> Vec<Self::Elem> {
        (0..ALBERT_DIM)
            .map(|i| {
                let mut v = vec![self.field().zero(); ALBERT_DIM];
                v[i] = self.field().one();
                Self::Elem::from_coords_unchecked(v)
            })
            .collect()
    }

    fn sample(&self, sampler: &mut Sampler) -> Self::Elem {
        Self::Elem::from_coords_unchecked(sampler.vector(ALBERT_DIM))
    }

    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        Self::Elem::from_coords_unchecked(
            x.coords().iter().zip(y.coords()).map(|(a, b)| a + b).collect(),
        )
    }

    fn sub(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        Self::Elem::from_coords_unchecked(
            x.coords().iter().zip(y.coords()).map(|(a, b)| a - b).collect(),
        )
    }

    fn scale(&self, s: &Scalar, x: &Self::Elem) -> Self::Elem {
        Self::Elem::from_coords_unchecked(x.coords().iter().map(|a| s * a).collect())
    }

    fn neg(&self, x: &Self::Elem) -> Self::Elem {
        self.scale(&-self.field().one(), x)
    }

    fn jsquare(&self, x: &Self::Elem) -> Self::Elem {
        self.jmul(x, x)
    }

    /// Quadratic trace `Sr(x) = (T(x)^2 - T(x, x)) / 2`.
    fn sr(&self, x: &Self::Elem) -> Scalar {
        let t = self.trace(x);
        (&(&t * &t) - &self.trform(x, x)).half()
    }

    /// Cubic norm `N(x) = T(x^#, x) / 3`.
    fn norm(&self, x: &Self::Elem) -> Scalar {
        self.trform(&self.sharp(x), x).third()
    }

    /// `(T(x), Sr(x), N(x))`.
    fn cubic_data(&self, x: &Self::Elem) -> (Scalar, Scalar, Scalar) {
        (self.trace(x), self.sr(x), self.norm(x))
    }

    /// `U_x y = T(x, y) x - x^# # y`.
    fn uapply(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        let lhs = self.scale(&self.trform(x, y), x);
        self.sub(&lhs, &self.cross(&self.sharp(x), y))
    }

    /// `U_x y = 2 x.(x.y) - x^2.y`.
    fn uapply_quadratic(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        let xxy = self.jmul(x, &self.jmul(x, y));
        let x2y = self.jmul(&self.jsquare(x), y);
        self.sub(&self.add(&xxy, &xxy), &x2y)
    }

    /// Matrix of `y -> f(y)` on the coordinate basis.
    fn linmap(&self, f: impl Fn(&Self::Elem) -> Self::Elem) -> LinMap {
        LinMap::from_fn(self.field(), Carrier::AlbertSpace, |v| {
            f(&Self::Elem::from_coords_unchecked(v.to_vec())).coords().to_vec()
        })
        .with_tag(self.model_name())
    }

    fn apply(&self, phi: &LinMap, x: &Self::Elem) -> Self::Elem {
        Self::Elem::from_coords_unchecked(phi.apply(x.coords()))
    }

    fn uop(&self, x: &Self::Elem) -> LinMap {
        let sx = self.sharp(x);
        self.linmap(|y| {
            let lhs = self.scale(&self.trform(x, y), x);
            self.sub(&lhs, &self.cross(&sx, y))
        })
    }

    fn uop_quadratic(&self, x: &Self::Elem) -> LinMap {
        let l = self.lmul(x);
        let l2 = self.lmul(&self.jsquare(x));
        let two = self.field().int(2);
        let m = l.matrix().mul(l.matrix()).scale(&two).sub(l2.matrix());
        LinMap::new(m, Carrier::AlbertSpace, self.model_name()).expect("27x27")
    }

    /// Left multiplication `L_x`.
    fn lmul(&self, x: &Self::Elem) -> LinMap {
        self.linmap(|y| self.jmul(x, y))
    }

    /// `x^-1 = N(x)^-1 x^#`.
    fn jinverse(&self, x: &Self::Elem) -> Result<Self::Elem> {
        let n = self.norm(x);
        let inv = n.inv().map_err(|_| Error::SingularElement)?;
        Ok(self.scale(&inv, &self.sharp(x)))
    }

    /// `{x, z, y} = (x.z).y + (y.z).x - (x.y).z`.
    fn triple(&self, x: &Self::Elem, z: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        let a = self.jmul(&self.jmul(x, z), y);
        let b = self.jmul(&self.jmul(y, z), x);
        let c = self.jmul(&self.jmul(x, y), z);
        self.sub(&self.add(&a, &b), &c)
    }

    /// Product of the isotope `J<u>`: `x <u> y = {x, u, y}`.
    fn isotope_mul(&self, x: &Self::Elem, u: &Self::Elem, y: &Self::Elem) -> Result<Self::Elem> {
        if self.norm(u).is_zero() {
            return Err(Error::SingularElement);
        }
        Ok(self.triple(x, u, y))
    }

    /// Gram matrix of the trace form on the coordinate basis.
    fn gram(&self) -> Matrix {
        let basis = self.basis();
        let rows = basis
            .iter()
            .map(|x| basis.iter().map(|y| self.trform(x, y)).collect())
            .collect();
        Matrix::from_rows(self.field(), rows)
    }

    /// Whether the span of `vectors` is closed under the Jordan product.
    fn is_jordan_closed(&self, vectors: &[Vec<Scalar>]) -> bool {
        let span = Subspace::span(self.field(), ALBERT_DIM, vectors);
        let basis: Vec<Self::Elem> = span
            .basis()
            .iter()
            .map(|v| Self::Elem::from_coords_unchecked(v.clone()))
            .collect();
        basis.iter().enumerate().all(|(i, x)| {
            basis[i..]
                .iter()
                .all(|y| span.contains(self.jmul(x, y).coords()))
        })
    }

    /// `T(x, y)` from a precomputed Gram matrix.
    fn trform_with(&self, gram: &Matrix, x: &Self::Elem, y: &Self::Elem) -> Scalar {
        dot(x.coords(), &gram.apply(y.coords()), self.field())
    }
}

#[cfg(test)]
mod tests;
