//! Square matrices tagged with the space they act on.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::scalar::{FieldSpec, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Carrier {
    OctonionSpace,
    AlbertSpace,
    BrownSpace,
}

impl Carrier {
    pub fn dim(self) -> usize {
        match self {
            Carrier::OctonionSpace => 8,
            Carrier::AlbertSpace => 27,
            Carrier::BrownSpace => 56,
        }
    }
}

impl fmt::Display for Carrier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Carrier::OctonionSpace => "C",
            Carrier::AlbertSpace => "J",
            Carrier::BrownSpace => "B",
        })
    }
}

/// A linear endomorphism of an octonion, Albert or Brown algebra, written
/// in that algebra's coordinate basis. The matrix acts on column vectors.
#[derive(Clone)]
pub struct LinMap {
    matrix: Matrix,
    carrier: Carrier,
    basis_tag: String,
    inverse: OnceLock<Option<Matrix>>,
}

impl PartialEq for LinMap {
    fn eq(&self, other: &Self) -> bool {
        self.carrier == other.carrier && self.matrix == other.matrix
    }
}

impl Eq for LinMap {}

impl fmt::Debug for LinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinMap[{} / {}] ", self.carrier, self.basis_tag)?;
        self.matrix.fmt(f)
    }
}

impl LinMap {
    pub fn new(matrix: Matrix, carrier: Carrier, basis_tag: impl Into<String>) -> Result<Self> {
        let n = carrier.dim();
        if matrix.rows() != n || matrix.cols() != n {
            return Err(Error::CarrierMismatch {
                expected: n,
                actual: matrix.rows().max(matrix.cols()),
            });
        }
        Ok(Self {
            matrix,
            carrier,
            basis_tag: basis_tag.into(),
            inverse: OnceLock::new(),
        })
    }

    pub fn identity(field: FieldSpec, carrier: Carrier) -> Self {
        Self::new(Matrix::identity(field, carrier.dim()), carrier, "standard")
            .expect("identity has the right shape")
    }

    /// The map whose value on each basis vector is `f(basis vector)`.
    pub fn from_fn(
        field: FieldSpec,
        carrier: Carrier,
        f: impl Fn(&[Scalar]) -> Vec<Scalar>,
    ) -> Self {
        let n = carrier.dim();
        let columns: Vec<Vec<Scalar>> = (0..n)
            .map(|i| {
                let mut e = vec![field.zero(); n];
                e[i] = field.one();
                let image = f(&e);
                assert_eq!(image.len(), n, "image has wrong length");
                image
            })
            .collect();
        Self::new(Matrix::from_columns(field, n, &columns), carrier, "standard")
            .expect("shape is correct by construction")
    }

    pub fn with_tag(mut self, tag: impl Into<String>) -> Self {
        self.basis_tag = tag.into();
        self
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn carrier(&self) -> Carrier {
        self.carrier
    }

    pub fn basis_tag(&self) -> &str {
        &self.basis_tag
    }

    pub fn field(&self) -> FieldSpec {
        self.matrix.field()
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    pub fn require_carrier(&self, carrier: Carrier) -> Result<()> {
        if self.carrier == carrier {
            Ok(())
        } else {
            Err(Error::CarrierMismatch {
                expected: carrier.dim(),
                actual: self.dim(),
            })
        }
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.matrix.apply(v)
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &LinMap) -> Result<LinMap> {
        other.require_carrier(self.carrier)?;
        LinMap::new(self.matrix.mul(&other.matrix), self.carrier, self.basis_tag.clone())
    }

    /// Composition for maps already known to share a carrier.
    pub fn then_after(&self, other: &LinMap) -> LinMap {
        self.compose(other).expect("carriers agree")
    }

    pub fn square(&self) -> LinMap {
        self.then_after(self)
    }

    fn cached_inverse(&self) -> Option<&Matrix> {
        self.inverse
            .get_or_init(|| self.matrix.inverse().ok())
            .as_ref()
    }

    pub fn is_invertible(&self) -> bool {
        self.cached_inverse().is_some()
    }

    pub fn inverse(&self) -> Result<LinMap> {
        let inv = self.cached_inverse().ok_or(Error::SingularMatrix)?.clone();
        let out = LinMap::new(inv, self.carrier, self.basis_tag.clone())?;
        let _ = out.inverse.set(Some(self.matrix.clone()));
        Ok(out)
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    /// `self^2 = id` (the identity included).
    pub fn squares_to_identity(&self) -> bool {
        self.square().is_identity()
    }

    /// Order exactly two.
    pub fn is_involution(&self) -> bool {
        !self.is_identity() && self.squares_to_identity()
    }

    pub fn require_order_two(&self) -> Result<()> {
        if self.squares_to_identity() {
            Ok(())
        } else {
            Err(Error::NotOrderTwo)
        }
    }

    pub fn commutes_with(&self, other: &LinMap) -> bool {
        self.carrier == other.carrier
            && self.matrix.mul(&other.matrix) == other.matrix.mul(&self.matrix)
    }

    /// Basis of the `lambda`-eigenspace.
    pub fn eigenspace(&self, lambda: &Scalar) -> Vec<Vec<Scalar>> {
        let shifted = self
            .matrix
            .sub(&Matrix::identity(self.field(), self.dim()).scale(lambda));
        shifted.kernel()
    }

    pub fn fixed_space(&self) -> Vec<Vec<Scalar>> {
        self.eigenspace(&self.field().one())
    }

    /// Span of the images of `vectors`.
    pub fn image_of(&self, vectors: &[Vec<Scalar>]) -> Subspace {
        let images: Vec<Vec<Scalar>> = vectors.iter().map(|v| self.apply(v)).collect();
        Subspace::span(self.field(), self.dim(), &images)
    }

    pub fn transpose(&self) -> LinMap {
        LinMap::new(self.matrix.transpose(), self.carrier, self.basis_tag.clone())
            .expect("same shape")
    }
}
