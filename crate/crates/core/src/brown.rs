//! The Brown algebra `B(J, ζ)` of 2x2 blocks `[[α, j], [l, β]]` with
//! `α, β` scalars and `j, l` in an Albert algebra `J`:
//!
//! ```text
//! [α1 j1; l1 β1][α2 j2; l2 β2] =
//!   [α1α2 + ζT(j1,l2)           α1 j2 + β2 j1 + ζ(l1 # l2)]
//!   [β1 l2 + α2 l1 + (j1 # j2)  β1β2 + ζT(j2,l1)          ]
//! ```
//!
//! with involution `[α j; l β] -> [β j; l α]`. Coordinates are
//! `(α, β, j, l)`, 56 in total.

use crate::albert::{AlbertCoords, CubicJordan, ALBERT_DIM};
use crate::error::{Error, Result};
use crate::invol::{self, JContext};
use crate::linalg::{Matrix, Subspace};
use crate::linmap::{Carrier, LinMap};
use crate::scalar::{FieldSpec, Scalar};

pub const BROWN_DIM: usize = 2 + 2 * ALBERT_DIM;

pub(crate) const J_BLOCK: std::ops::Range<usize> = 2..29;
pub(crate) const L_BLOCK: std::ops::Range<usize> = 29..56;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrownElem<E> {
    pub alpha: Scalar,
    pub beta: Scalar,
    pub j: E,
    pub l: E,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BrownType {
    Type1,
    Type2,
}

#[derive(Clone, Debug)]
pub struct BrownAlgebra<J: CubicJordan> {
    jordan: J,
    zeta: Scalar,
}

impl<J: CubicJordan> BrownAlgebra<J> {
    pub fn new(jordan: J, zeta: Scalar) -> Result<Self> {
        if zeta.field() != jordan.field() {
            return Err(Error::MixedFields(
                jordan.field().to_string(),
                zeta.field().to_string(),
            ));
        }
        if zeta.is_zero() {
            return Err(Error::ZeroMultiplier);
        }
        Ok(Self { jordan, zeta })
    }

    /// `ζ = 1`.
    pub fn split(jordan: J) -> Self {
        let one = jordan.field().one();
        Self { jordan, zeta: one }
    }

    pub fn jordan(&self) -> &J {
        &self.jordan
    }

    pub fn zeta(&self) -> &Scalar {
        &self.zeta
    }

    pub fn field(&self) -> FieldSpec {
        self.jordan.field()
    }

    pub fn elem(&self, alpha: Scalar, beta: Scalar, j: J::Elem, l: J::Elem) -> BrownElem<J::Elem> {
        BrownElem { alpha, beta, j, l }
    }

    pub fn to_coords(&self, x: &BrownElem<J::Elem>) -> Vec<Scalar> {
        let mut v = Vec::with_capacity(BROWN_DIM);
        v.push(x.alpha.clone());
        v.push(x.beta.clone());
        v.extend_from_slice(x.j.coords());
        v.extend_from_slice(x.l.coords());
        v
    }

    pub fn from_coords(&self, v: &[Scalar]) -> Result<BrownElem<J::Elem>> {
        if v.len() != BROWN_DIM {
            return Err(Error::CarrierMismatch {
                expected: BROWN_DIM,
                actual: v.len(),
            });
        }
        Ok(BrownElem {
            alpha: v[0].clone(),
            beta: v[1].clone(),
            j: self.jordan.elem(v[J_BLOCK].to_vec())?,
            l: self.jordan.elem(v[L_BLOCK].to_vec())?,
        })
    }

    fn unpack(&self, v: &[Scalar]) -> BrownElem<J::Elem> {
        BrownElem {
            alpha: v[0].clone(),
            beta: v[1].clone(),
            j: J::Elem::from_coords_unchecked(v[J_BLOCK].to_vec()),
            l: J::Elem::from_coords_unchecked(v[L_BLOCK].to_vec()),
        }
    }

    pub fn unit(&self) -> BrownElem<J::Elem> {
        let f = self.field();
        self.elem(f.one(), f.one(), self.jordan.zero(), self.jordan.zero())
    }

    pub fn zero(&self) -> BrownElem<J::Elem> {
        let f = self.field();
        self.elem(f.zero(), f.zero(), self.jordan.zero(), self.jordan.zero())
    }

    /// `s0 = (1, -1, 0, 0)`, spanning the skew elements.
    pub fn s0(&self) -> BrownElem<J::Elem> {
        let f = self.field();
        self.elem(f.one(), -f.one(), self.jordan.zero(), self.jordan.zero())
    }

    pub fn bmul(&self, x: &BrownElem<J::Elem>, y: &BrownElem<J::Elem>) -> BrownElem<J::Elem> {
        let jd = &self.jordan;
        let z = &self.zeta;
        let alpha = &(&x.alpha * &y.alpha) + &(z * &jd.trform(&x.j, &y.l));
        let beta = &(&x.beta * &y.beta) + &(z * &jd.trform(&y.j, &x.l));
        let j = jd.add(
            &jd.add(&jd.scale(&x.alpha, &y.j), &jd.scale(&y.beta, &x.j)),
            &jd.scale(z, &jd.cross(&x.l, &y.l)),
        );
        let l = jd.add(
            &jd.add(&jd.scale(&x.beta, &y.l), &jd.scale(&y.alpha, &x.l)),
            &jd.cross(&x.j, &y.j),
        );
        BrownElem { alpha, beta, j, l }
    }

    /// Product that first checks both operands live over this algebra's field.
    pub fn try_bmul(
        &self,
        x: &BrownElem<J::Elem>,
        y: &BrownElem<J::Elem>,
    ) -> Result<BrownElem<J::Elem>> {
        let f = self.field();
        for v in [self.to_coords(x), self.to_coords(y)] {
            if let Some(bad) = v.iter().find(|s| s.field() != f) {
                return Err(Error::AlgebraMismatch(format!(
                    "element over {} used in a Brown algebra over {f}",
                    bad.field()
                )));
            }
        }
        Ok(self.bmul(x, y))
    }

    pub fn bmul_coords(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.to_coords(&self.bmul(&self.unpack(x), &self.unpack(y)))
    }

    pub fn binv(&self, x: &BrownElem<J::Elem>) -> BrownElem<J::Elem> {
        BrownElem {
            alpha: x.beta.clone(),
            beta: x.alpha.clone(),
            j: x.j.clone(),
            l: x.l.clone(),
        }
    }

    pub fn linmap(&self, f: impl Fn(&BrownElem<J::Elem>) -> BrownElem<J::Elem>) -> LinMap {
        LinMap::from_fn(self.field(), Carrier::BrownSpace, |v| {
            self.to_coords(&f(&self.unpack(v)))
        })
        .with_tag(format!("brown:{}", self.jordan.model_name()))
    }

    pub fn binv_map(&self) -> LinMap {
        self.linmap(|x| self.binv(x))
    }

    /// Basis of `{x : binv(x) = -x}`.
    pub fn skew_space(&self) -> Vec<Vec<Scalar>> {
        self.binv_map().eigenspace(&-self.field().one())
    }

    /// Type 1 when `s0^2` is a square multiple of the unit.
    pub fn type_of(&self) -> BrownType {
        let s0 = self.s0();
        let sq = self.bmul(&s0, &s0);
        let lambda = sq.alpha.clone();
        let scalar = self.unit();
        let is_scalar = sq
            == BrownElem {
                alpha: lambda.clone(),
                beta: lambda.clone(),
                ..scalar
            };
        if is_scalar && self.field().is_square(&lambda).unwrap_or(false) {
            BrownType::Type1
        } else {
            BrownType::Type2
        }
    }

    /// `ϖ(α, β, j, l) = (β, α, l, j)`.
    pub fn varpi(&self) -> LinMap {
        self.linmap(|x| BrownElem {
            alpha: x.beta.clone(),
            beta: x.alpha.clone(),
            j: x.l.clone(),
            l: x.j.clone(),
        })
        .with_tag("brown:varpi")
    }

    /// `(α, β, j, l) -> (α, β, φ j, ψ l)`.
    pub fn block_lift(&self, phi: &LinMap, psi: &LinMap) -> Result<LinMap> {
        phi.require_carrier(Carrier::AlbertSpace)?;
        psi.require_carrier(Carrier::AlbertSpace)?;
        let f = self.field();
        let mut m = Matrix::zeros(f, BROWN_DIM, BROWN_DIM);
        m[(0, 0)] = f.one();
        m[(1, 1)] = f.one();
        for r in 0..ALBERT_DIM {
            for c in 0..ALBERT_DIM {
                m[(2 + r, 2 + c)] = phi.matrix()[(r, c)].clone();
                m[(29 + r, 29 + c)] = psi.matrix()[(r, c)].clone();
            }
        }
        LinMap::new(m, Carrier::BrownSpace, "brown:lift")
    }

    /// `φ^(α, β, j, l) = (α, β, φ j, φ l)` for `φ ∈ Aut(J)`.
    pub fn lift_aut(&self, phi: &LinMap) -> Result<LinMap> {
        let ctx = JContext::new(self.jordan.clone());
        if !ctx.is_aut_member(phi)? {
            return Err(Error::NotAutomorphism("map is not in Aut(J)".into()));
        }
        self.block_lift(phi, phi)
    }

    /// `φ^(α, β, j, l) = (α, β, φ j, φ† l)` for `φ ∈ Inv(J)`.
    pub fn lift_inv(&self, phi: &LinMap) -> Result<LinMap> {
        let ctx = JContext::new(self.jordan.clone());
        self.lift_inv_with(&ctx, phi)
    }

    /// [`Self::lift_inv`] reusing a prepared context.
    pub fn lift_inv_with(&self, ctx: &JContext<J>, phi: &LinMap) -> Result<LinMap> {
        let dag = ctx.dagger(phi)?;
        self.block_lift(phi, &dag)
    }

    /// Whether `map(x y) = map(x) map(y)` on all pairs of basis vectors.
    pub fn preserves_product(&self, map: &LinMap) -> bool {
        if map.carrier() != Carrier::BrownSpace {
            return false;
        }
        let f = self.field();
        let basis: Vec<Vec<Scalar>> = (0..BROWN_DIM)
            .map(|i| {
                let mut v = vec![f.zero(); BROWN_DIM];
                v[i] = f.one();
                v
            })
            .collect();
        let images: Vec<Vec<Scalar>> = (0..BROWN_DIM).map(|i| map.matrix().column(i)).collect();
        for i in 0..BROWN_DIM {
            for k in i..BROWN_DIM {
                let lhs = map.apply(&self.bmul_coords(&basis[i], &basis[k]));
                if lhs != self.bmul_coords(&images[i], &images[k]) {
                    return false;
                }
                let lhs = map.apply(&self.bmul_coords(&basis[k], &basis[i]));
                if lhs != self.bmul_coords(&images[k], &images[i]) {
                    return false;
                }
            }
        }
        true
    }

    pub fn commutes_with_binv(&self, map: &LinMap) -> bool {
        map.commutes_with(&self.binv_map())
    }

    /// Basis of `{(α, α, φ1 j, φ2 j)}`, after checking that `φ1, φ2` are
    /// commuting automorphisms of order dividing two, and that the span is
    /// closed under the product and the involution.
    pub fn commuting_pair_subalgebra(&self, phi1: &LinMap, phi2: &LinMap) -> Result<Vec<Vec<Scalar>>> {
        phi1.require_carrier(Carrier::AlbertSpace)?;
        phi2.require_carrier(Carrier::AlbertSpace)?;
        phi1.require_order_two()?;
        phi2.require_order_two()?;
        if !phi1.commutes_with(phi2) {
            return Err(Error::NotCommuting);
        }
        let ctx = JContext::new(self.jordan.clone());
        for phi in [phi1, phi2] {
            if !ctx.is_aut_member(phi)? {
                return Err(Error::NotAutomorphism("map is not in Aut(J)".into()));
            }
        }
        let f = self.field();
        let mut basis = Vec::with_capacity(1 + ALBERT_DIM);
        let mut unit = vec![f.zero(); BROWN_DIM];
        unit[0] = f.one();
        unit[1] = f.one();
        basis.push(unit);
        for i in 0..ALBERT_DIM {
            let mut v = vec![f.zero(); BROWN_DIM];
            for r in 0..ALBERT_DIM {
                v[2 + r] = phi1.matrix()[(r, i)].clone();
                v[29 + r] = phi2.matrix()[(r, i)].clone();
            }
            basis.push(v);
        }
        let closure = invol::closure_report(self, &basis);
        if !closure.closed || closure.involution_stable != Some(true) {
            return Err(Error::NotAutomorphism(
                "span is not a Brown subalgebra".into(),
            ));
        }
        Ok(Subspace::span(f, BROWN_DIM, &basis).basis().to_vec())
    }

    pub fn to_json(&self, x: &BrownElem<J::Elem>) -> serde_json::Value
    where
        J: JsonAlbert,
    {
        serde_json::json!({
            "alpha": x.alpha.to_string(),
            "beta": x.beta.to_string(),
            "j": self.jordan.elem_to_json(&x.j),
            "l": self.jordan.elem_to_json(&x.l),
            "zeta": self.zeta.to_string(),
        })
    }

    pub fn from_json(&self, v: &serde_json::Value) -> Result<BrownElem<J::Elem>>
    where
        J: JsonAlbert,
    {
        let f = self.field();
        let scalar = |name: &str| -> Result<Scalar> {
            match v.get(name) {
                Some(serde_json::Value::String(s)) => f.parse_scalar(s),
                Some(serde_json::Value::Number(n)) => f.parse_scalar(&n.to_string()),
                _ => Err(Error::Parse(format!("missing scalar {name:?}"))),
            }
        };
        if v.get("zeta").is_some() && scalar("zeta")? != self.zeta {
            return Err(Error::AlgebraMismatch("zeta differs from the algebra's".into()));
        }
        let part = |name: &str| -> Result<J::Elem> {
            let p = v
                .get(name)
                .ok_or_else(|| Error::Parse(format!("missing element {name:?}")))?;
            self.jordan.elem_from_json(p)
        };
        Ok(BrownElem {
            alpha: scalar("alpha")?,
            beta: scalar("beta")?,
            j: part("j")?,
            l: part("l")?,
        })
    }
}

/// Albert models with a JSON encoding.
pub trait JsonAlbert: CubicJordan {
    fn elem_to_json(&self, x: &Self::Elem) -> serde_json::Value;
    fn elem_from_json(&self, v: &serde_json::Value) -> Result<Self::Elem>;
}

impl JsonAlbert for crate::albert::HermitianAlbert {
    fn elem_to_json(&self, x: &Self::Elem) -> serde_json::Value {
        self.to_json(x)
    }

    fn elem_from_json(&self, v: &serde_json::Value) -> Result<Self::Elem> {
        self.from_json(v)
    }
}

impl JsonAlbert for crate::albert::TitsAlbert {
    fn elem_to_json(&self, x: &Self::Elem) -> serde_json::Value {
        self.to_json(x)
    }

    fn elem_from_json(&self, v: &serde_json::Value) -> Result<Self::Elem> {
        self.from_json(v)
    }
}
