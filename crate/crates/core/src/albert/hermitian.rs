//! γ-Hermitian 3x3 matrices over an octonion algebra.
//!
//! An element is written `h(ξ1, ξ2, ξ3; a, b, c)` with diagonal `ξ`,
//! `X23 = a`, `X31 = b`, `X12 = c`, and the remaining entries determined by
//! `X_ij = γi^-1 γj conj(X_ji)`. Coordinates are `(ξ1, ξ2, ξ3, a, b, c)`
//! with each octonion block in the basis order of [`CdAlgebra`].

use serde_json::{json, Value};

use super::{AlbertCoords, CubicJordan, ALBERT_DIM};
use crate::cda::CdAlgebra;
use crate::error::{Error, Result};
use crate::linmap::LinMap;
use crate::scalar::{FieldSpec, Scalar};

pub(crate) const A: std::ops::Range<usize> = 3..11;
pub(crate) const B: std::ops::Range<usize> = 11..19;
pub(crate) const C: std::ops::Range<usize> = 19..27;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HerElem {
    coords: Vec<Scalar>,
}

impl std::fmt::Debug for HerElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let show = |s: &[Scalar]| s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(
            f,
            "h({}; [{}], [{}], [{}])",
            show(self.xi()),
            show(self.a()),
            show(self.b()),
            show(self.c())
        )
    }
}

impl AlbertCoords for HerElem {
    fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    fn from_coords_unchecked(coords: Vec<Scalar>) -> Self {
        debug_assert_eq!(coords.len(), ALBERT_DIM);
        Self { coords }
    }
}

impl HerElem {
    pub fn xi(&self) -> &[Scalar] {
        &self.coords[0..3]
    }

    pub fn a(&self) -> &[Scalar] {
        &self.coords[A]
    }

    pub fn b(&self) -> &[Scalar] {
        &self.coords[B]
    }

    pub fn c(&self) -> &[Scalar] {
        &self.coords[C]
    }
}

/// `Her_3(C, γ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermitianAlbert {
    oct: CdAlgebra,
    gamma: [Scalar; 3],
    // g_ij = γi^-1 γj for the six ordered pairs used by the product
    g12: Scalar,
    g21: Scalar,
    g13: Scalar,
    g31: Scalar,
    g23: Scalar,
    g32: Scalar,
}

impl HermitianAlbert {
    pub fn new(oct: CdAlgebra, gamma: [Scalar; 3]) -> Result<Self> {
        if oct.dim() != 8 {
            return Err(Error::AlgebraMismatch(format!(
                "Hermitian model needs an octonion algebra, got dimension {}",
                oct.dim()
            )));
        }
        for g in &gamma {
            if g.field() != oct.field() {
                return Err(Error::MixedFields(oct.field().to_string(), g.field().to_string()));
            }
            if g.is_zero() {
                return Err(Error::ZeroMultiplier);
            }
        }
        let g = |i: usize, j: usize| &gamma[i].inv().expect("nonzero") * &gamma[j];
        Ok(Self {
            g12: g(0, 1),
            g21: g(1, 0),
            g13: g(0, 2),
            g31: g(2, 0),
            g23: g(1, 2),
            g32: g(2, 1),
            oct,
            gamma,
        })
    }

    /// `Her_3(C, 1)` over the split octonions.
    pub fn split(field: FieldSpec) -> Result<Self> {
        let oct = CdAlgebra::split_octonions(field)?;
        let one = field.try_int(1)?;
        Self::new(oct, [one.clone(), one.clone(), one])
    }

    pub fn octonions(&self) -> &CdAlgebra {
        &self.oct
    }

    pub fn gamma(&self) -> &[Scalar; 3] {
        &self.gamma
    }

    pub fn gamma_is_identity(&self) -> bool {
        self.gamma.iter().all(Scalar::is_one)
    }

    pub fn h(&self, xi: [Scalar; 3], a: &[Scalar], b: &[Scalar], c: &[Scalar]) -> Result<HerElem> {
        let mut coords: Vec<Scalar> = xi.to_vec();
        for block in [a, b, c] {
            if block.len() != 8 {
                return Err(Error::CarrierMismatch {
                    expected: 8,
                    actual: block.len(),
                });
            }
            coords.extend_from_slice(block);
        }
        self.elem(coords)
    }

    pub fn diag(&self, xi: [Scalar; 3]) -> HerElem {
        let z = vec![self.field().zero(); 8];
        self.h(xi, &z, &z, &z).expect("well formed")
    }

    pub fn diag_ints(&self, xi: [i64; 3]) -> HerElem {
        let f = self.field();
        self.diag([f.int(xi[0]), f.int(xi[1]), f.int(xi[2])])
    }

    fn bil(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        self.oct.bilin_coords(x, y)
    }

    /// Closed-form norm for γ = 1:
    /// `ξ1ξ2ξ3 - ξ1 q(a) - ξ2 q(b) - ξ3 q(c) + <ab, conj(c)>`.
    pub fn norm_closed_form(&self, x: &HerElem) -> Result<Scalar> {
        if !self.gamma_is_identity() {
            return Err(Error::ModelMismatch(
                "closed-form norm is only defined for γ = 1".into(),
            ));
        }
        let o = &self.oct;
        let xi = x.xi();
        let ab = o.mul_coords(x.a(), x.b());
        let cbar = o.conj_coords(x.c());
        Ok(&(&(&(&(&xi[0] * &xi[1]) * &xi[2]) - &(&xi[0] * &o.qnorm_coords(x.a())))
            - &(&(&xi[1] * &o.qnorm_coords(x.b())) + &(&xi[2] * &o.qnorm_coords(x.c()))))
            + &o.bilin_coords(&ab, &cbar))
    }

    /// `φ_λ h(ξ1, ξ2, ξ3; a, b, c) = h(λξ1, λξ2, λ^-1 ξ3; a, b, λc)`, a
    /// norm similarity with multiplier `λ`.
    pub fn phi_lambda(&self, lambda: &Scalar, x: &HerElem) -> Result<HerElem> {
        let inv = lambda.inv().map_err(|_| Error::ZeroMultiplier)?;
        let mut v = x.coords.clone();
        v[0] = lambda * &v[0];
        v[1] = lambda * &v[1];
        v[2] = &inv * &v[2];
        for k in C {
            v[k] = lambda * &v[k];
        }
        Ok(HerElem { coords: v })
    }

    pub fn phi_lambda_map(&self, lambda: &Scalar) -> Result<LinMap> {
        lambda.inv().map_err(|_| Error::ZeroMultiplier)?;
        Ok(self
            .linmap(|x| self.phi_lambda(lambda, x).expect("checked"))
            .with_tag("her:phi_lambda"))
    }

    /// `ν_g`: scales `ξ1` by `g^-4`, `b` and `c` by `g^-1`, and `ξ2`, `ξ3`,
    /// `a` by `g^2`. Preserves the norm and sends `diag(1,0,0)` to
    /// `g^-4 diag(1,0,0)`.
    pub fn nu_g(&self, g: &Scalar, x: &HerElem) -> Result<HerElem> {
        let gi = g.inv().map_err(|_| Error::ZeroMultiplier)?;
        let g2 = g * g;
        let gi4 = (&gi * &gi) * (&gi * &gi);
        let mut v = x.coords.clone();
        v[0] = &gi4 * &v[0];
        v[1] = &g2 * &v[1];
        v[2] = &g2 * &v[2];
        for x in &mut v[A] {
            *x = &g2 * &*x;
        }
        for x in &mut v[B.start..C.end] {
            *x = &gi * &*x;
        }
        Ok(HerElem { coords: v })
    }

    pub fn nu_g_map(&self, g: &Scalar) -> Result<LinMap> {
        g.inv().map_err(|_| Error::ZeroMultiplier)?;
        Ok(self
            .linmap(|x| self.nu_g(g, x).expect("checked"))
            .with_tag("her:nu_g"))
    }

    /// The primitive idempotent `u = diag(1, 0, 0)`.
    pub fn primitive_idempotent(&self) -> HerElem {
        self.diag_ints([1, 0, 0])
    }

    /// Basis of `k u + k (e - u) + E_0`, where `E_0` is the 9-dimensional
    /// space of `h(0, ξ, -ξ; a, 0, 0)`.
    pub fn beth_basis(&self) -> Vec<HerElem> {
        let f = self.field();
        let u = self.primitive_idempotent();
        let mut out = vec![u.clone(), self.sub(&self.unit(), &u), self.diag_ints([0, 1, -1])];
        let z = vec![f.zero(); 8];
        for i in 0..8 {
            let mut a = z.clone();
            a[i] = f.one();
            out.push(self.h([f.zero(), f.zero(), f.zero()], &a, &z, &z).expect("well formed"));
        }
        out
    }

    pub fn to_json(&self, x: &HerElem) -> Value {
        let strs = |s: &[Scalar]| s.iter().map(|c| c.to_string()).collect::<Vec<_>>();
        json!({
            "model": "her",
            "gamma": strs(&self.gamma),
            "xi": strs(x.xi()),
            "a": strs(x.a()),
            "b": strs(x.b()),
            "c": strs(x.c()),
        })
    }

    /// Reads an element; its `gamma` must match this algebra.
    pub fn from_json(&self, v: &Value) -> Result<HerElem> {
        if let Some(m) = v.get("model").and_then(Value::as_str) {
            if m != "her" {
                return Err(Error::ModelMismatch(format!("expected a Hermitian element, got {m:?}")));
            }
        }
        let f = self.field();
        if let Some(g) = v.get("gamma") {
            let g = super::view::scalars_from_json(f, g, 3)?;
            if g != self.gamma {
                return Err(Error::AlgebraMismatch("gamma differs from the algebra's".into()));
            }
        }
        let field = |name: &str, len: usize| -> Result<Vec<Scalar>> {
            let val = v
                .get(name)
                .ok_or_else(|| Error::Parse(format!("missing field {name:?}")))?;
            super::view::scalars_from_json(f, val, len)
        };
        let xi = field("xi", 3)?;
        let mut coords = xi;
        coords.extend(field("a", 8)?);
        coords.extend(field("b", 8)?);
        coords.extend(field("c", 8)?);
        self.elem(coords)
    }
}

impl CubicJordan for HermitianAlbert {
    type Elem = HerElem;

    fn field(&self) -> FieldSpec {
        self.oct.field()
    }

    fn model_name(&self) -> &'static str {
        "her"
    }

    fn unit(&self) -> HerElem {
        self.diag_ints([1, 1, 1])
    }

    fn jmul(&self, x: &HerElem, y: &HerElem) -> HerElem {
        let o = &self.oct;
        let (xi, eta) = (x.xi(), y.xi());
        let (a, b, c) = (x.a(), x.b(), x.c());
        let (a2, b2, c2) = (y.a(), y.b(), y.c());
        let bc = &self.g21 * &self.bil(c, c2);
        let bb = &self.g13 * &self.bil(b, b2);
        let ba = &self.g32 * &self.bil(a, a2);
        let mut out = Vec::with_capacity(ALBERT_DIM);
        out.push(&(&xi[0] * &eta[0]) + &(&bc + &bb).half());
        out.push(&(&xi[1] * &eta[1]) + &(&bc + &ba).half());
        out.push(&(&xi[2] * &eta[2]) + &(&bb + &ba).half());

        let (ac, bc_, cc) = (o.conj_coords(a), o.conj_coords(b), o.conj_coords(c));
        let (ac2, bc2, cc2) = (o.conj_coords(a2), o.conj_coords(b2), o.conj_coords(c2));
        // each off-diagonal block is ½[s u' + s' u + g (p q' + p' q)]
        let mut block = |s: Scalar, u2: &[Scalar], s2: Scalar, u: &[Scalar], g: &Scalar, pq: Vec<Scalar>, pq2: Vec<Scalar>| {
            for i in 0..8 {
                let v = &(&(&s * &u2[i]) + &(&s2 * &u[i])) + &(g * &(&pq[i] + &pq2[i]));
                out.push(v.half());
            }
        };
        block(
            &xi[1] + &xi[2],
            a2,
            &eta[1] + &eta[2],
            a,
            &self.g23,
            o.mul_coords(&cc, &bc2),
            o.mul_coords(&cc2, &bc_),
        );
        block(
            &xi[0] + &xi[2],
            b2,
            &eta[0] + &eta[2],
            b,
            &self.g31,
            o.mul_coords(&ac, &cc2),
            o.mul_coords(&ac2, &cc),
        );
        block(
            &xi[0] + &xi[1],
            c2,
            &eta[0] + &eta[1],
            c,
            &self.g12,
            o.mul_coords(&bc_, &ac2),
            o.mul_coords(&bc2, &ac),
        );
        HerElem { coords: out }
    }

    fn trace(&self, x: &HerElem) -> Scalar {
        let xi = x.xi();
        &(&xi[0] + &xi[1]) + &xi[2]
    }

    fn trform(&self, x: &HerElem, y: &HerElem) -> Scalar {
        let (xi, eta) = (x.xi(), y.xi());
        let diag = &(&(&xi[0] * &eta[0]) + &(&xi[1] * &eta[1])) + &(&xi[2] * &eta[2]);
        let off = &(&(&self.g21 * &self.bil(x.c(), y.c())) + &(&self.g13 * &self.bil(x.b(), y.b())))
            + &(&self.g32 * &self.bil(x.a(), y.a()));
        &diag + &off
    }

    /// `x^# = x^2 - T(x) x + Sr(x) e`.
    fn sharp(&self, x: &HerElem) -> HerElem {
        let x2 = self.jsquare(x);
        let t = self.trace(x);
        let sr = self.sr(x);
        let e = self.unit();
        self.add(&self.sub(&x2, &self.scale(&t, x)), &self.scale(&sr, &e))
    }

    /// `x # y = 2 x.y - T(x) y - T(y) x + (T(x) T(y) - T(x, y)) e`.
    fn cross(&self, x: &HerElem, y: &HerElem) -> HerElem {
        let xy = self.jmul(x, y);
        let (tx, ty) = (self.trace(x), self.trace(y));
        let s = &(&tx * &ty) - &self.trform(x, y);
        let two_xy = self.add(&xy, &xy);
        let r = self.sub(&self.sub(&two_xy, &self.scale(&tx, y)), &self.scale(&ty, x));
        self.add(&r, &self.scale(&s, &self.unit()))
    }
}
