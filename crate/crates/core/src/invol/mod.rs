//! Linear maps on `J` and `B`: membership in `Inv(J)` and `Aut(J)`, the
//! dagger automorphism, the catalog of order-two maps, fixed subalgebras,
//! eigenspace gradings and conjugation.

use std::sync::OnceLock;

use crate::albert::{AlbertCoords, CubicJordan, ALBERT_DIM};
use crate::brown::{BrownAlgebra, BROWN_DIM};
use crate::error::{Error, Result};
use crate::linalg::{dot, Matrix, Subspace};
use crate::linmap::{Carrier, LinMap};
use crate::scalar::Scalar;

mod catalog;
mod descriptor;

pub use catalog::{
    find_v, g2_torus, is_oct_automorphism, lift_c_to_j, make_s, make_t, make_t_canonical,
    make_t_star, make_theta_tits, make_torus_element, make_uv_bridge, orthogonal_conjugation,
    random_automorphism, uv_element, TorusLevel,
};
pub use descriptor::{
    fixed_report, Atom, FixedReport, InvolutionDescriptor, Model, Realized, Space,
};

/// An Albert model together with cached data for membership tests: the
/// trace-form Gram matrix and the values `T(e_i # e_j, e_k)`.
#[derive(Debug)]
pub struct JContext<J: CubicJordan> {
    jordan: J,
    gram: OnceLock<Matrix>,
    trilinear: OnceLock<Vec<Scalar>>,
}

fn ordered_triples() -> impl Iterator<Item = (usize, usize, usize)> {
    (0..ALBERT_DIM).flat_map(|i| {
        (i..ALBERT_DIM).flat_map(move |j| (j..ALBERT_DIM).map(move |k| (i, j, k)))
    })
}

impl<J: CubicJordan> JContext<J> {
    pub fn new(jordan: J) -> Self {
        Self {
            jordan,
            gram: OnceLock::new(),
            trilinear: OnceLock::new(),
        }
    }

    pub fn jordan(&self) -> &J {
        &self.jordan
    }

    pub fn gram(&self) -> &Matrix {
        self.gram.get_or_init(|| self.jordan.gram())
    }

    /// `T(φe_i # φe_j, φe_k)` over `i <= j <= k`, where `images[i] = φe_i`.
    fn trilinear_values(&self, images: &[J::Elem]) -> Vec<Scalar> {
        let j = &self.jordan;
        let f = j.field();
        // T(w, φe_k) = w . (G M)[:, k]
        let gm: Vec<Vec<Scalar>> = images.iter().map(|y| self.gram().apply(y.coords())).collect();
        let mut out = Vec::new();
        for a in 0..ALBERT_DIM {
            for b in a..ALBERT_DIM {
                let w = j.cross(&images[a], &images[b]);
                for col in gm.iter().skip(b) {
                    out.push(dot(w.coords(), col, f));
                }
            }
        }
        out
    }

    fn reference_trilinear(&self) -> &[Scalar] {
        self.trilinear
            .get_or_init(|| self.trilinear_values(&self.jordan.basis()))
    }

    fn images(&self, phi: &LinMap) -> Vec<J::Elem> {
        (0..ALBERT_DIM)
            .map(|i| J::Elem::from_coords_unchecked(phi.matrix().column(i)))
            .collect()
    }

    /// Exact test for `N(φx) = N(x)` for all `x`.
    ///
    /// The cubic norm is determined by its full polarization
    /// `N(x, y, z) = T(x # y, z)` (the characteristic is not 2 or 3), so it
    /// suffices to compare that trilinear form on all basis triples.
    pub fn is_inv_member(&self, phi: &LinMap) -> Result<bool> {
        phi.require_carrier(Carrier::AlbertSpace)?;
        if !phi.is_invertible() {
            return Ok(false);
        }
        debug_assert_eq!(ordered_triples().count(), self.reference_trilinear().len());
        Ok(self.trilinear_values(&self.images(phi)) == self.reference_trilinear())
    }

    /// `φ(e) = e` and `φ(x.y) = φ(x).φ(y)` on all basis pairs.
    pub fn is_aut_member(&self, phi: &LinMap) -> Result<bool> {
        phi.require_carrier(Carrier::AlbertSpace)?;
        let j = &self.jordan;
        if j.apply(phi, &j.unit()) != j.unit() {
            return Ok(false);
        }
        let basis = j.basis();
        let images = self.images(phi);
        for a in 0..ALBERT_DIM {
            for b in a..ALBERT_DIM {
                let lhs = j.apply(phi, &j.jmul(&basis[a], &basis[b]));
                if lhs != j.jmul(&images[a], &images[b]) {
                    return Ok(false);
                }
            }
        }
        Ok(phi.is_invertible())
    }

    /// The map `φ†` with `T(φx, φ†y) = T(x, y)`, i.e. `Mᵀ G D = G`.
    pub fn dagger(&self, phi: &LinMap) -> Result<LinMap> {
        if !self.is_inv_member(phi)? {
            return Err(Error::NotNormPreserving);
        }
        self.dagger_of_member(phi)
    }

    /// [`Self::dagger`] without the membership check, for maps already known
    /// to lie in `Inv(J)`.
    pub fn dagger_of_member(&self, phi: &LinMap) -> Result<LinMap> {
        let g = self.gram();
        let mtg = phi.matrix().transpose().mul(g);
        let d = mtg.solve(g).map_err(|_| {
            if g.rank() < ALBERT_DIM {
                Error::SingularGram
            } else {
                Error::NotNormPreserving
            }
        })?;
        LinMap::new(d, Carrier::AlbertSpace, phi.basis_tag())
    }

    /// `φ δ φ = δ†`, the condition for `δ` to commute with the outer
    /// involution `φϖ`.
    pub fn outer_fixed_condition(&self, delta: &LinMap, phi: &LinMap) -> Result<bool> {
        phi.require_carrier(Carrier::AlbertSpace)?;
        phi.require_order_two()?;
        let dag = self.dagger(delta)?;
        Ok(phi.then_after(delta).then_after(phi) == dag)
    }

    /// Whether `ψ = U_x U_y` (required to have order two) is an automorphism
    /// of the isotope `J<y>`: it fixes the isotope unit `y^-1` and preserves
    /// `a <y> b = {a, y, b}` on all basis pairs.
    pub fn isotope_automorphism_check(&self, x: &J::Elem, y: &J::Elem) -> Result<bool> {
        let j = &self.jordan;
        if j.norm(x).is_zero() || j.norm(y).is_zero() {
            return Err(Error::SingularElement);
        }
        let psi = j.uop(x).then_after(&j.uop(y));
        psi.require_order_two()?;
        let yinv = j.jinverse(y)?;
        if j.apply(&psi, &yinv) != yinv {
            return Ok(false);
        }
        let basis = j.basis();
        let images: Vec<J::Elem> = basis.iter().map(|b| j.apply(&psi, b)).collect();
        for a in 0..ALBERT_DIM {
            for b in a..ALBERT_DIM {
                let lhs = j.apply(&psi, &j.triple(&basis[a], y, &basis[b]));
                if lhs != j.triple(&images[a], y, &images[b]) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Conjugate `g t g^-1` of an order-two map by an automorphism.
    pub fn conjugate_involution(&self, g: &LinMap, t: &LinMap) -> Result<LinMap> {
        if !self.is_aut_member(g)? {
            return Err(Error::NotAutomorphism("conjugating map is not in Aut(J)".into()));
        }
        conjugate(g, t)
    }

    pub fn fixed_subalgebra(&self, phi: &LinMap) -> Result<FixedSubalgebra> {
        phi.require_carrier(Carrier::AlbertSpace)?;
        phi.require_order_two()?;
        let basis = phi.fixed_space();
        let closed = self.jordan.is_jordan_closed(&basis);
        Ok(FixedSubalgebra {
            dim: basis.len(),
            basis,
            closed,
            involution_stable: None,
        })
    }

    /// `J = D ⊕ D⊥` for an order-two map preserving the trace form.
    pub fn grade_decompose(&self, phi: &LinMap) -> Result<GradeDecomposition> {
        grade_decompose(phi, self.gram())
    }

    pub fn jordan_product(&self) -> impl Fn(&[Scalar], &[Scalar]) -> Vec<Scalar> + '_ {
        move |x, y| {
            let j = &self.jordan;
            j.jmul(
                &J::Elem::from_coords_unchecked(x.to_vec()),
                &J::Elem::from_coords_unchecked(y.to_vec()),
            )
            .coords()
            .to_vec()
        }
    }

    /// Whether `φ ∘ U_x = U_{φ(x)} ∘ φ`.
    pub fn intertwines_u(&self, phi: &LinMap, x: &J::Elem) -> bool {
        let j = &self.jordan;
        phi.then_after(&j.uop(x)) == j.uop(&j.apply(phi, x)).then_after(phi)
    }
}

/// `g t g^-1` for invertible `g` and `t^2 = id`.
pub fn conjugate(g: &LinMap, t: &LinMap) -> Result<LinMap> {
    t.require_order_two()?;
    let ginv = g.inverse()?;
    g.compose(t)?.compose(&ginv)
}

/// Whether `g` maps the fixed space of `t` exactly onto that of `t2`.
pub fn verify_conjugacy_transport(g: &LinMap, t: &LinMap, t2: &LinMap) -> Result<bool> {
    t.require_order_two()?;
    t2.require_order_two()?;
    if g.carrier() != t.carrier() || t.carrier() != t2.carrier() {
        return Err(Error::CarrierMismatch {
            expected: t.dim(),
            actual: g.dim().max(t2.dim()),
        });
    }
    let image = g.image_of(&t.fixed_space());
    let target = Subspace::span(t.field(), t.dim(), &t2.fixed_space());
    Ok(image.same_as(&target))
}

#[derive(Debug, Clone)]
pub struct FixedSubalgebra {
    pub dim: usize,
    pub basis: Vec<Vec<Scalar>>,
    /// Closed under the carrier's product.
    pub closed: bool,
    /// Stable under the Brown involution (Brown algebras only).
    pub involution_stable: Option<bool>,
}

#[derive(Debug, Clone)]
pub struct ClosureReport {
    pub closed: bool,
    pub involution_stable: Option<bool>,
}

/// Closure of `span(vectors)` under the Brown product and involution.
pub fn closure_report<J: CubicJordan>(b: &BrownAlgebra<J>, vectors: &[Vec<Scalar>]) -> ClosureReport {
    let span = Subspace::span(b.field(), BROWN_DIM, vectors);
    let basis = span.basis();
    let closed = basis.iter().all(|x| {
        basis
            .iter()
            .all(|y| span.contains(&b.bmul_coords(x, y)))
    });
    let binv = b.binv_map();
    let stable = basis.iter().all(|x| span.contains(&binv.apply(x)));
    ClosureReport {
        closed,
        involution_stable: Some(stable),
    }
}

/// Fixed points of an order-two map on `B`, with closure checks.
pub fn fixed_subalgebra_brown<J: CubicJordan>(
    b: &BrownAlgebra<J>,
    phi: &LinMap,
) -> Result<FixedSubalgebra> {
    phi.require_carrier(Carrier::BrownSpace)?;
    phi.require_order_two()?;
    let basis = phi.fixed_space();
    let report = closure_report(b, &basis);
    Ok(FixedSubalgebra {
        dim: basis.len(),
        basis,
        closed: report.closed,
        involution_stable: report.involution_stable,
    })
}

/// `A = D ⊕ D⊥` into the `+1` and `-1` eigenspaces of an order-two map.
#[derive(Debug, Clone)]
pub struct GradeDecomposition {
    pub plus: Vec<Vec<Scalar>>,
    pub minus: Vec<Vec<Scalar>>,
    ambient: usize,
}

impl GradeDecomposition {
    /// `D.D ⊆ D`, `D.D⊥ ⊆ D⊥` and `D⊥.D⊥ ⊆ D` on all basis pairs.
    pub fn grading_law_holds(&self, mul: impl Fn(&[Scalar], &[Scalar]) -> Vec<Scalar>) -> bool {
        let Some(field) = self.plus.first().or(self.minus.first()).map(|v| v[0].field()) else {
            return true;
        };
        let d = Subspace::span(field, self.ambient, &self.plus);
        let dp = Subspace::span(field, self.ambient, &self.minus);
        let within = |xs: &[Vec<Scalar>], ys: &[Vec<Scalar>], target: &Subspace| {
            xs.iter()
                .all(|x| ys.iter().all(|y| target.contains(&mul(x, y))))
        };
        within(&self.plus, &self.plus, &d)
            && within(&self.plus, &self.minus, &dp)
            && within(&self.minus, &self.minus, &d)
    }

    /// `D⊥` really is orthogonal to `D` for the given Gram matrix.
    pub fn orthogonal(&self, gram: &Matrix) -> bool {
        self.plus.iter().all(|x| {
            let gx = gram.apply(x);
            self.minus
                .iter()
                .all(|y| dot(&gx, y, gram.field()).is_zero())
        })
    }
}

/// Eigenspace splitting of an order-two map preserving the form `gram`.
pub fn grade_decompose(phi: &LinMap, gram: &Matrix) -> Result<GradeDecomposition> {
    phi.require_order_two()?;
    let m = phi.matrix();
    if m.transpose().mul(gram).mul(m) != *gram {
        return Err(Error::FormNotInvariant);
    }
    let f = phi.field();
    Ok(GradeDecomposition {
        plus: phi.fixed_space(),
        minus: phi.eigenspace(&-f.one()),
        ambient: phi.dim(),
    })
}

#[cfg(test)]
mod tests;
