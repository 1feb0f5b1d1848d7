//! Concrete maps: octonion automorphisms, their lifts to `J`, the type II
//! map `s`, the Tits-model `θ`, torus elements and the `U_V` bridge.

use crate::albert::{AlbertCoords, CubicJordan, HerElem, HermitianAlbert, TitsAlbert, TitsElem};
use crate::albert::tits::m3_transpose;
use crate::cda::{CdAlgebra, CompElem};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::linmap::{Carrier, LinMap};
use crate::scalar::{FieldSpec, Sampler, Scalar};

const OCT_DIM: usize = 8;

/// Unit-preserving and multiplicative on all basis pairs, and invertible.
pub fn is_oct_automorphism(oct: &CdAlgebra, phi: &LinMap) -> Result<bool> {
    phi.require_carrier(Carrier::OctonionSpace)?;
    if oct.dim() != OCT_DIM {
        return Err(Error::CarrierMismatch {
            expected: OCT_DIM,
            actual: oct.dim(),
        });
    }
    if phi.apply(&oct.unit_coords()) != oct.unit_coords() {
        return Ok(false);
    }
    let images: Vec<Vec<Scalar>> = (0..OCT_DIM).map(|i| phi.matrix().column(i)).collect();
    let basis: Vec<CompElem> = oct.basis();
    for i in 0..OCT_DIM {
        for k in 0..OCT_DIM {
            let lhs = phi.apply(&oct.mul_coords(basis[i].coords(), basis[k].coords()));
            if lhs != oct.mul_coords(&images[i], &images[k]) {
                return Ok(false);
            }
        }
    }
    Ok(phi.is_invertible())
}

fn require_octonions(oct: &CdAlgebra) -> Result<()> {
    if oct.dim() == OCT_DIM {
        Ok(())
    } else {
        Err(Error::CarrierMismatch {
            expected: OCT_DIM,
            actual: oct.dim(),
        })
    }
}

/// `f_p(a1, a2) = (a1, p a2)` for `p` in the quaternion base with `q(p) = 1`.
pub fn make_t(oct: &CdAlgebra, p: &CompElem) -> Result<LinMap> {
    require_octonions(oct)?;
    if p.algebra() != oct {
        return Err(Error::AlgebraMismatch("p lives in another algebra".into()));
    }
    if p.coords()[4..].iter().any(|c| !c.is_zero()) {
        return Err(Error::AlgebraMismatch("p must lie in the quaternion base".into()));
    }
    if !p.qnorm().is_one() {
        return Err(Error::NotUnitNorm);
    }
    let pc = p.coords().to_vec();
    Ok(LinMap::from_fn(oct.field(), Carrier::OctonionSpace, |v| {
        let mut out = v[..4].to_vec();
        out.extend(quat_mul(oct, &pc[..4], &v[4..]));
        out
    })
    .with_tag("oct:f_p"))
}

/// Product in the quaternion base, read off from octonion products of
/// first-copy elements.
fn quat_mul(oct: &CdAlgebra, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let f = oct.field();
    let pad = |v: &[Scalar]| {
        let mut w = v.to_vec();
        w.resize(OCT_DIM, f.zero());
        w
    };
    oct.mul_coords(&pad(x), &pad(y))[..4].to_vec()
}

/// The canonical type I map `t = f_{-e}`, negating the second doubling copy.
pub fn make_t_canonical(oct: &CdAlgebra) -> Result<LinMap> {
    let minus_e = oct.unit().scale(&-oct.field().one());
    Ok(make_t(oct, &minus_e)?.with_tag("oct:t"))
}

/// `diag(1, ην, (ην)^-1, 1, ν^-1, η, η^-1, ν)`, realized as
/// `(a1, a2) -> (g a1 g^-1, h a2 g^-1)` with `g = diag(ην, 1)` and
/// `h = diag(η, ν)` in the `M_2(k)` base.
pub fn g2_torus(oct: &CdAlgebra, eta: &Scalar, nu: &Scalar) -> Result<LinMap> {
    require_octonions(oct)?;
    if !oct.split_quaternion_base() {
        return Err(Error::ModelMismatch(
            "the torus needs the M_2(k) quaternion base".into(),
        ));
    }
    let f = oct.field();
    if eta.is_zero() || nu.is_zero() {
        return Err(Error::ZeroParameter);
    }
    let en = eta * nu;
    let diag = vec![
        f.one(),
        en.clone(),
        en.inv()?,
        f.one(),
        nu.inv()?,
        eta.clone(),
        eta.inv()?,
        nu.clone(),
    ];
    let m = Matrix::diagonal(f, &diag);
    let t = LinMap::new(m, Carrier::OctonionSpace, "oct:torus")?;
    debug_assert!(is_oct_automorphism(oct, &t).unwrap_or(false));
    Ok(t)
}

/// The anti-diagonal pair of 4x4 blocks. Tried first in the default basis;
/// otherwise the first pair of within-block permutations (in lexicographic
/// order) for which the conjugated matrix is an order-two automorphism.
pub fn make_t_star(oct: &CdAlgebra) -> Result<LinMap> {
    require_octonions(oct)?;
    let f = oct.field();
    let perms = permutations4();
    let mut log = Vec::new();
    for p1 in &perms {
        for p2 in &perms {
            let sigma: Vec<usize> = p1.iter().copied().chain(p2.iter().map(|i| i + 4)).collect();
            // antidiagonal in the permuted basis: e_{σ(i)} -> e_{σ(block_rev(i))}
            let mut m = Matrix::zeros(f, OCT_DIM, OCT_DIM);
            for i in 0..OCT_DIM {
                let j = (i / 4) * 4 + (3 - i % 4);
                m[(sigma[j], sigma[i])] = f.one();
            }
            let map = LinMap::new(m, Carrier::OctonionSpace, "oct:t*")?;
            if map.is_involution() && is_oct_automorphism(oct, &map)? {
                return Ok(map.with_tag(format!("oct:t*:perm={p1:?};{p2:?}")));
            }
            log.push(format!("{p1:?};{p2:?}"));
        }
    }
    Err(Error::NoValidOrdering(format!(
        "no ordering of {} works; tried {}",
        oct.descriptor(),
        log.join(" ")
    )))
}

fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    let mut seen = [false; 4];
                    if p.iter().all(|&i| !std::mem::replace(&mut seen[i], true)) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

/// `t^(ξ; a, b, c) = (ξ; t a, t b, t c)` for an octonion automorphism `t`.
pub fn lift_c_to_j(j: &HermitianAlbert, t: &LinMap) -> Result<LinMap> {
    if !is_oct_automorphism(j.octonions(), t)? {
        return Err(Error::NotAutomorphism("map is not in Aut(C)".into()));
    }
    Ok(j.linmap(|x| {
        let mut v = x.xi().to_vec();
        v.extend(t.apply(x.a()));
        v.extend(t.apply(x.b()));
        v.extend(t.apply(x.c()));
        HerElem::from_coords_unchecked(v)
    })
    .with_tag("her:lift"))
}

/// The type II map `s = U_{S'}` with `S' = diag(1, -1, -1)`; it acts as
/// `h(ξ; a, b, c) -> h(ξ; a, -b, -c)`.
pub fn make_s(j: &HermitianAlbert) -> LinMap {
    j.uop(&j.diag_ints([1, -1, -1])).with_tag("her:s")
}

/// `θ(a0, a1, a2) = (a0ᵀ, a2ᵀ, a1ᵀ)` on `J(Mat_3(k), 1)`.
pub fn make_theta_tits(j: &TitsAlbert) -> Result<LinMap> {
    if !j.varsigma().is_one() {
        return Err(Error::ModelMismatch("theta needs varsigma = 1".into()));
    }
    Ok(j.linmap(|x| {
        let mut v = Vec::with_capacity(27);
        v.extend(m3_transpose(x.part(0)));
        v.extend(m3_transpose(x.part(2)));
        v.extend(m3_transpose(x.part(1)));
        TitsElem::from_coords_unchecked(v)
    })
    .with_tag("tits:theta"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TorusLevel {
    G2,
    F4,
    E6,
}

impl TorusLevel {
    pub fn arity(self) -> usize {
        match self {
            TorusLevel::G2 => 2,
            TorusLevel::F4 => 4,
            TorusLevel::E6 => 6,
        }
    }
}

fn unimodular_diag(f: FieldSpec, a: &Scalar, b: &Scalar) -> Result<Matrix> {
    let c = (a * b).inv()?;
    Ok(Matrix::diagonal(f, &[a.clone(), b.clone(), c]))
}

/// Torus elements of the split groups. `G2` gives [`g2_torus`] on the split
/// octonions; `F4` gives `φ(u, u, v)` and `E6` gives `φ(u, v, w)` on the
/// split Tits model, with `u = diag(u1, u2, (u1 u2)^-1)` and so on.
pub fn make_torus_element(field: FieldSpec, params: &[Scalar], level: TorusLevel) -> Result<LinMap> {
    if params.len() != level.arity() {
        return Err(Error::ArityMismatch {
            expected: level.arity(),
            actual: params.len(),
        });
    }
    if let Some(p) = params.iter().find(|p| p.field() != field) {
        return Err(Error::MixedFields(field.to_string(), p.field().to_string()));
    }
    if params.iter().any(Scalar::is_zero) {
        return Err(Error::ZeroParameter);
    }
    match level {
        TorusLevel::G2 => g2_torus(&CdAlgebra::split_octonions(field)?, &params[0], &params[1]),
        TorusLevel::F4 | TorusLevel::E6 => {
            let j = TitsAlbert::split(field)?;
            let u = unimodular_diag(field, &params[0], &params[1])?;
            let v = unimodular_diag(field, &params[2], &params[3])?;
            let (a, b, c) = if level == TorusLevel::F4 {
                (u.clone(), u, v)
            } else {
                let w = unimodular_diag(field, &params[4], &params[5])?;
                (u, v, w)
            };
            Ok(j.tits_phi(&a, &b, &c)?.with_tag("tits:torus"))
        }
    }
}

/// The lexicographically first `v ∈ {-1, 0, 1}^8` with `q(v) = -1` and
/// `<v, e> = 0`, so that `v^2 = e` and `conj(v) = -v`.
pub fn find_v(oct: &CdAlgebra) -> Result<CompElem> {
    require_octonions(oct)?;
    let f = oct.field();
    let e = oct.unit_coords();
    let minus_one = -f.one();
    for n in 0..3usize.pow(8) {
        let mut k = n;
        let mut v = vec![f.zero(); OCT_DIM];
        for slot in (0..OCT_DIM).rev() {
            v[slot] = f.int((k % 3) as i64 - 1);
            k /= 3;
        }
        if oct.qnorm_coords(&v) == minus_one && oct.bilin_coords(&v, &e).is_zero() {
            return oct.elem(v);
        }
    }
    Err(Error::NoSuchV)
}

/// `V = h(1, 0, 0; v, 0, 0)`, with `N(V) = 1` and `V^2 = diag(1, -1, -1)`.
pub fn uv_element(j: &HermitianAlbert) -> Result<HerElem> {
    if !j.gamma_is_identity() {
        return Err(Error::ModelMismatch("the bridge needs gamma = id".into()));
    }
    let f = j.field();
    let v = find_v(j.octonions())?;
    let z = vec![f.zero(); OCT_DIM];
    j.h([f.one(), f.zero(), f.zero()], v.coords(), &z, &z)
}

/// `U_V`, whose square is [`make_s`].
pub fn make_uv_bridge(j: &HermitianAlbert) -> Result<LinMap> {
    Ok(j.uop(&uv_element(j)?).with_tag("her:U_V"))
}

/// `X -> P X Pᵀ` for an orthogonal scalar matrix `P` (`P Pᵀ = 1`), an
/// automorphism of `Her_3(C)` with `γ = id`.
pub fn orthogonal_conjugation(j: &HermitianAlbert, p: &Matrix) -> Result<LinMap> {
    if !j.gamma_is_identity() {
        return Err(Error::ModelMismatch("orthogonal conjugation needs gamma = id".into()));
    }
    if p.rows() != 3 || p.cols() != 3 || !p.mul(&p.transpose()).is_identity() {
        return Err(Error::NotAutomorphism("P is not orthogonal".into()));
    }
    let o = j.octonions().clone();
    let f = j.field();
    Ok(j.linmap(|x| {
        let scal = |s: &Scalar| o.unit().scale(s).into_coords();
        let (a, b, c) = (x.a().to_vec(), x.b().to_vec(), x.c().to_vec());
        let entry = |r: usize, col: usize| -> Vec<Scalar> {
            match (r, col) {
                (r, col) if r == col => scal(&x.xi()[r]),
                (1, 2) => a.clone(),
                (2, 1) => o.conj_coords(&a),
                (2, 0) => b.clone(),
                (0, 2) => o.conj_coords(&b),
                (0, 1) => c.clone(),
                _ => o.conj_coords(&c),
            }
        };
        let y = |r: usize, col: usize| -> Vec<Scalar> {
            let mut acc = vec![f.zero(); OCT_DIM];
            for k in 0..3 {
                for l in 0..3 {
                    let s = &p[(r, k)] * &p[(col, l)];
                    if s.is_zero() {
                        continue;
                    }
                    for (t, e) in acc.iter_mut().zip(entry(k, l)) {
                        *t = &*t + &(&s * &e);
                    }
                }
            }
            acc
        };
        let mut v: Vec<Scalar> = (0..3).map(|i| y(i, i)[0].clone()).collect();
        v.extend(y(1, 2));
        v.extend(y(2, 0));
        v.extend(y(0, 1));
        HerElem::from_coords_unchecked(v)
    })
    .with_tag("her:orthogonal"))
}

/// Rotation by the rational point `((1 - t^2)/(1 + t^2), 2t/(1 + t^2))` in
/// the `(i, k)` coordinate plane, or `None` when `1 + t^2 = 0`.
fn rotation(f: FieldSpec, i: usize, k: usize, t: &Scalar) -> Option<Matrix> {
    let d = (&f.one() + &(t * t)).inv().ok()?;
    let c = &(&f.one() - &(t * t)) * &d;
    let s = &(&f.int(2) * t) * &d;
    let mut m = Matrix::identity(f, 3);
    m[(i, i)] = c.clone();
    m[(k, k)] = c;
    m[(i, k)] = -&s;
    m[(k, i)] = s;
    Some(m)
}

/// A random element of `Aut(J)` for `γ = id`: a product of orthogonal
/// conjugations, lifted quaternion maps `f_p` with `det p = 1` and lifted
/// torus elements.
pub fn random_automorphism(j: &HermitianAlbert, sampler: &mut Sampler) -> Result<LinMap> {
    let f = j.field();
    let oct = j.octonions().clone();
    let mut g = LinMap::identity(f, Carrier::AlbertSpace);
    for (i, k) in [(0, 1), (0, 2), (1, 2)] {
        let t = sampler.scalar();
        if let Some(r) = rotation(f, i, k, &t) {
            g = orthogonal_conjugation(j, &r)?.then_after(&g);
        }
    }
    // p = [[a, b], [c, d]] with ad - bc = 1
    let a = sampler.nonzero();
    let (b, c) = (sampler.scalar(), sampler.scalar());
    let d = (&f.one() + &(&b * &c)).checked_div(&a)?;
    let mut p = vec![a, b, c, d];
    p.resize(OCT_DIM, f.zero());
    let fp = make_t(&oct, &oct.elem(p)?)?;
    g = lift_c_to_j(j, &fp)?.then_after(&g);
    if oct.split_quaternion_base() {
        let tor = g2_torus(&oct, &sampler.nonzero(), &sampler.nonzero())?;
        g = lift_c_to_j(j, &tor)?.then_after(&g);
    }
    let t = sampler.scalar();
    if let Some(r) = rotation(f, 0, 2, &t) {
        g = orthogonal_conjugation(j, &r)?.then_after(&g);
    }
    Ok(g.with_tag("her:random_aut"))
}
