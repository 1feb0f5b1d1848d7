//! Textual names for catalog maps, e.g. `"s"`, `"t*"`, `"t:1,1,1,1,-1,1"`
//! or `"t.varpi"`, and their realization as matrices on `J` or `B`.
//!
//! Atoms joined by `.` are multiplied left to right as matrices, so
//! `"s.varpi"` is `ŝ ∘ ϖ`.

use std::fmt;

use serde_json::{json, Value};

use super::catalog::{
    g2_torus, lift_c_to_j, make_s, make_t_canonical, make_t_star, make_theta_tits,
    make_torus_element, TorusLevel,
};
use super::{fixed_subalgebra_brown, JContext};
use crate::albert::{CubicJordan, HermitianAlbert, TitsAlbert};
use crate::brown::{BrownAlgebra, BROWN_DIM, J_BLOCK, L_BLOCK};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::linmap::{Carrier, LinMap};
use crate::scalar::{FieldSpec, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Atom {
    /// Type II map `U_{diag(1,-1,-1)}` (Hermitian model).
    S,
    /// Lift of `f_{-e}` (Hermitian model).
    T,
    /// Lift of the anti-diagonal octonion map (Hermitian model).
    TStar,
    /// `(α, β, j, l) -> (β, α, l, j)`; Brown algebra only.
    Varpi,
    /// `(a0, a1, a2) -> (a0ᵀ, a2ᵀ, a1ᵀ)` (Tits model).
    Theta,
    /// Torus element with 2 (Hermitian model), 4 or 6 (Tits model)
    /// parameters.
    Torus(Vec<Scalar>),
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::S => f.write_str("s"),
            Atom::T => f.write_str("t"),
            Atom::TStar => f.write_str("t*"),
            Atom::Varpi => f.write_str("varpi"),
            Atom::Theta => f.write_str("theta"),
            Atom::Torus(ps) => {
                let ps: Vec<String> = ps.iter().map(ToString::to_string).collect();
                write!(f, "t:{}", ps.join(","))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Model {
    Hermitian,
    Tits,
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Model::Hermitian => "her",
            Model::Tits => "tits",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Space {
    J,
    B,
}

impl std::str::FromStr for Space {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "J" | "j" => Ok(Space::J),
            "B" | "b" => Ok(Space::B),
            _ => Err(Error::Parse(format!("unknown space {s:?}, expected J or B"))),
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Space::J => "J",
            Space::B => "B",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvolutionDescriptor {
    field: FieldSpec,
    atoms: Vec<Atom>,
}

impl fmt::Display for InvolutionDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.atoms.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join("."))
    }
}

/// A descriptor's map together with the model it was built in.
#[derive(Debug, Clone)]
pub struct Realized {
    pub map: LinMap,
    pub model: Model,
    pub space: Space,
}

impl InvolutionDescriptor {
    pub fn parse(field: FieldSpec, text: &str) -> Result<Self> {
        let mut atoms = Vec::new();
        for tok in text.split('.').map(str::trim) {
            let atom = match tok {
                "s" => Atom::S,
                "t" => Atom::T,
                "t*" => Atom::TStar,
                "varpi" => Atom::Varpi,
                "theta" => Atom::Theta,
                _ => {
                    let params = tok
                        .strip_prefix("t:")
                        .ok_or_else(|| Error::Parse(format!("unknown descriptor atom {tok:?}")))?;
                    let ps = params
                        .split(',')
                        .map(|p| field.parse_scalar(p))
                        .collect::<Result<Vec<_>>>()?;
                    if ![2, 4, 6].contains(&ps.len()) {
                        return Err(Error::ArityMismatch {
                            expected: 6,
                            actual: ps.len(),
                        });
                    }
                    Atom::Torus(ps)
                }
            };
            atoms.push(atom);
        }
        Ok(Self { field, atoms })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    /// The Albert model every atom agrees on; Hermitian when unconstrained.
    pub fn model(&self) -> Result<Model> {
        let mut model = None;
        for a in &self.atoms {
            let m = match a {
                Atom::S | Atom::T | Atom::TStar => Some(Model::Hermitian),
                Atom::Torus(ps) if ps.len() == 2 => Some(Model::Hermitian),
                Atom::Torus(_) | Atom::Theta => Some(Model::Tits),
                Atom::Varpi => None,
            };
            match (model, m) {
                (Some(prev), Some(m)) if prev != m => {
                    return Err(Error::ModelMismatch(format!(
                        "{self} mixes atoms from the {prev} and {m} models"
                    )))
                }
                (None, Some(m)) => model = Some(m),
                _ => {}
            }
        }
        Ok(model.unwrap_or(Model::Hermitian))
    }

    /// The map on `space`, required to have order exactly two.
    pub fn realize(&self, space: Space) -> Result<Realized> {
        let model = self.model()?;
        let map = match model {
            Model::Hermitian => {
                let j = HermitianAlbert::split(self.field)?;
                self.realize_in(&j, space, |a| her_atom(&j, a))?
            }
            Model::Tits => {
                let j = TitsAlbert::split(self.field)?;
                self.realize_in(&j, space, |a| tits_atom(&j, a))?
            }
        };
        if !map.is_involution() {
            return Err(Error::NotOrderTwo);
        }
        Ok(Realized { map, model, space })
    }

    fn realize_in<J: CubicJordan>(
        &self,
        j: &J,
        space: Space,
        atom_on_j: impl Fn(&Atom) -> Result<LinMap>,
    ) -> Result<LinMap> {
        let mut acc: Option<LinMap> = None;
        let b = BrownAlgebra::split(j.clone());
        let ctx = JContext::new(j.clone());
        for a in &self.atoms {
            let m = match (space, a) {
                (Space::J, Atom::Varpi) => {
                    return Err(Error::CarrierMismatch {
                        expected: BROWN_DIM,
                        actual: 27,
                    })
                }
                (Space::B, Atom::Varpi) => b.varpi(),
                (Space::J, _) => atom_on_j(a)?,
                (Space::B, _) => b.lift_inv_with(&ctx, &atom_on_j(a)?)?,
            };
            acc = Some(match acc {
                None => m,
                Some(prev) => prev.compose(&m)?,
            });
        }
        acc.ok_or_else(|| Error::Parse("empty descriptor".into()))
            .map(|m| m.with_tag(self.to_string()))
    }
}

fn her_atom(j: &HermitianAlbert, a: &Atom) -> Result<LinMap> {
    let oct = j.octonions();
    match a {
        Atom::S => Ok(make_s(j)),
        Atom::T => lift_c_to_j(j, &make_t_canonical(oct)?),
        Atom::TStar => lift_c_to_j(j, &make_t_star(oct)?),
        Atom::Torus(ps) => lift_c_to_j(j, &g2_torus(oct, &ps[0], &ps[1])?),
        Atom::Varpi | Atom::Theta => unreachable!("filtered by model()"),
    }
}

fn tits_atom(j: &TitsAlbert, a: &Atom) -> Result<LinMap> {
    match a {
        Atom::Theta => make_theta_tits(j),
        Atom::Torus(ps) => {
            let level = if ps.len() == 4 { TorusLevel::F4 } else { TorusLevel::E6 };
            make_torus_element(j.field(), ps, level)
        }
        _ => unreachable!("filtered by model()"),
    }
}

/// Fixed subalgebra of a descriptor's map with a guess at its catalog shape.
#[derive(Debug, Clone)]
pub struct FixedReport {
    pub descriptor: String,
    pub space: Space,
    pub model: Model,
    pub dimension: usize,
    pub closed: bool,
    pub involution_stable: Option<bool>,
    pub shape: String,
}

impl FixedReport {
    pub fn to_json(&self) -> Value {
        json!({
            "descriptor": self.descriptor,
            "space": self.space.to_string(),
            "model": self.model.to_string(),
            "dimension": self.dimension,
            "closed": self.closed,
            "involution_stable": self.involution_stable,
            "shape": self.shape,
        })
    }
}

fn j_shape(dim: usize) -> Option<&'static str> {
    match dim {
        11 => Some("s"),
        15 => Some("t"),
        _ => None,
    }
}

fn sub_block(m: &Matrix, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Matrix {
    Matrix::from_rows(
        m.field(),
        rows.map(|r| cols.clone().map(|c| m[(r, c)].clone()).collect())
            .collect(),
    )
}

fn fixed_dim(m: &Matrix) -> usize {
    m.cols() - m.sub(&Matrix::identity(m.field(), m.cols())).rank()
}

/// Matches an order-two map on `B` against the catalog shapes: inner maps
/// `(α, β, A j, D l)` and outer maps `(β, α, A l, D j)`.
fn brown_shape(map: &LinMap) -> String {
    let m = map.matrix();
    let f = m.field();
    let block = |r: std::ops::Range<usize>, c: std::ops::Range<usize>| sub_block(m, r, c);
    let scal = block(0..2, 0..2);
    let zero_mixed = block(0..2, 2..56).rank() == 0
        && block(2..56, 0..2).rank() == 0;
    if !zero_mixed {
        return "other".into();
    }
    let is_zero = |x: &Matrix| x.rank() == 0;
    let swap = Matrix::from_ints(f, &[&[0, 1], &[1, 0]]);
    if scal.is_identity()
        && is_zero(&block(J_BLOCK, L_BLOCK))
        && is_zero(&block(L_BLOCK, J_BLOCK))
    {
        let a = block(J_BLOCK, J_BLOCK);
        return match j_shape(fixed_dim(&a)) {
            Some(s) => format!("B^{s}"),
            None if a.is_identity() => "identity".into(),
            None => "other inner".into(),
        };
    }
    if scal == swap && is_zero(&block(J_BLOCK, J_BLOCK)) && is_zero(&block(L_BLOCK, L_BLOCK)) {
        let a = block(J_BLOCK, L_BLOCK);
        if a.is_identity() {
            return "B^varpi".into();
        }
        return match j_shape(fixed_dim(&a)) {
            Some(s) => format!("B^{s}varpi"),
            None => "other outer".into(),
        };
    }
    "other".into()
}

/// Realizes `text` on `space`, computes its fixed subalgebra and names the
/// catalog shape it matches.
pub fn fixed_report(field: FieldSpec, text: &str, space: Space) -> Result<FixedReport> {
    let desc = InvolutionDescriptor::parse(field, text)?;
    let realized = desc.realize(space)?;
    let fixed = match (space, realized.model) {
        (Space::J, Model::Hermitian) => {
            JContext::new(HermitianAlbert::split(field)?).fixed_subalgebra(&realized.map)?
        }
        (Space::J, Model::Tits) => {
            JContext::new(TitsAlbert::split(field)?).fixed_subalgebra(&realized.map)?
        }
        (Space::B, Model::Hermitian) => {
            fixed_subalgebra_brown(&BrownAlgebra::split(HermitianAlbert::split(field)?), &realized.map)?
        }
        (Space::B, Model::Tits) => {
            fixed_subalgebra_brown(&BrownAlgebra::split(TitsAlbert::split(field)?), &realized.map)?
        }
    };
    debug_assert_eq!(realized.map.carrier(), match space {
        Space::J => Carrier::AlbertSpace,
        Space::B => Carrier::BrownSpace,
    });
    let shape = match space {
        Space::J => j_shape(fixed.dim)
            .map(|s| format!("J^{s}"))
            .unwrap_or_else(|| "other".into()),
        Space::B => brown_shape(&realized.map),
    };
    Ok(FixedReport {
        descriptor: desc.to_string(),
        space,
        model: realized.model,
        dimension: fixed.dim,
        closed: fixed.closed,
        involution_stable: fixed.involution_stable,
        shape,
    })
}
