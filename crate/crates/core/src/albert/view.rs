//! Model-erased access to an Albert algebra, for JSON input and the CLI.

use serde_json::Value;

use super::{CubicJordan, HerElem, HermitianAlbert, TitsAlbert, TitsElem};
use crate::cda::CdAlgebra;
use crate::error::{Error, Result};
use crate::scalar::{FieldSpec, Scalar};

#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlbertView {
    Hermitian(HermitianAlbert),
    Tits(TitsAlbert),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JElem {
    Her(HerElem),
    Tits(TitsElem),
}

pub(crate) fn scalars_from_json(field: FieldSpec, v: &Value, len: usize) -> Result<Vec<Scalar>> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Parse(format!("expected an array, got {v}")))?;
    if arr.len() != len {
        return Err(Error::CarrierMismatch {
            expected: len,
            actual: arr.len(),
        });
    }
    arr.iter()
        .map(|s| match s {
            Value::String(s) => field.parse_scalar(s),
            Value::Number(n) => field.parse_scalar(&n.to_string()),
            _ => Err(Error::Parse(format!("bad scalar {s}"))),
        })
        .collect()
}

fn mismatch() -> Error {
    Error::ModelMismatch("operands come from different Albert models".into())
}

impl AlbertView {
    pub fn field(&self) -> FieldSpec {
        match self {
            AlbertView::Hermitian(j) => j.field(),
            AlbertView::Tits(j) => j.field(),
        }
    }

    pub fn model_name(&self) -> &'static str {
        match self {
            AlbertView::Hermitian(_) => "her",
            AlbertView::Tits(_) => "tits",
        }
    }

    pub fn unit(&self) -> JElem {
        match self {
            AlbertView::Hermitian(j) => JElem::Her(j.unit()),
            AlbertView::Tits(j) => JElem::Tits(j.unit()),
        }
    }

    pub fn jmul(&self, x: &JElem, y: &JElem) -> Result<JElem> {
        match (self, x, y) {
            (AlbertView::Hermitian(j), JElem::Her(x), JElem::Her(y)) => Ok(JElem::Her(j.jmul(x, y))),
            (AlbertView::Tits(j), JElem::Tits(x), JElem::Tits(y)) => Ok(JElem::Tits(j.jmul(x, y))),
            _ => Err(mismatch()),
        }
    }

    pub fn trform(&self, x: &JElem, y: &JElem) -> Result<Scalar> {
        match (self, x, y) {
            (AlbertView::Hermitian(j), JElem::Her(x), JElem::Her(y)) => Ok(j.trform(x, y)),
            (AlbertView::Tits(j), JElem::Tits(x), JElem::Tits(y)) => Ok(j.trform(x, y)),
            _ => Err(mismatch()),
        }
    }

    /// `(T(x), Sr(x), N(x))`.
    pub fn cubic_data(&self, x: &JElem) -> Result<(Scalar, Scalar, Scalar)> {
        match (self, x) {
            (AlbertView::Hermitian(j), JElem::Her(x)) => Ok(j.cubic_data(x)),
            (AlbertView::Tits(j), JElem::Tits(x)) => Ok(j.cubic_data(x)),
            _ => Err(mismatch()),
        }
    }

    pub fn sharp(&self, x: &JElem) -> Result<JElem> {
        match (self, x) {
            (AlbertView::Hermitian(j), JElem::Her(x)) => Ok(JElem::Her(j.sharp(x))),
            (AlbertView::Tits(j), JElem::Tits(x)) => Ok(JElem::Tits(j.sharp(x))),
            _ => Err(mismatch()),
        }
    }

    pub fn to_json(&self, x: &JElem) -> Result<Value> {
        match (self, x) {
            (AlbertView::Hermitian(j), JElem::Her(x)) => Ok(j.to_json(x)),
            (AlbertView::Tits(j), JElem::Tits(x)) => Ok(j.to_json(x)),
            _ => Err(mismatch()),
        }
    }

    /// Reads an element, building its algebra from the `gamma` (over the
    /// split octonions) or `varsigma` data it carries.
    pub fn from_json(field: FieldSpec, v: &Value) -> Result<(AlbertView, JElem)> {
        let model = v.get("model").and_then(Value::as_str);
        let tits = match model {
            Some("tits") => true,
            Some("her") => false,
            Some(other) => return Err(Error::ModelMismatch(format!("unknown model {other:?}"))),
            None => v.get("parts").is_some(),
        };
        if tits {
            let varsigma = match v.get("varsigma") {
                Some(s) => scalars_from_json(field, &Value::Array(vec![s.clone()]), 1)?.remove(0),
                None => field.try_int(1)?,
            };
            let j = TitsAlbert::new(field, varsigma)?;
            let x = j.from_json(v)?;
            Ok((AlbertView::Tits(j), JElem::Tits(x)))
        } else {
            let gamma = match v.get("gamma") {
                Some(g) => scalars_from_json(field, g, 3)?,
                None => vec![field.try_int(1)?; 3],
            };
            let gamma: [Scalar; 3] = gamma.try_into().expect("length checked");
            let j = HermitianAlbert::new(CdAlgebra::split_octonions(field)?, gamma)?;
            let x = j.from_json(v)?;
            Ok((AlbertView::Hermitian(j), JElem::Her(x)))
        }
    }
}
