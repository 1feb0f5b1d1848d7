use thiserror::Error;

/// Errors raised anywhere in the algebra tower.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live in different fields ({0} vs {1})")]
    MixedFields(String, String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("field {0} carries no element arithmetic")]
    NonArithmeticField(String),
    #[error("invalid field spec: {0}")]
    InvalidField(String),
    #[error("elements belong to different algebras: {0}")]
    AlgebraMismatch(String),
    #[error("model mismatch: {0}")]
    ModelMismatch(String),
    #[error("element is singular (cubic norm is zero)")]
    SingularElement,
    #[error("multiplier must be nonzero")]
    ZeroMultiplier,
    #[error("matrix triple is not unimodular")]
    NotUnimodular,
    #[error("map is not an algebra automorphism: {0}")]
    NotAutomorphism(String),
    #[error("map does not preserve the cubic norm")]
    NotNormPreserving,
    #[error("map does not have order two")]
    NotOrderTwo,
    #[error("maps do not commute")]
    NotCommuting,
    #[error("element does not have unit norm")]
    NotUnitNorm,
    #[error("no within-block basis ordering makes the map an automorphism:\n{0}")]
    NoValidOrdering(String),
    #[error("carrier mismatch: expected dimension {expected}, got {actual}")]
    CarrierMismatch { expected: usize, actual: usize },
    #[error("trace form Gram matrix is singular")]
    SingularGram,
    #[error("bilinear form is not invariant under the map")]
    FormNotInvariant,
    #[error("no element v with q(v) = -1 and <v,e> = 0 found; octonions are not split")]
    NoSuchV,
    #[error("torus parameters must be nonzero")]
    ZeroParameter,
    #[error("expected {expected} parameters, got {actual}")]
    ArityMismatch { expected: usize, actual: usize },
    #[error("unrecognized Dynkin diagram: {0}")]
    UnrecognizedType(String),
    #[error("tuple violates the folding symmetry: {0}")]
    NotSymmetric(String),
    #[error("Hilbert symbol arguments must be nonzero")]
    ZeroArgument,
    #[error("singular matrix")]
    SingularMatrix,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
