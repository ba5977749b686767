use thiserror::Error;

use crate::algebra::BiPoly;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("curve polynomial must be monic of odd degree >= 3")]
    InvalidCurvePoly,
    #[error("not divisible, remainder {remainder}")]
    NotDivisible { remainder: Box<BiPoly> },
    #[error("resultant undefined: both polynomials are constant in y")]
    BothConstantInY,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("singular curve: discriminant vanishes")]
    SingularCurve,
    #[error("point {point} is not on the curve")]
    PointNotOnCurve { point: String },
    #[error("point does not belong to this curve")]
    CurveMismatch,
    #[error("operation needs an affine point, got O")]
    InfinityPoint,
    #[error("points are equal; use the tangent line")]
    EqualPoints,
    #[error("interpolation system is degenerate (nullspace dimension {0})")]
    DegenerateSystem(usize),
    #[error("invalid Mumford representation: v^2 - f is not divisible by u")]
    InvalidRepresentation,
    #[error("shape error: {0}")]
    ShapeError(String),
    #[error("point has order {actual:?}, expected {expected}")]
    WrongOrder { expected: u64, actual: Option<u64> },
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("target degree {target} is below the polynomial degree {actual}")]
    DegreeTooSmall { target: u32, actual: u32 },
    #[error("form is not homogeneous")]
    NotHomogeneous,
    #[error("{numerator} is not divisible by {denominator}")]
    NotDivisibleInteger { numerator: u64, denominator: u64 },
    #[error("pencil parameters are both zero")]
    ZeroParameters,
    #[error("divisor is not semi-reduced: {0}")]
    NotSemiReduced(String),
    #[error("unknown strategy `{0}`")]
    UnknownStrategy(String),
    #[error("unknown section `{0}`")]
    UnknownSection(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
