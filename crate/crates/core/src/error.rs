use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("division by a series that is zero at the working precision")]
    ZeroDivision,
    #[error("square root requested for a non-unit series")]
    NotUnit,
    #[error("leading coefficient {0} has no square root in Q(i)")]
    NoExactRoot(String),
    #[error("discriminant vanishes at the working precision but is not certified to be zero")]
    PrecisionLoss,
    #[error("scalars of different algebra kinds")]
    KindMismatch,
    #[error("unsupported rank: {0}")]
    UnsupportedRank(String),
    #[error("rank too large for exhaustive enumeration: {0}")]
    RankTooLarge(usize),
    #[error("matrix is singular at the working precision")]
    Singular,
    #[error("bracket leaves the span of the given basis")]
    NotClosed,
    #[error("element does not lie in the algebra")]
    NotInAlgebra,
    #[error("linear system is inconsistent")]
    Inconsistent,
    #[error("invalid continuous parameter: {0}")]
    InvalidParam(String),
    #[error("invalid admissible triple: {0}")]
    InvalidTriple(String),
    #[error("X^-1 sigma(X) is not diagonal")]
    NotReducible,
    #[error("matrix is not a cocycle")]
    NotCocycle,
    #[error("matrix is not a twisted cocycle")]
    NotTwistedCocycle,
    #[error("no simple root in gamma1 outside gamma2")]
    PivotUnavailable,
    #[error("matrix is not orthogonal for the split form")]
    NotOrthogonal,
    #[error("vector does not have norm h^-1")]
    BadNorm,
    #[error("orthogonal complement has an anisotropic plane; no hyperbolic completion over K")]
    AnisotropicComplement,
    #[error("generators are linearly dependent")]
    DependentGenerators,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
