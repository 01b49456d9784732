use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A group needs at least one factor.
    #[error("a group signature needs at least one factor")]
    EmptySignature,
    #[error("expected {expected} coordinates, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    /// Coordinates are numbered from 1.
    #[error("coordinate {position} lies in a Z factor but is not an integer")]
    NonIntegerInIntFactor { position: usize },
    #[error("signature mismatch: {left} vs {right}")]
    SignatureMismatch { left: String, right: String },
    #[error("level {level} is outside [{min}, {max}]")]
    LevelOutOfRange { level: usize, min: usize, max: usize },
    #[error("multiplicity must be at least 1, got {0}")]
    BadMultiplicity(i64),
    #[error("ideals live over different value groups: {left} vs {right}")]
    FieldMismatch { left: String, right: String },
    #[error("{ideal} is not an ideal of the overring at level {level}")]
    NotAnOverringIdeal { ideal: String, level: usize },
    #[error("{sub} is not contained in {sup}")]
    NotASubideal { sub: String, sup: String },
    #[error("{sub} is not properly contained in {sup}")]
    NotAProperSubideal { sub: String, sup: String },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    /// The quotient aM/(aM)^n is zero, so its annihilator is not informative.
    #[error("degenerate quotient: (aM)^n = aM")]
    DegenerateQuotient,
    #[error("point {point} lies outside the margin box")]
    PointOutsideMargin { point: String },
    /// The oracle lattice cannot hold a coordinate with this denominator.
    #[error("{0} is not on the window lattice")]
    OffLattice(String),
    #[error("cannot parse {what}: {text:?}")]
    BadLiteral { what: &'static str, text: String },
}
