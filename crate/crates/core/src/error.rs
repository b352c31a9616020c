use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("term at position {pos} has degree {degree}; expected a homogeneous cubic")]
    NonHomogeneousDegree3 { pos: usize, degree: u32 },

    #[error("variable at position {pos} mixes x0..x9 names with x,y,z,w aliases")]
    MixedVariableStyles { pos: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("expected a form in {expected} variables, got {found}")]
    WrongArity { expected: usize, found: usize },

    #[error("trilinear data is not symmetric at indices ({0}, {1}, {2})")]
    AsymmetricTrilinear(usize, usize, usize),

    #[error("basis vectors are linearly dependent")]
    DependentBasis,

    #[error("the zero vector is not a projective point")]
    ZeroPoint,

    #[error("monomial {0} violates the reduced shape")]
    ShapeViolation(String),

    #[error("hessian rank {rank} exceeds the allowed maximum {max}")]
    RankTooLarge { rank: usize, max: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("bound violated: {0}")]
    BoundViolated(String),

    #[error("scenario line {line}: {msg}")]
    Scenario { line: usize, msg: String },

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

impl Error {
    /// Stable machine-readable identifier, used by the CLI's JSON output.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Syntax { .. } => "syntax",
            Error::NonHomogeneousDegree3 { .. } => "non_homogeneous_degree3",
            Error::MixedVariableStyles { .. } => "mixed_variable_styles",
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::WrongArity { .. } => "wrong_arity",
            Error::AsymmetricTrilinear(..) => "asymmetric_trilinear",
            Error::DependentBasis => "dependent_basis",
            Error::ZeroPoint => "zero_point",
            Error::ShapeViolation(_) => "shape_violation",
            Error::RankTooLarge { .. } => "rank_too_large",
            Error::Precondition(_) => "precondition",
            Error::Hypothesis(_) => "hypothesis",
            Error::BoundViolated(_) => "bound_violated",
            Error::Scenario { .. } => "scenario",
            Error::Internal(_) => "internal",
        }
    }
}
