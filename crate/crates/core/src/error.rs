use thiserror::Error;

/// Errors raised by the combinatorial kernels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex label {0} exceeds the 64-vertex capacity")]
    Capacity(usize),
    #[error("duplicate vertex {0} in simplex")]
    DuplicateVertex(usize),
    #[error("expected a set of size {expected}, got {actual}")]
    BadCardinality { expected: usize, actual: usize },
    #[error("candidate space of {required} exceeds budget {budget}")]
    BudgetExceeded { required: u128, budget: u128 },
    #[error("invalid cyclic polytope parameters d={d}, n={n} (need 2 <= d < n <= 64)")]
    InvalidCyclicSpec { d: usize, n: usize },
    #[error("polytope dimension {polytope} is not 2*{complex}+1")]
    DimensionMismatch { polytope: usize, complex: usize },
    #[error("complex is not pure")]
    NotPure,
    #[error("vertex {0} is not a vertex of the complex")]
    UnknownVertex(usize),
    #[error("contraction of {u} into {v} is not admissible")]
    NotAdmissible { u: usize, v: usize },
    #[error("no admissible contraction available with {remaining} vertices left")]
    NoContractionAvailable { remaining: usize },
    #[error("uniformity mismatch: {0} vs {1}")]
    UniformityMismatch(usize, usize),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("vertex set is not an initial segment of [{0}]")]
    NotInitialSegment(usize),
    #[error("field of order {0} is not supported (prime orders only)")]
    UnsupportedField(u64),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
