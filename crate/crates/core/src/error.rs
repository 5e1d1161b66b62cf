use thiserror::Error;

/// Errors raised by the exact-arithmetic layer and the classification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial division leaves a nonzero remainder")]
    NotDivisible,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("divisor multiplicity of Phi_{m} is not an integer")]
    NotIntegral { m: u64 },
    #[error("divisor multiplicity of Phi_{m} is negative ({mult})")]
    NegativeMultiplicity { m: u64, mult: i64 },
    #[error("Poincare series is not a polynomial")]
    NotPolynomial,
    #[error("Poincare series has a negative coefficient at t^{exponent}")]
    NegativeCoefficient { exponent: usize },
    #[error("invalid weight system: {0}")]
    InvalidWeightSystem(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("exponent data does not determine weights: {0}")]
    InvalidGraph(String),
    #[error("node budget of {budget} exhausted")]
    BudgetExceeded { budget: u64 },
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
    #[error("cache error: {0}")]
    Cache(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
