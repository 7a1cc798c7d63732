use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("modulus {0} is reducible")]
    ReducibleModulus(String),
    #[error("modulus degree {found} does not match extension degree {expected}")]
    DegreeMismatch { expected: u32, found: i64 },
    #[error("field of size {0} exceeds the supported bound")]
    UnsupportedFieldSize(u64),
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} and {1} are not coprime")]
    NotCoprime(u64, u64),
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("no element of order {0} in the splitting field")]
    NoSubgroupGenerator(u64),
    #[error("g = {0} does not divide x^n - 1")]
    NotDivisor(String),
    #[error("a = {a} does not divide g = {g}")]
    ChainViolation { g: String, a: String },
    #[error("a = {a} does not divide p(x)(x^n - 1)/g(x) for p = {p}")]
    TorsionViolation { a: String, p: String },
    #[error("degree constraint violated: {0}")]
    DegreeViolation(String),
    #[error("n is coprime to q, so p must be zero (got p = {0})")]
    CoprimeCaseNonzeroP(String),
    #[error("{0} is not monic")]
    NotMonic(String),
    #[error("enumeration needs {needed} steps, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("code is not in canonical form: {0}")]
    NonCanonical(String),
    #[error("no closed-form formula applies: {0}")]
    FormulaNotApplicable(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}
