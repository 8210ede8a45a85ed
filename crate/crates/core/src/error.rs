use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("undeclared generator `{name}` at line {line}, column {column}")]
    UndeclaredGenerator {
        name: String,
        line: usize,
        column: usize,
    },
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("presentation has no peripheral (meridian/longitude) data")]
    MissingPeripheral,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("unsupported Euler class: {0}")]
    UnsupportedEulerClass(String),
    #[error("first Betti number {b1} is not supported here: {reason}")]
    UnsupportedBetti { b1: usize, reason: String },
    #[error("cohomology class is zero")]
    ZeroClass,
    #[error("cohomology class is not primitive (divisibility {0})")]
    NotPrimitive(u64),
    #[error("class vanishes on the kernel of the finite quotient")]
    VanishesOnKernel,
    #[error("no column block with nonsingular image of x_j - 1")]
    NoAdmissibleColumn,
    #[error("invalid finite group: {0}")]
    InvalidGroup(String),
    #[error("invalid homomorphism: {0}")]
    InvalidHom(String),
    #[error("polynomial is not symmetric up to units")]
    Asymmetric,
    #[error("expected a polynomial in one variable, found {0} variables")]
    NotUnivariate(usize),
    #[error("operation needs a free lattice, found torsion coordinates")]
    QuotientLattice,
    #[error("class does not pair positively: {0}")]
    NotPositive(String),
}

pub type Result<T> = std::result::Result<T, Error>;
