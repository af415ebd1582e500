use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("root-of-unity order must be positive")]
    ZeroOrder,
    #[error("division by zero")]
    DivisionByZero,
    #[error("cyclotomic orders differ ({left} vs {right}); embed into a common field first")]
    OrderMismatch { left: u64, right: u64 },
    #[error("cannot embed Q(zeta_{from}) into Q(zeta_{into}): {from} does not divide {into}")]
    NotADivisor { from: u64, into: u64 },
    #[error("tan({a}pi/{n}) is undefined")]
    UndefinedTangent { a: i64, n: u64 },
    #[error("angle denominator {0} is even; only odd denominators embed")]
    EvenDenominator(u64),
    #[error("unsupported surd sqrt({0}): need an odd squarefree integer")]
    UnsupportedSurd(u64),
    #[error("no sign verifies for family member k = {k}")]
    UnresolvedSign { k: i64 },
    #[error("syntax error at {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("unsupported expression: {0}")]
    Unsupported(String),
}
