use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty generator list")]
    EmptyInput,
    #[error("generators must be positive integers")]
    NonPositiveEntry,
    #[error("generators {0:?} have gcd {1} > 1; the monoid is not a numerical semigroup")]
    NotNumerical(Vec<u64>, u64),
    #[error("{0} is not an element of the semigroup")]
    NotInSemigroup(u64),
    #[error("variable counts differ: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("effort cap exceeded: {0}")]
    EffortCapExceeded(String),
    #[error("input is not homogeneous")]
    NotHomogeneous,
    #[error("degree {degree} is below the critical degree {critical}")]
    DegreeTooSmall { degree: u32, critical: u32 },
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("multiset sum {sum} is infeasible for c = {c} entries in [1, {d}]")]
    InfeasibleSum { c: u32, d: u32, sum: u32 },
    #[error("{0} generators exceed the Betti computation cap of {1}")]
    CapExceeded(usize, usize),
    #[error("semigroup is not extremal: e = {e}, bound = {bound:?}")]
    NotExtremal { e: u64, bound: Option<u64> },
    #[error("tangent cone is not quadratic (d = {0})")]
    NotQuadratic(u32),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}
