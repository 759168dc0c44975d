use thiserror::Error;

/// Input errors raised by the computational kernels.
///
/// Disagreement between methods is never an error; it is reported as data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("factorial of negative integer {0}")]
    NegativeFactorial(i64),
    #[error("d must be at least 1, got {0}")]
    NonPositiveDegree(u32),
    #[error("monomial s1^{m} s2^{n} has degree {}, expected top degree {top}", m + 2 * n)]
    NotTopDegree { m: u32, n: u32, top: u32 },
    #[error("partition ({a}, {b}) does not fit in the 2 x {d} box")]
    OutsideBox { a: u32, b: u32, d: u32 },
    #[error("truncation caps differ: {0} vs {1}")]
    CapMismatch(u32, u32),
    #[error("monomial s1^{m} s2^{n} exceeds truncation cap {cap}")]
    AboveCap { m: u32, n: u32, cap: u32 },
    #[error("graded degree {k} out of range 0..={cap}")]
    DegreeOutOfRange { k: u32, cap: u32 },
    #[error("constant term must be 1 to invert")]
    NonUnit,
    #[error("series has no coefficient at index {index} (length {len})")]
    SeriesTooShort { index: usize, len: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
