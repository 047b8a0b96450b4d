use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("field degree {0} outside 1..=32")]
    DegreeOutOfRange(u32),
    #[error("modulus {modulus:#x} is not an irreducible polynomial of degree {degree}")]
    ReducibleModulus { degree: u32, modulus: u64 },
    #[error("dimension {0} outside 1..=30")]
    DimensionOutOfRange(u32),
    #[error("point {point:#x} does not fit in dimension {n}")]
    PointOutOfRange { point: u32, n: u32 },
    #[error("m must be even and in 2..=30, got {0}")]
    BadBchDimension(u32),
    #[error("coverage floor needs an even m >= 4, got {0}")]
    BadFloorDimension(u32),
    #[error("n too small for asymptotic construction: n = {n} but m = {m}")]
    DimensionTooSmall { n: u32, m: u32 },
    #[error("quotient dimension override must be even with 4 <= m <= n, got m = {m} for n = {n}")]
    BadQuotientOverride { n: u32, m: u32 },
    #[error("slack constant T must be positive and finite, got {0}")]
    BadSlack(f64),
    #[error("quotient set leaves coset {0:#x} uncovered (J_min = 0)")]
    QuotientNotMaximal(u32),
    #[error("no lift covered every point outside the A-cosets within {0} attempts")]
    AttemptsExhausted(u32),
    #[error("oracle search supports n in 1..={max}, got {n}")]
    OracleRange { n: u32, max: u32 },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
