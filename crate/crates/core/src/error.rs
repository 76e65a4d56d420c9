use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("arity {n} out of range 1..={max}")]
    ArityOutOfRange { n: u32, max: u32 },

    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: u32, found: u32 },

    #[error("value {value} does not fit in {n} bits")]
    ValueOutOfRange { value: u64, n: u32 },

    #[error("bent functions need an even arity >= 2, got {0}")]
    OddArity(u32),

    #[error("permutation is not a bijection on 0..{0}")]
    NotBijective(usize),

    #[error("max_iters must be at least 1")]
    ZeroIterations,

    #[error("function is not bent")]
    NotBent,

    #[error("malformed truth table: {0}")]
    Parse(String),

    #[error("nothing to render")]
    EmptyInput,

    #[error("{len} bars exceed the {format} limit of {max}")]
    TooManyBars {
        len: usize,
        max: usize,
        format: &'static str,
    },

    #[error("invariant violated: {0}")]
    Invariant(String),
}
