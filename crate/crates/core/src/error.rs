use thiserror::Error;

/// Errors raised by the permutation, composition and counting APIs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a permutation of 1..={len}: {reason}")]
    InvalidPermutation { len: usize, reason: String },

    #[error("invalid composition: {0}")]
    InvalidComposition(String),

    #[error("failed to parse {what} from {input:?}: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },

    #[error("permutation {0} is not reverse layered (it contains 132 or 213)")]
    NotLayered(String),

    #[error("composition {0} is balanced; it has no dividing index")]
    IsBalanced(String),

    #[error("innermost parts are equal ({0}); reduction is undefined")]
    InnermostEqual(u32),

    #[error("n = {n} exceeds the {method} cap of {cap}")]
    MethodCap {
        method: &'static str,
        n: u32,
        cap: u32,
    },

    #[error("64-bit overflow while counting at n = {n}")]
    Overflow { n: u32 },

    #[error("balanced counts are only defined for even n, got {0}")]
    OddN(u32),

    #[error("no closed form known for pattern pair {0}")]
    UnknownPair(String),

    #[error("closed form is only stated for n >= {from}, got n = {n}")]
    OutsideRange { n: u32, from: u32 },

    #[error("n must be positive")]
    ZeroN,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
