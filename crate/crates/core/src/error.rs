use thiserror::Error;

/// Errors raised by the laboratory. Element indices carried in variants are
/// 0-based; `Display` renders them 1-based to match the text formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty semigroup: order must be at least 1")]
    EmptyTable,
    #[error("table has {found} entries, expected {expected}")]
    WrongShape { expected: usize, found: usize },
    #[error("table entry {value} at ({row}, {col}) is out of range for order {order}", row = .row + 1, col = .col + 1, value = .value + 1)]
    IndexOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("not associative: ({x}·{y})·{z} ≠ {x}·({y}·{z})", x = .x + 1, y = .y + 1, z = .z + 1)]
    NotAssociative { x: usize, y: usize, z: usize },
    #[error("semigroup is not inverse")]
    NotInverse,
    #[error("semigroup is neither inverse nor completely regular")]
    NotInverseOrCompletelyRegular,
    #[error("semigroup is not a Clifford semigroup")]
    NotClifford,
    #[error("semigroup is not a group")]
    NotAGroup,
    #[error("squaring map is not a bijection")]
    NotUniquely2Divisible,
    #[error("(x^1/2)^-1 and (x^-1)^1/2 disagree at x = {x}", x = .x + 1)]
    InverseRootMismatch { x: usize },
    #[error("map has {found} images, expected {expected}")]
    MapLength { expected: usize, found: usize },
    #[error("map is not an automorphism of the semigroup")]
    NotAnAutomorphism,
    #[error("partial permutations have different degrees ({left} vs {right})")]
    DegreeMismatch { left: usize, right: usize },
    #[error("partial permutation is not injective on its domain")]
    NotInjective,
    #[error("degree {degree} is too large (maximum {max})")]
    DegreeTooLarge { degree: usize, max: usize },
    #[error(
        "order {requested} exceeds the cap {cap} for filter `{filter}` (use the override flag)"
    )]
    OrderTooLarge {
        requested: usize,
        cap: usize,
        filter: String,
    },
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("unknown statement `{0}`")]
    UnknownStatement(String),
    #[error("unknown filter `{0}`")]
    UnknownFilter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
