use crate::mask::SubsetMask;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground set of size {0} exceeds the {max}-element mask cap", max = crate::mask::MAX_GROUND_SET)]
    GroundSetTooLarge(usize),
    #[error("subset has width {found}, expected {expected}")]
    WidthMismatch { expected: usize, found: usize },
    #[error("basis family is empty")]
    EmptyFamily,
    #[error("bases {{{first}}} and {{{second}}} have different cardinalities")]
    UnequalCardinality { first: SubsetMask, second: SubsetMask },
    #[error("basis exchange fails for {{{from}}}, {{{to}}} at element {element}")]
    ExchangeViolation {
        from: SubsetMask,
        to: SubsetMask,
        element: usize,
    },
    #[error("k = {k} out of range for ground set of size {n}")]
    KOutOfRange { k: usize, n: usize },
    #[error("ground set sizes {left} and {right} do not match")]
    SizeMismatch { left: usize, right: usize },
    #[error("map of size {0} is not a permutation")]
    NotAPermutation(usize),
    #[error("no free-product split with left factor of size {0}")]
    NotAFreeProduct(usize),
    #[error("theorem hypothesis violated: {0}")]
    HypothesisViolation(String),
    #[error("enumeration capped at 7 elements, got {0}")]
    EnumerationCapExceeded(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("parse error at line {line}: {msg}")]
    ParseAt { line: usize, msg: String },
    #[error("catalog entries {0} and {1} are isomorphic")]
    DuplicateClass(usize, usize),
    #[error("catalog entry {0} is not in canonical form")]
    NotCanonical(usize),
    #[error("catalog header declares n={expected}, entry has n={found}")]
    CatalogSizeMismatch { expected: usize, found: usize },
}
