use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("not a partition: {reason} at index {index}")]
    NotAPartition { index: usize, reason: &'static str },

    #[error("integer overflow while {0}")]
    Overflow(&'static str),

    #[error("cannot parse partition text {text:?}: {reason}")]
    Parse { text: String, reason: String },

    #[error("modulus k must be at least 1")]
    ZeroModulus,

    #[error("no removable strip of length {length}: gap {gap} is below the modulus")]
    StripNotRemovable { length: usize, gap: u64 },

    #[error("malformed strip decomposition: {0}")]
    MalformedDecomposition(String),

    #[error("domain violation: {0}")]
    DomainViolation(DomainViolation),

    #[error("n = {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: u64, cap: u64 },
}

/// Why a partition lies outside the strict domain of the forward or inverse map.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DomainViolation {
    #[error("part {part} appears {multiplicity} times, more than 2k-1 = {bound}")]
    RepetitionBound {
        part: u64,
        multiplicity: usize,
        bound: u64,
    },

    #[error(
        "part {part} appears at least k = {k} times but smaller part {deficient} appears only {multiplicity} times"
    )]
    InitialRepetition {
        part: u64,
        deficient: u64,
        multiplicity: usize,
        k: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("series truncation mismatch: {left} vs {right}")]
pub struct TruncationMismatch {
    pub left: usize,
    pub right: usize,
}

pub type Result<T, E = PartitionError> = std::result::Result<T, E>;
