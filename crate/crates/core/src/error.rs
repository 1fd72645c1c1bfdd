use thiserror::Error;

use crate::partitions::Partition;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("partition parts must be positive")]
    ZeroPart,
    #[error("partition parts must be weakly decreasing, got {0:?}")]
    NotDecreasing(Vec<u32>),
    #[error("cannot parse partition token `{0}`")]
    BadToken(String),
    #[error("unknown name `{0}`")]
    Unknown(String),
}

#[derive(Debug, Error)]
pub enum CharacterError {
    #[error("shape {shape} and class {class} are partitions of different integers")]
    SizeMismatch { shape: Partition, class: Partition },
    #[error("inner product for {shape} is not an integer (character bug)")]
    NonIntegralMultiplicity { shape: Partition },
    #[error("k = {k} is out of range for n = {n}")]
    BadSubsetSize { n: u32, k: u32 },
    #[error("no exception table for case {0}")]
    UnknownExceptionCase(u32),
    #[error("n = {n} is below the table range (n >= {min})")]
    BelowTableRange { n: u32, min: u32 },
}

#[derive(Debug, Error)]
pub enum SchemeError {
    #[error("class {class} is not a {k}-derangement")]
    NotDerangement { class: Partition, k: u32 },
    #[error("class {0} appears more than once")]
    DuplicateClass(Partition),
    #[error("class {class} is not a partition of {n}")]
    WrongSize { class: Partition, n: u32 },
    #[error("scheme has no class with nonzero weight")]
    Empty,
    #[error("ratio bound needs tau < 0 < d")]
    RatioBoundDomain,
    #[error("division by zero in clique-coclique bound")]
    ZeroDivisor,
    #[error("transpose pairing needs every class to be even, {0} is odd")]
    OddClass(Partition),
}

#[derive(Debug, Error)]
pub enum WeightsError {
    #[error("closed form for k = {k}, {parity} n needs n >= {min}, got n = {n}")]
    OutOfRange {
        k: u32,
        parity: &'static str,
        n: u32,
        min: u32,
    },
    #[error("closed form for k = {k} requires {expected} n, got n = {n}")]
    WrongParity {
        k: u32,
        expected: &'static str,
        n: u32,
    },
    #[error("symbolic and polynomial forms of weight {index} disagree at n = {n}")]
    FormMismatch { index: usize, n: u32 },
    #[error("linear system is inconsistent at row {row} ({label})")]
    Inconsistent { row: usize, label: String },
    #[error("linear system is singular: rank {rank} < {unknowns} unknowns")]
    Singular { rank: usize, unknowns: usize },
    #[error("feasibility search needs 2k <= n, got n = {n}, k = {k}")]
    SearchRange { n: u32, k: u32 },
    #[error(transparent)]
    Scheme(#[from] SchemeError),
}

#[derive(Debug, Error)]
pub enum CertifyError {
    #[error("unsupported (n, k) = ({n}, {k}): need k in 3..=5 and n >= 2k + 1")]
    Unsupported { n: u32, k: u32 },
    #[error("weight search undecided for (n, k) = ({n}, {k}): {reason}")]
    Undecided { n: u32, k: u32, reason: String },
    #[error("no feasible weighting exists for (n, k) = ({n}, {k})")]
    Infeasible { n: u32, k: u32 },
    #[error("|xi| >= 1 above the dimension threshold: xi{shape} = {value}")]
    TailViolation { shape: Partition, value: String },
    #[error("claim xi{shape} {claim} fails: value {value}")]
    ClaimFailed {
        shape: Partition,
        claim: String,
        value: String,
    },
    #[error(transparent)]
    Weights(#[from] WeightsError),
    #[error(transparent)]
    Scheme(#[from] SchemeError),
}

#[derive(Debug, Error)]
pub enum BruteError {
    #[error("group of order {order} exceeds the vertex cap {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("need 1 <= k < n, got n = {n}, k = {k}")]
    BadParameters { n: u32, k: u32 },
    #[error("matrix oracle limited to n <= 6, got n = {0}")]
    MatrixTooLarge(u32),
    #[error("moment m = {moment} mismatch: matrix gives {matrix}, characters give {spectral}")]
    MomentMismatch {
        moment: u32,
        matrix: String,
        spectral: String,
    },
}
