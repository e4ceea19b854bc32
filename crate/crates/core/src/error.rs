use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong in this crate.
///
/// Ill-posed queries (an index or amount outside its admissible range) are
/// kept apart from well-posed queries whose answer is simply "no", which are
/// reported as `false` or `None` by the query functions themselves.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree must be at least 1")]
    InvalidDegree,

    #[error("not a permutation of 1..={n}: {reason}")]
    NotAPermutation { n: usize, reason: String },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("{what} index {index} outside {lo}..={hi}")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        lo: usize,
        hi: usize,
    },

    #[error("part {0} exceeds its staircase bound")]
    StaircaseViolation(usize),

    #[error("part {0} is zero, so no later part is smaller")]
    NoDescent(usize),

    #[error("amount {z} outside 1..={max} at row {i}")]
    AmountOutOfRange { i: usize, z: usize, max: usize },

    #[error("composition is not ({i},{z})-removable")]
    NotRemovable { i: usize, z: usize },

    #[error("composition is not ({i},{z})-insertable")]
    NotInsertable { i: usize, z: usize },

    #[error("no {kind} pattern at position {position}")]
    PatternMismatch { kind: &'static str, position: usize },

    #[error("witness ({i},{j},{z}) does not certify a cover")]
    InvalidWitness { i: usize, j: usize, z: usize },

    #[error("letter s_{letter} out of range for degree {n}")]
    LetterOutOfRange { letter: usize, n: usize },

    #[error("row {0} is empty")]
    EmptyRow(usize),

    #[error("no box at ({row},{column})")]
    UnoccupiedBox { row: usize, column: usize },

    #[error("degree {n} exceeds the cap of {cap}")]
    ResourceCap { n: usize, cap: usize },

    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },
}

impl Error {
    /// Stable variant name, printed by the CLI on failure.
    pub fn name(&self) -> &'static str {
        match self {
            Error::InvalidDegree => "InvalidDegree",
            Error::NotAPermutation { .. } => "NotAPermutation",
            Error::DegreeMismatch { .. } => "DegreeMismatch",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::StaircaseViolation(_) => "StaircaseViolation",
            Error::NoDescent(_) => "NoDescent",
            Error::AmountOutOfRange { .. } => "AmountOutOfRange",
            Error::NotRemovable { .. } => "NotRemovable",
            Error::NotInsertable { .. } => "NotInsertable",
            Error::PatternMismatch { .. } => "PatternMismatch",
            Error::InvalidWitness { .. } => "InvalidWitness",
            Error::LetterOutOfRange { .. } => "LetterOutOfRange",
            Error::EmptyRow(_) => "EmptyRow",
            Error::UnoccupiedBox { .. } => "UnoccupiedBox",
            Error::ResourceCap { .. } => "ResourceCap",
            Error::Parse { .. } => "Parse",
        }
    }
}

pub(crate) fn check_range(what: &'static str, index: usize, lo: usize, hi: usize) -> Result<()> {
    if index < lo || index > hi {
        return Err(Error::IndexOutOfRange {
            what,
            index,
            lo,
            hi,
        });
    }
    Ok(())
}
