use crate::macdonald::MatchFailure;

/// Errors surfaced by validation and by precondition checks.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("partition parts must be weakly decreasing, got {0:?}")]
    NotWeaklyDecreasing(Vec<usize>),
    #[error("cell ({row},{col}) is outside the shape {shape}")]
    CellOutOfShape {
        row: usize,
        col: usize,
        shape: String,
    },
    #[error("filling has {got} rows but the shape has {expected}")]
    FillingRowCount { got: usize, expected: usize },
    #[error("row {row} has {got} entries but the shape expects {expected}")]
    RowLengthMismatch {
        row: usize,
        got: usize,
        expected: usize,
    },
    #[error("entries must be positive, found 0 in row {row}")]
    EntryNotPositive { row: usize },
    #[error("word letters must be positive")]
    LetterNotPositive,
    #[error("word is not standard: content {0:?}")]
    NotStandard(Vec<usize>),
    #[error("word does not have partition content: {0:?}")]
    NotPartitionContent(Vec<usize>),
    #[error("row {row} must hold a set of {expected} distinct entries, got {got:?}")]
    NotASet {
        row: usize,
        expected: usize,
        got: Vec<u32>,
    },
    #[error("family has {got} rows but the shape has {expected}")]
    FamilyRowCount { got: usize, expected: usize },
    #[error("row {row} has {got} entries but part {row} of the shape is {expected}")]
    FamilySizeMismatch {
        row: usize,
        got: usize,
        expected: usize,
    },
    #[error("filling is not inv-maximal: inv = {inv}, maximum for this shape is {expected}")]
    NotInvMaximal { inv: usize, expected: usize },
    #[error("filling is not inv-zero: inv = {inv}")]
    NotInvZero { inv: usize },
    #[error("alphabet size mismatch: {0} vs {1}")]
    AlphabetMismatch(usize, usize),
    #[error("cannot parse polynomial term {0:?}")]
    BadPolyTerm(String),
    #[error("conjecture counterexample: {0}")]
    ConjectureMismatch(Box<MatchFailure>),
}

pub type Result<T> = std::result::Result<T, Error>;
