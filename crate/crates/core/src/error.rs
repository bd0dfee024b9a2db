use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index {index} out of range {min}..={max}")]
    IndexOutOfRange {
        index: usize,
        min: usize,
        max: usize,
    },

    #[error("invalid indices: {0}")]
    InvalidIndices(String),

    #[error("word needs rank at least {needed}, got {rank}")]
    InvalidRank { needed: usize, rank: usize },

    #[error("partition {0:?} is not admissible: a single chain of size > 1 is not a union of at least two chains")]
    InadmissiblePartition(Vec<usize>),

    #[error("block {index} is not admissible: {reason}")]
    InadmissibleBlock { index: usize, reason: String },

    #[error("cut points {lower} and {upper} do not split the poset as an ordinal sum")]
    NotAnOrdinalSum { lower: usize, upper: usize },

    #[error("poset is not a disjoint union of chains")]
    NotAChainUnion,

    #[error("invalid poset: {0}")]
    InvalidPoset(String),

    #[error("labels do not form a linear extension: {0}")]
    InvalidLabels(String),

    #[error("more than {cap} linear extensions; refusing to give a verdict")]
    BudgetExceeded { cap: usize },

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
