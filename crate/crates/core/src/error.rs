use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank n must be at least 1")]
    InvalidRank,
    #[error("su({n},{n}) takes {expected} Dynkin labels, got {got}")]
    LabelCount { n: u32, expected: usize, got: usize },
    #[error("root ({j},{k}) is not a positive root of A_{rank}")]
    RootOutOfRange { j: usize, k: usize, rank: usize },
    #[error("labels vanish at {0:?}; build the reduced multiplet instead")]
    NotMain(Vec<usize>),
    #[error("no label vanishes; build the main multiplet instead")]
    NotReduced,
    #[error("reduction order {k} outside 1..={max}")]
    OrderOutOfRange { k: usize, max: usize },
    #[error("m_{0} = 0: no finite-dimensional representation")]
    NoFiniteDimensional(usize),
    #[error("{algebra} is not defined for n = {n}")]
    AlgebraUnavailable { algebra: String, n: u32 },
    #[error("oracle refused: {0}")]
    OracleRefused(String),
    #[error("fixture parse error on line {line}: {msg}")]
    Fixture { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
