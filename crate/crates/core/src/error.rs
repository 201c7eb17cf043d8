use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degenerate configuration: {0}")]
    Degenerate(String),

    #[error("point lies on the polyline (segment {segment})")]
    PointOnPolyline { segment: usize },

    #[error("polyline {line} passes through puncture {puncture} (segment {segment})")]
    PolylineThroughPuncture {
        line: usize,
        segment: usize,
        puncture: usize,
    },

    #[error("alphabet mismatch: {0} vs {1} generators")]
    AlphabetMismatch(usize, usize),

    #[error("generator index {index} out of range for {rank} generators")]
    BadGenerator { index: usize, rank: usize },

    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("word is not interesting: generator counts must be even")]
    NotInteresting,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("basepoints differ")]
    BasepointMismatch,

    #[error("illegal move: {0}")]
    IllegalMove(String),

    #[error("vertex outside the search universe: {0}")]
    OutsideUniverse(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid walk: {0}")]
    InvalidWalk(String),

    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{name}: {message}")]
    Semantic { name: String, message: String },

    #[error("unknown name: {0}")]
    UnknownName(String),
}

pub type Result<T> = std::result::Result<T, Error>;
