use crate::orientation::Vertex;

/// Errors reported by the library. Internal exactness assertions (divisions
/// that are guaranteed exact, integer interpolation) panic instead: if they
/// fire, the library itself is wrong, not the input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("part size at position {0} is negative")]
    NegativeSize(usize),

    #[error("partition needs at least one part")]
    EmptyList,

    #[error("digit {digit} occurs {actual} times, expected {expected}")]
    MultiplicityMismatch {
        digit: usize,
        expected: usize,
        actual: usize,
    },

    #[error("part {0} is empty; drop empty parts before coding")]
    EmptyPartPresent(usize),

    #[error("orientation contains a directed cycle")]
    CyclicOrientation,

    #[error("edge {0} -> {1} joins two vertices of the same part")]
    WithinPartEdge(Vertex, Vertex),

    #[error("vertex {0} is outside the declared parts")]
    VertexOutOfRange(Vertex),

    #[error("pair {{{0}, {1}}} was given more than one direction")]
    DuplicateDirection(Vertex, Vertex),

    #[error("pair {{{0}, {1}}} was given no direction")]
    MissingDirection(Vertex, Vertex),

    #[error("size {actual} exceeds the brute-force guard of {limit}")]
    TooLarge { actual: usize, limit: usize },

    #[error("only parts a..z can be written as letters, got {0} parts")]
    PartLabelOverflow(usize),

    #[error("malformed {kind}: {detail}")]
    Parse { kind: &'static str, detail: String },
}

impl Error {
    pub(crate) fn parse(kind: &'static str, detail: impl Into<String>) -> Self {
        Error::Parse {
            kind,
            detail: detail.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
