use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid graph parameters: {0}")]
    InvalidSpec(String),

    #[error("cannot parse graph spec `{input}` at byte {pos}: {reason}")]
    SpecSyntax {
        input: String,
        pos: usize,
        reason: String,
    },

    #[error("invalid coloring: {0}")]
    InvalidColoring(String),

    #[error("coloring has {got} entries but the graph has {expected} vertices")]
    SizeMismatch { expected: usize, got: usize },

    /// Vertices are 0-based here; `Display` renders them 1-based.
    #[error("coloring is not proper: v_{} and v_{} are adjacent and share a color", .0 + 1, .1 + 1)]
    Improper(usize, usize),

    #[error("locating colorings are undefined for disconnected graphs")]
    Disconnected,

    #[error("improper sequence: {0}")]
    ImproperSequence(String),

    #[error("cannot concatenate: boundary entries are both {0}")]
    ConcatBoundary(usize),

    #[error("input coloring is not neighbor-locating")]
    NotNeighborLocating,

    #[error("no closed form for {0}")]
    NoClosedForm(String),

    #[error("invalid certificate record: {0}")]
    CertificateSyntax(String),

    #[error("invalid search configuration: {0}")]
    SearchConfig(String),
}
