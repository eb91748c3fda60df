use thiserror::Error;

/// What exactly went wrong while reading a graph6 byte stream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Graph6Kind {
    /// First byte is not a legal size header.
    BadHeader(u8),
    /// A byte outside the printable range 63..=126.
    IllegalByte(u8),
    /// Fewer data bytes than the declared vertex count requires.
    Truncated { expected: usize, actual: usize },
    /// More data bytes than the declared vertex count allows.
    TrailingBytes { extra: usize },
    /// Declared vertex count exceeds what this decoder is willing to allocate.
    TooLarge { n: u64 },
}

impl std::fmt::Display for Graph6Kind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Graph6Kind::BadHeader(b) => write!(f, "illegal header byte 0x{b:02x}"),
            Graph6Kind::IllegalByte(b) => write!(f, "illegal byte 0x{b:02x}"),
            Graph6Kind::Truncated { expected, actual } => {
                write!(f, "truncated bit vector: expected {expected} data bytes, got {actual}")
            }
            Graph6Kind::TrailingBytes { extra } => write!(f, "{extra} trailing bytes"),
            Graph6Kind::TooLarge { n } => write!(f, "declared order {n} is too large"),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph6 parse error at byte offset {offset}: {kind}")]
    Graph6 { offset: usize, kind: Graph6Kind },
    #[error("graph too large for graph6 encoding: {n} vertices")]
    Graph6EncodeTooLarge { n: usize },
    #[error("vertex {v} out of range for graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("loop at vertex {v}")]
    LoopEdge { v: usize },
    #[error("parallel edge {{{u},{v}}}")]
    ParallelEdge { u: usize, v: usize },
    #[error("edge {{{u},{v}}} is not an edge of the host graph")]
    EdgeNotInGraph { u: usize, v: usize },
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("budget exceeded in {what} after {partial} items")]
    BudgetExceeded { what: &'static str, partial: u64 },
    #[error("operation requires at most {max} vertices, graph has {n}")]
    TooManyVertices { n: usize, max: usize },
    #[error("operation requires at most {max} edges, graph has {m}")]
    TooManyEdges { m: usize, max: usize },
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph is not cubic")]
    NotCubic,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("graph is not regular")]
    NotRegular,
    #[error("graph is not matching covered")]
    NotMatchingCovered,
    #[error("graph is not a brace")]
    NotBrace,
    #[error("graph on {n} vertices is too small: k-extendability needs at least {need}")]
    TooSmall { n: usize, need: usize },
    #[error("cut side must be a proper non-empty vertex subset")]
    EmptyOrFullCut,
    #[error("cut is trivial")]
    TrivialCut,
    #[error("cut is not tight")]
    CutNotTight,
    #[error("forced edge set is not a matching")]
    ForcedNotMatching,
    #[error("forced and forbidden edge sets overlap")]
    ForcedForbiddenOverlap,
    #[error("vertex {v} must have degree 3, has degree {deg}")]
    DegreeNotThree { v: usize, deg: usize },
    #[error("pairing is not a bijection between the two neighbourhoods")]
    PairingNotBijective,
    #[error("designated cycle of piece {piece} is not a 4-cycle of that piece")]
    TrisumNotAFourCycle { piece: usize },
    #[error("piece {piece} has no vertex outside the shared 4-cycle")]
    TrisumNoOutsideVertex { piece: usize },
    #[error("pieces admit no joint 2-colouring")]
    TrisumColouringClash,
    #[error("cut endpoints on the X side do not all lie in one colour class")]
    MixedCutEndpoints,
    #[error("no perfect matching meets the cut exactly once")]
    NoSingleMeetingMatching,
    #[error("cut is empty")]
    EmptyCut,
    #[error(
        "cut balance violated: |X ∩ A| − |X ∩ B| = {x_diff}, |X̄ ∩ B| − |X̄ ∩ A| = {co_diff}, \
         matchings meeting the cut once: {meets_once} of {matchings}"
    )]
    BalanceViolated { x_diff: i64, co_diff: i64, meets_once: u64, matchings: u64 },
    #[error("graph has no perfect matching")]
    NoPerfectMatching,
    #[error("family step {step} failed: {source}")]
    FamilyStep {
        step: usize,
        #[source]
        source: Box<Error>,
    },
    #[error("recipe parse error on line {line}: {msg}")]
    RecipeParse { line: usize, msg: String },
    #[error("rotation file parse error on line {line}: {msg}")]
    RotationParse { line: usize, msg: String },
    #[error("rotation at vertex {v} is not a permutation of its neighbourhood")]
    InconsistentRotation { v: usize },
    #[error("rotation system has genus {genus}, operation requires a planar one")]
    NonPlanarRotation { genus: usize },
    #[error("unknown fixture name {0:?}")]
    UnknownFixture(String),
    #[error("unknown predicate {0:?}")]
    UnknownPredicate(String),
    #[error("scan input error on line {line}: {source}")]
    ScanLine {
        line: usize,
        #[source]
        source: Box<Error>,
    },
    #[error("i/o error: {0}")]
    Io(String),
    #[error("internal invariant violated: {0}")]
    Internal(&'static str),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for errors that signal an exhausted search or enumeration budget,
    /// as opposed to a definite answer or a precondition failure.
    pub fn is_budget(&self) -> bool {
        match self {
            Error::BudgetExceeded { .. } => true,
            Error::TooManyVertices { .. } | Error::TooManyEdges { .. } => true,
            Error::FamilyStep { source, .. } | Error::ScanLine { source, .. } => source.is_budget(),
            _ => false,
        }
    }
}
