use thiserror::Error;

/// Errors produced by the library.
///
/// Every variant maps to a stable machine-readable code through [`Error::code`],
/// which the command-line front end prints as `{"error": code}`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the hexagon set is empty")]
    EmptySystem,
    #[error("duplicate hexagon ({0}, {1})")]
    DuplicateHexagon(i32, i32),
    #[error("the hexagon set is not connected")]
    NotConnected,
    #[error("the hexagon set is not a benzenoid")]
    NotBenzenoid,
    #[error("the coronoid has a hole consisting of a single hexagon")]
    DegenerateCoronoid,
    #[error("isometry index {0} is out of range")]
    InvalidIsometry(u8),
    #[error("perimeter index {index} is out of range (count {count})")]
    InvalidPerimeter { index: usize, count: usize },
    #[error("iteration vector has length {got}, expected {expected}")]
    IterationLength { expected: usize, got: usize },
    #[error("cycle {0} is not admissible: {1}")]
    NotAdmissible(usize, String),
    #[error("the graph contains no 6-cycle")]
    NoHexagonFound,
    #[error("6-cycles cannot be placed consistently on the hexagonal grid")]
    EmbeddingConflict,
    #[error("the constructed embedding does not reproduce the input graph")]
    VerificationFailed,
    #[error("malformed map: {0}")]
    MalformedMap(String),
    #[error("graph is not simple: {0}")]
    NotSimple(String),
    #[error("map is not cubic")]
    NotCubic,
    #[error("map is not planar (V - E + F = {0})")]
    NotPlanar(i64),
    #[error("the graph is not connected")]
    GraphNotConnected,
    #[error("face {0} does not exist")]
    InvalidFace(usize),
    #[error("face {0} belongs to the patch")]
    FaceInPatch(usize),
    #[error("face set is not a perforated patch: {0}")]
    NotPerforatedPatch(String),
    #[error("degree-2 vertex {0} is not on the outer face")]
    InteriorDegreeTwo(usize),
    #[error("the graph has a vertex of degree {0}, expected 2 or 3")]
    InvalidDegree(usize),
    #[error("the graph has {0} vertices, above the enumeration limit of 40")]
    TooLargeForEnumeration(usize),
    #[error("more than {0} Kekule structures")]
    CapExceeded(usize),
    #[error("the graph has no Kekule structure")]
    NoKekuleStructure,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Stable snake-case identifier for the error kind.
    pub fn code(&self) -> &'static str {
        match self {
            Error::EmptySystem => "empty_system",
            Error::DuplicateHexagon(..) => "duplicate_hexagon",
            Error::NotConnected => "not_connected",
            Error::NotBenzenoid => "not_benzenoid",
            Error::DegenerateCoronoid => "degenerate_coronoid",
            Error::InvalidIsometry(_) => "invalid_isometry",
            Error::InvalidPerimeter { .. } => "invalid_perimeter",
            Error::IterationLength { .. } => "iteration_length",
            Error::NotAdmissible(..) => "not_admissible",
            Error::NoHexagonFound => "no_hexagon_found",
            Error::EmbeddingConflict => "embedding_conflict",
            Error::VerificationFailed => "verification_failed",
            Error::MalformedMap(_) => "malformed_map",
            Error::NotSimple(_) => "not_simple",
            Error::NotCubic => "not_cubic",
            Error::NotPlanar(_) => "not_planar",
            Error::GraphNotConnected => "graph_not_connected",
            Error::InvalidFace(_) => "invalid_face",
            Error::FaceInPatch(_) => "face_in_patch",
            Error::NotPerforatedPatch(_) => "not_perforated_patch",
            Error::InteriorDegreeTwo(_) => "interior_degree_two",
            Error::InvalidDegree(_) => "invalid_degree",
            Error::TooLargeForEnumeration(_) => "too_large_for_enumeration",
            Error::CapExceeded(_) => "cap_exceeded",
            Error::NoKekuleStructure => "no_kekule_structure",
            Error::InvalidInput(_) => "invalid_input",
            Error::Internal(_) => "internal",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
