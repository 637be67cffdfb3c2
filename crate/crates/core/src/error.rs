use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("lattice rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("exact division failed: {0}")]
    NonExactDivision(String),
    #[error("element is not a q-power times a bar-invariant element")]
    NotNormalizable,
    #[error("lambda is not skew-symmetric at ({0},{1})")]
    NotSkew(usize, usize),
    #[error("lambda * b_tilde is not of the form -[D;0]: {0}")]
    NotCompatible(String),
    #[error("compatibility diagonal has non-positive entry d_{index} = {value}")]
    NonPositiveD { index: usize, value: i64 },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("mutation direction {k} out of range 1..={n}")]
    DirectionOutOfRange { k: usize, n: usize },
    #[error("mutation depth {depth} exceeds the configured limit {limit}")]
    DepthLimit { depth: usize, limit: usize },
    #[error("invalid triangulation: {0}")]
    InvalidTriangulation(String),
    #[error("arc {0} is not an internal arc")]
    NotInternal(i64),
    #[error("no compatible lambda found for b_tilde")]
    NoCompatibleLambda,
    #[error("string letters {pos} and {next} are not composable")]
    NotComposable { pos: usize, next: usize },
    #[error("string is not reduced at letter {0}")]
    NotReduced(usize),
    #[error("string contains a relation at letters {0},{1}")]
    RelationViolated(usize, usize),
    #[error("string parse error: {0}")]
    Parse(String),
    #[error("ambiguous connecting arrow: {0}")]
    AmbiguousConnector(String),
    #[error("consecutive string vertices {0} and {1} do not share a triangle through the given arrow")]
    NotCrossingSequence(i64, i64),
    #[error("snake graph construction is geometrically inconsistent at tile {0}")]
    GeometricInconsistency(usize),
    #[error("matching cannot twist on tile {0}")]
    CannotTwist(usize),
    #[error("enclosed tiles {0:?} do not form a canonical submodule")]
    BijectionViolation(Vec<usize>),
    #[error("inconsistent valuation: {0}")]
    InconsistentValuation(String),
    #[error("canonical submodule {0:?} is unreachable by single-index steps")]
    UnreachableSubmodule(Vec<usize>),
    #[error("internal error: {0}")]
    Internal(String),
    #[error("no multiplication exponent solves the identity: {0}")]
    NoSolution(String),
    #[error("multiplication exponent is not unique: {0}")]
    AmbiguousSolution(String),
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
