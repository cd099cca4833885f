use thiserror::Error;

/// Errors raised across the crate.
///
/// Type indices in messages are 1-based, chamber ids 0-based, matching the
/// JSON formats.
#[derive(Debug, Error)]
pub enum Error {
    #[error("coxeter matrix is not square")]
    NotSquare,
    #[error("coxeter matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("diagonal entry m_{0}{0} must be 1")]
    BadDiagonal(usize),
    #[error("off-diagonal entry m_{0}{1} must be at least 2")]
    BadOffDiagonal(usize, usize),
    #[error("letter {letter} is not a type index for rank {rank}")]
    InvalidLetter { letter: usize, rank: usize },
    #[error("{what}: budget of {limit} exceeded")]
    BudgetExceeded { what: &'static str, limit: usize },
    #[error("coxeter group is infinite")]
    InfiniteGroup,

    #[error("group enumeration exceeded cap of {0} elements")]
    CapExceeded(usize),
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("not a permutation: {0}")]
    NotPermutation(String),
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("action does not preserve the point set (image {0})")]
    ActionNotClosed(usize),

    #[error("type {type_index} partition does not cover chamber {chamber}")]
    PartitionNotCovering { type_index: usize, chamber: usize },
    #[error("type {type_index} partition lists chamber {chamber} twice")]
    DuplicateChamber { type_index: usize, chamber: usize },
    #[error("chamber system is disconnected")]
    Disconnected,
    #[error("expected rank {expected}, found {found}")]
    WrongRank { expected: usize, found: usize },
    #[error("the {{{0},{1}}}-residue of chamber {2} is not a generalized polygon")]
    ResidueNotPolygon(usize, usize, usize),
    #[error("{{{i},{j}}}-residues disagree: {m1}-gon and {m2}-gon")]
    InconsistentResidues { i: usize, j: usize, m1: usize, m2: usize },
    #[error("invalid gallery: {0}")]
    InvalidGallery(String),

    #[error("map {0} is not a type-preserving automorphism")]
    NotAutomorphism(usize),
    #[error("group does not act freely: a nontrivial element fixes chamber {0}")]
    ActionNotFree(usize),
    #[error("a nontrivial element stabilizes the {{{0},{1}}}-residue of chamber {2}")]
    ResidueCollision(usize, usize, usize),

    #[error("no W-element matches the minimal gallery types from {x} to {y}")]
    NoSuchW { x: usize, y: usize, found: Vec<String>, expected: Vec<String> },
    #[error("not a covering: {0}")]
    NotCovering(String),
    #[error("lift data for type {0} is not a homomorphism")]
    NotHomomorphism(usize),
    #[error("lift data disagree on the principal subgroup")]
    IncompatibleOnH,
    #[error("homogeneous data carry no vertex groups")]
    MissingVertexGroups,

    #[error("unknown catalog entry '{0}'")]
    UnknownCatalogEntry(String),
    #[error("catalog entry '{name}': expected {what} {expected}, found {found}")]
    CatalogMismatch { name: String, what: &'static str, expected: String, found: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
