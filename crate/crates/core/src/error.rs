use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// A word contains a letter index outside the system's generator range.
    #[error("letter index {letter} out of range for rank {rank}")]
    LetterOutOfRange { letter: u8, rank: usize },

    /// A system failed validation when constructed.
    #[error("invalid Coxeter system: {0}")]
    InvalidSystem(String),

    /// The braid-move closure of a word exceeded the configured cap.
    #[error("braid closure exceeded cap of {cap} words")]
    ClosureCapExceeded { cap: usize },

    /// Ball enumeration exceeded the configured element cap.
    #[error("ball enumeration exceeded cap of {cap} elements")]
    BallCapExceeded { cap: usize },

    /// The two crossing tests disagreed or the order cap was hit
    /// without the root test confirming parallelism.
    #[error("undetermined crossing verdict for walls {wall_a:?} and {wall_b:?}: {detail}")]
    UndeterminedCrossing {
        wall_a: String,
        wall_b: String,
        detail: String,
    },

    /// crosses() was called with the same wall twice.
    #[error("crossing verdict requested for a wall against itself")]
    IdenticalWalls,

    /// delete_pair preconditions violated.
    #[error("invalid deletion: {0}")]
    InvalidDeletion(String),

    /// An index argument was out of range for the path or word.
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    /// concat was called on paths whose endpoints do not meet.
    #[error("path endpoints do not match for concatenation")]
    EndpointMismatch,

    /// The straightening recursion exceeded its depth cap.
    #[error("recursion depth cap of {cap} exceeded")]
    DepthCapExceeded { cap: usize },

    /// tracking_correspondence preconditions are not met.
    #[error("correspondence infeasible: {0}")]
    Infeasible(String),

    /// Invalid quasi-geodesic parameters.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// The floating-point solver lost confidence in a sign or identity test.
    #[error("geometric solver precision failure: {0}")]
    SolverPrecision(String),

    /// The fast solver and the Tits baseline disagreed on a query.
    #[error("solver disagreement on word problem: {0}")]
    SolverDisagreement(String),

    /// A structural invariant that the algorithms guarantee was violated.
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
