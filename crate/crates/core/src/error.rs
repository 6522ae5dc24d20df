use thiserror::Error;

/// Broad classes of failure; the CLI maps each to its own exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    Parse,
    Validation,
    ResourceCap,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid Lie type `{0}`")]
    InvalidLieType(String),

    #[error("{what}: expected {expected} coordinates, found {found}")]
    DimensionMismatch {
        what: String,
        expected: usize,
        found: usize,
    },

    #[error("Weyl group enumeration cap exceeded: {0}")]
    WeylCapExceeded(String),

    #[error("weight {weight} is not dominant: {detail}")]
    NotDominant { weight: String, detail: String },

    #[error("weight {weight} is not integral: {detail}")]
    NotIntegral { weight: String, detail: String },

    #[error("invalid sl2 characteristic {labels:?}: {reason}")]
    InvalidCharacteristic { labels: Vec<i64>, reason: String },

    #[error("invalid embedding data: {0}")]
    InvalidEmbedding(String),

    #[error("k-positive root {weight} is missing from ch_t n; lambda is not b_k-dominant or the embedding data is inconsistent")]
    NotSubmultiset { weight: String },

    #[error("lambda = {lambda} is not (g,k)-regular: it pairs to zero with {root}")]
    Irregular { lambda: String, root: String },

    #[error("the compatible parabolic is not minimal; t does not act on E by a scalar")]
    NonMinimalParabolic,

    #[error("invalid inducing module: {0}")]
    InvalidModule(String),

    #[error("candidate list is empty")]
    EmptyCandidates,

    #[error("cutoff {cutoff} is below ||mu + 2 rho||^2 = {required}")]
    CutoffTooSmall { cutoff: String, required: String },

    #[error("generator {generator} does not pair positively with the grading {grading}")]
    GradingNotPositive { generator: String, grading: String },

    #[error("the pair is not an sl2 pair (rank of t is {rank_t})")]
    NotSl2Pair { rank_t: usize },

    #[error("integer overflow while counting {0}")]
    Overflow(String),

    #[error("enumeration cap exceeded: {0}")]
    EnumerationCap(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Parse(_) | Error::InvalidLieType(_) => ErrorKind::Parse,
            Error::WeylCapExceeded(_) | Error::Overflow(_) | Error::EnumerationCap(_) => {
                ErrorKind::ResourceCap
            }
            _ => ErrorKind::Validation,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
