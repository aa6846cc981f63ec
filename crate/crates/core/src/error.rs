use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("negative threshold {0}")]
    NegativeThreshold(String),
    #[error("weight vector is empty or has a negative entry")]
    InvalidWeights,
    #[error("all-zero weights with positive threshold: the threshold set is empty")]
    EmptyThreshold,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("multiplicities must be positive")]
    ZeroMultiplicity,
    #[error("forms have mixed degrees ({0} and {1})")]
    MixedDegrees(u32, u32),
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("variable x{index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },
    #[error("zero form where a nonzero form is required")]
    ZeroForm,
    #[error("ideal is not proper (a generator is a nonzero constant)")]
    UnitIdeal,
    #[error("subscheme {0} is outside the supported catalog")]
    UnsupportedCatalog(String),
    #[error("unsupported ambient space P^{0} (need 1 <= n <= 3)")]
    UnsupportedAmbient(usize),
    #[error("truncation level must be at least 1")]
    ZeroLevel,
    #[error("weights violate sum(beta_i t_i) = 1")]
    WeightNormalization,
    #[error("scaling factor must be positive")]
    NonPositiveScale,
    #[error("profiles are inconsistent: {0}")]
    InconsistentProfiles(String),
    #[error("input is not a reduced point of P^2")]
    NotAPoint,
    #[error("number of blown-up points mismatch: {0} vs {1}")]
    BlowupMismatch(usize, usize),
    #[error("only blow-ups of P^2 in at most 3 points are supported (got {0})")]
    TooManyPoints(usize),
    #[error("class {0} is not nef")]
    NotNef(String),
    #[error("closed form requires D^2 = 0 and A.D > 0")]
    UnsupportedClosedForm,
    #[error("negative-curve reduction did not terminate for {0}")]
    NonConvergentReduction(String),
    #[error("zero is not allowed here")]
    ZeroValue,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("place set must contain the archimedean place")]
    MissingArchimedean,
    #[error("point lies on the support of {0}")]
    OnSupport(String),
    #[error("all point coordinates are zero")]
    ZeroPoint,
    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
