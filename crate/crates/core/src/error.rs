use thiserror::Error;

/// Errors raised by the operator-algebra and model routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("site {0} appears more than once")]
    DuplicateSite(usize),
    #[error("site {site} is outside 1..={n_sites}")]
    SiteOutOfRange { site: usize, n_sites: usize },
    #[error("matrix is not Hermitian (‖M − M†‖_F = {0:e})")]
    NotHermitian(f64),
    #[error("matrix is singular")]
    Singular,
    #[error("bad index {0}")]
    BadIndex(usize),
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("state is not a simultaneous eigenstate of the plaquette operators (residual {0:e})")]
    NotSectorEigenstate(f64),
    #[error("operator leaks out of the subspace (residual {0:e})")]
    SubspaceLeak(f64),
    #[error("permuted basis leaves the span (max residual {0:e})")]
    NotClosed(f64),
    #[error("basis vectors are linearly dependent (smallest Gram eigenvalue {0:e})")]
    LinearlyDependent(f64),
    #[error("matrix is not unitary (‖UU† − I‖_F = {0:e})")]
    NotUnitary(f64),
    #[error("permuted state has support outside the original support (weight {0:e})")]
    SupportMismatch(f64),
    #[error("amplitude ratio at basis index {index} has modulus {modulus}")]
    NonUnimodularRatio { index: usize, modulus: f64 },
    #[error("site ordering {0:?} is not supported")]
    UnsupportedOrdering([usize; 4]),
    #[error("no unit scalar aligns the two operators (distance {0:e})")]
    NoScalarMatch(f64),
    #[error("bad subsystem {0:?}")]
    BadSubsystem(Vec<usize>),
    #[error("invalid density matrix: {0}")]
    InvalidDensity(String),
    #[error("state is not normalized (norm² = {0})")]
    NotNormalized(f64),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Variant name, used in machine-readable reports.
    pub fn name(&self) -> &'static str {
        match self {
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::DuplicateSite(_) => "DuplicateSite",
            Error::SiteOutOfRange { .. } => "SiteOutOfRange",
            Error::NotHermitian(_) => "NotHermitian",
            Error::Singular => "Singular",
            Error::BadIndex(_) => "BadIndex",
            Error::UnknownName(_) => "UnknownName",
            Error::NotSectorEigenstate(_) => "NotSectorEigenstate",
            Error::SubspaceLeak(_) => "SubspaceLeak",
            Error::NotClosed(_) => "NotClosed",
            Error::LinearlyDependent(_) => "LinearlyDependent",
            Error::NotUnitary(_) => "NotUnitary",
            Error::SupportMismatch(_) => "SupportMismatch",
            Error::NonUnimodularRatio { .. } => "NonUnimodularRatio",
            Error::UnsupportedOrdering(_) => "UnsupportedOrdering",
            Error::NoScalarMatch(_) => "NoScalarMatch",
            Error::BadSubsystem(_) => "BadSubsystem",
            Error::InvalidDensity(_) => "InvalidDensity",
            Error::NotNormalized(_) => "NotNormalized",
        }
    }
}
