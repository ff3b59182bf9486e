use thiserror::Error;

/// Errors raised by the library. Each variant has a stable machine-readable
/// name (see [`Error::name`]) that the CLI prints on its diagnostic stream.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degenerate vector: {0}")]
    DegenerateVector(String),
    #[error("flag point does not lie on its line (residual {residual:e})")]
    NotIncident { residual: f64 },
    #[error("flags are not in generic position: {0}")]
    NonGenericFlags(String),
    #[error("ratio {value} is not positive, its logarithm is undefined")]
    NonPositiveRatio { value: f64 },
    #[error("determinant {det} is not 1 within tolerance")]
    NotUnimodular { det: f64 },
    #[error("expected a {expected} element, got {found}")]
    WrongClass {
        expected: &'static str,
        found: &'static str,
    },
    #[error("invalid domain: {0}")]
    InvalidDomain(String),
    #[error("point ({0}, {1}) is not strictly inside the domain")]
    PointOutsideDomain(f64, f64),
    #[error("chord endpoints coincide")]
    CoincidentPoints,
    #[error("integration region is not contained in the domain")]
    RegionNotContained,
    #[error("boundary eigenvalues are not real (tau^2 - 4/lambda = {discriminant:e})")]
    ComplexEigenvalues { discriminant: f64 },
    #[error("parameter {name} = {value} must be positive")]
    NonPositiveParameter { name: &'static str, value: f64 },
    #[error("invalid boundary data: {0}")]
    InvalidBoundary(String),
    #[error("coordinates are inconsistent with the {stratum} stratum: {reason}")]
    InconsistentStratum {
        stratum: &'static str,
        reason: String,
    },
    #[error("{stratum} takes {expected} coordinates, got {found}")]
    WrongArity {
        stratum: &'static str,
        expected: usize,
        found: usize,
    },
}

impl Error {
    pub fn name(&self) -> &'static str {
        match self {
            Error::DegenerateVector(_) => "DegenerateVector",
            Error::NotIncident { .. } => "NotIncident",
            Error::NonGenericFlags(_) => "NonGenericFlags",
            Error::NonPositiveRatio { .. } => "NonPositiveRatio",
            Error::NotUnimodular { .. } => "NotUnimodular",
            Error::WrongClass { .. } => "WrongClass",
            Error::InvalidDomain(_) => "InvalidDomain",
            Error::PointOutsideDomain(..) => "PointOutsideDomain",
            Error::CoincidentPoints => "CoincidentPoints",
            Error::RegionNotContained => "RegionNotContained",
            Error::ComplexEigenvalues { .. } => "ComplexEigenvalues",
            Error::NonPositiveParameter { .. } => "NonPositiveParameter",
            Error::InvalidBoundary(_) => "InvalidBoundary",
            Error::InconsistentStratum { .. } => "InconsistentStratum",
            Error::WrongArity { .. } => "WrongArity",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
