use alloc::string::String;

/// Errors raised by the geometry kernel, the strip builders and the solvers.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid geometry: {0}")]
    InvalidGeometry(String),
    #[error("boundary is self-intersecting: {0}")]
    SelfIntersecting(String),
    #[error("region is not convex: {0}")]
    NotConvex(String),
    #[error("offset radius {radius} exceeds certified reach {reach}")]
    ReachViolation { radius: f64, reach: f64 },
    #[error("parametrization is not a diffeomorphism: {0}")]
    NotADiffeomorphism(String),
    #[error("argument outside the admissible domain: {0}")]
    DomainError(String),
    #[error("ball of radius {radius} centred at ({x}, {y}) is not contained in the strip")]
    BallNotContained { x: f64, y: f64, radius: f64 },
    #[error("inner set is empty for r = {0}")]
    EmptyInnerSet(f64),
    #[error("inner set degenerates for r = {0}: end trims cross")]
    DegenerateInnerSet(f64),
    #[error("strip of normalized length {length} is shorter than {required}")]
    StripTooShort { length: f64, required: f64 },
    #[error("no sign change of the inner Cheeger residual on the search interval")]
    NoRoot,
    #[error("empty region")]
    EmptyRegion,
    #[error("property violated: {check}: {detail}")]
    PropertyViolation { check: String, detail: String },
}

pub type Result<T> = core::result::Result<T, Error>;

impl Error {
    pub(crate) fn geometry(msg: impl Into<String>) -> Self {
        Error::InvalidGeometry(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::DomainError(msg.into())
    }

    pub(crate) fn violation(check: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::PropertyViolation { check: check.into(), detail: detail.into() }
    }
}
