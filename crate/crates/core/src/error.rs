use thiserror::Error;

/// Errors raised by the elliptic machinery, the geometry layer and the oracles.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument is outside the mathematical domain of the function.
    #[error("domain error: {0}")]
    Domain(String),

    /// The nome is too close to 1 for the theta series to be trusted.
    #[error("nome q = {q} exceeds the supported limit {limit}")]
    Accuracy { q: f64, limit: f64 },

    /// Interval endpoints are misordered, non-finite or degenerate.
    #[error("invalid geometry: {0}")]
    Geometry(String),

    /// The origin lies in one of the two intervals.
    #[error("origin lies inside E")]
    OriginInside,

    /// The evaluation point lies on the normalized set [-1, alpha] ∪ [beta, 1].
    #[error("evaluation point {0} lies inside E")]
    PointInside(f64),

    /// An operation was asked for the wrong side of the set.
    #[error("operation requires the {expected} region")]
    Region { expected: &'static str },

    /// The uniformizing map has a pole at the requested parameter.
    #[error("pole of the uniformizing map at u = {0}")]
    Pole(f64),

    /// Bisection or adaptive quadrature failed to reach its tolerance.
    #[error("convergence failure: {0}")]
    Convergence(String),

    /// The discrete minimax LP failed.
    #[error("LP solver failure: {0}")]
    Solver(String),

    /// The slope fit for the convergence factor is too poor to report.
    #[error("slope fit residual {residual:.3e} exceeds {limit}")]
    Fit { residual: f64, limit: f64 },
}

impl Error {
    /// Short stable identifier, used by the CLI on stderr.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Domain(_) => "domain",
            Error::Accuracy { .. } => "accuracy",
            Error::Geometry(_) => "geometry",
            Error::OriginInside => "origin-inside",
            Error::PointInside(_) => "point-inside",
            Error::Region { .. } => "region",
            Error::Pole(_) => "pole",
            Error::Convergence(_) => "convergence",
            Error::Solver(_) => "solver",
            Error::Fit { .. } => "fit",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
