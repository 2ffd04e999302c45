use thiserror::Error;

/// Failure modes shared by all routes.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("order alpha = {alpha} outside the admissible range {range}")]
    InvalidOrder { alpha: f64, range: &'static str },

    #[error("invalid evaluation point: {0}")]
    InvalidPoint(String),

    #[error("{what} did not converge: {detail}")]
    NonConvergence { what: &'static str, detail: String },

    #[error("Gamma function pole at z = {re} + {im}i")]
    Pole { re: f64, im: f64 },

    #[error("unsupported Bessel order nu = {0} (only -1/2, 0, 1/2)")]
    UnsupportedOrder(f64),

    #[error("radial derivative is singular at the origin for alpha = {0}")]
    OriginSingularity(f64),

    #[error("fundamental solution diverges at origin (n = {n}, alpha = {alpha})")]
    OriginDivergence { n: u32, alpha: f64 },

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("contour truncation failed: tail bound {tail:e} at y_max = {y_max} exceeds {tol:e}")]
    ContourFailure { tail: f64, y_max: f64, tol: f64 },

    #[error("contour abscissa sigma = {sigma} must lie in (0, {bound})")]
    InvalidContour { sigma: f64, bound: f64 },

    #[error("unsupported dimension n = {0}")]
    UnsupportedDimension(u32),

    #[error("moment order beta = {beta} outside ({lo}, {hi})")]
    MomentOutOfRange { beta: f64, lo: f64, hi: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
