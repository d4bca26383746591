use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Coupling at or above the strict admissibility bound.
    #[error("overcritical coupling: kappa/omega_b = {ratio} is not below the bound {bound}")]
    OvercriticalCoupling { ratio: f64, bound: f64 },

    #[error("no real stationary point: omega_x^2 < 3 omega_b^2 (omega_x = {omega_x}, omega_b = {omega_b})")]
    NoRealStationaryPoint { omega_b: f64, omega_x: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("quadrature did not converge: requested {requested:e}, achieved {achieved:e}")]
    Quadrature { requested: f64, achieved: f64 },

    #[error("residue formula ill-conditioned: dressed poles {0:e} apart")]
    IllConditioned(f64),
}
