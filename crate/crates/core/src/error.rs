use alloc::string::String;

/// Errors produced by the numerics.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("factor frequencies are incommensurate: {0}")]
    Incommensurate(String),

    #[error("operation needs a harmonic expansion: {0}")]
    NotExpandable(String),

    #[error("Gram matrix is not positive definite at {precision_bits} bits (condition estimate {condition:e})")]
    NotPositiveDefinite { precision_bits: u32, condition: f64 },

    #[error("sampling grid does not cover one period: n*dt = {covered}, period = {period}")]
    GridPeriodMismatch { covered: f64, period: f64 },

    #[error("bound estimate is not positive: {0}")]
    BoundRegime(String),

    #[error("potential is singular at {count} grid point(s), first at x = {first_x}")]
    SingularPotential { count: usize, first_x: f64 },

    #[error("eigensolver did not converge (residual {residual:e})")]
    NotConverged { residual: f64 },

    #[error("extended precision arithmetic failed: {0}")]
    Precision(String),
}

pub type Result<T> = core::result::Result<T, Error>;
