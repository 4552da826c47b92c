use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("argument must be positive (got x = {0})")]
    NonPositiveArgument(f64),

    #[error("Bessel order must be finite (got nu = {0})")]
    NonFiniteOrder(f64),

    #[error("Bessel evaluation overflowed at nu = {nu}, x = {x}")]
    Overflow { nu: f64, x: f64 },

    #[error("Bessel continued fraction did not converge at nu = {nu}, x = {x}")]
    BesselConvergence { nu: f64, x: f64 },

    #[error("G(l) = -1 makes the Bessel coefficients singular")]
    SingularRatio,

    #[error("imaginary B_l regime: ((G-1)/(G+1)) R_l = {value} < 0 (G = {g}, R = {remainder})")]
    ImaginaryB { g: f64, remainder: f64, value: f64 },

    #[error("the Bessel solution requires G > 1 and R > 0 (got G = {g}, R = {remainder})")]
    BesselRegime { g: f64, remainder: f64 },

    #[error("invalid family parameter: {0}")]
    InvalidParameter(String),

    #[error("angular momentum l = {0} must be an integer for this family")]
    NonIntegralEll(f64),

    #[error("central superpotential has a pole at r = {r}")]
    Pole { r: f64 },

    #[error("no closed-form partner potentials for the {0} family")]
    NoClosedForm(&'static str),

    #[error("ground state is not normalizable: {0}")]
    NotNormalizable(String),

    #[error("quadrature failed to converge: {0}")]
    Quadrature(String),

    #[error("residual does not decrease under step halving ({coarse:e} -> {fine:e})")]
    GridTooCoarse { coarse: f64, fine: f64 },

    #[error("spatial dimension D = {0} is below 3")]
    Dimension(u32),

    #[error("Y_A(B r) vanishes at the requested node r = {0}")]
    NodeAtYZero(f64),
}
