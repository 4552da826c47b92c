//! Special functions: Bessel functions of real order and hyperbolic helpers.

mod bessel;
mod hyperbolic;

pub use bessel::{
    bessel_j, bessel_jy, bessel_pair_derivative, bessel_y, BesselJY, BesselOrder, SERIES_CROSSOVER,
};
pub use hyperbolic::{ln_cosh, sech};
