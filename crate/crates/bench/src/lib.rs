//! Fixed workloads shared by the benchmarks in `benches/`.

use shapeinv_core::{Family, RadialGrid};

/// Bessel orders and arguments covering the series, continued-fraction and
/// reflection branches.
pub const BESSEL_POINTS: [(f64, f64); 6] = [(0.0, 1.0), (0.75, 3.0), (1.0, 5.0), (7.5, 2.0), (-3.3, 12.0), (20.0, 45.0)];

pub fn invariance_grid() -> RadialGrid {
    RadialGrid::uniform(1e-2, 20.0, 1000).expect("valid grid")
}

pub fn residual_grid() -> RadialGrid {
    RadialGrid::uniform(1e-3, 20.0, 4000).expect("valid grid")
}

/// One representative of each family with its label.
pub fn families() -> Vec<(&'static str, Family)> {
    vec![
        ("harmonic", Family::harmonic(1.0)),
        ("updown", Family::upside_down(1.0)),
        ("cpt", Family::central_poschl_teller(1.0)),
        ("coulomb", Family::coulomb(1.0)),
        ("general", Family::general(3.0, 1.0, 0.0)),
    ]
}
