//! Residual of the radial Schrödinger equation `(hbar^2/2m) u'' = V1 u`.
//!
//! `u''` uses the seven-point sixth-order central stencil, so the residual of
//! an exact zero mode is pure truncation plus round-off error.

use serde::{Deserialize, Serialize};

use super::ground::{ground_state, GroundState};
use crate::config::PhysicsConfig;
use crate::error::{Error, Result};
use crate::grid::RadialGrid;
use crate::partners::partners_at;
use crate::superpotential::Family;

/// Stencil weights for `h^2 u''`, to be divided by `STENCIL_DEN`.
const STENCIL: [f64; 7] = [2.0, -27.0, 270.0, -490.0, 270.0, -27.0, 2.0];
const STENCIL_DEN: f64 = 180.0;
pub const STENCIL_ORDER: f64 = 6.0;

/// `max_i |(hbar^2/2m) u''_i - V1_i u_i| / max |u|` over interior points of
/// the ground state's own grid.
pub fn schrodinger_residual(gs: &GroundState, grid: &RadialGrid, cfg: &PhysicsConfig) -> Result<f64> {
    if grid.points() != gs.r.as_slice() {
        return Err(Error::InvalidGrid(
            "residual grid differs from the grid the ground state was sampled on".into(),
        ));
    }
    schrodinger_residual_of(&gs.u, &gs.family, gs.ell, grid, cfg)
}

/// Residual of arbitrary samples `u` against `V1` of `fam` at `ell`.
pub fn schrodinger_residual_of(
    u: &[f64],
    fam: &Family,
    ell: f64,
    grid: &RadialGrid,
    cfg: &PhysicsConfig,
) -> Result<f64> {
    let h = grid
        .step()
        .ok_or_else(|| Error::InvalidGrid("the residual needs a uniform grid".into()))?;
    if u.len() != grid.len() {
        return Err(Error::InvalidGrid(format!(
            "{} samples for a {}-point grid",
            u.len(),
            grid.len()
        )));
    }
    if grid.len() < STENCIL.len() {
        return Err(Error::InvalidGrid(format!(
            "the residual needs at least {} points",
            STENCIL.len()
        )));
    }
    let scale = u.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    if scale == 0.0 {
        return Err(Error::InvalidGrid("u vanishes on the whole grid".into()));
    }
    let kinetic = cfg.hbar2_over_2m() / (STENCIL_DEN * h * h);
    let r = grid.points();
    let mut worst = 0.0f64;
    for i in 3..u.len() - 3 {
        let d2: f64 = STENCIL.iter().zip(&u[i - 3..=i + 3]).map(|(c, v)| c * v).sum();
        let (v1, _) = partners_at(fam, ell, r[i], cfg)?;
        worst = worst.max((kinetic * d2 - v1 * u[i]).abs());
    }
    Ok(worst / scale)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ResidualConvergence {
    pub coarse: f64,
    pub fine: f64,
    /// `log2(coarse / fine)`.
    pub observed_order: f64,
}

/// Residuals of the normalized ground state on `grid` and on its step-halved
/// refinement.
///
/// Fails with [`Error::GridTooCoarse`] when halving the step does not reduce
/// the residual.
pub fn residual_convergence(
    fam: &Family,
    ell: f64,
    grid: &RadialGrid,
    cfg: &PhysicsConfig,
) -> Result<ResidualConvergence> {
    let fine_grid = grid.refined()?;
    let coarse = schrodinger_residual(&ground_state(fam, ell, grid, cfg)?, grid, cfg)?;
    let fine = schrodinger_residual(&ground_state(fam, ell, &fine_grid, cfg)?, &fine_grid, cfg)?;
    if !(fine < coarse) {
        return Err(Error::GridTooCoarse { coarse, fine });
    }
    Ok(ResidualConvergence {
        coarse,
        fine,
        observed_order: (coarse / fine).log2(),
    })
}
