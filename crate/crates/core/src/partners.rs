//! Superpartner potentials and the shape-invariance check.
//!
//! `V1 = W^2 - (hbar/sqrt(2m)) W'` and `V2 = W^2 + (hbar/sqrt(2m)) W'` are built
//! pointwise from the analytic superpotential. The literature closed forms of
//! each family are kept alongside, transcribed as published, so that the two
//! routes can be compared (see [`crate::errata`]).

use serde::{Deserialize, Serialize};

use crate::config::{PhysicsConfig, Tolerances};
use crate::error::{Error, Result};
use crate::grid::RadialGrid;
use crate::specfun::sech;
use crate::superpotential::{central_w_family, parity_sign, remainder_of, Family};

/// Guards the relative constancy metric against a vanishing mean.
pub const CONSTANCY_EPSILON: f64 = 1e-30;

/// `V1` and `V2` sampled on a grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PartnerPair {
    pub ell: f64,
    pub family: Family,
    pub r: Vec<f64>,
    pub v1: Vec<f64>,
    pub v2: Vec<f64>,
}

/// `(V1, V2)` at one radius from the superpotential.
pub fn partners_at(fam: &Family, ell: f64, r: f64, cfg: &PhysicsConfig) -> Result<(f64, f64)> {
    let (v1, v2) = partners_regular(fam, ell, r, cfg)?;
    Ok((v1 + centrifugal(ell, r, cfg), v2 + centrifugal(ell + 1.0, r, cfg)))
}

/// `W^2 -+ (hbar/sqrt(2m)) W'` without their barrier terms
/// `hbar^2 l(l+1)/2mr^2` and `hbar^2 (l+1)(l+2)/2mr^2`:
///
/// ```text
/// V1 - barrier(l)   = (hbar^2/2m) (w^2 - 2 w (l+1)/r - w')
/// V2 - barrier(l+1) = (hbar^2/2m) (w^2 - 2 w (l+1)/r + w')
/// ```
///
/// `V2(l)` and `V1(l+1)` share the barrier bit for bit, so their difference
/// does not inherit its rounding error near the origin.
fn partners_regular(fam: &Family, ell: f64, r: f64, cfg: &PhysicsConfig) -> Result<(f64, f64)> {
    let cv = central_w_family(fam, ell, r, cfg)?;
    if cv.pole {
        return Err(Error::Pole { r });
    }
    let s2 = cfg.hbar2_over_2m();
    let cross = cv.w * cv.w - 2.0 * cv.w * (ell + 1.0) / r;
    Ok((s2 * (cross - cv.w_prime), s2 * (cross + cv.w_prime)))
}

pub fn partners_from_w(
    fam: &Family,
    ell: f64,
    grid: &RadialGrid,
    cfg: &PhysicsConfig,
) -> Result<PartnerPair> {
    let mut v1 = Vec::with_capacity(grid.len());
    let mut v2 = Vec::with_capacity(grid.len());
    for &r in grid.points() {
        let (a, b) = partners_at(fam, ell, r, cfg)?;
        v1.push(a);
        v2.push(b);
    }
    Ok(PartnerPair {
        ell,
        family: fam.clone(),
        r: grid.points().to_vec(),
        v1,
        v2,
    })
}

/// Centrifugal barrier `hbar^2 l(l+1) / (2 m r^2)`.
pub fn centrifugal(ell: f64, r: f64, cfg: &PhysicsConfig) -> f64 {
    cfg.hbar2_over_2m() * ell * (ell + 1.0) / (r * r)
}

/// Constant energy term of `V1`, i.e. `-E_0` relative to the central
/// potential. Zero for the general Bessel family, which has no closed form.
pub fn constant_shift(fam: &Family, ell: f64, cfg: &PhysicsConfig) -> Result<f64> {
    let (hbar, m) = (cfg.hbar(), cfg.mass());
    Ok(match fam {
        Family::GeneralBessel { .. } => 0.0,
        Family::HarmonicG1 { omega, c } => -hbar * omega * (ell + 1.5 - c),
        Family::UpsideDownGm1 { omega } => -parity_sign(ell)? * hbar * omega * (ell + 1.5),
        Family::CentralPoschlTeller { k0, .. } => {
            let k = k0.at(ell)?;
            cfg.hbar2_over_2m() * k * k * (ell + 2.0).powi(2)
        }
        Family::CoulombRIndep { kappa } => {
            m / (2.0 * hbar * hbar) * (kappa / (ell + 1.0)).powi(2)
        }
    })
}

/// Central potential `V(r)` recovered from the constructive `V1` by removing
/// the centrifugal barrier and the constant shift.
pub fn central_potential(fam: &Family, ell: f64, r: f64, cfg: &PhysicsConfig) -> Result<f64> {
    let (v1, _) = partners_at(fam, ell, r, cfg)?;
    Ok(v1 - centrifugal(ell, r, cfg) - constant_shift(fam, ell, cfg)?)
}

/// Published closed forms of `(V1, V2)` for each analytic family, evaluated
/// literally.
///
/// The Pöschl-Teller `V2` is printed without the `+` in front of its final
/// constant; it is restored here. All other signs and powers are as printed,
/// including those that disagree with the superpotential construction.
pub fn partners_closed_form(
    fam: &Family,
    ell: f64,
    r: f64,
    cfg: &PhysicsConfig,
) -> Result<(f64, f64)> {
    if !(r > 0.0) {
        return Err(Error::NonPositiveArgument(r));
    }
    let (hbar, m) = (cfg.hbar(), cfg.mass());
    let s2 = cfg.hbar2_over_2m();
    let inv_r2 = 1.0 / (r * r);
    Ok(match fam {
        Family::GeneralBessel { .. } => return Err(Error::NoClosedForm("general")),
        Family::HarmonicG1 { omega, c } => {
            let osc = 0.5 * m * omega * omega * r * r;
            let v1 = osc + s2 * (c * (c + 1.0) + (ell + 1.0) * (ell - 2.0 * c)) * inv_r2
                - hbar * omega * (ell + 1.5 - c);
            let v2 = osc + s2 * (c * (c + 1.0) + (ell + 2.0) * (ell + 1.0 - 2.0 * c)) * inv_r2
                - hbar * omega * (ell + 0.5 - c);
            (v1, v2)
        }
        Family::UpsideDownGm1 { omega } => {
            let osc = 0.5 * m * omega * omega * r * r;
            let sign = parity_sign(ell)?;
            let v1 = osc + s2 * ell * (ell + 1.0) * inv_r2 + sign * hbar * omega * (ell + 1.5);
            let v2 =
                osc + s2 * (ell + 1.0) * (ell + 2.0) * inv_r2 + sign * hbar * omega * (ell + 0.5);
            (v1, v2)
        }
        Family::CentralPoschlTeller { k0, c } => {
            let k = k0.at(ell)?;
            let arg = k * (r + c);
            let sech2 = sech(arg).powi(2);
            let tanh_term = hbar * hbar * k * k / m * (ell + 1.0) * (ell + 2.0) * arg.tanh() / r;
            let tail = s2 * k * k * (ell + 2.0).powi(2);
            let v1 = s2 * k * k * (ell + 2.0) * (ell + 3.0) * sech2 - tanh_term
                + s2 * ell * (ell + 1.0) * inv_r2
                + tail;
            let v2 = s2 * k * k * (ell + 1.0) * (ell + 2.0) * sech2 - tanh_term
                + s2 * (ell + 1.0) * (ell + 2.0) * inv_r2
                + tail;
            (v1, v2)
        }
        Family::CoulombRIndep { kappa } => {
            let shift = m / (2.0 * hbar * hbar) * (kappa / (ell + 1.0)).powi(2);
            let v1 = -kappa / r + s2 * ell * (ell + 1.0) * inv_r2 + shift;
            let v2 = -kappa / r + s2 * (ell + 1.0) * (ell + 2.0) * inv_r2 + shift;
            (v1, v2)
        }
    })
}

/// Published central potential of each analytic family, evaluated literally.
pub fn central_potential_closed_form(
    fam: &Family,
    ell: f64,
    r: f64,
    cfg: &PhysicsConfig,
) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::NonPositiveArgument(r));
    }
    let (hbar, m) = (cfg.hbar(), cfg.mass());
    Ok(match fam {
        Family::GeneralBessel { .. } => return Err(Error::NoClosedForm("general")),
        Family::HarmonicG1 { omega, .. } | Family::UpsideDownGm1 { omega } => {
            0.5 * m * omega * omega * r * r
        }
        Family::CentralPoschlTeller { k0, c } => {
            let k = k0.at(ell)?;
            let arg = k * (r + c);
            cfg.hbar2_over_2m() * k * k * (ell + 2.0) * (ell + 3.0) * sech(arg).powi(2)
                - hbar * hbar * k * k / m * (ell + 1.0) * (ell + 2.0) * arg.tanh() / r
        }
        Family::CoulombRIndep { kappa } => -kappa / r,
    })
}

/// Constancy of a profile that should not depend on `r`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InvarianceReport {
    /// Mean of the profile over the grid.
    pub r_inferred: f64,
    /// Largest `|value - mean|`.
    pub max_abs_deviation: f64,
    /// `(max - min) / (|mean| + CONSTANCY_EPSILON)`.
    pub rel_deviation: f64,
    /// `rel_deviation < rel_constancy`.
    pub passed: bool,
    /// Analytic remainder of the family at this `l`.
    pub expected: f64,
    /// `|r_inferred - expected| / max(|expected|, CONSTANCY_EPSILON)`.
    pub remainder_rel_error: f64,
}

impl InvarianceReport {
    pub fn from_profile(values: &[f64], expected: f64, tol: &Tolerances) -> Self {
        let n = values.len() as f64;
        let mean = values.iter().sum::<f64>() / n;
        let (lo, hi) = values
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| (lo.min(v), hi.max(v)));
        let max_abs_deviation = values.iter().map(|v| (v - mean).abs()).fold(0.0, f64::max);
        let rel_deviation = (hi - lo) / (mean.abs() + CONSTANCY_EPSILON);
        Self {
            r_inferred: mean,
            max_abs_deviation,
            rel_deviation,
            passed: rel_deviation < tol.rel_constancy,
            expected,
            remainder_rel_error: (mean - expected).abs() / expected.abs().max(CONSTANCY_EPSILON),
        }
    }

    /// Constant and equal to the family's analytic remainder.
    pub fn matches_remainder(&self, tol: &Tolerances) -> bool {
        self.passed && self.remainder_rel_error < tol.rel_constancy
    }
}

/// `V2(r, l) - V1(r, l+1)` over the grid.
pub fn shape_invariance_check(
    fam: &Family,
    ell: f64,
    grid: &RadialGrid,
    cfg: &PhysicsConfig,
    tol: &Tolerances,
) -> Result<InvarianceReport> {
    shape_invariance_between(fam, fam, ell, grid, cfg, tol)
}

/// Like [`shape_invariance_check`], but `V2(r, l)` comes from `upper` and
/// `V1(r, l+1)` from `lower`.
pub fn shape_invariance_between(
    upper: &Family,
    lower: &Family,
    ell: f64,
    grid: &RadialGrid,
    cfg: &PhysicsConfig,
    tol: &Tolerances,
) -> Result<InvarianceReport> {
    let profile = grid
        .points()
        .iter()
        .map(|&r| {
            let (_, v2) = partners_regular(upper, ell, r, cfg)?;
            let (v1_next, _) = partners_regular(lower, ell + 1.0, r, cfg)?;
            Ok(v2 - v1_next)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(InvarianceReport::from_profile(
        &profile,
        remainder_of(upper, ell, cfg)?,
        tol,
    ))
}

/// Remainder evaluated from `w`, `w'` and `G(l)` alone:
///
/// ```text
/// R = hbar^2/2m { w^2 (1 - G^2) + w' (1 + G) + 2 (w/r) (G (l+2) - (l+1)) }
/// ```
///
/// This route assumes `w(r, l+1) = G(l) w(r, l)`; it is independent of the
/// partner construction used by [`shape_invariance_check`].
pub fn remainder_profile(
    fam: &Family,
    ell: f64,
    grid: &RadialGrid,
    cfg: &PhysicsConfig,
) -> Result<Vec<f64>> {
    let g = fam.ratio_g(ell)?;
    grid.points()
        .iter()
        .map(|&r| {
            let cv = central_w_family(fam, ell, r, cfg)?;
            if cv.pole {
                return Err(Error::Pole { r });
            }
            let (w, wp) = (cv.w, cv.w_prime);
            Ok(cfg.hbar2_over_2m()
                * (w * w * (1.0 - g * g)
                    + wp * (1.0 + g)
                    + 2.0 * w / r * (g * (ell + 2.0) - (ell + 1.0))))
        })
        .collect()
}
