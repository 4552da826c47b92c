//! D-dimensional form of the scheme.
//!
//! In `D >= 3` dimensions the radial problem is the 3D one with
//! `l -> l + (D-3)/2`, so every operation delegates to its 3D counterpart at
//! the effective (possibly half-integral) angular momentum.

use serde::{Deserialize, Serialize};

use crate::config::{PhysicsConfig, Tolerances};
use crate::error::{Error, Result};
use crate::grid::RadialGrid;
use crate::partners::{partners_from_w, shape_invariance_check, InvarianceReport, PartnerPair};
use crate::superpotential::{full_w, Family, SuperpotentialSample};
use crate::wavefunction::{
    classify, w_tilde, Asymptote, BoundaryRecord, Limit, SusyPhase, SusyStatus,
};

/// `l + (D-3)/2`.
pub fn map_ell(ell: f64, d: u32) -> Result<f64> {
    if d < 3 {
        return Err(Error::Dimension(d));
    }
    Ok(ell + f64::from(d - 3) / 2.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DimensionalContext {
    pub d: u32,
    pub ell: f64,
    pub ell_effective: f64,
}

impl DimensionalContext {
    pub fn new(ell: f64, d: u32) -> Result<Self> {
        Ok(Self {
            d,
            ell,
            ell_effective: map_ell(ell, d)?,
        })
    }

    /// `W = (hbar/sqrt(2m)) (w(r, l_eff) - (l + (D-1)/2)/r)`.
    pub fn full_w(&self, fam: &Family, r: f64, cfg: &PhysicsConfig) -> Result<SuperpotentialSample> {
        full_w(fam, self.ell_effective, r, cfg)
    }

    pub fn partners(&self, fam: &Family, grid: &RadialGrid, cfg: &PhysicsConfig) -> Result<PartnerPair> {
        partners_from_w(fam, self.ell_effective, grid, cfg)
    }

    pub fn shape_invariance_check(
        &self,
        fam: &Family,
        grid: &RadialGrid,
        cfg: &PhysicsConfig,
        tol: &Tolerances,
    ) -> Result<InvarianceReport> {
        shape_invariance_check(fam, self.ell_effective, grid, cfg, tol)
    }

    pub fn classify(&self, fam: &Family, cfg: &PhysicsConfig) -> Result<SusyStatus> {
        classify(fam, self.ell_effective, cfg)
    }

    pub fn w_tilde(&self, fam: &Family, r: f64, cfg: &PhysicsConfig) -> Result<f64> {
        w_tilde(fam, self.ell_effective, r, cfg)
    }
}

pub fn full_w_ddim(
    fam: &Family,
    ell: f64,
    d: u32,
    r: f64,
    cfg: &PhysicsConfig,
) -> Result<SuperpotentialSample> {
    DimensionalContext::new(ell, d)?.full_w(fam, r, cfg)
}

/// Harmonic ground state in `D` dimensions, `R ~ r^(l' - (D-3)/2) exp(-m omega r^2 / 2 hbar)`:
/// broken iff `R` diverges at the origin, i.e. `l' < (D-3)/2`.
pub fn ddim_broken_check(ell_prime: f64, d: u32) -> Result<SusyStatus> {
    let threshold = map_ell(0.0, d)?;
    let radial_power = ell_prime - threshold;
    let w_tilde_origin = if radial_power > 0.0 {
        Limit::PlusInfinity
    } else if radial_power == 0.0 {
        Limit::Finite
    } else {
        Limit::MinusInfinity
    };
    let origin = Asymptote::power_law(radial_power + 1.0);
    let infinity = Asymptote {
        power: radial_power + 1.0,
        exp_rate: 1.0,
        exp_power: 2.0,
    };
    Ok(SusyStatus {
        phase: if ell_prime < threshold {
            SusyPhase::Broken
        } else {
            SusyPhase::Unbroken
        },
        origin: BoundaryRecord {
            asymptote: origin,
            u: origin.u_at_origin(),
            w_tilde: w_tilde_origin,
        },
        infinity: BoundaryRecord {
            asymptote: infinity,
            u: Limit::Zero,
            w_tilde: Limit::PlusInfinity,
        },
        remainder: None,
    })
}
