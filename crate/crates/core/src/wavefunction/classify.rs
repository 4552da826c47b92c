//! Broken/unbroken classification from the boundary behavior of the ground state.
//!
//! The candidate zero-energy state is `u(r) = r^(l+1) exp(-w~(r))`. Its
//! leading behavior at each end of `(0, inf)` is read off a per-family table of
//! the form `u ~ r^p exp(-a r^q)`, never by sampling. SUSY is unbroken iff `u`
//! vanishes at both ends.

use serde::{Deserialize, Serialize};

use crate::config::PhysicsConfig;
use crate::error::Result;
use crate::superpotential::{coefficients, parity_sign, remainder_of, Family};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SusyPhase {
    Unbroken,
    Broken,
    /// Vanishing remainder: `w = 0` and the partners are isospectral.
    SpontaneouslyBroken,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Limit {
    Zero,
    Finite,
    PlusInfinity,
    MinusInfinity,
}

impl std::fmt::Display for Limit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Limit::Zero => "0",
            Limit::Finite => "finite",
            Limit::PlusInfinity => "+inf",
            Limit::MinusInfinity => "-inf",
        })
    }
}

/// `u ~ r^power exp(-exp_rate r^exp_power)` near one boundary.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Asymptote {
    pub power: f64,
    pub exp_rate: f64,
    pub exp_power: f64,
}

impl Asymptote {
    pub(crate) fn power_law(power: f64) -> Self {
        Self {
            power,
            exp_rate: 0.0,
            exp_power: 0.0,
        }
    }

    /// Limit of `u` at `r -> 0`.
    pub fn u_at_origin(&self) -> Limit {
        sign_limit(self.power, Limit::Zero, Limit::PlusInfinity)
    }

    /// Limit of `W~ = -ln(u / r)` at `r -> 0`.
    pub fn w_tilde_at_origin(&self) -> Limit {
        sign_limit(self.power - 1.0, Limit::PlusInfinity, Limit::MinusInfinity)
    }

    /// Limit of `u` at `r -> inf`.
    pub fn u_at_infinity(&self) -> Limit {
        if self.exp_rate != 0.0 && self.exp_power > 0.0 {
            sign_limit(self.exp_rate, Limit::Zero, Limit::PlusInfinity)
        } else {
            sign_limit(-self.power, Limit::Zero, Limit::PlusInfinity)
        }
    }

    /// Limit of `W~` at `r -> inf`.
    pub fn w_tilde_at_infinity(&self) -> Limit {
        if self.exp_rate != 0.0 && self.exp_power > 0.0 {
            sign_limit(self.exp_rate, Limit::PlusInfinity, Limit::MinusInfinity)
        } else {
            sign_limit(1.0 - self.power, Limit::PlusInfinity, Limit::MinusInfinity)
        }
    }
}

fn sign_limit(x: f64, positive: Limit, negative: Limit) -> Limit {
    if x > 0.0 {
        positive
    } else if x < 0.0 {
        negative
    } else {
        Limit::Finite
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundaryRecord {
    pub asymptote: Asymptote,
    pub u: Limit,
    pub w_tilde: Limit,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SusyStatus {
    pub phase: SusyPhase,
    pub origin: BoundaryRecord,
    pub infinity: BoundaryRecord,
    /// `R_l`, when the status came from a family.
    pub remainder: Option<f64>,
}

impl SusyStatus {
    pub fn reason(&self) -> String {
        match self.phase {
            SusyPhase::SpontaneouslyBroken => {
                "R_l = 0: w vanishes, partners are isospectral".to_string()
            }
            _ => format!(
                "u ~ r^{} at r->0 (u -> {}, W~ -> {}); at r->inf u -> {}, W~ -> {}",
                self.origin.asymptote.power,
                self.origin.u,
                self.origin.w_tilde,
                self.infinity.u,
                self.infinity.w_tilde
            ),
        }
    }

    pub(crate) fn from_asymptotes(
        origin: Asymptote,
        infinity: Asymptote,
        remainder: Option<f64>,
    ) -> Self {
        let origin = BoundaryRecord {
            asymptote: origin,
            u: origin.u_at_origin(),
            w_tilde: origin.w_tilde_at_origin(),
        };
        let infinity = BoundaryRecord {
            asymptote: infinity,
            u: infinity.u_at_infinity(),
            w_tilde: infinity.w_tilde_at_infinity(),
        };
        let phase = if remainder == Some(0.0) {
            SusyPhase::SpontaneouslyBroken
        } else if origin.u == Limit::Zero && infinity.u == Limit::Zero {
            SusyPhase::Unbroken
        } else {
            SusyPhase::Broken
        };
        Self {
            phase,
            origin,
            infinity,
            remainder,
        }
    }
}

/// Leading-order behavior of `u = r^(l+1) exp(-w~)` at `r -> 0` and `r -> inf`.
pub fn asymptotes(fam: &Family, ell: f64, cfg: &PhysicsConfig) -> Result<(Asymptote, Asymptote)> {
    let (hbar, m) = (cfg.hbar(), cfg.mass());
    let p = ell + 1.0;
    Ok(match fam {
        Family::HarmonicG1 { omega, c } => {
            let rate = m * omega / (2.0 * hbar);
            (
                Asymptote::power_law(p - c),
                Asymptote {
                    power: p - c,
                    exp_rate: rate,
                    exp_power: 2.0,
                },
            )
        }
        Family::UpsideDownGm1 { omega } => (
            Asymptote::power_law(p),
            Asymptote {
                power: p,
                exp_rate: parity_sign(ell)? * m * omega / (2.0 * hbar),
                exp_power: 2.0,
            },
        ),
        Family::CentralPoschlTeller { k0, .. } => (
            Asymptote::power_law(p),
            Asymptote {
                power: p,
                exp_rate: (ell + 2.0) * k0.at(ell)?,
                exp_power: 1.0,
            },
        ),
        Family::CoulombRIndep { kappa } => (
            Asymptote::power_law(p),
            Asymptote {
                power: p,
                exp_rate: m * kappa / (hbar * hbar * (ell + 1.0)),
                exp_power: 1.0,
            },
        ),
        Family::GeneralBessel {
            ratio,
            remainder,
            c,
        } => {
            let g = ratio.at(ell)?;
            let rem = remainder.at(ell)?;
            if rem == 0.0 {
                (Asymptote::power_law(p), Asymptote::power_law(p))
            } else {
                // u = r^(l+1) r^(-A/(G-1)) |J_A(Br) + C Y_A(Br)|^(1/(G-1))
                let a = coefficients(g, rem, ell, cfg)?.a;
                let inv = 1.0 / (g - 1.0);
                let near = if *c == 0.0 { p } else { p - 2.0 * a.abs() * inv };
                let far = p - a * inv - 0.5 * inv;
                (Asymptote::power_law(near), Asymptote::power_law(far))
            }
        }
    })
}

pub fn classify(fam: &Family, ell: f64, cfg: &PhysicsConfig) -> Result<SusyStatus> {
    fam.validate()?;
    let (origin, infinity) = asymptotes(fam, ell, cfg)?;
    Ok(SusyStatus::from_asymptotes(
        origin,
        infinity,
        Some(remainder_of(fam, ell, cfg)?),
    ))
}
