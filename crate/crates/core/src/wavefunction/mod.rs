//! Zero-energy ground states, SUSY classification, Schrödinger residuals,
//! energy ladders and the Bessel localization construction.
//!
//! The ground state of `V1` is `u = r R = N r exp(-W~)` with
//! `W~(r, l) = w~(r, l) - l ln r` and `w~' = w`.

mod classify;
mod ground;
mod ladder;
mod localization;
mod quadrature;
mod residual;

pub use classify::{asymptotes, classify, Asymptote, BoundaryRecord, Limit, SusyPhase, SusyStatus};
pub use ground::{ground_state, ground_state_with_measure, GroundState, NormMeasure};
pub use ladder::{energy_ladder, physical_spectrum};
pub use localization::{cylinder_f, cylinder_roots, localization_constant, CylinderPair};
pub use quadrature::{integrate, Integral};
pub use residual::{
    residual_convergence, schrodinger_residual, schrodinger_residual_of, ResidualConvergence,
    STENCIL_ORDER,
};

use crate::config::PhysicsConfig;
use crate::error::{Error, Result};
use crate::specfun::{bessel_jy, ln_cosh};
use crate::superpotential::{coefficients, parity_sign, Family};

/// Antiderivative `w~(r, l)` of the central superpotential, with the
/// integration constant fixed by the closed forms below.
///
/// At a zero of the Bessel denominator the value is `+inf` (`u` vanishes there).
pub fn w_tilde_central(fam: &Family, ell: f64, r: f64, cfg: &PhysicsConfig) -> Result<f64> {
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::NonPositiveArgument(r));
    }
    fam.validate()?;
    let (hbar, m) = (cfg.hbar(), cfg.mass());
    Ok(match fam {
        Family::HarmonicG1 { omega, c } => m * omega / (2.0 * hbar) * r * r + c * r.ln(),
        Family::UpsideDownGm1 { omega } => parity_sign(ell)? * m * omega / (2.0 * hbar) * r * r,
        Family::CentralPoschlTeller { k0, c } => (ell + 2.0) * ln_cosh(k0.at(ell)? * (r + c)),
        Family::CoulombRIndep { kappa } => {
            if ell == -1.0 {
                return Err(Error::InvalidParameter(
                    "Coulomb central superpotential is singular at l = -1".into(),
                ));
            }
            m * kappa / (hbar * hbar * (ell + 1.0)) * r
        }
        Family::GeneralBessel {
            ratio,
            remainder,
            c,
        } => {
            let g = ratio.at(ell)?;
            let rem = remainder.at(ell)?;
            let coeffs = coefficients(g, rem, ell, cfg)?;
            if !(g > 1.0) || rem < 0.0 {
                return Err(Error::BesselRegime { g, remainder: rem });
            }
            if rem == 0.0 {
                return Ok(0.0);
            }
            // w~ = (A ln r - ln|Z_A(B r)|) / (G - 1)
            let jy = bessel_jy(coeffs.a, coeffs.b * r)?;
            let z = jy.j + c * jy.y;
            (coeffs.a * r.ln() - z.abs().ln()) / (g - 1.0)
        }
    })
}

/// `W~(r, l) = w~(r, l) - l ln r`.
pub fn w_tilde(fam: &Family, ell: f64, r: f64, cfg: &PhysicsConfig) -> Result<f64> {
    Ok(w_tilde_central(fam, ell, r, cfg)? - ell * r.ln())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superpotential::central_w_family;
    use approx::assert_relative_eq;

    fn cfg() -> PhysicsConfig {
        PhysicsConfig::default()
    }

    #[test]
    fn cpt_w_tilde_value() {
        let v = w_tilde(&Family::central_poschl_teller(1.0), 2.0, 1.0, &cfg()).unwrap();
        assert_relative_eq!(v, 4.0 * 1.0f64.cosh().ln(), max_relative = 1e-15);
        assert!((v - 1.7351).abs() < 1e-4);
    }

    #[test]
    fn ell_zero_has_no_log_term() {
        let fam = Family::central_poschl_teller(1.0);
        for r in [0.1, 1.0, 7.0] {
            assert_eq!(
                w_tilde(&fam, 0.0, r, &cfg()).unwrap(),
                w_tilde_central(&fam, 0.0, r, &cfg()).unwrap()
            );
        }
    }

    #[test]
    fn derivative_of_w_tilde_is_w() {
        let fams = [
            Family::HarmonicG1 { omega: 1.3, c: 0.4 },
            Family::upside_down(0.7),
            Family::CentralPoschlTeller {
                k0: 1.2.into(),
                c: 0.3,
            },
            Family::coulomb(2.0),
            Family::general(3.0, 1.0, 0.0),
            Family::general(2.0, 0.5, -0.7),
        ];
        for fam in &fams {
            for ell in [0.0, 1.0, 3.0] {
                for r in [0.3, 1.1, 2.9] {
                    let h = 1e-5;
                    let fd = (w_tilde_central(fam, ell, r + h, &cfg()).unwrap()
                        - w_tilde_central(fam, ell, r - h, &cfg()).unwrap())
                        / (2.0 * h);
                    let w = central_w_family(fam, ell, r, &cfg()).unwrap().w;
                    assert!(
                        (fd - w).abs() < 1e-7 * (1.0 + w.abs()),
                        "{} l={ell} r={r}: {fd} vs {w}",
                        fam.id()
                    );
                }
            }
        }
    }

    #[test]
    fn rejects_nonpositive_radius() {
        let fam = Family::harmonic(1.0);
        assert!(matches!(
            w_tilde(&fam, 0.0, 0.0, &cfg()),
            Err(Error::NonPositiveArgument(_))
        ));
    }
}
