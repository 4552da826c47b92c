//! The unified central superpotential.
//!
//! The full superpotential is split into a central part `w(r, l)` and the
//! centrifugal part `-(l+1)/r`:
//!
//! ```text
//! W(r, l) = hbar/sqrt(2m) * ( w(r, l) - (l+1)/r )
//! ```
//!
//! Shape invariance under `l -> l+1` with `w(r, l+1) = G(l) w(r, l)` turns the
//! remainder condition into a first-order Riccati equation for `w`, whose
//! general solution for `G > 1`, `R > 0` is a ratio of Bessel cylinder
//! functions. Four special choices of `G` give closed forms.

use serde::{Deserialize, Serialize};

use crate::config::PhysicsConfig;
use crate::error::{Error, Result};
use crate::specfun::bessel_jy;

/// Relative size below which the Bessel denominator is treated as a pole:
/// `|den| < POLE_THRESHOLD * (|num| + 1)`.
pub const POLE_THRESHOLD: f64 = 1e-12;

/// A parameter that may depend on the angular momentum.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum EllMap {
    Constant(f64),
    /// `values[i]` is the value at `l = first_ell + i`.
    Table { first_ell: i32, values: Vec<f64> },
}

impl EllMap {
    pub fn at(&self, ell: f64) -> Result<f64> {
        match self {
            EllMap::Constant(v) => Ok(*v),
            EllMap::Table { first_ell, values } => {
                let idx = integral_ell(ell)? - *first_ell as i64;
                usize::try_from(idx)
                    .ok()
                    .and_then(|i| values.get(i).copied())
                    .ok_or_else(|| {
                        Error::InvalidParameter(format!("no tabulated value at l = {ell}"))
                    })
            }
        }
    }

    fn all_values(&self) -> Vec<f64> {
        match self {
            EllMap::Constant(v) => vec![*v],
            EllMap::Table { values, .. } => values.clone(),
        }
    }
}

impl From<f64> for EllMap {
    fn from(v: f64) -> Self {
        EllMap::Constant(v)
    }
}

/// The families of central superpotentials.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum Family {
    /// Bessel solution for an arbitrary ratio `G(l) > 1` and remainder `R_l > 0`.
    GeneralBessel {
        ratio: EllMap,
        remainder: EllMap,
        c: f64,
    },
    /// `G = 1`: the 3D harmonic oscillator, remainder `2 hbar omega`.
    HarmonicG1 { omega: f64, c: f64 },
    /// `G = -1`: oscillator with a remainder that alternates in sign with `l`,
    /// negative for even `l`.
    UpsideDownGm1 { omega: f64 },
    /// `G = (l+1)/(l+2)` with a tanh central superpotential.
    CentralPoschlTeller { k0: EllMap, c: f64 },
    /// r-independent `w`, producing the attractive Coulomb potential
    /// `-kappa / r`.
    CoulombRIndep { kappa: f64 },
}

impl Family {
    pub fn harmonic(omega: f64) -> Self {
        Family::HarmonicG1 { omega, c: 0.0 }
    }

    pub fn upside_down(omega: f64) -> Self {
        Family::UpsideDownGm1 { omega }
    }

    pub fn central_poschl_teller(k0: f64) -> Self {
        Family::CentralPoschlTeller {
            k0: EllMap::Constant(k0),
            c: 0.0,
        }
    }

    pub fn coulomb(kappa: f64) -> Self {
        Family::CoulombRIndep { kappa }
    }

    pub fn general(ratio: f64, remainder: f64, c: f64) -> Self {
        Family::GeneralBessel {
            ratio: EllMap::Constant(ratio),
            remainder: EllMap::Constant(remainder),
            c,
        }
    }

    /// General Bessel family whose coefficients at `ell` are exactly `(a, b)`.
    ///
    /// Inverts `A = q (2l+3)/2`, `B^2 = q R / (hbar^2/2m)` with
    /// `q = (G-1)/(G+1)`.
    pub fn general_from_coefficients(
        a: f64,
        b: f64,
        ell: f64,
        c: f64,
        cfg: &PhysicsConfig,
    ) -> Result<Self> {
        let q = 2.0 * a / (2.0 * ell + 3.0);
        if !(q > 0.0 && q < 1.0) || !(b > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "A = {a}, B = {b} at l = {ell} do not correspond to G > 1, R > 0"
            )));
        }
        let ratio = (1.0 + q) / (1.0 - q);
        let remainder = b * b * cfg.hbar2_over_2m() / q;
        Ok(Family::general(ratio, remainder, c))
    }

    /// Short identifier used on the command line.
    pub fn id(&self) -> &'static str {
        match self {
            Family::GeneralBessel { .. } => "general",
            Family::HarmonicG1 { .. } => "harmonic",
            Family::UpsideDownGm1 { .. } => "updown",
            Family::CentralPoschlTeller { .. } => "cpt",
            Family::CoulombRIndep { .. } => "coulomb",
        }
    }

    pub fn validate(&self) -> Result<()> {
        let positive = |name: &str, v: f64| {
            if v > 0.0 && v.is_finite() {
                Ok(())
            } else {
                Err(Error::InvalidParameter(format!("{name} must be > 0, got {v}")))
            }
        };
        let finite = |name: &str, v: f64| {
            if v.is_finite() {
                Ok(())
            } else {
                Err(Error::InvalidParameter(format!("{name} must be finite, got {v}")))
            }
        };
        match self {
            Family::GeneralBessel {
                ratio,
                remainder,
                c,
            } => {
                finite("C", *c)?;
                for v in ratio.all_values() {
                    finite("G", v)?;
                }
                for v in remainder.all_values() {
                    finite("R", v)?;
                }
                Ok(())
            }
            Family::HarmonicG1 { omega, c } => {
                positive("omega", *omega)?;
                finite("C", *c)
            }
            Family::UpsideDownGm1 { omega } => positive("omega", *omega),
            Family::CentralPoschlTeller { k0, c } => {
                for v in k0.all_values() {
                    positive("k0", v)?;
                }
                finite("C", *c)
            }
            Family::CoulombRIndep { kappa } => positive("kappa", *kappa),
        }
    }

    /// The shift ratio `G(l) = g(l+1)/g(l)`.
    pub fn ratio_g(&self, ell: f64) -> Result<f64> {
        match self {
            Family::GeneralBessel { ratio, .. } => ratio.at(ell),
            Family::HarmonicG1 { .. } => Ok(1.0),
            Family::UpsideDownGm1 { .. } => Ok(-1.0),
            Family::CentralPoschlTeller { .. } | Family::CoulombRIndep { .. } => {
                Ok((ell + 1.0) / (ell + 2.0))
            }
        }
    }
}

/// `l` as an integer, or an error when it is not one.
pub(crate) fn integral_ell(ell: f64) -> Result<i64> {
    if ell.fract() == 0.0 && ell.is_finite() {
        Ok(ell as i64)
    } else {
        Err(Error::NonIntegralEll(ell))
    }
}

/// `(-1)^l`.
pub(crate) fn parity_sign(ell: f64) -> Result<f64> {
    Ok(if integral_ell(ell)? % 2 == 0 { 1.0 } else { -1.0 })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BesselCoefficients {
    /// Bessel order `A_l` of the denominator.
    pub a: f64,
    /// Scale `B_l` of the Bessel argument, `1/length`.
    pub b: f64,
}

/// `A_l = ((G-1)/(G+1)) (2l+3)/2`, `B_l = sqrt(((G-1)/(G+1)) 2m R_l / hbar^2)`.
pub fn coefficients(
    g: f64,
    remainder: f64,
    ell: f64,
    cfg: &PhysicsConfig,
) -> Result<BesselCoefficients> {
    if g == -1.0 {
        return Err(Error::SingularRatio);
    }
    let q = (g - 1.0) / (g + 1.0);
    let radicand = q * remainder / cfg.hbar2_over_2m();
    if radicand < 0.0 {
        return Err(Error::ImaginaryB {
            g,
            remainder,
            value: q * remainder,
        });
    }
    Ok(BesselCoefficients {
        a: q * (2.0 * ell + 3.0) / 2.0,
        b: radicand.sqrt(),
    })
}

/// Central superpotential `w` and its radial derivative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CentralValue {
    pub w: f64,
    pub w_prime: f64,
    pub pole: bool,
}

impl CentralValue {
    fn regular(w: f64, w_prime: f64) -> Self {
        Self {
            w,
            w_prime,
            pole: false,
        }
    }
}

/// `w`, `W` and `W'` at one radius.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SuperpotentialSample {
    pub r: f64,
    /// Central superpotential `w`, `1/length`.
    pub central: f64,
    pub central_prime: f64,
    /// Full superpotential `W`, `sqrt(energy)`.
    pub full: f64,
    pub full_prime: f64,
    /// Set when `r` sits on a zero of the Bessel denominator; all values are
    /// NaN in that case.
    pub pole: bool,
}

impl SuperpotentialSample {
    /// The sample, or [`Error::Pole`] when it is flagged.
    pub fn finite(self) -> Result<Self> {
        if self.pole {
            Err(Error::Pole { r: self.r })
        } else {
            Ok(self)
        }
    }
}

fn check_radius(r: f64) -> Result<()> {
    if r > 0.0 && r.is_finite() {
        Ok(())
    } else {
        Err(Error::NonPositiveArgument(r))
    }
}

/// Ratio of Bessel cylinder functions for the `GeneralBessel` family.
///
/// With `Z_nu = J_nu + C Y_nu` and `x = B r`,
/// `w = (B/(G-1)) Z_{A+1}(x) / Z_A(x)`. Writing `rho = Z_{A+1}/Z_A`, the
/// recurrences give `d rho/dx = 1 - (2A+1) rho / x + rho^2`.
pub fn central_w_general(
    fam: &Family,
    ell: f64,
    r: f64,
    cfg: &PhysicsConfig,
) -> Result<CentralValue> {
    let Family::GeneralBessel {
        ratio,
        remainder,
        c,
    } = fam
    else {
        return Err(Error::InvalidParameter(format!(
            "{} is not the general Bessel family",
            fam.id()
        )));
    };
    check_radius(r)?;
    let g = ratio.at(ell)?;
    let rem = remainder.at(ell)?;
    let coeffs = coefficients(g, rem, ell, cfg)?;
    if !(g > 1.0) || rem < 0.0 {
        return Err(Error::BesselRegime { g, remainder: rem });
    }
    if rem == 0.0 {
        // B = 0: the free case, w vanishes identically.
        return Ok(CentralValue::regular(0.0, 0.0));
    }

    let BesselCoefficients { a, b } = coeffs;
    let x = b * r;
    let lower = bessel_jy(a, x)?;
    let upper = bessel_jy(a + 1.0, x)?;
    let den = lower.j + c * lower.y;
    let num = upper.j + c * upper.y;
    if den.abs() < POLE_THRESHOLD * (num.abs() + 1.0) {
        return Ok(CentralValue {
            w: f64::NAN,
            w_prime: f64::NAN,
            pole: true,
        });
    }
    let rho = num / den;
    let w = b / (g - 1.0) * rho;
    let w_prime = b * b / (g - 1.0) * (1.0 - (2.0 * a + 1.0) * rho / x + rho * rho);
    Ok(CentralValue::regular(w, w_prime))
}

/// Central superpotential `w(r, l)` and `w'(r, l)` for any family.
pub fn central_w_family(
    fam: &Family,
    ell: f64,
    r: f64,
    cfg: &PhysicsConfig,
) -> Result<CentralValue> {
    check_radius(r)?;
    let (hbar, m) = (cfg.hbar(), cfg.mass());
    let value = match fam {
        Family::GeneralBessel { .. } => return central_w_general(fam, ell, r, cfg),
        Family::HarmonicG1 { omega, c } => {
            let slope = m * omega / hbar;
            CentralValue::regular(slope * r + c / r, slope - c / (r * r))
        }
        Family::UpsideDownGm1 { omega } => {
            let slope = parity_sign(ell)? * m * omega / hbar;
            CentralValue::regular(slope * r, slope)
        }
        Family::CentralPoschlTeller { k0, c } => {
            let k = k0.at(ell)?;
            let arg = k * (r + c);
            let sech = crate::specfun::sech(arg);
            CentralValue::regular(k * (ell + 2.0) * arg.tanh(), k * k * (ell + 2.0) * sech * sech)
        }
        Family::CoulombRIndep { kappa } => {
            if ell == -1.0 {
                return Err(Error::InvalidParameter(
                    "Coulomb central superpotential is singular at l = -1".into(),
                ));
            }
            CentralValue::regular(m * kappa / (hbar * hbar * (ell + 1.0)), 0.0)
        }
    };
    Ok(value)
}

/// `W = (hbar/sqrt(2m)) (w - (l+1)/r)` and `W' = (hbar/sqrt(2m)) (w' + (l+1)/r^2)`.
pub fn full_w(fam: &Family, ell: f64, r: f64, cfg: &PhysicsConfig) -> Result<SuperpotentialSample> {
    let cv = central_w_family(fam, ell, r, cfg)?;
    Ok(compose_full(cv, ell, r, cfg))
}

pub(crate) fn compose_full(
    cv: CentralValue,
    ell: f64,
    r: f64,
    cfg: &PhysicsConfig,
) -> SuperpotentialSample {
    let s = cfg.w_prefactor();
    let centrifugal = (ell + 1.0) / r;
    SuperpotentialSample {
        r,
        central: cv.w,
        central_prime: cv.w_prime,
        full: s * (cv.w - centrifugal),
        full_prime: s * (cv.w_prime + centrifugal / r),
        pole: cv.pole,
    }
}

/// The family's analytic remainder `R_l`.
pub fn remainder_of(fam: &Family, ell: f64, cfg: &PhysicsConfig) -> Result<f64> {
    let (hbar, m) = (cfg.hbar(), cfg.mass());
    match fam {
        Family::GeneralBessel { remainder, .. } => remainder.at(ell),
        Family::HarmonicG1 { omega, .. } => Ok(2.0 * hbar * omega),
        Family::UpsideDownGm1 { omega } => {
            Ok(-parity_sign(ell)? * (2.0 * ell + 3.0) * hbar * omega)
        }
        Family::CentralPoschlTeller { k0, .. } => {
            let k = k0.at(ell)?;
            Ok(cfg.hbar2_over_2m() * k * k * (2.0 * ell + 3.0))
        }
        Family::CoulombRIndep { kappa } => {
            let d = (ell + 1.0) * (ell + 2.0);
            Ok(m * (2.0 * ell + 3.0) / (2.0 * hbar * hbar) * (kappa / d).powi(2))
        }
    }
}
