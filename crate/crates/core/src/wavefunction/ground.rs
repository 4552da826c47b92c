//! Normalized zero-energy ground states.
//!
//! The normalization integral is evaluated on `[0, T]` by adaptive quadrature
//! of the log-shifted integrand `exp(phi - phi_max)`; `T` grows until an
//! analytic bound on the remaining tail falls below `TAIL_FRACTION` of the
//! accumulated integral.

use serde::{Deserialize, Serialize};

use super::classify::{classify, SusyPhase};
use super::quadrature::integrate;
use super::w_tilde;
use crate::config::PhysicsConfig;
use crate::error::{Error, Result};
use crate::grid::RadialGrid;
use crate::specfun::bessel_jy;
use crate::superpotential::{central_w_family, coefficients, Family};

const TAIL_FRACTION: f64 = 1e-13;
const QUAD_REL_TOL: f64 = 1e-12;
const QUAD_MAX_INTERVALS: usize = 4000;
const MAX_DOUBLINGS: usize = 64;

/// Which density is normalized to one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum NormMeasure {
    /// `int u^2 dr = int R^2 r^2 dr = 1`, the standard radial measure.
    ReducedRadial,
    /// `int R^2 dr = 1`, without the `r^2` Jacobian.
    RadialOnly,
}

impl NormMeasure {
    /// Power of `r` multiplying `exp(-2 W~)` in the density.
    fn r_power(self) -> f64 {
        match self {
            NormMeasure::ReducedRadial => 2.0,
            NormMeasure::RadialOnly => 0.0,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            NormMeasure::ReducedRadial => "u^2 dr",
            NormMeasure::RadialOnly => "R^2 dr",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroundState {
    pub ell: f64,
    pub family: Family,
    /// Normalization constant `N` of `R = N exp(-W~)`.
    pub norm: f64,
    pub measure: NormMeasure,
    pub r: Vec<f64>,
    pub w_tilde: Vec<f64>,
    /// `u = r R`.
    pub u: Vec<f64>,
    pub radial: Vec<f64>,
    cfg: PhysicsConfig,
}

impl GroundState {
    pub fn physics(&self) -> &PhysicsConfig {
        &self.cfg
    }

    pub fn radial_at(&self, r: f64) -> Result<f64> {
        Ok(self.norm * (-w_tilde(&self.family, self.ell, r, &self.cfg)?).exp())
    }

    pub fn u_at(&self, r: f64) -> Result<f64> {
        Ok(r * self.radial_at(r)?)
    }

    /// The same state with `N` replaced; sampled values are rescaled.
    pub fn with_norm(&self, norm: f64) -> Self {
        let k = norm / self.norm;
        let mut out = self.clone();
        out.norm = norm;
        out.u.iter_mut().for_each(|v| *v *= k);
        out.radial.iter_mut().for_each(|v| *v *= k);
        out
    }
}

/// Ground state normalized with `int u^2 dr = 1`.
pub fn ground_state(
    fam: &Family,
    ell: f64,
    grid: &RadialGrid,
    cfg: &PhysicsConfig,
) -> Result<GroundState> {
    ground_state_with_measure(fam, ell, grid, cfg, NormMeasure::ReducedRadial)
}

pub fn ground_state_with_measure(
    fam: &Family,
    ell: f64,
    grid: &RadialGrid,
    cfg: &PhysicsConfig,
    measure: NormMeasure,
) -> Result<GroundState> {
    let status = classify(fam, ell, cfg)?;
    if status.phase != SusyPhase::Unbroken {
        return Err(Error::NotNormalizable(format!(
            "SUSY is {:?} for the {} family at l = {ell}: {}",
            status.phase,
            fam.id(),
            status.reason()
        )));
    }
    let jac = measure.r_power();
    // density ~ r^(2(p-1) + jac) near the origin
    let origin_power = 2.0 * (status.origin.asymptote.power - 1.0) + jac;
    if origin_power <= -1.0 {
        return Err(Error::NotNormalizable(format!(
            "density ~ r^{origin_power} is not integrable at the origin under {}",
            measure.label()
        )));
    }
    let density = Density {
        fam,
        ell,
        cfg,
        jac,
    };
    let tail = TailBound::new(fam, ell, cfg, jac, status.infinity.asymptote.power)?;
    let scale = length_scale(fam, ell, cfg)?;
    let (r_peak, log_max) = density.peak(scale)?;
    let integral = density.integrate_to_tail(r_peak.max(0.5 * scale), log_max, &tail)?;
    let norm = (-0.5 * log_max).exp() / integral.sqrt();
    if !(norm.is_finite() && norm > 0.0) {
        return Err(Error::NotNormalizable(format!(
            "normalization constant is not representable (ln int = {})",
            log_max + integral.ln()
        )));
    }

    let mut w_tildes = Vec::with_capacity(grid.len());
    let mut u = Vec::with_capacity(grid.len());
    let mut radial = Vec::with_capacity(grid.len());
    for &r in grid.points() {
        let wt = w_tilde(fam, ell, r, cfg)?;
        let rad = norm * (-wt).exp();
        w_tildes.push(wt);
        radial.push(rad);
        u.push(r * rad);
    }
    Ok(GroundState {
        ell,
        family: fam.clone(),
        norm,
        measure,
        r: grid.points().to_vec(),
        w_tilde: w_tildes,
        u,
        radial,
        cfg: *cfg,
    })
}

/// Natural length of the family, used to seed the peak search.
fn length_scale(fam: &Family, ell: f64, cfg: &PhysicsConfig) -> Result<f64> {
    let (hbar, m) = (cfg.hbar(), cfg.mass());
    Ok(match fam {
        Family::HarmonicG1 { omega, .. } | Family::UpsideDownGm1 { omega } => {
            (hbar / (m * omega)).sqrt()
        }
        Family::CentralPoschlTeller { k0, .. } => 1.0 / k0.at(ell)?.abs(),
        Family::CoulombRIndep { kappa } => (hbar * hbar * (ell + 1.0) / (m * kappa)).abs(),
        Family::GeneralBessel {
            ratio, remainder, ..
        } => 1.0 / coefficients(ratio.at(ell)?, remainder.at(ell)?, ell, cfg)?.b,
    })
}

struct Density<'a> {
    fam: &'a Family,
    ell: f64,
    cfg: &'a PhysicsConfig,
    jac: f64,
}

impl Density<'_> {
    /// `ln(r^jac exp(-2 W~))`.
    fn log(&self, r: f64) -> Result<f64> {
        Ok(self.jac * r.ln() - 2.0 * w_tilde(self.fam, self.ell, r, self.cfg)?)
    }

    /// `d/dr` of [`Self::log`]: `2 (l/r - w) + jac/r`.
    fn log_slope(&self, r: f64) -> Result<f64> {
        let w = central_w_family(self.fam, self.ell, r, self.cfg)?.w;
        Ok(2.0 * (self.ell / r - w) + self.jac / r)
    }

    fn peak(&self, scale: f64) -> Result<(f64, f64)> {
        const SAMPLES: usize = 480;
        let (lo, hi) = (scale * 1e-6, scale * 1e3);
        let ratio = (hi / lo).powf(1.0 / (SAMPLES - 1) as f64);
        let mut best = (scale, f64::NEG_INFINITY);
        let mut r = lo;
        for _ in 0..SAMPLES {
            let v = self.log(r)?;
            if v.is_finite() && v > best.1 {
                best = (r, v);
            }
            r *= ratio;
        }
        if !best.1.is_finite() {
            return Err(Error::NotNormalizable("density vanishes everywhere".into()));
        }
        Ok(best)
    }

    fn integrate_to_tail(&self, t0: f64, log_max: f64, tail: &TailBound) -> Result<f64> {
        let f = |r: f64| {
            let v = self.log(r).map(|l| (l - log_max).exp()).unwrap_or(f64::NAN);
            if v.is_nan() {
                // zeros of the Bessel denominator give -inf, i.e. 0
                0.0
            } else {
                v
            }
        };
        let first = integrate(f, 0.0, t0, QUAD_REL_TOL, 0.0, QUAD_MAX_INTERVALS)?;
        let mut total = first.value;
        let abs_tol = TAIL_FRACTION * first.value;
        let mut t = t0;
        for _ in 0..MAX_DOUBLINGS {
            if let Some(bound) = tail.bound(self, t, log_max)? {
                if bound <= TAIL_FRACTION * total {
                    return Ok(total);
                }
            }
            let next = 2.0 * t;
            total += integrate(f, t, next, QUAD_REL_TOL, abs_tol, QUAD_MAX_INTERVALS)?.value;
            t = next;
        }
        Err(Error::Quadrature(format!(
            "tail bound did not fall below {TAIL_FRACTION:e} of the integral by r = {t:e}"
        )))
    }
}

/// Upper bounds on `int_T^inf density dr`.
enum TailBound {
    /// `ln density` is concave: the tail is at most `f(T) / |f'(T)/f(T)|`
    /// once the slope is negative.
    LogConcave,
    /// `density <= coef r^power` for `r >= T` (general Bessel family).
    PowerLaw {
        a: f64,
        b: f64,
        c: f64,
        inv: f64,
        power: f64,
    },
}

impl TailBound {
    fn new(fam: &Family, ell: f64, cfg: &PhysicsConfig, jac: f64, far_power: f64) -> Result<Self> {
        let Family::GeneralBessel {
            ratio,
            remainder,
            c,
        } = fam
        else {
            return Ok(TailBound::LogConcave);
        };
        let g = ratio.at(ell)?;
        let coeffs = coefficients(g, remainder.at(ell)?, ell, cfg)?;
        // u^2 <= K r^(2 far_power), R^2 = u^2 / r^2
        let power = 2.0 * far_power - 2.0 + jac;
        if power >= -1.0 {
            return Err(Error::NotNormalizable(format!(
                "density decays only as r^{power} at infinity"
            )));
        }
        Ok(TailBound::PowerLaw {
            a: coeffs.a,
            b: coeffs.b,
            c: *c,
            inv: 1.0 / (g - 1.0),
            power,
        })
    }

    fn bound(&self, density: &Density, t: f64, log_max: f64) -> Result<Option<f64>> {
        match *self {
            TailBound::LogConcave => {
                let slope = density.log_slope(t)?;
                if slope >= 0.0 {
                    return Ok(None);
                }
                Ok(Some((density.log(t)? - log_max).exp() / -slope))
            }
            TailBound::PowerLaw {
                a,
                b,
                c,
                inv,
                power,
            } => {
                // Nicholson: x (J^2 + Y^2) decreases to 2/pi for |nu| > 1/2 and
                // increases to it otherwise, so for x >= X
                // |J + C Y| <= (1 + |C|) sqrt(max(X M(X)^2, 2/pi) / x).
                let x = b * t;
                let jy = bessel_jy(a.abs(), x)?;
                let xm2 = (x * (jy.j * jy.j + jy.y * jy.y)).max(2.0 / std::f64::consts::PI);
                let z2_coef = (1.0 + c.abs()).powi(2) * xm2 / b;
                // density = r^(2(l+1) - 2 a inv - 2 + jac) |Z|^(2 inv)
                //        <= z2_coef^inv r^power
                let ln_coef = inv * z2_coef.ln();
                let ln_tail = ln_coef + (power + 1.0) * t.ln() - (-(power + 1.0)).ln();
                Ok(Some((ln_tail - log_max).exp()))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn cfg() -> PhysicsConfig {
        PhysicsConfig::default()
    }

    fn simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, n: usize) -> f64 {
        let h = (b - a) / n as f64;
        let mut s = f(a) + f(b);
        for i in 1..n {
            let w = if i % 2 == 1 { 4.0 } else { 2.0 };
            s += w * f(a + h * i as f64);
        }
        s * h / 3.0
    }

    #[test]
    fn harmonic_gaussian_moment() {
        // hbar = m = omega = 1: u = N r exp(-r^2/2), int r^2 exp(-r^2) = sqrt(pi)/4
        let cfg = PhysicsConfig::new(1.0, 1.0).unwrap();
        let grid = RadialGrid::uniform(1e-3, 10.0, 200).unwrap();
        let gs = ground_state(&Family::harmonic(1.0), 0.0, &grid, &cfg).unwrap();
        assert_relative_eq!(
            gs.norm,
            2.0 / std::f64::consts::PI.powf(0.25),
            max_relative = 1e-11
        );
    }

    #[test]
    fn normalization_survives_independent_rule() {
        let grid = RadialGrid::uniform(1e-3, 20.0, 100).unwrap();
        for (fam, ell) in [
            (Family::central_poschl_teller(1.0), 2.0),
            (Family::central_poschl_teller(1.0), 6.0),
            (Family::harmonic(1.0), 1.0),
            (Family::coulomb(1.0), 0.0),
            (Family::upside_down(1.0), 2.0),
        ] {
            let gs = ground_state(&fam, ell, &grid, &cfg()).unwrap();
            let total = simpson(|r| gs.u_at(r.max(1e-300)).unwrap().powi(2), 0.0, 80.0, 400_000);
            assert!((total - 1.0).abs() < 1e-8, "{} l={ell}: {total}", fam.id());
        }
    }

    #[test]
    fn cpt_constants_under_both_measures() {
        let grid = RadialGrid::uniform(1e-3, 20.0, 50).unwrap();
        let fam = Family::central_poschl_teller(1.0);
        let radial_only: Vec<f64> = [2.0, 6.0, 10.0]
            .iter()
            .map(|&l| {
                ground_state_with_measure(&fam, l, &grid, &cfg(), NormMeasure::RadialOnly)
                    .unwrap()
                    .norm
            })
            .collect();
        for (n, want) in radial_only.iter().zip([5.76, 42.24, 255.01]) {
            assert!((n / want - 1.0).abs() < 5e-3, "{n} vs {want}");
        }
        let reduced = ground_state(&fam, 2.0, &grid, &cfg()).unwrap().norm;
        assert!((reduced / 5.76 - 1.0).abs() > 5e-2);
    }

    #[test]
    fn peak_rises_and_narrows_with_ell() {
        // holds under the measure that reproduces the published constants
        let grid = RadialGrid::uniform(1e-3, 20.0, 20_000).unwrap();
        let fam = Family::central_poschl_teller(1.0);
        let mut last: Option<(f64, f64)> = None;
        for ell in [2.0, 6.0, 10.0] {
            let gs =
                ground_state_with_measure(&fam, ell, &grid, &cfg(), NormMeasure::RadialOnly)
                    .unwrap();
            let peak = gs.radial.iter().copied().fold(0.0, f64::max);
            let above: Vec<f64> = gs
                .r
                .iter()
                .zip(&gs.radial)
                .filter(|(_, v)| **v >= 0.5 * peak)
                .map(|(r, _)| *r)
                .collect();
            let fwhm = above.last().unwrap() - above.first().unwrap();
            if let Some((p, w)) = last {
                assert!(peak > p && fwhm < w, "l={ell}");
            }
            last = Some((peak, fwhm));
        }
    }

    #[test]
    fn small_r_exponent_is_ell_plus_one() {
        let grid = RadialGrid::new(1e-4, 1e-3, 50, crate::grid::Spacing::Logarithmic).unwrap();
        for ell in [0.0, 2.0, 5.0] {
            let gs = ground_state(&Family::central_poschl_teller(1.0), ell, &grid, &cfg()).unwrap();
            let n = gs.r.len();
            let slope = (gs.u[n - 1].ln() - gs.u[0].ln()) / (gs.r[n - 1].ln() - gs.r[0].ln());
            assert!((slope / (ell + 1.0) - 1.0).abs() < 0.02, "l={ell}: {slope}");
        }
    }

    #[test]
    fn broken_states_are_refused() {
        let grid = RadialGrid::uniform(0.1, 5.0, 10).unwrap();
        let err = ground_state(&Family::upside_down(1.0), 1.0, &grid, &cfg()).unwrap_err();
        assert!(matches!(err, Error::NotNormalizable(_)));
        let err = ground_state(&Family::general(3.0, 0.0, 0.0), 0.0, &grid, &cfg()).unwrap_err();
        assert!(matches!(err, Error::NotNormalizable(_)));
    }

    #[test]
    fn general_bessel_with_decaying_envelope() {
        // G = 1.1, R = 1, l = 0: u ~ r^(1 - 15/2 ... ) decays as a power law
        let grid = RadialGrid::uniform(0.05, 10.0, 20).unwrap();
        let fam = Family::general(1.1, 1.0, 0.0);
        let gs = ground_state(&fam, 0.0, &grid, &cfg()).unwrap();
        let total = simpson(|r| gs.u_at(r).unwrap().powi(2), 1e-12, 60.0, 200_000);
        assert!((total - 1.0).abs() < 1e-6, "{total}");
    }
}
