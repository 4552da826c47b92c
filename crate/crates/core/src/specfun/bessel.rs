//! Bessel functions of the first and second kind for real order.
//!
//! For `nu >= 0` the order is split as `nu = mu + n` with `|mu| <= 1/2`.
//! `J` is obtained from the continued fraction for `J'_nu / J_nu` by downward
//! recurrence, `Y_mu` from Temme's series (small `x`) or Steed's complex
//! continued fraction (large `x`), and the Wronskian fixes the normalization.
//! `Y` is then carried up in order by the (stable) forward recurrence.
//! Negative orders use the reflection formulas.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Below this argument Temme's series is used for `Y_mu`; above it the
/// Steed continued fraction.
pub const SERIES_CROSSOVER: f64 = 2.0;

const EPS: f64 = f64::EPSILON;
const FPMIN: f64 = f64::MIN_POSITIVE / f64::EPSILON;
const MAXIT: usize = 100_000;
const RESCALE: f64 = 1e250;

/// A finite Bessel order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BesselOrder(f64);

impl BesselOrder {
    pub fn new(nu: f64) -> Result<Self> {
        if nu.is_finite() {
            Ok(Self(nu))
        } else {
            Err(Error::NonFiniteOrder(nu))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// `J_nu(x)`, `Y_nu(x)` and their derivatives with respect to `x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BesselJY {
    pub j: f64,
    pub y: f64,
    pub jp: f64,
    pub yp: f64,
}

pub fn bessel_j(nu: f64, x: f64) -> Result<f64> {
    bessel_jy(nu, x).map(|b| b.j)
}

pub fn bessel_y(nu: f64, x: f64) -> Result<f64> {
    bessel_jy(nu, x).map(|b| b.y)
}

/// `(J'_nu(x), Y'_nu(x))` from the recurrence `C'_nu = C_{nu-1} - (nu/x) C_nu`.
pub fn bessel_pair_derivative(nu: f64, x: f64) -> Result<(f64, f64)> {
    let here = bessel_jy(nu, x)?;
    let below = bessel_jy(nu - 1.0, x)?;
    let ratio = nu / x;
    Ok((below.j - ratio * here.j, below.y - ratio * here.y))
}

pub fn bessel_jy(nu: f64, x: f64) -> Result<BesselJY> {
    let nu = BesselOrder::new(nu)?.value();
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::NonPositiveArgument(x));
    }

    let out = if nu >= 0.0 {
        jy_nonnegative(nu, x)?
    } else {
        // J_{-m} = cos(m pi) J_m - sin(m pi) Y_m
        // Y_{-m} = sin(m pi) J_m + cos(m pi) Y_m
        let m = -nu;
        let pos = jy_nonnegative(m, x)?;
        let (s, c) = sin_cos_pi(m);
        BesselJY {
            j: c * pos.j - s * pos.y,
            y: s * pos.j + c * pos.y,
            jp: c * pos.jp - s * pos.yp,
            yp: s * pos.jp + c * pos.yp,
        }
    };

    if [out.j, out.y, out.jp, out.yp].iter().all(|v| v.is_finite()) {
        Ok(out)
    } else {
        Err(Error::Overflow { nu, x })
    }
}

/// `(sin(pi t), cos(pi t))` with the argument reduced first, so integers give
/// an exact zero sine.
fn sin_cos_pi(t: f64) -> (f64, f64) {
    let n = t.round();
    let frac = t - n;
    let sign = if (n as i64) % 2 == 0 { 1.0 } else { -1.0 };
    let (s, c) = (PI * frac).sin_cos();
    (sign * s, sign * c)
}

fn jy_nonnegative(nu: f64, x: f64) -> Result<BesselJY> {
    let nl = if x < SERIES_CROSSOVER {
        (nu + 0.5) as usize
    } else {
        (nu - x + 1.5).max(0.0) as usize
    };
    let mu = nu - nl as f64;
    let xi = 1.0 / x;
    let xi2 = 2.0 * xi;
    let wronskian = xi2 / PI;

    // CF1: h = J'_nu / J_nu, sign tracked through the Lentz denominators.
    let mut isign = 1.0;
    let mut h = (nu * xi).max(FPMIN);
    let mut b = xi2 * nu;
    let mut d = 0.0;
    let mut c = h;
    let mut converged = false;
    for _ in 0..MAXIT {
        b += xi2;
        d = b - d;
        if d.abs() < FPMIN {
            d = FPMIN;
        }
        c = b - 1.0 / c;
        if c.abs() < FPMIN {
            c = FPMIN;
        }
        d = 1.0 / d;
        let del = c * d;
        h *= del;
        if d < 0.0 {
            isign = -isign;
        }
        if (del - 1.0).abs() <= EPS {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::BesselConvergence { nu, x });
    }

    // Downward recurrence from nu to mu on an unnormalized J.
    let mut rjl = isign * FPMIN;
    let mut rjpl = h * rjl;
    let mut rjl1 = rjl;
    let mut rjp1 = rjpl;
    let mut fact = nu * xi;
    for _ in 0..nl {
        let rjtemp = fact * rjl + rjpl;
        fact -= xi;
        rjpl = fact * rjtemp - rjl;
        rjl = rjtemp;
        if rjl.abs() > RESCALE {
            rjl /= RESCALE;
            rjpl /= RESCALE;
            rjl1 /= RESCALE;
            rjp1 /= RESCALE;
        }
    }
    if rjl == 0.0 {
        rjl = EPS;
    }
    let f = rjpl / rjl;

    let (rjmu, mut rymu, mut ry1) = if x < SERIES_CROSSOVER {
        temme_series(mu, x, f, wronskian)?
    } else {
        steed_cf2(mu, x, f, rjl, wronskian, nu)?
    };

    let scale = rjmu / rjl;
    let j = rjl1 * scale;
    let jp = rjp1 * scale;

    for i in 1..=nl {
        let rytemp = (mu + i as f64) * xi2 * ry1 - rymu;
        rymu = ry1;
        ry1 = rytemp;
    }
    let y = rymu;
    let yp = nu * xi * rymu - ry1;
    Ok(BesselJY { j, y, jp, yp })
}

/// Temme's series for `Y_mu`, `Y_{mu+1}`; returns `(J_mu, Y_mu, Y_{mu+1})`.
fn temme_series(mu: f64, x: f64, f: f64, wronskian: f64) -> Result<(f64, f64, f64)> {
    let mu2 = mu * mu;
    let xi = 1.0 / x;
    let x2 = 0.5 * x;
    let pimu = PI * mu;
    let fact = if pimu.abs() < EPS { 1.0 } else { pimu / pimu.sin() };
    let d = -x2.ln();
    let e = mu * d;
    let fact2 = if e.abs() < EPS { 1.0 } else { e.sinh() / e };
    let (gam1, gam2, gampl, gammi) = gamma_aux(mu);
    let mut ff = 2.0 / PI * fact * (gam1 * e.cosh() + gam2 * fact2 * d);
    let e = e.exp();
    let mut p = e / (gampl * PI);
    let mut q = 1.0 / (e * PI * gammi);
    let pimu2 = 0.5 * pimu;
    let fact3 = if pimu2.abs() < EPS { 1.0 } else { pimu2.sin() / pimu2 };
    let r = PI * pimu2 * fact3 * fact3;
    let mut c = 1.0;
    let dd = -x2 * x2;
    let mut sum = ff + r * q;
    let mut sum1 = p;
    let mut converged = false;
    for i in 1..MAXIT {
        let fi = i as f64;
        ff = (fi * ff + p + q) / (fi * fi - mu2);
        c *= dd / fi;
        p /= fi - mu;
        q /= fi + mu;
        let del = c * (ff + r * q);
        sum += del;
        let del1 = c * p - fi * del;
        sum1 += del1;
        if del.abs() < (1.0 + sum.abs()) * EPS {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::BesselConvergence { nu: mu, x });
    }
    let rymu = -sum;
    let ry1 = -sum1 * 2.0 * xi;
    let rymup = mu * xi * rymu - ry1;
    let rjmu = wronskian / (rymup - f * rymu);
    Ok((rjmu, rymu, ry1))
}

/// Steed's CF2 for `p + iq = (J'_mu + i Y'_mu)/(J_mu + i Y_mu)`.
fn steed_cf2(
    mu: f64,
    x: f64,
    f: f64,
    rjl: f64,
    wronskian: f64,
    nu: f64,
) -> Result<(f64, f64, f64)> {
    let xi = 1.0 / x;
    let mut a = 0.25 - mu * mu;
    let mut p = -0.5 * xi;
    let mut q = 1.0;
    let br = 2.0 * x;
    let mut bi = 2.0;
    let mut fact = a * xi / (p * p + q * q);
    let mut cr = br + q * fact;
    let mut ci = bi + p * fact;
    let mut den = br * br + bi * bi;
    let mut dr = br / den;
    let mut di = -bi / den;
    let mut dlr = cr * dr - ci * di;
    let mut dli = cr * di + ci * dr;
    let mut temp = p * dlr - q * dli;
    q = p * dli + q * dlr;
    p = temp;
    let mut converged = false;
    for i in 2..MAXIT {
        a += 2.0 * (i - 1) as f64;
        bi += 2.0;
        dr = a * dr + br;
        di = a * di + bi;
        if dr.abs() + di.abs() < FPMIN {
            dr = FPMIN;
        }
        fact = a / (cr * cr + ci * ci);
        cr = br + cr * fact;
        ci = bi - ci * fact;
        if cr.abs() + ci.abs() < FPMIN {
            cr = FPMIN;
        }
        den = dr * dr + di * di;
        dr /= den;
        di /= -den;
        dlr = cr * dr - ci * di;
        dli = cr * di + ci * dr;
        temp = p * dlr - q * dli;
        q = p * dli + q * dlr;
        p = temp;
        if (dlr - 1.0).abs() + dli.abs() <= EPS {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::BesselConvergence { nu, x });
    }
    let gam = (p - f) / q;
    let rjmu = (wronskian / ((p - f) * gam + q)).sqrt().copysign(rjl);
    let rymu = rjmu * gam;
    let rymup = rymu * (p + q / gam);
    let ry1 = mu * xi * rymu - rymup;
    Ok((rjmu, rymu, ry1))
}

/// Chebyshev fits, valid for `|mu| <= 1/2`, of
/// `gam1 = (1/Gamma(1-mu) - 1/Gamma(1+mu)) / (2 mu)`,
/// `gam2 = (1/Gamma(1-mu) + 1/Gamma(1+mu)) / 2`,
/// together with `1/Gamma(1+mu)` and `1/Gamma(1-mu)`.
fn gamma_aux(mu: f64) -> (f64, f64, f64, f64) {
    const C1: [f64; 7] = [
        -1.142022680371168e0,
        6.5165112670737e-3,
        3.087090173086e-4,
        -3.4706269649e-6,
        6.9437664e-9,
        3.67795e-11,
        -1.356e-13,
    ];
    const C2: [f64; 8] = [
        1.843740587300905e0,
        -7.68528408447867e-2,
        1.2719271366546e-3,
        -4.9717367042e-6,
        -3.31261198e-8,
        2.423096e-10,
        -1.702e-13,
        -1.49e-15,
    ];
    let t = 8.0 * mu * mu - 1.0;
    let gam1 = chebyshev(&C1, t);
    let gam2 = chebyshev(&C2, t);
    (gam1, gam2, gam2 - mu * gam1, gam2 + mu * gam1)
}

fn chebyshev(coeffs: &[f64], t: f64) -> f64 {
    let (mut d, mut dd) = (0.0, 0.0);
    let t2 = 2.0 * t;
    for &c in coeffs[1..].iter().rev() {
        let sv = d;
        d = t2 * d - dd + c;
        dd = sv;
    }
    t * d - dd + 0.5 * coeffs[0]
}
