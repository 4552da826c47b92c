//! Placing a pole of the general Bessel superpotential at a chosen radius.
//!
//! With `f1 = J_{A+1}(Br) + C Y_{A+1}(Br)` and `f2 = J_A(Br) + C Y_A(Br)` the
//! central superpotential is proportional to `f1/f2` and diverges at every
//! zero of `f2`.

use crate::error::{Error, Result};
use crate::specfun::bessel_jy;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CylinderPair {
    pub r: f64,
    pub f1: f64,
    pub f2: f64,
}

impl CylinderPair {
    pub fn ratio(&self) -> f64 {
        self.f1 / self.f2
    }
}

/// `C = -J_A(B r_node) / Y_A(B r_node)`, which makes `f2(r_node) = 0`.
pub fn localization_constant(a: f64, b: f64, r_node: f64) -> Result<f64> {
    if !(b > 0.0 && b.is_finite()) {
        return Err(Error::InvalidParameter(format!("B must be positive, got {b}")));
    }
    if !(r_node > 0.0 && r_node.is_finite()) {
        return Err(Error::NonPositiveArgument(r_node));
    }
    let jy = bessel_jy(a, b * r_node)?;
    if jy.y == 0.0 {
        return Err(Error::NodeAtYZero(r_node));
    }
    let c = -jy.j / jy.y;
    if !c.is_finite() {
        return Err(Error::NodeAtYZero(r_node));
    }
    Ok(c)
}

pub fn cylinder_f(a: f64, b: f64, c: f64, r: f64) -> Result<CylinderPair> {
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::NonPositiveArgument(r));
    }
    let lower = bessel_jy(a, b * r)?;
    let upper = bessel_jy(a + 1.0, b * r)?;
    Ok(CylinderPair {
        r,
        f1: upper.j + c * upper.y,
        f2: lower.j + c * lower.y,
    })
}

/// All sign changes of `f2` on `[r_lo, r_hi]`, located by a scan with `scan`
/// cells followed by bisection to machine precision.
pub fn cylinder_roots(a: f64, b: f64, c: f64, r_lo: f64, r_hi: f64, scan: usize) -> Result<Vec<f64>> {
    if !(r_lo > 0.0 && r_hi > r_lo && r_hi.is_finite()) {
        return Err(Error::InvalidGrid(format!(
            "root bracket [{r_lo}, {r_hi}] must satisfy 0 < lo < hi"
        )));
    }
    if scan == 0 {
        return Err(Error::InvalidGrid("scan needs at least one cell".into()));
    }
    let f2 = |r: f64| cylinder_f(a, b, c, r).map(|p| p.f2);
    let h = (r_hi - r_lo) / scan as f64;
    let mut roots = Vec::new();
    let mut left = r_lo;
    let mut f_left = f2(left)?;
    for i in 1..=scan {
        let right = if i == scan { r_hi } else { r_lo + h * i as f64 };
        let f_right = f2(right)?;
        if f_left == 0.0 {
            roots.push(left);
        } else if f_left * f_right < 0.0 {
            roots.push(bisect(&f2, left, right, f_left)?);
        }
        left = right;
        f_left = f_right;
    }
    if f_left == 0.0 {
        roots.push(left);
    }
    Ok(roots)
}

fn bisect<F: Fn(f64) -> Result<f64>>(f: &F, mut lo: f64, mut hi: f64, mut f_lo: f64) -> Result<f64> {
    loop {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            return Ok(mid);
        }
        let f_mid = f(mid)?;
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if (f_mid < 0.0) == (f_lo < 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
}
