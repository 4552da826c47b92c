use crate::config::PhysicsConfig;
use crate::error::{Error, Result};
use crate::partners::constant_shift;
use crate::superpotential::{remainder_of, Family};

/// Eigenvalues of `-(hbar^2/2m) d^2/dr^2 + V1(r, l)`:
/// `E_0 = 0`, `E_n = sum_{k<n} R_{l+k}`. Returns `n_max + 1` values.
pub fn energy_ladder(fam: &Family, ell: f64, n_max: usize, cfg: &PhysicsConfig) -> Result<Vec<f64>> {
    fam.validate()?;
    let mut out = Vec::with_capacity(n_max + 1);
    let mut e = 0.0;
    out.push(e);
    for k in 0..n_max {
        e += remainder_of(fam, ell + k as f64, cfg)?;
        if !e.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "energy ladder overflows at n = {}",
                k + 1
            )));
        }
        out.push(e);
    }
    Ok(out)
}

/// The ladder with the constant built into `V1` removed, i.e. the spectrum of
/// the central plus centrifugal potential alone.
pub fn physical_spectrum(
    fam: &Family,
    ell: f64,
    n_max: usize,
    cfg: &PhysicsConfig,
) -> Result<Vec<f64>> {
    let shift = constant_shift(fam, ell, cfg)?;
    Ok(energy_ladder(fam, ell, n_max, cfg)?
        .into_iter()
        .map(|e| e - shift)
        .collect())
}
