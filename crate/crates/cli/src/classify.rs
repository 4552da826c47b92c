use shapeinv_core::{ddim_broken_check, DimensionalContext, Family, Settings, SusyStatus};

use crate::failure::Failure;

/// For the harmonic family above three dimensions the verdict follows from
/// the sign of the centrifugal coefficient, `l' < (D-3)/2` being broken.
pub fn status(fam: &Family, ell: f64, d: u32, settings: &Settings) -> Result<SusyStatus, Failure> {
    if d > 3 && matches!(fam, Family::HarmonicG1 { .. }) {
        return Ok(ddim_broken_check(ell, d)?);
    }
    Ok(DimensionalContext::new(ell, d)?.classify(fam, &settings.physics)?)
}

pub fn run(fam: &Family, ell: f64, d: u32, settings: &Settings) -> Result<(), Failure> {
    let status = status(fam, ell, d, settings)?;
    println!("{} l={ell} D={d}: {:?}", fam.id(), status.phase);
    println!("  {}", status.reason());
    if let Some(r) = status.remainder {
        let sign = if r < 0.0 { "negative" } else { "positive" };
        println!("  remainder R_l = {r} ({sign})");
    }
    Ok(())
}
