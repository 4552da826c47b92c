use std::path::Path;

use shapeinv_core::{
    central_potential, centrifugal, full_w, partners_at, DimensionalContext, Error, Family, RadialGrid, Settings,
};

use crate::csv::{number, Table};
use crate::failure::Failure;

pub const HEADER: [&str; 8] = ["r", "w", "W", "V1", "V2", "V_central", "V_centrifugal", "pole"];

/// One row per grid point. At a pole of `w` every value cell is empty and the
/// `pole` column is 1.
pub fn table(fam: &Family, ell: f64, d: u32, grid: &RadialGrid, settings: &Settings) -> Result<Table, Failure> {
    let cfg = &settings.physics;
    // D dimensions reduce to the three-dimensional formulas at l + (D-3)/2
    let l = DimensionalContext::new(ell, d)?.ell_effective;
    let mut out = Table::new(&HEADER);
    for &r in grid.points() {
        let sample = full_w(fam, l, r, cfg)?;
        let values = if sample.pole {
            None
        } else {
            match (partners_at(fam, l, r, cfg), central_potential(fam, l, r, cfg)) {
                (Ok((v1, v2)), Ok(vc)) => Some([sample.central, sample.full, v1, v2, vc, centrifugal(l, r, cfg)]),
                (Err(Error::Pole { .. }), _) | (_, Err(Error::Pole { .. })) => None,
                (Err(e), _) | (_, Err(e)) => return Err(e.into()),
            }
        };
        let mut row = vec![number(r)];
        match values {
            Some(v) => {
                row.extend(v.map(number));
                row.push("0".into());
            }
            None => {
                row.extend(std::iter::repeat_n(String::new(), 6));
                row.push("1".into());
            }
        }
        out.raw(&row);
    }
    Ok(out)
}

pub fn run(
    fam: &Family,
    ell: f64,
    d: u32,
    grid: &RadialGrid,
    out: Option<&Path>,
    settings: &Settings,
) -> Result<(), Failure> {
    table(fam, ell, d, grid, settings)?.emit(out)
}
