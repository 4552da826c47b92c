//! Data behind the four reference figures. Parameters are fixed: the
//! Pöschl-Teller family with `k0 = 1`, `C = 0` at `l = 2, 6, 10` for figures
//! 1 to 3, and the Bessel pair with `A = B = 1` and a node at `r = 5` for
//! figure 4.

use std::path::{Path, PathBuf};

use shapeinv_core::wavefunction::cylinder_f;
use shapeinv_core::{
    central_potential, centrifugal, full_w, ground_state_with_measure, localization_constant, w_tilde, Family,
    NormMeasure, RadialGrid, Settings,
};

use crate::csv::Table;
use crate::failure::Failure;

pub const ELLS: [f64; 3] = [2.0, 6.0, 10.0];
pub const CYLINDER_A: f64 = 1.0;
pub const CYLINDER_B: f64 = 1.0;
pub const NODE: f64 = 5.0;

fn family() -> Family {
    Family::central_poschl_teller(1.0)
}

fn per_ell_header(prefixes: &[&str]) -> Vec<String> {
    let mut header = vec!["r".to_string()];
    for ell in ELLS {
        header.extend(prefixes.iter().map(|p| format!("{p}_l{ell}")));
    }
    header
}

/// `V + V_centrifugal` and `W` for each `l`.
fn potentials(grid: &RadialGrid, settings: &Settings) -> Result<Table, Failure> {
    let cfg = &settings.physics;
    let fam = family();
    let mut table = Table::new(&per_ell_header(&["V", "W"]));
    for &r in grid.points() {
        let mut row = vec![Some(r)];
        for ell in ELLS {
            let v = central_potential(&fam, ell, r, cfg)? + centrifugal(ell, r, cfg);
            row.extend([Some(v), Some(full_w(&fam, ell, r, cfg)?.finite()?.full)]);
        }
        table.row(&row);
    }
    Ok(table)
}

fn antiderivatives(grid: &RadialGrid, settings: &Settings) -> Result<Table, Failure> {
    let fam = family();
    let mut table = Table::new(&per_ell_header(&["W_tilde"]));
    for &r in grid.points() {
        let mut row = vec![Some(r)];
        for ell in ELLS {
            row.push(Some(w_tilde(&fam, ell, r, &settings.physics)?));
        }
        table.row(&row);
    }
    Ok(table)
}

/// Normalized `R = N exp(-W_tilde)`. The published constants correspond to
/// `int R^2 dr = 1`; the `int u^2 dr = 1` constants are reported alongside.
fn wavefunctions(grid: &RadialGrid, settings: &Settings) -> Result<(Table, Vec<String>), Failure> {
    let fam = family();
    let mut columns = Vec::new();
    let mut notes = Vec::new();
    for ell in ELLS {
        let gs = ground_state_with_measure(&fam, ell, grid, &settings.physics, NormMeasure::RadialOnly)?;
        let alt = ground_state_with_measure(&fam, ell, grid, &settings.physics, NormMeasure::ReducedRadial)?;
        notes.push(format!(
            "l={ell}: N = {:.4} (int {} = 1); N = {:.4} under int {} = 1",
            gs.norm,
            gs.measure.label(),
            alt.norm,
            alt.measure.label()
        ));
        columns.push(gs.radial);
    }
    let mut table = Table::new(&per_ell_header(&["R"]));
    for (i, &r) in grid.points().iter().enumerate() {
        let mut row = vec![Some(r)];
        row.extend(columns.iter().map(|c| Some(c[i])));
        table.row(&row);
    }
    Ok((table, notes))
}

fn cylinder(grid: &RadialGrid) -> Result<(Table, Vec<String>), Failure> {
    let c = localization_constant(CYLINDER_A, CYLINDER_B, NODE)?;
    let mut table = Table::new(&["r", "f1", "f2", "f1_over_f2"]);
    for &r in grid.points() {
        let f = cylinder_f(CYLINDER_A, CYLINDER_B, c, r)?;
        let ratio = f.ratio();
        table.row(&[Some(r), Some(f.f1), Some(f.f2), ratio.is_finite().then_some(ratio)]);
    }
    Ok((table, vec![format!("A = {CYLINDER_A}, B = {CYLINDER_B}, C = -J(1,5)/Y(1,5) = {c:.15}")]))
}

pub fn path(dir: &Path, id: u8) -> PathBuf {
    dir.join(format!("figure{id}.csv"))
}

pub fn run(id: u8, grid: &RadialGrid, dir: &Path, settings: &Settings) -> Result<(), Failure> {
    let (table, notes) = match id {
        1 => (potentials(grid, settings)?, Vec::new()),
        2 => (antiderivatives(grid, settings)?, Vec::new()),
        3 => wavefunctions(grid, settings)?,
        4 => cylinder(grid)?,
        _ => return Err(Failure::Usage(format!("no figure {id}"))),
    };
    std::fs::create_dir_all(dir).map_err(|e| Failure::Io(format!("{}: {e}", dir.display())))?;
    let target = path(dir, id);
    table.save(&target)?;
    for note in notes {
        println!("{note}");
    }
    println!("wrote {}", target.display());
    Ok(())
}
