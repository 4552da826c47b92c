//! Shape-invariant central potentials in supersymmetric quantum mechanics.
//!
//! A central superpotential `W(r, l) = (hbar/sqrt(2m)) (w(r, l) - (l+1)/r)`
//! whose `l`-dependence is fixed by a ratio `G(l)` and a remainder `R_l`
//! generates the partner potentials `V1`, `V2 = V1(l+1) + R_l`. This crate
//! evaluates the general Bessel solution and its closed-form special cases
//! (harmonic, upside-down oscillator, central Pöschl-Teller, Coulomb), checks
//! shape invariance, builds and normalizes ground states, classifies SUSY as
//! broken or unbroken and extends the scheme to `D >= 3` dimensions.
//!
//! ```
//! use shapeinv_core::{shape_invariance_check, Family, PhysicsConfig, RadialGrid, Tolerances};
//!
//! let cfg = PhysicsConfig::default();
//! let grid = RadialGrid::uniform(1e-2, 20.0, 1000).unwrap();
//! let rep = shape_invariance_check(&Family::harmonic(1.0), 0.0, &grid, &cfg, &Tolerances::default())
//!     .unwrap();
//! assert!(rep.matches_remainder(&Tolerances::default()));
//! assert!((rep.r_inferred - 2.0).abs() < 1e-9);
//! ```

// `!(x > 0.0)` is used on purpose so that NaN is rejected too
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod config;
pub mod ddim;
pub mod errata;
pub mod error;
pub mod grid;
pub mod partners;
pub mod specfun;
pub mod superpotential;
pub mod wavefunction;

pub use config::{PhysicsConfig, Settings, Tolerances};
pub use ddim::{ddim_broken_check, full_w_ddim, map_ell, DimensionalContext};
pub use errata::{erratum_report, ErratumReport};
pub use error::{Error, Result};
pub use grid::{RadialGrid, Spacing};
pub use partners::{
    central_potential, central_potential_closed_form, centrifugal, constant_shift, partners_at,
    partners_closed_form, partners_from_w, remainder_profile, shape_invariance_between,
    shape_invariance_check, InvarianceReport, PartnerPair,
};
pub use superpotential::{
    central_w_family, central_w_general, coefficients, full_w, remainder_of, BesselCoefficients,
    CentralValue, EllMap, Family, SuperpotentialSample,
};
pub use wavefunction::{
    classify, energy_ladder, ground_state, ground_state_with_measure, localization_constant,
    physical_spectrum, schrodinger_residual, w_tilde, GroundState, NormMeasure, SusyPhase,
    SusyStatus,
};
