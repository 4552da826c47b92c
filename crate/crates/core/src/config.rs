//! Unit system and numerical tolerance policy.
//!
//! Every formula in the crate carries explicit `hbar` and `mass` factors. The
//! default configuration uses `hbar^2 = 2m = 1`, the convention of the
//! reference figures.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicsConfig {
    hbar: f64,
    mass: f64,
}

impl Default for PhysicsConfig {
    fn default() -> Self {
        Self {
            hbar: 1.0,
            mass: 0.5,
        }
    }
}

impl PhysicsConfig {
    pub fn new(hbar: f64, mass: f64) -> Result<Self> {
        if !(hbar > 0.0 && hbar.is_finite()) {
            return Err(Error::InvalidConfig(format!("hbar must be > 0, got {hbar}")));
        }
        if !(mass > 0.0 && mass.is_finite()) {
            return Err(Error::InvalidConfig(format!("mass must be > 0, got {mass}")));
        }
        Ok(Self { hbar, mass })
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    /// `hbar^2 / 2m`, the kinetic prefactor.
    pub fn hbar2_over_2m(&self) -> f64 {
        self.hbar * self.hbar / (2.0 * self.mass)
    }

    /// `hbar / sqrt(2m)`, the prefactor of the full superpotential.
    pub fn w_prefactor(&self) -> f64 {
        self.hbar / (2.0 * self.mass).sqrt()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Relative spread allowed for a quantity that should be r-independent.
    pub rel_constancy: f64,
    /// Bound on the normalized Schrödinger residual.
    pub residual_abs: f64,
    /// Relative accuracy requested from adaptive quadrature.
    pub quadrature_rel: f64,
    /// Finite-difference step as a fraction of the local scale.
    pub fd_step_scale: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            rel_constancy: 1e-8,
            residual_abs: 1e-6,
            quadrature_rel: 1e-10,
            fd_step_scale: 1e-5,
        }
    }
}

impl Tolerances {
    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("rel_constancy", self.rel_constancy),
            ("residual_abs", self.residual_abs),
            ("quadrature_rel", self.quadrature_rel),
            ("fd_step_scale", self.fd_step_scale),
        ];
        for (name, value) in fields {
            if !(value > 0.0 && value.is_finite()) {
                return Err(Error::InvalidConfig(format!(
                    "{name} must be strictly positive, got {value}"
                )));
            }
        }
        Ok(())
    }
}

/// Settings read from a `key = value` file.
///
/// Recognized keys are `hbar`, `mass`, `rel_constancy`, `residual_abs`,
/// `quadrature_rel` and `fd_step_scale`. Blank lines and `#` comments are
/// ignored. Missing keys keep their defaults.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Settings {
    pub physics: PhysicsConfig,
    pub tolerances: Tolerances,
}

impl Settings {
    pub fn parse(text: &str) -> Result<Self> {
        let mut hbar = PhysicsConfig::default().hbar;
        let mut mass = PhysicsConfig::default().mass;
        let mut tolerances = Tolerances::default();

        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::InvalidConfig(format!("line {}: expected key = value", lineno + 1))
            })?;
            let key = key.trim();
            let value: f64 = value.trim().parse().map_err(|_| {
                Error::InvalidConfig(format!("line {}: cannot parse {:?}", lineno + 1, value.trim()))
            })?;
            match key {
                "hbar" => hbar = value,
                "mass" => mass = value,
                "rel_constancy" => tolerances.rel_constancy = value,
                "residual_abs" => tolerances.residual_abs = value,
                "quadrature_rel" => tolerances.quadrature_rel = value,
                "fd_step_scale" => tolerances.fd_step_scale = value,
                other => {
                    return Err(Error::InvalidConfig(format!(
                        "line {}: unknown key {other:?}",
                        lineno + 1
                    )))
                }
            }
        }
        tolerances.validate()?;
        Ok(Self {
            physics: PhysicsConfig::new(hbar, mass)?,
            tolerances,
        })
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidConfig(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }
}
