use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Spacing {
    Uniform,
    Logarithmic,
}

/// Strictly increasing sample radii on `[r_min, r_max]`, never touching `r = 0`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RadialGrid {
    points: Vec<f64>,
    spacing: Spacing,
}

impl RadialGrid {
    pub fn new(r_min: f64, r_max: f64, n: usize, spacing: Spacing) -> Result<Self> {
        if !(r_min > 0.0) || !r_min.is_finite() {
            return Err(Error::InvalidGrid(format!("r_min must be > 0, got {r_min}")));
        }
        if !(r_max > r_min) || !r_max.is_finite() {
            return Err(Error::InvalidGrid(format!(
                "r_max must exceed r_min, got [{r_min}, {r_max}]"
            )));
        }
        if n < 2 {
            return Err(Error::InvalidGrid(format!("need at least 2 points, got {n}")));
        }

        let last = (n - 1) as f64;
        let mut points: Vec<f64> = match spacing {
            Spacing::Uniform => {
                let h = (r_max - r_min) / last;
                (0..n).map(|i| r_min + h * i as f64).collect()
            }
            Spacing::Logarithmic => {
                let (a, b) = (r_min.ln(), r_max.ln());
                (0..n).map(|i| (a + (b - a) * i as f64 / last).exp()).collect()
            }
        };
        // pin the ends exactly
        points[0] = r_min;
        points[n - 1] = r_max;

        if points.windows(2).any(|p| !(p[1] > p[0])) {
            return Err(Error::InvalidGrid(format!(
                "{n} points do not resolve [{r_min}, {r_max}]"
            )));
        }
        Ok(Self { points, spacing })
    }

    pub fn uniform(r_min: f64, r_max: f64, n: usize) -> Result<Self> {
        Self::new(r_min, r_max, n, Spacing::Uniform)
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn spacing(&self) -> Spacing {
        self.spacing
    }

    pub fn r_min(&self) -> f64 {
        self.points[0]
    }

    pub fn r_max(&self) -> f64 {
        self.points[self.points.len() - 1]
    }

    /// Step of a uniform grid.
    pub fn step(&self) -> Option<f64> {
        match self.spacing {
            Spacing::Uniform => Some((self.r_max() - self.r_min()) / (self.len() - 1) as f64),
            Spacing::Logarithmic => None,
        }
    }

    /// Same interval with `2n - 1` points, i.e. every step halved.
    pub fn refined(&self) -> Result<Self> {
        Self::new(self.r_min(), self.r_max(), 2 * self.len() - 1, self.spacing)
    }
}
