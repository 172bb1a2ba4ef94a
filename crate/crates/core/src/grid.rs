use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const MAX_INTERVALS: f64 = 1e7;

/// A uniform grid `xmin, xmin + step, …` up to and including `xmax`
/// (when `xmax - xmin` is a whole number of steps).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    xmin: f64,
    xmax: f64,
    step: f64,
}

impl Grid {
    pub fn new(xmin: f64, xmax: f64, step: f64) -> Result<Self> {
        if !(xmin.is_finite() && xmax.is_finite() && step.is_finite()) {
            return Err(Error::InvalidGrid("bounds and step must be finite"));
        }
        if xmin >= xmax {
            return Err(Error::InvalidGrid("xmin must be below xmax"));
        }
        if step <= 0.0 {
            return Err(Error::InvalidGrid("step must be positive"));
        }
        if (xmax - xmin) / step > MAX_INTERVALS {
            return Err(Error::InvalidGrid("more than 1e7 intervals"));
        }
        Ok(Self { xmin, xmax, step })
    }

    pub fn xmin(&self) -> f64 {
        self.xmin
    }

    pub fn xmax(&self) -> f64 {
        self.xmax
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn intervals(&self) -> usize {
        let ratio = (self.xmax - self.xmin) / self.step;
        // Absorb rounding in e.g. 10 / 0.01.
        (ratio + 1e-9 * ratio.max(1.0)).floor() as usize
    }

    pub fn len(&self) -> usize {
        self.intervals() + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn point(&self, k: usize) -> f64 {
        self.xmin + k as f64 * self.step
    }

    pub fn points(&self) -> impl ExactSizeIterator<Item = f64> + '_ {
        (0..self.len()).map(move |k| self.point(k))
    }
}

impl Default for Grid {
    fn default() -> Self {
        Self {
            xmin: -5.0,
            xmax: 5.0,
            step: 0.01,
        }
    }
}
