//! First-order complex SUSY partner of the oscillator.
//!
//! With `A⁺ = -d/dx + β` and `A⁻ = d/dx + β`, where `β = u'/u`,
//!
//! ```text
//! H  = A⁻A⁺ + ε = -d²/dx² + x²
//! H̃ = A⁺A⁻ + ε = -d²/dx² + Ṽ,    Ṽ = x² - 2β'
//! ```
//!
//! `H̃` has the eigenfunctions `A⁺ψ_n` at `E_n = 2n + 1` and the extra state
//! `1/u` at the complex level `ε`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::kummer::ComplexScalar;
use crate::oscillator::{self, eigenfunction_derivative};
use crate::seed::{seed_eval, TransformParams};

pub use crate::grid::Grid;

/// `Ṽ(x) = x² - 2β'(x)`.
pub fn partner_potential(params: &TransformParams, x: f64) -> Result<ComplexScalar> {
    let s = seed_eval(params, x)?;
    Ok(x * x - 2.0 * s.beta_prime)
}

/// `Ṽ'(x) = 2x - 2β''(x)`.
pub fn partner_potential_derivative(params: &TransformParams, x: f64) -> Result<ComplexScalar> {
    let s = seed_eval(params, x)?;
    Ok(2.0 * x - 2.0 * s.beta_double_prime())
}

/// Unnormalized `A⁺ψ_n = -ψ_n' + βψ_n`.
pub fn partner_eigenfunction(params: &TransformParams, n: u32, x: f64) -> Result<ComplexScalar> {
    let s = seed_eval(params, x)?;
    let psi = oscillator::eigenfunction(n, x)?;
    let dpsi = eigenfunction_derivative(n, x)?;
    Ok(s.beta * psi - dpsi)
}

/// `1/u`, the eigenfunction of `H̃` at `ε`.
pub fn new_state(params: &TransformParams, x: f64) -> Result<ComplexScalar> {
    let s = seed_eval(params, x)?;
    Ok(1.0 / s.u)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    /// `ε` followed by `1, 3, …, 2 n_max + 1`.
    pub levels: Vec<ComplexScalar>,
    /// `ε` coincides with one of the listed oscillator levels.
    pub degenerate: bool,
}

pub fn spectrum(params: &TransformParams, n_max: u32) -> Spectrum {
    let mut levels = Vec::with_capacity(n_max as usize + 2);
    levels.push(params.epsilon);
    levels.extend((0..=n_max).map(|n| ComplexScalar::new(oscillator::energy(n), 0.0)));
    let degenerate = levels[1..].contains(&params.epsilon);
    Spectrum { levels, degenerate }
}

/// Tail magnitude, relative to the peak, above which a sampled function is
/// considered cut off by the grid.
const TAIL_TOLERANCE: f64 = 1e-6;
const OVERFLOW_THRESHOLD: f64 = 1e300;

/// `C = (∫|f|² dx)^{-1/2}` by the trapezoid rule over `grid`.
pub fn normalize(values: &[ComplexScalar], grid: &Grid) -> Result<f64> {
    if values.len() != grid.len() {
        return Err(Error::InvalidGrid("sample count does not match the grid"));
    }
    let peak = values.iter().map(|v| v.norm()).fold(0.0, f64::max);
    if !peak.is_finite() || peak == 0.0 {
        return Err(Error::NotNormalizable("samples vanish or are not finite"));
    }
    let ends = values[0].norm().max(values[values.len() - 1].norm());
    if ends > TAIL_TOLERANCE * peak {
        return Err(Error::NotNormalizable(
            "tails have not decayed at the grid ends",
        ));
    }
    let interior: f64 = values[1..values.len() - 1]
        .iter()
        .map(|v| v.norm_sqr())
        .sum();
    let integral = grid.step()
        * (interior + 0.5 * (values[0].norm_sqr() + values[values.len() - 1].norm_sqr()));
    if !integral.is_finite() || integral > OVERFLOW_THRESHOLD || integral <= 0.0 {
        return Err(Error::NotNormalizable(
            "integral is not a finite positive number",
        ));
    }
    Ok(integral.sqrt().recip())
}

/// A partner Hamiltonian together with the grid it is sampled on.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PartnerSystem {
    params: TransformParams,
    grid: Grid,
}

impl PartnerSystem {
    pub fn new(params: TransformParams, grid: Grid) -> Self {
        Self { params, grid }
    }

    pub fn params(&self) -> &TransformParams {
        &self.params
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn potential(&self, x: f64) -> Result<ComplexScalar> {
        partner_potential(&self.params, x)
    }

    pub fn eigenfunction(&self, n: u32, x: f64) -> Result<ComplexScalar> {
        partner_eigenfunction(&self.params, n, x)
    }

    pub fn new_state(&self, x: f64) -> Result<ComplexScalar> {
        new_state(&self.params, x)
    }

    pub fn spectrum(&self, n_max: u32) -> Spectrum {
        spectrum(&self.params, n_max)
    }

    fn sample(&self, f: impl Fn(f64) -> Result<ComplexScalar>) -> Result<Vec<ComplexScalar>> {
        self.grid.points().map(f).collect()
    }

    /// `C_n A⁺ψ_n` on the grid, with `C_n > 0` fixing the unit norm.
    pub fn normalized_eigenfunction(&self, n: u32) -> Result<Vec<ComplexScalar>> {
        let values = self.sample(|x| self.eigenfunction(n, x))?;
        let norm = normalize(&values, &self.grid)?;
        Ok(values.into_iter().map(|v| v * norm).collect())
    }

    /// Normalization constant of `1/u` on the grid, if it has one.
    pub fn new_state_norm(&self) -> Result<f64> {
        let values = self.sample(|x| self.new_state(x))?;
        normalize(&values, &self.grid)
    }
}
