//! The reference system `H = -d²/dx² + x²`, with `E_n = 2n + 1`.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::kummer::ComplexScalar;
use crate::SINGULAR_TOLERANCE;

/// Largest quantum number whose eigenfunction is evaluated.
pub const MAX_DEGREE: u32 = 60;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OscillatorState {
    pub n: u32,
}

impl OscillatorState {
    pub fn new(n: u32) -> Self {
        Self { n }
    }

    pub fn energy(&self) -> f64 {
        energy(self.n)
    }

    pub fn value(&self, x: f64) -> Result<f64> {
        eigenfunction(self.n, x)
    }

    pub fn derivative(&self, x: f64) -> Result<f64> {
        eigenfunction_derivative(self.n, x)
    }
}

pub fn potential(x: f64) -> f64 {
    x * x
}

pub fn energy(n: u32) -> f64 {
    2.0 * n as f64 + 1.0
}

/// `ψ_0(x), …, ψ_n(x)` from the normalized form of the Hermite recurrence
/// `H_{k+1} = 2x H_k - 2k H_{k-1}`, which never forms `H_n` or `2ⁿ n!` separately.
fn ladder(n: u32, x: f64) -> Result<Vec<f64>> {
    if n > MAX_DEGREE {
        return Err(Error::DegreeTooLarge { n, max: MAX_DEGREE });
    }
    let mut values = Vec::with_capacity(n as usize + 1);
    values.push(PI.powf(-0.25) * (-0.5 * x * x).exp());
    if n >= 1 {
        values.push(2f64.sqrt() * x * values[0]);
    }
    for k in 1..n as usize {
        let kf = k as f64;
        let next =
            (2.0 / (kf + 1.0)).sqrt() * x * values[k] - (kf / (kf + 1.0)).sqrt() * values[k - 1];
        values.push(next);
    }
    Ok(values)
}

/// Normalized `ψ_n(x) = π^{-1/4} (2ⁿ n!)^{-1/2} H_n(x) e^{-x²/2}`.
pub fn eigenfunction(n: u32, x: f64) -> Result<f64> {
    Ok(*ladder(n, x)?.last().expect("nonempty"))
}

/// `ψ_n'(x) = √(2n) ψ_{n-1}(x) - x ψ_n(x)`.
pub fn eigenfunction_derivative(n: u32, x: f64) -> Result<f64> {
    let values = ladder(n, x)?;
    let psi = values[n as usize];
    if n == 0 {
        return Ok(-x * psi);
    }
    Ok((2.0 * n as f64).sqrt() * values[n as usize - 1] - x * psi)
}

/// Logarithmic derivative of `a⁺φ = (-d/dx + x)φ` for a function `φ` given
/// through its logarithmic derivative `h = φ'/φ` and `h'`:
///
/// ```text
/// (a⁺φ)'/(a⁺φ) = h + (1 - h') / (x - h)
/// ```
pub fn creation_apply_logderiv(
    x: f64,
    logderiv: ComplexScalar,
    logderiv_prime: ComplexScalar,
) -> Result<ComplexScalar> {
    let gap = x - logderiv;
    if gap.norm() < SINGULAR_TOLERANCE * (1.0 + x.abs() + logderiv.norm()) {
        return Err(Error::SingularPoint { x });
    }
    Ok(logderiv + (1.0 - logderiv_prime) / gap)
}
