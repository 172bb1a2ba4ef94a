//! The transformation function
//!
//! ```text
//! u(x) = e^{-x²/2} [ M((1-ε)/4, 1/2; x²) + (λ + iκ) x M((3-ε)/4, 3/2; x²) ]
//! ```
//!
//! which solves `-u'' + x² u = ε u` for every complex `ε`, and its
//! logarithmic derivative `β = u'/u`, which solves the Riccati equation
//! `β' + β² = x² - ε`. Second and higher derivatives are never obtained by
//! differentiating `M` again: they follow from `u'' = (x² - ε) u`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::Grid;
use crate::kummer::{gamma, kummer_m, kummer_m_derivative, ComplexScalar, SeriesControls};
use crate::SINGULAR_TOLERANCE;

/// Factorization energy `ε` and the real coefficients of the odd seed component.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TransformParams {
    pub epsilon: ComplexScalar,
    pub lambda: f64,
    pub kappa: f64,
}

impl TransformParams {
    pub fn new(epsilon: ComplexScalar, lambda: f64, kappa: f64) -> Result<Self> {
        if !(epsilon.re.is_finite() && epsilon.im.is_finite()) {
            return Err(Error::InvalidParams("epsilon must be finite"));
        }
        if !(lambda.is_finite() && kappa.is_finite()) {
            return Err(Error::InvalidParams("lambda and kappa must be finite"));
        }
        Ok(Self {
            epsilon,
            lambda,
            kappa,
        })
    }

    /// `λ + iκ`
    pub fn coefficient(&self) -> ComplexScalar {
        ComplexScalar::new(self.lambda, self.kappa)
    }

    /// Parameters of the pointwise conjugate seed: `(ε̄, λ, -κ)`.
    pub fn conjugate(&self) -> Self {
        Self {
            epsilon: self.epsilon.conj(),
            lambda: self.lambda,
            kappa: -self.kappa,
        }
    }
}

/// `u`, `u'`, `β = u'/u` and `β' = x² - ε - β²` at one point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SeedEvaluation {
    pub x: f64,
    pub u: ComplexScalar,
    pub u_prime: ComplexScalar,
    pub beta: ComplexScalar,
    pub beta_prime: ComplexScalar,
}

impl SeedEvaluation {
    /// `β'' = 2x - 2ββ'`
    pub fn beta_double_prime(&self) -> ComplexScalar {
        2.0 * self.x - 2.0 * self.beta * self.beta_prime
    }
}

struct SeedParts {
    even: ComplexScalar,
    odd: ComplexScalar,
    derivative: ComplexScalar,
}

impl SeedParts {
    fn value(&self) -> ComplexScalar {
        self.even + self.odd
    }

    /// `u` is numerically a zero when the two components cancel to within
    /// the singular tolerance of their own size.
    fn is_singular(&self) -> bool {
        let u = self.value();
        u.norm() <= SINGULAR_TOLERANCE * (self.even.norm() + self.odd.norm()) || u.norm() == 0.0
    }
}

fn kummer_parameters(epsilon: ComplexScalar) -> [(ComplexScalar, ComplexScalar); 2] {
    let one = ComplexScalar::new(1.0, 0.0);
    [
        ((one - epsilon) / 4.0, ComplexScalar::new(0.5, 0.0)),
        ((3.0 * one - epsilon) / 4.0, ComplexScalar::new(1.5, 0.0)),
    ]
}

fn value_parts(
    params: &TransformParams,
    x: f64,
    controls: &SeriesControls,
) -> Result<(ComplexScalar, ComplexScalar)> {
    let [(a_even, b_even), (a_odd, b_odd)] = kummer_parameters(params.epsilon);
    let z = ComplexScalar::new(x * x, 0.0);
    let gauss = (-0.5 * x * x).exp();
    let even = gauss * kummer_m(a_even, b_even, z, controls)?;
    let odd = gauss * params.coefficient() * x * kummer_m(a_odd, b_odd, z, controls)?;
    Ok((even, odd))
}

fn parts(params: &TransformParams, x: f64, controls: &SeriesControls) -> Result<SeedParts> {
    let [(a_even, b_even), (a_odd, b_odd)] = kummer_parameters(params.epsilon);
    let z = ComplexScalar::new(x * x, 0.0);
    let gauss = (-0.5 * x * x).exp();
    let c = params.coefficient();

    let m_even = kummer_m(a_even, b_even, z, controls)?;
    let m_odd = kummer_m(a_odd, b_odd, z, controls)?;
    let dm_even = kummer_m_derivative(a_even, b_even, z, 1, controls)?;
    let dm_odd = kummer_m_derivative(a_odd, b_odd, z, 1, controls)?;

    let even = gauss * m_even;
    let odd = gauss * c * x * m_odd;
    // d/dx M(a, b; x²) = 2x M'(a, b; x²)
    let bracket = 2.0 * x * dm_even + c * m_odd + c * (2.0 * x * x) * dm_odd;
    let derivative = -x * (even + odd) + gauss * bracket;
    Ok(SeedParts {
        even,
        odd,
        derivative,
    })
}

/// `u(x; ε, λ, κ)`.
pub fn seed_u(params: &TransformParams, x: f64) -> Result<ComplexScalar> {
    seed_u_with(params, x, &SeriesControls::default())
}

pub fn seed_u_with(
    params: &TransformParams,
    x: f64,
    controls: &SeriesControls,
) -> Result<ComplexScalar> {
    let (even, odd) = value_parts(params, x, controls)?;
    Ok(even + odd)
}

/// `(u, u', β, β')` at `x`; fails with `SingularPoint` at a numerical zero of `u`.
pub fn seed_eval(params: &TransformParams, x: f64) -> Result<SeedEvaluation> {
    seed_eval_with(params, x, &SeriesControls::default())
}

pub fn seed_eval_with(
    params: &TransformParams,
    x: f64,
    controls: &SeriesControls,
) -> Result<SeedEvaluation> {
    let p = parts(params, x, controls)?;
    if p.is_singular() {
        return Err(Error::SingularPoint { x });
    }
    let u = p.value();
    let beta = p.derivative / u;
    let beta_prime = x * x - params.epsilon - beta * beta;
    Ok(SeedEvaluation {
        x,
        u,
        u_prime: p.derivative,
        beta,
        beta_prime,
    })
}

/// Coefficient `λ = 2ν Γ((3-ε)/4) / Γ((1-ε)/4)` that reproduces the real
/// (κ = 0) family of partner potentials parametrized by `ν`.
pub fn real_case_lambda(nu: f64, epsilon: f64) -> Result<f64> {
    let upper = gamma(ComplexScalar::new((3.0 - epsilon) / 4.0, 0.0))?;
    let lower = gamma(ComplexScalar::new((1.0 - epsilon) / 4.0, 0.0))?;
    Ok(2.0 * nu * upper.re / lower.re)
}

fn median(values: &mut [f64]) -> Option<f64> {
    if values.is_empty() {
        return None;
    }
    values.sort_by(|a, b| a.total_cmp(b));
    Some(values[values.len() / 2])
}

/// Grid points at or next to real zeros of `u`.
///
/// A point is reported when `|u|` falls below the singular tolerance relative
/// to the grid median of `|u|`, when its two components cancel (see
/// [`seed_eval`]), or when both `Re u` and `Im u` change sign between it and
/// its right neighbor (the point of the pair with smaller `|u|` is reported).
/// An identically vanishing imaginary part counts as a sign change.
pub fn locate_real_zeros(params: &TransformParams, grid: &Grid) -> Vec<f64> {
    let controls = SeriesControls::default();
    let points: Vec<f64> = grid.points().collect();
    let values: Vec<Option<(ComplexScalar, bool)>> = points
        .iter()
        .map(|&x| {
            value_parts(params, x, &controls).ok().map(|(even, odd)| {
                let u = even + odd;
                let cancelled =
                    u.norm() <= SINGULAR_TOLERANCE * (even.norm() + odd.norm()) || u.norm() == 0.0;
                (u, cancelled)
            })
        })
        .collect();

    let mut magnitudes: Vec<f64> = values.iter().flatten().map(|(u, _)| u.norm()).collect();
    let threshold = SINGULAR_TOLERANCE * median(&mut magnitudes).unwrap_or(0.0);

    let mut flagged = vec![false; points.len()];
    for (k, v) in values.iter().enumerate() {
        match v {
            None => flagged[k] = true,
            Some((u, cancelled)) => flagged[k] |= *cancelled || u.norm() < threshold,
        }
    }
    for k in 0..points.len().saturating_sub(1) {
        if let (Some((left, _)), Some((right, _))) = (values[k], values[k + 1]) {
            let re_flip = left.re * right.re <= 0.0;
            let im_flip = left.im * right.im < 0.0 || (left.im == 0.0 && right.im == 0.0);
            if re_flip && im_flip {
                let pick = if left.norm() <= right.norm() {
                    k
                } else {
                    k + 1
                };
                flagged[pick] = true;
            }
        }
    }
    points
        .into_iter()
        .zip(flagged)
        .filter_map(|(x, f)| f.then_some(x))
        .collect()
}
