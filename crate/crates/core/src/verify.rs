//! Finite-difference residual checks.
//!
//! Every closed-form construction in the crate is checked here against
//! derivatives taken numerically from point values alone. Residuals are
//! reported relative to `1 + Σ|term|` over the terms of the equation under
//! test, except for the third-order annihilation check, which is relative
//! to the local scale `|ψ| (1 + |x| + |β|)³`.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::grid::Grid;
use crate::kummer::ComplexScalar;
use crate::oscillator;
use crate::painleve::{piv_residual, piv_residual_scale, piv_solution, Family, PivSolution};
use crate::seed::{seed_eval, seed_u, TransformParams};
use crate::susy::{new_state, partner_eigenfunction, partner_potential};
use crate::SINGULAR_TOLERANCE;

/// Centered difference of order 1 or 2 with one Richardson step, combining
/// the stencils at `h` and `h/2`; the error is `O(h⁴)`.
pub fn fd_derivative<F>(f: F, x: f64, order: u8, h: f64) -> Result<ComplexScalar>
where
    F: Fn(f64) -> Result<ComplexScalar>,
{
    let at = |t: f64| f(t).map_err(|_| Error::EvaluationFailed { x });
    match order {
        1 => {
            let wide = (at(x + h)? - at(x - h)?) / (2.0 * h);
            let narrow = (at(x + h / 2.0)? - at(x - h / 2.0)?) / h;
            Ok((4.0 * narrow - wide) / 3.0)
        }
        2 => {
            let center = at(x)?;
            let wide = (at(x + h)? - 2.0 * center + at(x - h)?) / (h * h);
            let narrow = (at(x + h / 2.0)? - 2.0 * center + at(x - h / 2.0)?) / (h * h / 4.0);
            Ok((4.0 * narrow - wide) / 3.0)
        }
        _ => Err(Error::InvalidParams(
            "finite-difference order must be 1 or 2",
        )),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ResidualKind {
    /// `-u'' + x²u - εu`
    Schrodinger,
    /// `β' + β² - x² + ε`
    Riccati,
    /// The Painlevé IV equation for `g_i` with `(a_i, b_i)`.
    Piv(Family),
    /// `(-∂² + Ṽ - E_n) A⁺ψ_n`
    Eigen(u32),
    /// `(-∂² + Ṽ - ε)(1/u)`
    NewState,
    /// `L⁻(1/u)` with `L⁻ = (-∂ + β)(∂ + x)(∂ + β)`, all three derivatives numerical.
    Annihilation,
}

impl ResidualKind {
    /// Acceptance threshold on `max_relative`.
    pub fn threshold(&self) -> f64 {
        match self {
            ResidualKind::Schrodinger | ResidualKind::Riccati => 1e-7,
            ResidualKind::Piv(_) => 1e-8,
            ResidualKind::Eigen(_) | ResidualKind::NewState => 1e-6,
            ResidualKind::Annihilation => 1e-5,
        }
    }
}

impl fmt::Display for ResidualKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ResidualKind::Schrodinger => write!(f, "schrodinger"),
            ResidualKind::Riccati => write!(f, "riccati"),
            ResidualKind::Piv(family) => write!(f, "piv_family_{family}"),
            ResidualKind::Eigen(n) => write!(f, "eigen({n})"),
            ResidualKind::NewState => write!(f, "new_state"),
            ResidualKind::Annihilation => write!(f, "annihilation"),
        }
    }
}

impl Serialize for ResidualKind {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyOptions {
    /// Step for first derivatives.
    pub h: f64,
    /// Step for second derivatives, where roundoff grows like `h⁻²`.
    pub h_second: f64,
    /// Step for the nested third-order stencil of the annihilation check;
    /// roundoff grows like `h⁻³` there.
    pub nested_h: f64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            h: 1e-4,
            h_second: 1e-3,
            nested_h: 1.5e-3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResidualReport {
    pub kind: ResidualKind,
    pub max_relative: f64,
    pub mean_relative: f64,
    pub excluded_points: Vec<f64>,
    pub evaluated_points: usize,
    pub grid: Grid,
}

impl ResidualReport {
    pub fn passes(&self) -> bool {
        self.max_relative <= self.kind.threshold()
    }

    pub fn excluded_fraction(&self) -> f64 {
        self.excluded_points.len() as f64 / self.grid.len() as f64
    }
}

impl fmt::Display for ResidualReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<18} max {:.3e}  mean {:.3e}  threshold {:.0e}  excluded {}/{}  {}",
            self.kind.to_string(),
            self.max_relative,
            self.mean_relative,
            self.kind.threshold(),
            self.excluded_points.len(),
            self.grid.len(),
            if self.passes() { "PASS" } else { "FAIL" }
        )
    }
}

pub fn residual_report(
    kind: ResidualKind,
    params: &TransformParams,
    grid: &Grid,
) -> Result<ResidualReport> {
    residual_report_with(kind, params, grid, &VerifyOptions::default())
}

fn median(mut values: Vec<f64>) -> f64 {
    if values.is_empty() {
        return 0.0;
    }
    values.sort_by(|a, b| a.total_cmp(b));
    values[values.len() / 2]
}

/// Denominators whose near-zeros make a point singular for `kind`.
fn denominators(kind: ResidualKind, params: &TransformParams, x: f64) -> Option<Vec<f64>> {
    let s = seed_eval(params, x).ok()?;
    let mut dens = vec![s.u.norm()];
    let family = match kind {
        ResidualKind::Piv(f) => Some(f),
        _ => None,
    };
    match family {
        Some(Family::One) => dens.push((s.beta_prime - 1.0).norm()),
        Some(Family::Two) => dens.push((x + s.beta).norm()),
        _ => {}
    }
    Some(dens)
}

pub fn residual_report_with(
    kind: ResidualKind,
    params: &TransformParams,
    grid: &Grid,
    options: &VerifyOptions,
) -> Result<ResidualReport> {
    if let ResidualKind::Eigen(n) = kind {
        if n > 10 {
            return Err(Error::DegreeTooLarge { n, max: 10 });
        }
    }
    let points: Vec<f64> = grid.points().collect();
    let dens: Vec<Option<Vec<f64>>> = points
        .iter()
        .map(|&x| denominators(kind, params, x))
        .collect();

    let width = dens.iter().flatten().map(|d| d.len()).max().unwrap_or(0);
    let thresholds: Vec<f64> = (0..width)
        .map(|j| SINGULAR_TOLERANCE * median(dens.iter().flatten().map(|d| d[j]).collect()))
        .collect();

    let mut excluded = Vec::new();
    let mut max_relative = 0.0f64;
    let mut total = 0.0;
    let mut evaluated = 0usize;
    for (&x, d) in points.iter().zip(&dens) {
        let singular = match d {
            None => true,
            Some(d) => d.iter().zip(&thresholds).any(|(v, t)| v < t),
        };
        let relative = if singular {
            None
        } else {
            relative_residual(kind, params, x, options).ok()
        };
        match relative {
            Some(r) => {
                max_relative = max_relative.max(r);
                total += r;
                evaluated += 1;
            }
            None => excluded.push(x),
        }
    }
    if evaluated == 0 {
        return Err(Error::AllPointsExcluded);
    }
    Ok(ResidualReport {
        kind,
        max_relative,
        mean_relative: total / evaluated as f64,
        excluded_points: excluded,
        evaluated_points: evaluated,
        grid: *grid,
    })
}

/// The five parameter sets used throughout the checks: two real-axis shapes,
/// the near-real spike, and the three Painlevé IV illustrations.
pub fn reference_parameter_sets() -> [TransformParams; 5] {
    let set = |re: f64, im: f64, lambda: f64, kappa: f64| TransformParams {
        epsilon: ComplexScalar::new(re, im),
        lambda,
        kappa,
    };
    [
        set(-1.0, 1.0, 1.0, 1.0),
        set(3.0, 1e-3, 2.0, 2.0),
        set(-1.0, 1e-2, 1.0, 1.0),
        set(4.0, 0.5, 1.0, 1.0),
        set(1.0, 1.0, 3.0, 1.0),
    ]
}

/// Every residual kind for one parameter set: the seed, the Riccati
/// closure, the three Painlevé IV families, `eigen(0..=n_max)`, the new
/// state, and the annihilation check.
pub fn standard_suite(
    params: &TransformParams,
    grid: &Grid,
    n_max: u32,
) -> Result<Vec<ResidualReport>> {
    let mut kinds = vec![ResidualKind::Schrodinger, ResidualKind::Riccati];
    kinds.extend(Family::ALL.map(ResidualKind::Piv));
    kinds.extend((0..=n_max).map(ResidualKind::Eigen));
    kinds.extend([ResidualKind::NewState, ResidualKind::Annihilation]);
    kinds
        .into_iter()
        .map(|kind| residual_report(kind, params, grid))
        .collect()
}

/// `|Σ terms| / (1 + Σ|term|)`, with the first term on the left-hand side.
fn relative(terms: &[ComplexScalar]) -> f64 {
    let sum: ComplexScalar = terms.iter().sum();
    sum.norm() / (1.0 + terms.iter().map(|t| t.norm()).sum::<f64>())
}

/// `(-∂² + Ṽ - E)ψ` with `ψ''` by finite differences.
fn eigen_relative(
    psi: impl Fn(f64) -> Result<ComplexScalar>,
    energy: ComplexScalar,
    params: &TransformParams,
    x: f64,
    h: f64,
) -> Result<f64> {
    let value = psi(x)?;
    let second = fd_derivative(&psi, x, 2, h)?;
    let potential = partner_potential(params, x)?;
    Ok(relative(&[-second, potential * value, -energy * value]))
}

/// Relative residual of `kind` at one point.
pub fn relative_residual(
    kind: ResidualKind,
    params: &TransformParams,
    x: f64,
    options: &VerifyOptions,
) -> Result<f64> {
    let h = options.h;
    let eps = params.epsilon;
    match kind {
        ResidualKind::Schrodinger => {
            let u = seed_u(params, x)?;
            let second = fd_derivative(|t| seed_u(params, t), x, 2, options.h_second)?;
            Ok(relative(&[-second, x * x * u, -eps * u]))
        }
        ResidualKind::Riccati => {
            let beta = seed_eval(params, x)?.beta;
            let first = fd_derivative(|t| Ok(seed_eval(params, t)?.beta), x, 1, h)?;
            Ok(relative(&[
                first,
                beta * beta,
                ComplexScalar::new(-x * x, 0.0),
                eps,
            ]))
        }
        ResidualKind::Piv(family) => {
            let sol = PivSolution::new(*params, family);
            let e = piv_solution(params, family, x)?;
            Ok(piv_residual(&e, sol.a, sol.b).norm() / piv_residual_scale(&e, sol.a, sol.b))
        }
        ResidualKind::Eigen(n) => eigen_relative(
            |t| partner_eigenfunction(params, n, t),
            ComplexScalar::new(oscillator::energy(n), 0.0),
            params,
            x,
            options.h_second,
        ),
        ResidualKind::NewState => {
            eigen_relative(|t| new_state(params, t), eps, params, x, options.h_second)
        }
        ResidualKind::Annihilation => {
            let h = options.nested_h;
            let psi = |t: f64| new_state(params, t);
            let beta = |t: f64| Ok::<_, Error>(seed_eval(params, t)?.beta);
            // (∂ + β)ψ
            let first = |t: f64| Ok(fd_derivative(psi, t, 1, h)? + beta(t)? * psi(t)?);
            // (∂ + x)(∂ + β)ψ
            let second = |t: f64| Ok(fd_derivative(first, t, 1, h)? + t * first(t)?);
            // (-∂ + β)(∂ + x)(∂ + β)ψ
            let lowered = -fd_derivative(second, x, 1, h)? + beta(x)? * second(x)?;
            let scale = psi(x)?.norm() * (1.0 + x.abs() + beta(x)?.norm()).powi(3);
            Ok(lowered.norm() / scale)
        }
    }
}
