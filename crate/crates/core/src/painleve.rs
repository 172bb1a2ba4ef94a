//! Complex Painlevé IV solutions generated by the partner Hamiltonian.
//!
//! The partner `H̃` has third-order ladder operators
//! `L⁻ = (-∂ + β)(∂ + x)(∂ + β)`, which factor as a closed chain with
//! `f₁ = -β`, `f₂ = x`, `f₃ = β`. Each of the three states annihilated by
//! `L⁻` (the extremal states) gives a solution
//!
//! ```text
//! g_i = -x - (ln ψ_{E_i})'
//! g g'' = (g')²/2 + 3g⁴/2 + 4x g³ + 2(x² - a) g² + b
//! ```
//!
//! All derivatives of `g` are closed-form: `h = (ln ψ)'` obeys
//! `h' = Ṽ - E - h²`, and `β'' = 2x - 2ββ'`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kummer::ComplexScalar;
use crate::seed::{seed_eval, SeedEvaluation, TransformParams};
use crate::SINGULAR_TOLERANCE;

/// Which extremal state a solution is built from.
///
/// | family | extremal state         | energy  |
/// |--------|------------------------|---------|
/// | 1      | `A⁺a⁺u = (β' - 1) u`   | `ε + 2` |
/// | 2      | `A⁺e^{-x²/2}`          | `1`     |
/// | 3      | `1/u`                  | `ε`     |
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub enum Family {
    One,
    Two,
    Three,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::One, Family::Two, Family::Three];

    pub fn index(self) -> u8 {
        match self {
            Family::One => 1,
            Family::Two => 2,
            Family::Three => 3,
        }
    }
}

impl TryFrom<u8> for Family {
    type Error = Error;

    fn try_from(value: u8) -> Result<Self> {
        match value {
            1 => Ok(Family::One),
            2 => Ok(Family::Two),
            3 => Ok(Family::Three),
            other => Err(Error::BadFamily(other)),
        }
    }
}

impl From<Family> for u8 {
    fn from(f: Family) -> u8 {
        f.index()
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index())
    }
}

/// `(f₁, f₂, f₃) = (-β, x, β)` at one point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ChainTriple {
    pub f1: ComplexScalar,
    pub f2: ComplexScalar,
    pub f3: ComplexScalar,
}

impl ChainTriple {
    /// `f₁ + f₂ + f₃`, summed as `(f₁ + f₃) + f₂` so that the result is `x`
    /// exactly.
    pub fn sum(&self) -> ComplexScalar {
        (self.f1 + self.f3) + self.f2
    }
}

pub fn chain_functions(params: &TransformParams, x: f64) -> Result<ChainTriple> {
    let s = seed_eval(params, x)?;
    Ok(ChainTriple {
        f1: -s.beta,
        f2: ComplexScalar::new(x, 0.0),
        f3: s.beta,
    })
}

/// `(g, g', g'')` at `x`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PivPointEval {
    pub x: f64,
    pub g: ComplexScalar,
    pub g_prime: ComplexScalar,
    pub g_double_prime: ComplexScalar,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PivParameters {
    pub a: ComplexScalar,
    pub b: ComplexScalar,
}

pub fn extremal_energy(params: &TransformParams, family: Family) -> ComplexScalar {
    match family {
        Family::One => params.epsilon + 2.0,
        Family::Two => ComplexScalar::new(1.0, 0.0),
        Family::Three => params.epsilon,
    }
}

fn singular_if(small: bool, x: f64) -> Result<()> {
    if small {
        Err(Error::SingularPoint { x })
    } else {
        Ok(())
    }
}

fn logderiv_from_seed(s: &SeedEvaluation, family: Family) -> Result<ComplexScalar> {
    let x = s.x;
    match family {
        Family::One => {
            let den = s.beta_prime - 1.0;
            singular_if(
                den.norm() <= SINGULAR_TOLERANCE * (1.0 + s.beta_prime.norm()),
                x,
            )?;
            Ok(s.beta + s.beta_double_prime() / den)
        }
        Family::Two => {
            let den = x + s.beta;
            singular_if(
                den.norm() <= SINGULAR_TOLERANCE * (1.0 + x.abs() + s.beta.norm()),
                x,
            )?;
            Ok(-x + (1.0 + s.beta_prime) / den)
        }
        Family::Three => Ok(-s.beta),
    }
}

/// `(ln ψ_{E_i})'` in closed form.
pub fn extremal_logderiv(
    params: &TransformParams,
    family: Family,
    x: f64,
) -> Result<ComplexScalar> {
    logderiv_from_seed(&seed_eval(params, x)?, family)
}

/// The extremal state itself, up to an overall constant.
pub fn extremal_state(params: &TransformParams, family: Family, x: f64) -> Result<ComplexScalar> {
    let s = seed_eval(params, x)?;
    Ok(match family {
        Family::One => (s.beta_prime - 1.0) * s.u,
        Family::Two => (x + s.beta) * (-0.5 * x * x).exp(),
        Family::Three => 1.0 / s.u,
    })
}

/// `g_i` and its first two derivatives at `x`.
pub fn piv_solution(params: &TransformParams, family: Family, x: f64) -> Result<PivPointEval> {
    let s = seed_eval(params, x)?;
    let h = logderiv_from_seed(&s, family)?;
    let potential = x * x - 2.0 * s.beta_prime;
    let potential_prime = 2.0 * x - 2.0 * s.beta_double_prime();
    let h_prime = potential - extremal_energy(params, family) - h * h;
    let h_double_prime = potential_prime - 2.0 * h * h_prime;
    Ok(PivPointEval {
        x,
        g: -x - h,
        g_prime: -1.0 - h_prime,
        g_double_prime: -h_double_prime,
    })
}

fn sq(z: ComplexScalar) -> ComplexScalar {
    z * z
}

pub fn piv_parameters(params: &TransformParams, family: Family) -> PivParameters {
    let eps = params.epsilon;
    let one = ComplexScalar::new(1.0, 0.0);
    match family {
        Family::One => PivParameters {
            a: -(eps + 5.0) / 2.0,
            b: -sq(eps - 1.0) / 2.0,
        },
        Family::Two => PivParameters {
            a: eps - 1.0,
            b: ComplexScalar::new(-2.0, 0.0),
        },
        Family::Three => PivParameters {
            a: (one - eps) / 2.0,
            b: -sq(eps + 1.0) / 2.0,
        },
    }
}

/// `b` as a function of `a` along each family.
pub fn b_of_a(family: Family, a: ComplexScalar) -> ComplexScalar {
    match family {
        Family::One => -2.0 * sq(a + 3.0),
        Family::Two => ComplexScalar::new(-2.0, 0.0),
        Family::Three => -2.0 * sq(a - 1.0),
    }
}

fn residual_terms(eval: &PivPointEval, a: ComplexScalar, b: ComplexScalar) -> [ComplexScalar; 6] {
    let g = eval.g;
    let g2 = g * g;
    [
        g * eval.g_double_prime,
        0.5 * eval.g_prime * eval.g_prime,
        1.5 * g2 * g2,
        4.0 * eval.x * g2 * g,
        2.0 * g2 * (eval.x * eval.x - a),
        b,
    ]
}

/// `g g'' - (g')²/2 - 3g⁴/2 - 4x g³ - 2(x² - a) g² - b`.
pub fn piv_residual(eval: &PivPointEval, a: ComplexScalar, b: ComplexScalar) -> ComplexScalar {
    let [lhs, rest @ ..] = residual_terms(eval, a, b);
    rest.iter().fold(lhs, |acc, t| acc - t)
}

/// `1 + Σ|term|` over the terms of the equation.
pub fn piv_residual_scale(eval: &PivPointEval, a: ComplexScalar, b: ComplexScalar) -> f64 {
    1.0 + residual_terms(eval, a, b)
        .iter()
        .map(|t| t.norm())
        .sum::<f64>()
}

/// One solution family for fixed transform parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PivSolution {
    pub family: Family,
    pub params: TransformParams,
    pub a: ComplexScalar,
    pub b: ComplexScalar,
}

impl PivSolution {
    pub fn new(params: TransformParams, family: Family) -> Self {
        let PivParameters { a, b } = piv_parameters(&params, family);
        Self {
            family,
            params,
            a,
            b,
        }
    }

    pub fn eval(&self, x: f64) -> Result<PivPointEval> {
        piv_solution(&self.params, self.family, x)
    }

    pub fn residual(&self, x: f64) -> Result<ComplexScalar> {
        Ok(piv_residual(&self.eval(x)?, self.a, self.b))
    }

    pub fn relative_residual(&self, x: f64) -> Result<f64> {
        let e = self.eval(x)?;
        Ok(piv_residual(&e, self.a, self.b).norm() / piv_residual_scale(&e, self.a, self.b))
    }
}
