//! Confluent hypergeometric function `M(a, b; z) = 1F1(a; b; z)` and the
//! complex Gamma function.
//!
//! Only the nonnegative real axis is used by the seed solutions (`z = x²`),
//! so the evaluation strategy is simple: the Maclaurin series up to
//! [`SeriesControls::asymptotic_switch`] and the full two-sided large-argument
//! expansion beyond it. Off the real axis the series is always used.

mod gamma;
pub mod oracle;

pub use gamma::{gamma, recip_gamma};
pub use oracle::{kummer_oracle, OracleValue};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// All complex quantities in the crate.
pub type ComplexScalar = Complex64;

/// Truncation controls for [`kummer_m`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesControls {
    pub max_terms: usize,
    /// Relative size of the last retained term.
    pub term_tolerance: f64,
    /// `|z|` above which the large-argument expansion is used on the real axis.
    pub asymptotic_switch: f64,
}

impl Default for SeriesControls {
    fn default() -> Self {
        Self {
            max_terms: 500,
            term_tolerance: 1e-16,
            asymptotic_switch: 30.0,
        }
    }
}

impl SeriesControls {
    pub fn validate(&self) -> Result<()> {
        if self.max_terms < 50 {
            return Err(Error::InvalidControls("max_terms must be at least 50"));
        }
        if !(self.term_tolerance > 0.0 && self.term_tolerance < 1.0) {
            return Err(Error::InvalidControls("term_tolerance must lie in (0, 1)"));
        }
        if !(self.asymptotic_switch > 0.0 && self.asymptotic_switch.is_finite()) {
            return Err(Error::InvalidControls("asymptotic_switch must be positive"));
        }
        Ok(())
    }
}

pub(crate) fn is_nonpositive_integer(z: ComplexScalar) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0
}

/// `M(a, b; z)`.
pub fn kummer_m(
    a: ComplexScalar,
    b: ComplexScalar,
    z: ComplexScalar,
    controls: &SeriesControls,
) -> Result<ComplexScalar> {
    controls.validate()?;
    if is_nonpositive_integer(b) {
        return Err(Error::PoleParameter { re: b.re, im: b.im });
    }
    if z == ComplexScalar::new(0.0, 0.0) || a == ComplexScalar::new(0.0, 0.0) {
        return Ok(ComplexScalar::new(1.0, 0.0));
    }
    // A terminating series is a polynomial; summing it directly is exact
    // up to rounding on any range.
    let use_asymptotic =
        z.im == 0.0 && z.re > controls.asymptotic_switch && !is_nonpositive_integer(a);
    if use_asymptotic {
        let expansion = asymptotic(a, b, z.re, controls)?;
        if expansion.stokes_ambiguity <= STOKES_AMBIGUITY_LIMIT * expansion.value.norm() {
            return Ok(expansion.value);
        }
        // The recessive part is not pinned down by the expansion; the series
        // still converges here, only more slowly.
        series(a, b, z, controls).or(Ok(expansion.value))
    } else {
        series(a, b, z, controls)
    }
}

// Relative size of `|sin(πa)|·recessive` above which the expansion is not trusted.
const STOKES_AMBIGUITY_LIMIT: f64 = 1e-13;

/// `d^k/dz^k M(a, b; z) = (a)_k / (b)_k · M(a + k, b + k; z)`.
pub fn kummer_m_derivative(
    a: ComplexScalar,
    b: ComplexScalar,
    z: ComplexScalar,
    order: u32,
    controls: &SeriesControls,
) -> Result<ComplexScalar> {
    if is_nonpositive_integer(b) {
        return Err(Error::PoleParameter { re: b.re, im: b.im });
    }
    let mut factor = ComplexScalar::new(1.0, 0.0);
    for k in 0..order {
        let bk = b + k as f64;
        if is_nonpositive_integer(bk + 1.0) {
            return Err(Error::PoleParameter {
                re: bk.re + 1.0,
                im: bk.im,
            });
        }
        factor *= (a + k as f64) / bk;
    }
    if factor == ComplexScalar::new(0.0, 0.0) {
        return Ok(factor);
    }
    let shift = order as f64;
    Ok(factor * kummer_m(a + shift, b + shift, z, controls)?)
}

fn series(
    a: ComplexScalar,
    b: ComplexScalar,
    z: ComplexScalar,
    controls: &SeriesControls,
) -> Result<ComplexScalar> {
    let mut term = ComplexScalar::new(1.0, 0.0);
    let mut sum = term;
    for n in 0..controls.max_terms {
        let nf = n as f64;
        let ratio = (a + nf) * z / ((b + nf) * (nf + 1.0));
        term *= ratio;
        sum += term;
        if term.norm() == 0.0 {
            return Ok(sum);
        }
        // Only stop once the terms are decreasing for good.
        if term.norm() <= controls.term_tolerance * sum.norm() && ratio.norm() < 0.5 {
            return Ok(sum);
        }
    }
    Err(Error::NoConvergence {
        max_terms: controls.max_terms,
    })
}

/// Sums an asymptotic series `Σ (p)_k (q)_k / k! · w^k` up to its smallest term.
fn asymptotic_sum(
    p: ComplexScalar,
    q: ComplexScalar,
    w: f64,
    controls: &SeriesControls,
) -> ComplexScalar {
    let mut term = ComplexScalar::new(1.0, 0.0);
    let mut sum = term;
    let mut last = f64::INFINITY;
    for k in 0..controls.max_terms {
        let kf = k as f64;
        let next = term * (p + kf) * (q + kf) * (w / (kf + 1.0));
        let size = next.norm();
        if size >= last {
            break;
        }
        sum += next;
        term = next;
        last = size;
        if size <= controls.term_tolerance * sum.norm() {
            break;
        }
    }
    sum
}

struct Expansion {
    value: ComplexScalar,
    stokes_ambiguity: f64,
}

/// Large-argument expansion for real `x > 0`:
///
/// ```text
/// M(a,b;x) / Γ(b) ~ e^x x^(a-b) / Γ(a) · Σ (b-a)_k (1-a)_k / k! x^-k
///                 + cos(πa) x^-a / Γ(b-a) · Σ (a)_k (a-b+1)_k / k! (-x)^-k
/// ```
///
/// The positive real axis is a Stokes line for the recessive part, whose
/// multiplier is the average of `e^{±iπa}`. The spread `|sin(πa)|` of that
/// multiplier times the recessive part is returned as `stokes_ambiguity`.
fn asymptotic(
    a: ComplexScalar,
    b: ComplexScalar,
    x: f64,
    controls: &SeriesControls,
) -> Result<Expansion> {
    let one = ComplexScalar::new(1.0, 0.0);
    let gamma_b = gamma(b)?;
    let ln_x = x.ln();

    let dominant = if is_nonpositive_integer(a) {
        ComplexScalar::new(0.0, 0.0)
    } else {
        let sum = asymptotic_sum(b - a, one - a, 1.0 / x, controls);
        ((a - b) * ln_x + x).exp() * recip_gamma(a) * sum
    };

    let recessive = {
        let sum = asymptotic_sum(a, a - b + 1.0, -1.0 / x, controls);
        (-a * ln_x).exp() * recip_gamma(b - a) * sum
    };
    let pi_a = a * std::f64::consts::PI;

    let value = gamma_b * (dominant + pi_a.cos() * recessive);
    if value.re.is_finite() && value.im.is_finite() {
        Ok(Expansion {
            value,
            stokes_ambiguity: (gamma_b * pi_a.sin() * recessive).norm(),
        })
    } else {
        Err(Error::NoConvergence {
            max_terms: controls.max_terms,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> ComplexScalar {
        ComplexScalar::new(re, im)
    }

    fn rel(a: ComplexScalar, b: ComplexScalar) -> f64 {
        (a - b).norm() / b.norm()
    }

    #[test]
    fn value_at_zero_is_one() {
        let v = kummer_m(
            c(0.3, 0.2),
            c(0.5, 0.0),
            c(0.0, 0.0),
            &SeriesControls::default(),
        )
        .unwrap();
        assert_eq!(v, c(1.0, 0.0));
    }

    #[test]
    fn equal_parameters_give_exponential() {
        let z = c(1.0, 1.0);
        let v = kummer_m(c(1.0, 0.0), c(1.0, 0.0), z, &SeriesControls::default()).unwrap();
        assert!(rel(v, z.exp()) < 1e-15);
        assert!((v - c(1.46869, 2.28736)).norm() < 1e-5);
    }

    #[test]
    fn equal_parameters_on_asymptotic_branch() {
        for x in [31.0, 45.0, 64.0, 100.0] {
            let v = kummer_m(
                c(0.5, 0.0),
                c(0.5, 0.0),
                c(x, 0.0),
                &SeriesControls::default(),
            )
            .unwrap();
            assert!(rel(v, c(x.exp(), 0.0)) < 1e-13, "x = {x}");
        }
    }

    #[test]
    fn terminating_series_is_polynomial() {
        // M(-2, 1/2; z) = 1 - 4z + 4z²/3
        let z = 50.0;
        let v = kummer_m(
            c(-2.0, 0.0),
            c(0.5, 0.0),
            c(z, 0.0),
            &SeriesControls::default(),
        )
        .unwrap();
        let exact = 1.0 - 4.0 * z + 4.0 * z * z / 3.0;
        assert!(rel(v, c(exact, 0.0)) < 1e-14);
    }

    #[test]
    fn pole_parameter_rejected() {
        let err = kummer_m(
            c(0.5, 0.0),
            c(-2.0, 0.0),
            c(1.0, 0.0),
            &SeriesControls::default(),
        );
        assert!(matches!(err, Err(Error::PoleParameter { .. })));
        let err = kummer_m(
            c(0.5, 0.0),
            c(0.0, 0.0),
            c(1.0, 0.0),
            &SeriesControls::default(),
        );
        assert!(matches!(err, Err(Error::PoleParameter { .. })));
    }

    #[test]
    fn exhausted_terms_reported() {
        let controls = SeriesControls {
            max_terms: 50,
            term_tolerance: 1e-16,
            asymptotic_switch: 1e6,
        };
        let err = kummer_m(c(0.25, 0.0), c(0.5, 0.0), c(400.0, 0.0), &controls);
        assert!(matches!(err, Err(Error::NoConvergence { max_terms: 50 })));
    }

    #[test]
    fn controls_validated() {
        let bad = SeriesControls {
            max_terms: 10,
            ..Default::default()
        };
        assert!(bad.validate().is_err());
        let bad = SeriesControls {
            term_tolerance: 1.0,
            ..Default::default()
        };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn derivative_linear_term() {
        let controls = SeriesControls::default();
        let a = c(0.7, -0.3);
        let b = c(1.5, 0.0);
        let d = kummer_m_derivative(a, b, c(0.0, 0.0), 1, &controls).unwrap();
        assert!(rel(d, a / b) < 1e-15);
        let d = kummer_m_derivative(c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), 1, &controls).unwrap();
        assert_eq!(d, c(1.0, 0.0));
    }

    #[test]
    fn derivative_is_contiguous_relation() {
        let controls = SeriesControls::default();
        let (a, b, z) = (c(0.25, 0.1), c(0.5, 0.0), c(2.0, 0.0));
        let d = kummer_m_derivative(a, b, z, 1, &controls).unwrap();
        let expected = a / b * kummer_m(a + 1.0, b + 1.0, z, &controls).unwrap();
        assert_eq!(d, expected);
    }
}
