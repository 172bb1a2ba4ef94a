//! Extended-precision reference summation of the Kummer series.
//!
//! This is the test oracle for [`super::kummer_m`]. It shares nothing with
//! the double-precision path: the plain Maclaurin series is summed in
//! software floating point on the whole range, including where the
//! production code switches to the asymptotic expansion.

use std::fmt;

use dashu_float::round::mode::HalfEven;
use dashu_float::FBig;

use super::{is_nonpositive_integer, ComplexScalar};
use crate::error::{Error, Result};

type Big = FBig<HalfEven, 2>;

const MAX_DIGITS: u32 = 50;
const MAX_TERMS: usize = 20_000;
// Headroom for terms much larger than the final sum (z up to a few hundred).
const GUARD_BITS: usize = 256;

#[derive(Clone)]
struct BigComplex {
    re: Big,
    im: Big,
}

impl BigComplex {
    fn from_f64(z: ComplexScalar, precision: usize) -> Self {
        Self {
            re: lift(z.re, precision),
            im: lift(z.im, precision),
        }
    }

    fn mul(&self, other: &Self) -> Self {
        Self {
            re: &self.re * &other.re - &self.im * &other.im,
            im: &self.re * &other.im + &self.im * &other.re,
        }
    }

    fn div(&self, other: &Self) -> Self {
        let den = &other.re * &other.re + &other.im * &other.im;
        let num = Self {
            re: &self.re * &other.re + &self.im * &other.im,
            im: &self.im * &other.re - &self.re * &other.im,
        };
        Self {
            re: num.re / &den,
            im: num.im / &den,
        }
    }

    fn add(&self, other: &Self) -> Self {
        Self {
            re: &self.re + &other.re,
            im: &self.im + &other.im,
        }
    }

    fn norm_sqr(&self) -> Big {
        &self.re * &self.re + &self.im * &self.im
    }

    fn is_zero(&self) -> bool {
        self.re == Big::ZERO && self.im == Big::ZERO
    }
}

fn lift(x: f64, precision: usize) -> Big {
    Big::try_from(x)
        .expect("finite input")
        .with_precision(precision)
        .value()
}

/// A Kummer value carried at extended precision.
#[derive(Clone)]
pub struct OracleValue {
    value: BigComplex,
    digits: u32,
}

impl OracleValue {
    /// Rounded to the nearest double-precision complex number.
    pub fn to_complex(&self) -> ComplexScalar {
        ComplexScalar::new(
            self.value.re.to_f64().value(),
            self.value.im.to_f64().value(),
        )
    }

    /// Real part as a decimal string with the requested number of significant digits.
    pub fn re_decimal(&self) -> String {
        decimal(&self.value.re, self.digits)
    }

    pub fn im_decimal(&self) -> String {
        decimal(&self.value.im, self.digits)
    }
}

fn decimal(x: &Big, digits: u32) -> String {
    if *x == Big::ZERO {
        return "0".to_string();
    }
    x.to_decimal()
        .value()
        .with_precision(digits as usize)
        .value()
        .to_string()
}

impl fmt::Debug for OracleValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}i)", self.re_decimal(), self.im_decimal())
    }
}

/// `M(a, b; z)` summed in extended precision to `decimal_digits` significant digits.
pub fn kummer_oracle(
    a: ComplexScalar,
    b: ComplexScalar,
    z: ComplexScalar,
    decimal_digits: u32,
) -> Result<OracleValue> {
    if decimal_digits == 0 || decimal_digits > MAX_DIGITS {
        return Err(Error::InvalidControls("decimal_digits must lie in 1..=50"));
    }
    if is_nonpositive_integer(b) {
        return Err(Error::PoleParameter { re: b.re, im: b.im });
    }
    let precision =
        (decimal_digits as f64 * std::f64::consts::LOG2_10).ceil() as usize + GUARD_BITS;

    let a_big = BigComplex::from_f64(a, precision);
    let b_big = BigComplex::from_f64(b, precision);
    let z_big = BigComplex::from_f64(z, precision);
    let stop = lift(10f64.powi(-2 * (decimal_digits as i32 + 10)), precision);

    let mut term = BigComplex::from_f64(ComplexScalar::new(1.0, 0.0), precision);
    let mut sum = term.clone();
    for n in 0..MAX_TERMS {
        let nf = n as f64;
        let shift = BigComplex::from_f64(ComplexScalar::new(nf, 0.0), precision);
        let next = BigComplex::from_f64(ComplexScalar::new(nf + 1.0, 0.0), precision);
        let numer = a_big.add(&shift).mul(&z_big);
        let denom = b_big.add(&shift).mul(&next);
        term = term.mul(&numer.div(&denom));
        sum = sum.add(&term);
        if term.is_zero() {
            break;
        }
        let ratio = ((a + nf) * z / ((b + nf) * (nf + 1.0))).norm();
        if ratio < 0.5 && term.norm_sqr() <= &stop * &sum.norm_sqr() {
            return Ok(OracleValue {
                value: sum,
                digits: decimal_digits,
            });
        }
        if n + 1 == MAX_TERMS {
            return Err(Error::NoConvergence {
                max_terms: MAX_TERMS,
            });
        }
    }
    Ok(OracleValue {
        value: sum,
        digits: decimal_digits,
    })
}
