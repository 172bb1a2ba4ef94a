use std::f64::consts::PI;

use super::{is_nonpositive_integer, ComplexScalar};
use crate::error::{Error, Result};

// Lanczos approximation, g = 7, n = 9.
const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

fn lanczos(z: ComplexScalar) -> ComplexScalar {
    let z = z - 1.0;
    let mut acc = ComplexScalar::new(LANCZOS_COEFFS[0], 0.0);
    for (i, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    (2.0 * PI).sqrt() * ((z + 0.5) * t.ln() - t).exp() * acc
}

/// Complex Gamma function, with reflection for `Re(z) < 1/2`.
pub fn gamma(z: ComplexScalar) -> Result<ComplexScalar> {
    if is_nonpositive_integer(z) {
        return Err(Error::PoleArgument { re: z.re, im: z.im });
    }
    if z.re < 0.5 {
        let one = ComplexScalar::new(1.0, 0.0);
        Ok(PI / ((z * PI).sin() * lanczos(one - z)))
    } else {
        Ok(lanczos(z))
    }
}

/// `1/Γ(z)`, an entire function: exactly zero at the poles of Γ.
pub fn recip_gamma(z: ComplexScalar) -> ComplexScalar {
    if is_nonpositive_integer(z) {
        return ComplexScalar::new(0.0, 0.0);
    }
    if z.re < 0.5 {
        let one = ComplexScalar::new(1.0, 0.0);
        (z * PI).sin() * lanczos(one - z) / PI
    } else {
        1.0 / lanczos(z)
    }
}
