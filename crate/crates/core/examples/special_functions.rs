//! Kummer's M and Gamma in double precision against the extended-precision series.

use susy_piv::kummer::{gamma, kummer_m, kummer_m_derivative, kummer_oracle, SeriesControls};
use susy_piv::ComplexScalar;

fn main() -> susy_piv::Result<()> {
    let controls = SeriesControls::default();
    let eps = ComplexScalar::new(-1.0, 1.0);
    let a = (1.0 - eps) / 4.0;
    let b = ComplexScalar::new(0.5, 0.0);

    println!(
        "{:>6}  {:>44}  {:>10}",
        "z", "M((1-eps)/4, 1/2; z)", "rel. err"
    );
    for z in [0.5, 4.0, 16.0, 29.9, 30.1, 64.0, 100.0] {
        let z = ComplexScalar::new(z, 0.0);
        let m = kummer_m(a, b, z, &controls)?;
        let exact = kummer_oracle(a, b, z, 30)?;
        let err = (m - exact.to_complex()).norm() / exact.to_complex().norm();
        println!("{:>6}  {:>44}  {err:>10.2e}", z.re, format!("{m:.12e}"));
    }

    let z = ComplexScalar::new(2.0, 0.0);
    println!(
        "\ndM/dz at z = 2: {:.15}",
        kummer_m_derivative(a, b, z, 1, &controls)?
    );

    for z in [
        ComplexScalar::new(0.5, 0.0),
        ComplexScalar::new(0.5, 0.5),
        ComplexScalar::new(-2.3, 0.4),
    ] {
        println!("Gamma({z}) = {:.15}", gamma(z)?);
    }
    Ok(())
}
