//! The three Painlevé IV solutions generated by one complex seed.

use susy_piv::painleve::{extremal_energy, piv_parameters};
use susy_piv::{ComplexScalar, Family, PivSolution, TransformParams};

fn main() -> susy_piv::Result<()> {
    let cases = [
        (
            Family::One,
            TransformParams::new(ComplexScalar::new(-1.0, 0.01), 1.0, 1.0)?,
        ),
        (
            Family::Two,
            TransformParams::new(ComplexScalar::new(4.0, 0.5), 1.0, 1.0)?,
        ),
        (
            Family::Three,
            TransformParams::new(ComplexScalar::new(1.0, 1.0), 3.0, 1.0)?,
        ),
    ];
    for (family, params) in cases {
        let pp = piv_parameters(&params, family);
        println!(
            "g{family}: eps = {}, extremal energy {}, a = {}, b = {}",
            params.epsilon,
            extremal_energy(&params, family),
            pp.a,
            pp.b
        );
        let solution = PivSolution::new(params, family);
        for x in [-3.0, -1.0, 0.0, 1.0, 3.0] {
            let e = solution.eval(x)?;
            println!(
                "  x = {x:>4}  g = {:>36}  relative residual {:.1e}",
                format!("{:.8}", e.g),
                solution.relative_residual(x)?
            );
        }
    }
    Ok(())
}
