//! Complex partner potentials `Ṽ = x² - 2β'` for the two real-axis shapes.

use susy_piv::{ComplexScalar, Grid, PartnerSystem, TransformParams};

fn main() -> susy_piv::Result<()> {
    let grid = Grid::new(-5.0, 5.0, 0.5)?;
    let cases = [
        (
            "eps = -1 + i, lambda = kappa = 1",
            TransformParams::new(ComplexScalar::new(-1.0, 1.0), 1.0, 1.0)?,
        ),
        (
            "eps = 3 + 0.001 i, lambda = kappa = 2",
            TransformParams::new(ComplexScalar::new(3.0, 1e-3), 2.0, 2.0)?,
        ),
    ];
    for (label, params) in cases {
        let system = PartnerSystem::new(params, grid);
        println!("{label}");
        println!("{:>6}  {:>12}  {:>12}  {:>8}", "x", "Re V", "Im V", "x^2");
        for x in grid.points() {
            let v = system.potential(x)?;
            println!("{x:>6}  {:>12.6}  {:>12.6}  {:>8.2}", v.re, v.im, x * x);
        }
        println!();
    }
    Ok(())
}
