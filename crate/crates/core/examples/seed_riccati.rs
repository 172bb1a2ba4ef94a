//! The complex seed `u`, its log-derivative `β`, and the Riccati closure.

use susy_piv::seed::{locate_real_zeros, seed_eval};
use susy_piv::verify::fd_derivative;
use susy_piv::{ComplexScalar, Grid, TransformParams};

fn main() -> susy_piv::Result<()> {
    let params = TransformParams::new(ComplexScalar::new(-1.0, 1.0), 1.0, 1.0)?;

    println!("{:>5}  {:>40}  {:>40}  {:>9}", "x", "u", "beta", "riccati");
    for x in [-4.0, -2.0, -1.0, 0.0, 1.0, 2.0, 4.0] {
        let s = seed_eval(&params, x)?;
        // β' taken numerically, so the closure is checked rather than assumed.
        let slope = fd_derivative(|t| Ok(seed_eval(&params, t)?.beta), x, 1, 1e-4)?;
        let closure = slope + s.beta * s.beta - x * x + params.epsilon;
        println!(
            "{x:>5}  {:>40}  {:>40}  {:>9.1e}",
            format!("{:.6e}", s.u),
            format!("{:.6}", s.beta),
            closure.norm()
        );
    }

    let zeros = locate_real_zeros(&params, &Grid::default());
    println!("\nreal zeros of u on [-5, 5]: {zeros:?}");

    // A real seed at ε = 1 does vanish on the axis.
    let real = TransformParams::new(ComplexScalar::new(1.0, 0.0), 2.0, 0.0)?;
    println!(
        "real zeros for eps = 1, lambda = 2: {:?}",
        locate_real_zeros(&real, &Grid::default())
    );
    Ok(())
}
