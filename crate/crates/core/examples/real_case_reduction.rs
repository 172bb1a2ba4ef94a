//! A real seed with `λ` chosen from `ν` gives the real partner family.

use susy_piv::seed::real_case_lambda;
use susy_piv::susy::partner_potential;
use susy_piv::{ComplexScalar, Grid, TransformParams};

fn main() -> susy_piv::Result<()> {
    let eps = -1.0;
    for nu in [0.0, 0.25, 0.5, 0.9] {
        let lambda = real_case_lambda(nu, eps)?;
        let params = TransformParams::new(ComplexScalar::new(eps, 0.0), lambda, 0.0)?;
        let mut max_im = 0.0f64;
        let mut min_re = f64::INFINITY;
        for x in Grid::default().points() {
            let v = partner_potential(&params, x)?;
            max_im = max_im.max(v.im.abs());
            min_re = min_re.min(v.re);
        }
        println!("nu = {nu:<4}  lambda = {lambda:.6}  min Re V = {min_re:>9.5}  max |Im V| = {max_im:.1e}");
    }
    Ok(())
}
