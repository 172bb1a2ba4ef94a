//! The full residual suite on every reference parameter set.

use susy_piv::verify::{reference_parameter_sets, standard_suite};
use susy_piv::Grid;

fn main() -> susy_piv::Result<()> {
    let grid = Grid::default();
    let mut failures = 0;
    for params in reference_parameter_sets() {
        println!(
            "eps = {}, lambda = {}, kappa = {}",
            params.epsilon, params.lambda, params.kappa
        );
        for report in standard_suite(&params, &grid, 5)? {
            failures += usize::from(!report.passes());
            println!("  {report}");
        }
    }
    println!("{failures} failing reports");
    Ok(())
}
