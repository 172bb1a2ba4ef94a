//! Spectrum of the partner Hamiltonian and unit-norm eigenfunctions.

use susy_piv::{ComplexScalar, Grid, PartnerSystem, TransformParams};

fn main() -> susy_piv::Result<()> {
    let params = TransformParams::new(ComplexScalar::new(-1.0, 1.0), 1.0, 1.0)?;
    let system = PartnerSystem::new(params, Grid::new(-10.0, 10.0, 0.01)?);

    let spectrum = system.spectrum(4);
    for (k, level) in spectrum.levels.iter().enumerate() {
        let note = if level.im != 0.0 {
            "off the real axis"
        } else {
            ""
        };
        println!("E[{k}] = {level:>8}  {note}");
    }
    println!("degenerate: {}", spectrum.degenerate);

    for n in 0..3 {
        let psi = system.normalized_eigenfunction(n)?;
        let mid = psi[psi.len() / 2];
        println!("normalized A+psi_{n}(0) = {mid:.6}");
    }
    println!("norm constant of 1/u: {:.6}", system.new_state_norm()?);
    Ok(())
}
