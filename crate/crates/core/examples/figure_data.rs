//! Writes the potential and Painlevé IV figure data through the CLI front end.
//!
//! Run with an output directory: `cargo run --example figure_data -- out/`.

use susy_piv::cli::{run, Command, RunConfig};

fn main() {
    let dir = std::path::PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| ".".into()));
    std::fs::create_dir_all(&dir).expect("output directory");

    let mut configs = Vec::new();
    let mut potential = RunConfig::new(Command::Potential);
    potential.output_path = Some(dir.join("potential_left.csv"));
    configs.push(potential.clone());
    potential.epsilon_re = 3.0;
    potential.epsilon_im = 1e-3;
    potential.lambda = 2.0;
    potential.kappa = 2.0;
    potential.output_path = Some(dir.join("potential_right.csv"));
    configs.push(potential);

    for (family, re, im, lambda) in [(1, -1.0, 0.01, 1.0), (2, 4.0, 0.5, 1.0), (3, 1.0, 1.0, 3.0)] {
        let mut piv = RunConfig::new(Command::Piv);
        piv.family = Some(family);
        piv.epsilon_re = re;
        piv.epsilon_im = im;
        piv.lambda = lambda;
        piv.output_path = Some(dir.join(format!("g{family}.csv")));
        configs.push(piv);
    }

    for config in &configs {
        let status = run(config, &mut std::io::stderr());
        println!(
            "{} -> exit {status}",
            config.output_path.as_ref().unwrap().display()
        );
    }
}
