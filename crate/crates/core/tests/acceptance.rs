//! One line per acceptance criterion; exits nonzero if any fails.

use rand::{Rng, SeedableRng};
use susy_piv::cli::{main_with_args, EXIT_OK};
use susy_piv::kummer::{gamma, kummer_m, kummer_oracle, SeriesControls};
use susy_piv::painleve::{b_of_a, chain_functions, piv_parameters, piv_solution};
use susy_piv::seed::{real_case_lambda, seed_eval};
use susy_piv::susy::{partner_potential, spectrum};
use susy_piv::verify::{reference_parameter_sets, residual_report, ResidualKind};
use susy_piv::{ComplexScalar, Family, Grid, PartnerSystem, TransformParams};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn c(re: f64, im: f64) -> ComplexScalar {
    ComplexScalar::new(re, im)
}

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn worst_report(kinds: &[ResidualKind], sets: &[TransformParams], grid: &Grid) -> (f64, f64, bool) {
    let mut worst = 0.0f64;
    let mut excluded = 0.0f64;
    let mut ok = true;
    for p in sets {
        for &kind in kinds {
            match residual_report(kind, p, grid) {
                Ok(r) => {
                    worst = worst.max(r.max_relative);
                    excluded = excluded.max(r.excluded_fraction());
                    ok &= r.passes();
                }
                Err(_) => ok = false,
            }
        }
    }
    (worst, excluded, ok)
}

fn seed_correctness() -> Outcome {
    let (worst, _, ok) = worst_report(
        &[ResidualKind::Schrodinger],
        &reference_parameter_sets(),
        &Grid::default(),
    );
    check(
        ok && worst <= 1e-7,
        format!("schrodinger max_relative {worst:.2e} <= 1e-7"),
    )
}

fn riccati_closure() -> Outcome {
    let (worst, _, ok) = worst_report(
        &[ResidualKind::Riccati],
        &reference_parameter_sets(),
        &Grid::default(),
    );
    check(
        ok && worst <= 1e-7,
        format!("riccati max_relative {worst:.2e} <= 1e-7"),
    )
}

fn piv_reproduction() -> Outcome {
    let kinds = Family::ALL.map(ResidualKind::Piv);
    let (worst, excluded, ok) = worst_report(&kinds, &reference_parameter_sets(), &Grid::default());
    check(
        ok && worst <= 1e-8 && excluded <= 0.02,
        format!(
            "piv max_relative {worst:.2e} <= 1e-8, excluded {:.1}% <= 2%",
            100.0 * excluded
        ),
    )
}

fn ulp(v: f64) -> f64 {
    f64::from_bits(v.abs().to_bits() + 1) - v.abs()
}

fn parameter_identities() -> Outcome {
    let mut rng = rand::rngs::StdRng::seed_from_u64(2024);
    let mut worst = 0.0f64;
    for _ in 0..200 {
        let eps = ComplexScalar::from_polar(
            10.0 * rng.gen::<f64>().sqrt(),
            rng.gen_range(0.0..std::f64::consts::TAU),
        );
        let p = TransformParams::new(eps, 1.0, 1.0).unwrap();
        for (family, shift) in [(Family::One, 3.0), (Family::Two, 0.0), (Family::Three, 1.0)] {
            let pp = piv_parameters(&p, family);
            // ulp at the magnitude of the squared operand, 2(|a| + |shift|)².
            let scale = (2.0 * (pp.a.norm() + shift).powi(2)).max(2.0);
            worst = worst.max((b_of_a(family, pp.a) - pp.b).norm() / ulp(scale));
        }
    }
    check(
        worst <= 4.0,
        format!("200 random eps, worst {worst:.2} ulp <= 4"),
    )
}

fn spectrum_exact() -> Outcome {
    let mut ok = true;
    for p in reference_parameter_sets() {
        for n_max in [0u32, 3, 10] {
            let mut want = vec![p.epsilon];
            want.extend((0..=n_max).map(|n| c(2.0 * n as f64 + 1.0, 0.0)));
            ok &= spectrum(&p, n_max).levels == want;
        }
    }
    check(
        ok,
        "levels equal [eps, 1, 3, ..., 2 n_max + 1] exactly".into(),
    )
}

fn transformed_eigenfunctions() -> Outcome {
    let kinds: Vec<_> = (0..=5).map(ResidualKind::Eigen).collect();
    let (worst, _, ok) = worst_report(&kinds, &reference_parameter_sets()[..2], &Grid::default());
    check(
        ok && worst <= 1e-6,
        format!("eigen(0..=5) max_relative {worst:.2e} <= 1e-6"),
    )
}

fn new_state() -> Outcome {
    let sets = &reference_parameter_sets()[..2];
    let (worst, _, ok) = worst_report(&[ResidualKind::NewState], sets, &Grid::default());
    let wide = Grid::new(-10.0, 10.0, 0.01).unwrap();
    let norms: Vec<_> = sets
        .iter()
        .map(|&p| PartnerSystem::new(p, wide).new_state_norm())
        .collect();
    let finite = norms
        .iter()
        .all(|n| matches!(n, Ok(v) if v.is_finite() && *v > 0.0));
    check(
        ok && worst <= 1e-6 && finite,
        format!("new_state max_relative {worst:.2e} <= 1e-6, norms on [-10, 10] {norms:?}"),
    )
}

fn annihilation() -> Outcome {
    let (worst, _, ok) = worst_report(
        &[ResidualKind::Annihilation],
        &reference_parameter_sets(),
        &Grid::default(),
    );
    check(
        ok && worst <= 1e-5,
        format!("L-(1/u) relative to local scale {worst:.2e} <= 1e-5"),
    )
}

fn real_case_reduction() -> Outcome {
    let lambda = real_case_lambda(0.5, -1.0).map_err(|e| e.to_string())?;
    let p = TransformParams::new(c(-1.0, 0.0), lambda, 0.0).unwrap();
    let mut worst = 0.0f64;
    for x in Grid::default().points() {
        worst = worst.max(
            partner_potential(&p, x)
                .map_err(|e| e.to_string())?
                .im
                .abs(),
        );
    }
    check(
        worst <= 1e-10,
        format!("lambda {lambda:.6}, max |Im V| {worst:.2e} <= 1e-10"),
    )
}

fn asymptotics() -> Outcome {
    let mut worst = 0.0f64;
    for p in reference_parameter_sets() {
        for x in [-8.0, 8.0] {
            let v = partner_potential(&p, x).map_err(|e| e.to_string())?;
            worst = worst.max((v - c(62.0, 0.0)).norm() / 64.0);
        }
    }
    check(
        worst <= 1e-2,
        format!("|V(+-8) - 62| / 64 = {worst:.2e} <= 1e-2"),
    )
}

fn chain_identity() -> Outcome {
    let mut rng = rand::rngs::StdRng::seed_from_u64(99);
    let sets = reference_parameter_sets();
    let mut mismatches = 0;
    for _ in 0..10_000 {
        let p = sets[rng.gen_range(0..sets.len())];
        let x = rng.gen_range(-5.0..5.0);
        let (Ok(chain), Ok(sol), Ok(s)) = (
            chain_functions(&p, x),
            piv_solution(&p, Family::Three, x),
            seed_eval(&p, x),
        ) else {
            mismatches += 1;
            continue;
        };
        if chain.sum() != c(x, 0.0) || sol.g != s.beta - x {
            mismatches += 1;
        }
    }
    check(
        mismatches == 0,
        format!("{mismatches} of 10000 points differ from bit-exact identities"),
    )
}

fn special_functions() -> Outcome {
    let controls = SeriesControls::default();
    let switch = controls.asymptotic_switch;
    let mut zs: Vec<f64> = (0..14).map(|k| k as f64 * 100.0 / 13.0).collect();
    zs.extend([switch * (1.0 - 1e-3), switch, switch * (1.0 + 1e-3), 64.0]);
    let energies = [
        c(-1.0, 1.0),
        c(3.0, 1e-3),
        c(-1.0, 1e-2),
        c(4.0, 0.5),
        c(1.0, 1.0),
        c(-7.5, 2.0),
        c(9.0, -0.3),
    ];
    let mut worst = 0.0f64;
    let mut count = 0;
    for eps in energies {
        let a_even = (c(1.0, 0.0) - eps) / 4.0;
        let a_odd = (c(3.0, 0.0) - eps) / 4.0;
        for (a, b) in [
            (a_even, 0.5),
            (a_odd, 1.5),
            (a_even + 1.0, 1.5),
            (a_odd + 1.0, 2.5),
        ] {
            for &z in &zs {
                let b = c(b, 0.0);
                let got = kummer_m(a, b, c(z, 0.0), &controls).map_err(|e| e.to_string())?;
                let want = kummer_oracle(a, b, c(z, 0.0), 30)
                    .map_err(|e| e.to_string())?
                    .to_complex();
                worst = worst.max((got - want).norm() / want.norm());
                count += 1;
            }
        }
    }
    let mut rng = rand::rngs::StdRng::seed_from_u64(5);
    let mut gamma_worst = 0.0f64;
    for _ in 0..1000 {
        let z = c(rng.gen_range(-8.0..8.0), rng.gen_range(-8.0..8.0));
        if let (Ok(g0), Ok(g1)) = (gamma(z), gamma(z + 1.0)) {
            gamma_worst = gamma_worst.max((g1 - z * g0).norm() / g1.norm());
        }
    }
    check(
        count >= 500 && worst <= 1e-9 && gamma_worst <= 1e-12,
        format!("{count} points vs oracle, worst {worst:.2e} <= 1e-9; gamma recurrence {gamma_worst:.2e} <= 1e-12"),
    )
}

fn figure_data() -> Outcome {
    let runs = [
        ("1", "-1", "0.01", "1", "1"),
        ("2", "4", "0.5", "1", "1"),
        ("3", "1", "1", "3", "1"),
    ];
    let mut details = Vec::new();
    let mut ok = true;
    for (family, er, ei, lambda, kappa) in runs {
        let path = std::env::temp_dir().join(format!(
            "susy-piv-acceptance-{}-g{family}.csv",
            std::process::id()
        ));
        let status = main_with_args([
            "susy-piv",
            "piv",
            "--family",
            family,
            "--epsilon-re",
            er,
            "--epsilon-im",
            ei,
            "--lambda",
            lambda,
            "--kappa",
            kappa,
            "--output",
            path.to_str().unwrap(),
        ]);
        let text = std::fs::read_to_string(&path).unwrap_or_default();
        let _ = std::fs::remove_file(&path);
        let rows: Vec<Vec<f64>> = text
            .lines()
            .skip(1)
            .map(|l| {
                l.split(',')
                    .map(|v| v.parse().unwrap_or(f64::NAN))
                    .collect()
            })
            .collect();
        let finite = !rows.is_empty() && rows.iter().flatten().all(|v| v.is_finite());
        let varies = |k: usize| rows.iter().any(|r| r[k] != rows[0][k]);
        let good = status == EXIT_OK && finite && varies(1) && varies(2);
        ok &= good;
        details.push(format!(
            "g{family}: {} rows{}",
            rows.len(),
            if good { "" } else { " BAD" }
        ));
    }
    check(
        ok,
        format!("{}, finite, Re and Im nonconstant", details.join(", ")),
    )
}

fn main() {
    let criteria: [Criterion; 13] = [
        ("seed correctness", seed_correctness),
        ("riccati closure", riccati_closure),
        ("painleve iv reproduction", piv_reproduction),
        ("parameter identities", parameter_identities),
        ("spectrum", spectrum_exact),
        ("transformed eigenfunctions", transformed_eigenfunctions),
        ("new state", new_state),
        ("annihilation", annihilation),
        ("real-case reduction", real_case_reduction),
        ("asymptotics", asymptotics),
        ("chain identity", chain_identity),
        ("special functions", special_functions),
        ("figure data emission", figure_data),
    ];
    let mut failures = 0;
    for (k, (name, criterion)) in criteria.iter().enumerate() {
        match criterion() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", k + 1),
            Err(detail) => {
                failures += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", k + 1);
            }
        }
    }
    println!(
        "{} of {} criteria pass",
        criteria.len() - failures,
        criteria.len()
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
