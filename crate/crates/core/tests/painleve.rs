use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use susy_piv::painleve::{
    b_of_a, chain_functions, extremal_energy, extremal_logderiv, extremal_state, piv_parameters,
    piv_solution,
};
use susy_piv::seed::seed_eval;
use susy_piv::susy::{partner_potential, partner_potential_derivative};
use susy_piv::verify::{fd_derivative, reference_parameter_sets};
use susy_piv::{ComplexScalar, Family, PivSolution, TransformParams};

fn c(re: f64, im: f64) -> ComplexScalar {
    ComplexScalar::new(re, im)
}

/// Spacing of doubles at magnitude `v`.
fn ulp(v: f64) -> f64 {
    f64::from_bits(v.abs().to_bits() + 1) - v.abs()
}

/// `b_of_a(a(ε))` agrees with `b(ε)` to 4 ulp of the magnitude the square is
/// taken at, `2(|a| + |shift|)²`; measuring against `|b|` alone would charge
/// the rounding of `a` to the cancellation in `a ± shift`.
#[test]
fn parameter_identities_hold_to_four_ulp() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(0x5eed);
    for _ in 0..200 {
        let eps = ComplexScalar::from_polar(
            10.0 * rng.gen::<f64>().sqrt(),
            rng.gen_range(0.0..std::f64::consts::TAU),
        );
        let p = TransformParams::new(eps, 1.0, 1.0).unwrap();
        for (family, shift) in [(Family::One, 3.0), (Family::Two, 0.0), (Family::Three, 1.0)] {
            let pp = piv_parameters(&p, family);
            let scale = 2.0 * (pp.a.norm() + shift).powi(2);
            let diff = (b_of_a(family, pp.a) - pp.b).norm();
            assert!(
                diff <= 4.0 * ulp(scale.max(2.0)),
                "{family} eps={eps}: {diff:e}"
            );
        }
    }
}

/// Amplification of rounding in the extremal state: its construction
/// divides by `β' - 1` (family 1) or `x + β` (family 2).
fn conditioning(p: &TransformParams, family: Family, x: f64) -> f64 {
    let s = seed_eval(p, x).unwrap();
    match family {
        Family::One => (1.0 + s.beta_prime.norm()) / (s.beta_prime - 1.0).norm(),
        Family::Two => (x.abs() + s.beta.norm()) / (s.beta + x).norm(),
        Family::Three => 1.0,
    }
}

#[test]
fn extremal_states_solve_the_partner_equation() {
    for p in reference_parameter_sets() {
        for family in Family::ALL {
            let e = extremal_energy(&p, family);
            for x in [-2.5, -0.7, 0.2, 1.9] {
                let psi = extremal_state(&p, family, x).unwrap();
                let second = fd_derivative(|t| extremal_state(&p, family, t), x, 2, 1e-3).unwrap();
                let v = partner_potential(&p, x).unwrap();
                let r = -second + (v - e) * psi;
                let scale = second.norm() + (v.norm() + e.norm()) * psi.norm();
                let k = conditioning(&p, family, x);
                assert!(r.norm() <= 1e-7 * k * scale, "{family} x={x}: {r}");
            }
        }
    }
}

#[test]
fn closed_form_derivatives_match_finite_differences() {
    for p in reference_parameter_sets() {
        for family in Family::ALL {
            for x in [-3.0, -0.5, 0.0, 0.8, 3.3] {
                let k = conditioning(&p, family, x);
                let e = piv_solution(&p, family, x).unwrap();
                let g = |t: f64| Ok(piv_solution(&p, family, t)?.g);
                let gp = fd_derivative(g, x, 1, 1e-4).unwrap();
                let gpp = fd_derivative(g, x, 2, 1e-3).unwrap();
                assert!(
                    (gp - e.g_prime).norm() <= 1e-8 * k * (1.0 + e.g_prime.norm()),
                    "{family} x={x}"
                );
                assert!(
                    (gpp - e.g_double_prime).norm() <= 1e-6 * k * (1.0 + e.g_double_prime.norm()),
                    "{family} x={x}"
                );
                let h = extremal_logderiv(&p, family, x).unwrap();
                let hp = fd_derivative(|t| extremal_logderiv(&p, family, t), x, 1, 1e-4).unwrap();
                let riccati =
                    hp + h * h - partner_potential(&p, x).unwrap() + extremal_energy(&p, family);
                assert!(
                    riccati.norm() <= 1e-8 * k * (1.0 + (h * h).norm()),
                    "{family} x={x}"
                );
            }
        }
    }
}

#[test]
fn potential_derivative_matches_finite_difference() {
    let p = reference_parameter_sets()[4];
    for x in [-2.0, 0.1, 2.2] {
        let fd = fd_derivative(|t| partner_potential(&p, t), x, 1, 1e-4).unwrap();
        let exact = partner_potential_derivative(&p, x).unwrap();
        assert!((fd - exact).norm() <= 1e-8 * (1.0 + exact.norm()));
    }
}

#[test]
fn chain_identity_is_exact() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(11);
    let sets = reference_parameter_sets();
    for _ in 0..10_000 {
        let p = sets[rng.gen_range(0..sets.len())];
        let x = rng.gen_range(-5.0..5.0);
        let chain = chain_functions(&p, x).unwrap();
        assert_eq!(chain.sum(), c(x, 0.0));
        let g3 = piv_solution(&p, Family::Three, x).unwrap().g;
        assert_eq!(g3, seed_eval(&p, x).unwrap().beta - x);
        assert_eq!(g3, chain.f3 - x);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn residual_vanishes_for_random_parameters(
        re in -6.0..6.0f64, im in 0.05..2.0f64, lambda in -3.0..3.0f64, kappa in -3.0..3.0f64,
        x in -4.0..4.0f64, family in 1u8..=3,
    ) {
        let p = TransformParams::new(c(re, im), lambda, kappa).unwrap();
        let family = Family::try_from(family).unwrap();
        if let Ok(r) = PivSolution::new(p, family).relative_residual(x) {
            prop_assert!(r <= 1e-8, "{r:e}");
        }
    }
}
