use deltaho::specfun::{gamma, hermite, kummer_m, kummer_u_half, reciprocal_gamma, KummerParams};
use deltaho::spectrum::{
    eigen_equation, full_spectrum, solve_even, Coupling, Parity, SolverConfig, RESIDUAL_TOL,
};
use deltaho::wavefunction::{eval_even, eval_odd, jump_check, sample_state_auto};
use proptest::prelude::*;
use std::f64::consts::PI;

fn coupling() -> impl Strategy<Value = f64> {
    prop_oneof![-6.0..-0.01f64, 0.01..6.0f64]
}

fn even_levels(g: f64, n: usize) -> Vec<f64> {
    solve_even(Coupling::new(g).unwrap(), &SolverConfig::with_states(n))
        .unwrap()
        .iter()
        .map(|s| s.nu)
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn reciprocal_gamma_reflection(x in 0.0001..0.9999f64) {
        let lhs = reciprocal_gamma(x) * reciprocal_gamma(1.0 - x);
        prop_assert!((lhs - (PI * x).sin() / PI).abs() < 1e-12);
    }

    #[test]
    fn terminating_series_matches_horner(m in 0usize..=5, z in 0.0..25.0f64) {
        let a = -(m as f64);
        let b = 0.5;
        // Coefficients c_k = (a)_k / ((b)_k k!).
        let mut coeffs = vec![1.0];
        for k in 0..m {
            let k = k as f64;
            let prev = *coeffs.last().unwrap();
            coeffs.push(prev * (a + k) / ((b + k) * (k + 1.0)));
        }
        let horner = coeffs.iter().rev().fold(0.0, |acc, c| acc * z + c);
        let scale = coeffs.iter().rev().fold(0.0, |acc, c: &f64| acc * z + c.abs());
        let series = kummer_m(KummerParams::new(a, b, z)).unwrap();
        prop_assert!((series - horner).abs() <= 1e-12 * scale);
    }

    #[test]
    fn hermite_reduction(n in 0usize..=10, y in 0.001..4.0f64) {
        let h = hermite(n, y).unwrap();
        let u = kummer_u_half(n as f64, y * y).unwrap() * 2f64.powi(n as i32);
        prop_assert!((u - h).abs() <= 1e-9 * h.abs(), "n={} y={} u={} h={}", n, y, u, h);
    }

    #[test]
    fn exponential_special_case(z in 0.0..20.0f64) {
        let m = kummer_m(KummerParams::new(1.0, 1.0, z)).unwrap();
        prop_assert!((m / z.exp() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn even_state_symmetry(nu in -3.0..6.0f64, y in 0.0..6.0f64) {
        prop_assert_eq!(eval_even(nu, y).unwrap(), eval_even(nu, -y).unwrap());
    }

    #[test]
    fn odd_state_antisymmetry(k in 0usize..6, y in 0.0..6.0f64) {
        let n = 2 * k + 1;
        prop_assert_eq!(eval_odd(n, y).unwrap(), -eval_odd(n, -y).unwrap());
    }

    #[test]
    fn roots_satisfy_equation_and_jump(g in coupling()) {
        let c = Coupling::new(g).unwrap();
        for nu in even_levels(g, 5) {
            if nu >= 0.0 {
                prop_assert!(eigen_equation(nu, c).abs() <= RESIDUAL_TOL * (1.0 + nu.abs()));
            }
            prop_assert!(jump_check(nu, c) <= 1e-8);
        }
    }

    #[test]
    fn roots_interlace(g in coupling()) {
        let levels = even_levels(g, 5);
        if g > 0.0 {
            for (k, nu) in levels.iter().enumerate() {
                let lo = 2.0 * k as f64;
                prop_assert!(lo < *nu && *nu < lo + 1.0);
            }
        } else {
            prop_assert!(levels[0] < 0.0);
            for (k, nu) in levels.iter().enumerate().skip(1) {
                let hi = 2.0 * k as f64;
                prop_assert!(hi - 1.0 < *nu && *nu < hi);
            }
        }
    }

    #[test]
    fn levels_increase_with_coupling(g in coupling(), dg in 0.01..1.0f64) {
        // Stay on one side of g = 0, where the bound state appears.
        prop_assume!((g < 0.0) == (g + dg < 0.0));
        let lower = even_levels(g, 5);
        let upper = even_levels(g + dg, 5);
        for (a, b) in lower.iter().zip(&upper) {
            prop_assert!(a < b);
        }
    }

    #[test]
    fn spectrum_alternates_parity(g in coupling(), n in 1usize..10) {
        let levels = full_spectrum(Coupling::new(g).unwrap(), &SolverConfig::with_states(n)).unwrap();
        prop_assert_eq!(levels.len(), n);
        prop_assert_eq!(levels[0].parity, Parity::Even);
        for w in levels.windows(2) {
            prop_assert!(w[0].epsilon < w[1].epsilon);
            prop_assert!(w[0].parity != w[1].parity);
        }
    }
}

#[test]
fn asymptotic_power_law_approach() {
    for nu in [0.3927, 2.2546] {
        let dev: Vec<f64> = (0..=40)
            .map(|i| 6.0 + 0.1 * i as f64)
            .map(|y: f64| (kummer_u_half(nu, y * y).unwrap() / y.powf(nu) - 1.0).abs())
            .collect();
        assert!(dev.windows(2).all(|w| w[1] < w[0]), "nu = {nu}: {dev:?}");
    }
}

#[test]
fn regular_solution_grows_like_gaussian_inverse() {
    // Leading correction is (1 − a)(1/2 − a)/z, so only small |a| reaches 5% by z = 40.
    for nu in [0.3927, 0.1281, -0.1557] {
        let a = -0.5 * nu;
        let ratio = |z: f64| {
            kummer_m(KummerParams::new(a, 0.5, z)).unwrap() * gamma(a).unwrap()
                / (PI.sqrt() * z.exp() * z.powf(a - 0.5))
        };
        let dev: Vec<f64> = [20.0, 25.0, 30.0, 35.0, 40.0]
            .iter()
            .map(|&z| (ratio(z) - 1.0).abs())
            .collect();
        assert!(dev.windows(2).all(|w| w[1] < w[0]), "nu = {nu}: {dev:?}");
        assert!(dev[4] < 0.05, "nu = {nu}: {}", dev[4]);
    }
}

#[test]
fn weak_coupling_limit() {
    for g in [1e-6, -1e-6] {
        for (k, nu) in even_levels(g, 5).iter().enumerate() {
            assert!((nu - 2.0 * k as f64).abs() < 1e-5);
        }
    }
}

#[test]
fn first_order_slope() {
    let slope = |g: f64| even_levels(g, 1)[0] / g;
    let s = [slope(1e-2), slope(1e-3), slope(1e-4)];
    let target = 1.0 / PI.sqrt();
    assert!((s[1] - target).abs() < (s[0] - target).abs());
    assert!((s[2] - target).abs() < (s[1] - target).abs());
    assert!((s[2] / target - 1.0).abs() < 0.01);
    assert!((slope(-1e-4) / target - 1.0).abs() < 0.01);
}

#[test]
fn deep_delta_limit() {
    for g in [-5.0f64, -10.0] {
        let eps = even_levels(g, 1)[0] + 0.5;
        assert!((eps + 0.5 * g * g).abs() <= 0.011, "g = {g}: {eps}");
    }
    let eps = even_levels(-20.0, 1)[0] + 0.5;
    assert!((eps / -200.0 - 1.0).abs() <= 1e-3);
}

#[test]
fn node_counts() {
    for g in [0.25, 1.0, 5.0] {
        let levels = full_spectrum(Coupling::new(g).unwrap(), &SolverConfig::with_states(8)).unwrap();
        for s in &levels {
            let psi = sample_state_auto(s).unwrap();
            assert_eq!(psi.sign_changes(1e-8), s.index, "g = {g}, state {}", s.index);
        }
    }
}
