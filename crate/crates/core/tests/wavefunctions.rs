use deltaho::spectrum::{full_spectrum, Coupling, EigenSolution, Parity, SolverConfig};
use deltaho::wavefunction::{
    eval_even, eval_odd, orthogonality, sample_state, sample_state_auto, GridFunction, GridSpec,
};

fn spectrum(g: f64, n: usize) -> Vec<EigenSolution> {
    full_spectrum(Coupling::new(g).unwrap(), &SolverConfig::with_states(n)).unwrap()
}

fn psi(s: &EigenSolution, y: f64) -> f64 {
    match s.parity {
        Parity::Even => eval_even(s.nu, y).unwrap(),
        Parity::Odd => eval_odd(s.nu as usize, y).unwrap(),
    }
}

#[test]
fn gram_matrix_is_identity() {
    let grid = GridSpec::default();
    let states: Vec<GridFunction> = spectrum(1.0, 6)
        .iter()
        .map(|s| sample_state(s, &grid).unwrap())
        .collect();
    for (i, a) in states.iter().enumerate() {
        for (j, b) in states.iter().enumerate() {
            let expected = if i == j { 1.0 } else { 0.0 };
            let overlap = orthogonality(a, b).unwrap();
            assert!((overlap - expected).abs() < 1e-5, "({i}, {j}): {overlap}");
        }
    }
}

#[test]
fn schroedinger_residual_away_from_origin() {
    let h = 1e-2;
    for g in [-5.0, -1.0, 0.25, 2.5] {
        for s in spectrum(g, 6) {
            let ys: Vec<f64> = (0..=350).map(|i| 0.5 + 0.01 * i as f64).collect();
            let peak = ys.iter().map(|&y| psi(&s, y).abs()).fold(0.0, f64::max);
            for &y in &ys {
                let f = |d: f64| psi(&s, y + d * h);
                let second =
                    (-f(-2.0) + 16.0 * f(-1.0) - 30.0 * f(0.0) + 16.0 * f(1.0) - f(2.0)) / (12.0 * h * h);
                let residual = -second + (y * y - (2.0 * s.nu + 1.0)) * f(0.0);
                assert!(residual.abs() <= 1e-4 * peak, "g = {g}, ν = {}, y = {y}: {residual}", s.nu);
            }
        }
    }
}

#[test]
fn even_states_have_kink_at_origin() {
    let grid = GridSpec::new(10.0, 20001).unwrap();
    let centre = grid.n_points / 2;
    for g in [-2.5, -0.25, 0.0, 1.0, 5.0] {
        for s in spectrum(g, 5).iter().filter(|s| s.parity == Parity::Even) {
            let f = sample_state(s, &grid).unwrap();
            let dy = f.spacing();
            let (p0, p1, p2) = (f.values[centre], f.values[centre + 1], f.values[centre + 2]);
            // One-sided derivative at 0⁺; symmetry makes ψ′(0⁺) = g·ψ(0).
            let slope = (-3.0 * p0 + 4.0 * p1 - p2) / (2.0 * dy);
            assert!((slope - g * p0).abs() < 1e-3 * f.max_abs(), "g = {g}, ν = {}", s.nu);
            let left = (3.0 * p0 - 4.0 * f.values[centre - 1] + f.values[centre - 2]) / (2.0 * dy);
            assert!((slope + left).abs() < 1e-9, "symmetric kink, g = {g}");
        }
    }
}

#[test]
fn strong_coupling_densities_approach_odd_neighbours() {
    // Even level between the odd n = 1 and n = 3: as g grows it climbs to 3,
    // as g falls it drops toward 1.
    let rms = |g: f64, odd: usize| {
        let grid = GridSpec::default();
        let even = spectrum(g, 4)[2];
        assert_eq!(even.parity, Parity::Even);
        let a = sample_state(&even, &grid).unwrap();
        let b = sample_state(&EigenSolution::new(Parity::Odd, odd as f64, odd), &grid).unwrap();
        let n = a.values.len() as f64;
        (a.values
            .iter()
            .zip(&b.values)
            .map(|(x, y)| (x * x - y * y).powi(2))
            .sum::<f64>()
            / n)
            .sqrt()
    };
    let up: Vec<f64> = [1.0, 2.5, 5.0, 10.0].iter().map(|&g| rms(g, 3)).collect();
    let down: Vec<f64> = [-1.0, -2.5, -5.0, -10.0].iter().map(|&g| rms(g, 1)).collect();
    for series in [&up, &down] {
        assert!(series.windows(2).all(|w| w[1] < w[0]), "{series:?}");
    }
    assert!(up[3] < 0.05 && down[3] < 0.05);
}

#[test]
fn auto_sampling_covers_deep_and_excited_states() {
    for s in spectrum(-20.0, 1).iter().chain(spectrum(1.0, 12).iter()) {
        let f = sample_state_auto(s).unwrap();
        let edge = f.values[0].abs().max(f.values[f.values.len() - 1].abs());
        assert!(edge <= 1e-12 * f.max_abs());
    }
}
