//! Bound-state spectrum of the oscillator with a delta potential of
//! dimensionless strength g at the origin.
//!
//! Odd states vanish at the origin and keep ν = 1, 3, 5, … for every g.
//! Even states satisfy the jump condition, which reduces to
//!
//!   F(ν) = ν − g·Γ(1 − ν/2)/Γ(1/2 − ν/2) = 0.
//!
//! The solver works with the pole-free rescaling
//! F̃(ν) = ν/Γ(1 − ν/2) − g/Γ(1/2 − ν/2) = F(ν)/Γ(1 − ν/2), whose sign is
//! that of F for ν < 2. Every even root lies in a known unit interval:
//! (2k, 2k+1) for g > 0, and (2k−1, 2k) plus one negative root for g < 0.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::roots::RefinerRegistry;
use crate::specfun::{log_gamma, reciprocal_gamma};

/// Residual bound |F̃(ν)| ≤ RESIDUAL_TOL·(1 + |ν|) every returned root meets.
pub const RESIDUAL_TOL: f64 = 1e-8;

/// Number of times the bound-state lower bracket may be doubled.
const MAX_BRACKET_DOUBLINGS: usize = 60;

/// Dimensionless delta strength g = α·a₀·m/ħ².
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coupling(f64);

impl Coupling {
    pub fn new(g: f64) -> Result<Self> {
        if g.is_finite() {
            Ok(Self(g))
        } else {
            Err(Error::InvalidInput(format!("coupling must be finite, got {g}")))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn label(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }

    pub fn short(self) -> char {
        match self {
            Parity::Even => 'e',
            Parity::Odd => 'o',
        }
    }
}

impl std::fmt::Display for Parity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

/// One bound state: ε = ν + 1/2 in units of ħω.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EigenSolution {
    pub parity: Parity,
    pub nu: f64,
    pub epsilon: f64,
    pub index: usize,
}

impl EigenSolution {
    pub fn new(parity: Parity, nu: f64, index: usize) -> Self {
        Self {
            parity,
            nu,
            epsilon: nu + 0.5,
            index,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolverConfig {
    /// Final bracket width on ν.
    pub root_tol: f64,
    pub max_iter: usize,
    /// Starting lower bound for the negative-energy root; `None` means
    /// −2·max(1, g²).
    pub nu_min: Option<f64>,
    pub n_states: usize,
    /// Name of the root refiner in [`RefinerRegistry::standard`].
    pub root_method: String,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            root_tol: 1e-10,
            max_iter: 200,
            nu_min: None,
            n_states: 5,
            root_method: "illinois".to_string(),
        }
    }
}

impl SolverConfig {
    pub fn with_states(n_states: usize) -> Self {
        Self {
            n_states,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.root_tol > 0.0) {
            return Err(Error::InvalidInput(format!(
                "root_tol must be positive, got {}",
                self.root_tol
            )));
        }
        if self.max_iter < 10 {
            return Err(Error::InvalidInput(format!(
                "max_iter must be at least 10, got {}",
                self.max_iter
            )));
        }
        if self.n_states == 0 {
            return Err(Error::InvalidInput("n_states must be at least 1".into()));
        }
        if let Some(lo) = self.nu_min {
            if !(lo < 0.0) {
                return Err(Error::InvalidInput(format!("nu_min must be negative, got {lo}")));
            }
        }
        Ok(())
    }
}

/// F̃(ν) = ν/Γ(1 − ν/2) − g/Γ(1/2 − ν/2).
pub fn eigen_equation(nu: f64, g: Coupling) -> f64 {
    nu * reciprocal_gamma(1.0 - 0.5 * nu) - g.value() * reciprocal_gamma(0.5 - 0.5 * nu)
}

/// Function whose sign changes mark the even roots. Identical to F̃ for
/// ν ≥ 0; for ν < 0 it is F itself, evaluated through log-Gammas because
/// both reciprocal Gammas underflow for deep bound states.
fn sign_function(g: Coupling) -> impl Fn(f64) -> f64 {
    move |nu: f64| {
        if nu >= 0.0 {
            return eigen_equation(nu, g);
        }
        let ln_ratio = log_gamma(1.0 - 0.5 * nu).expect("positive argument")
            - log_gamma(0.5 - 0.5 * nu).expect("positive argument");
        nu - g.value() * ln_ratio.exp()
    }
}

fn bound_state_lower_end(g: Coupling, start: Option<f64>) -> Result<f64> {
    let f = sign_function(g);
    let g2 = g.value() * g.value();
    let mut lo = start.unwrap_or(-2.0 * g2.max(1.0));
    let f0 = f(0.0);
    for _ in 0..=MAX_BRACKET_DOUBLINGS {
        let flo = f(lo);
        if flo.signum() != f0.signum() && flo != 0.0 {
            return Ok(lo);
        }
        lo *= 2.0;
    }
    Err(Error::BracketFailure {
        g: g.value(),
        lo,
        hi: 0.0,
    })
}

fn even_brackets(g: Coupling, n_states: usize, nu_min: Option<f64>) -> Result<Vec<(f64, f64)>> {
    if g.value() == 0.0 {
        return Err(Error::InvalidInput(
            "bracketing needs g ≠ 0; the g = 0 spectrum is exact".into(),
        ));
    }
    if n_states == 0 {
        return Err(Error::InvalidInput("n_states must be at least 1".into()));
    }
    if g.value() > 0.0 {
        return Ok((0..n_states)
            .map(|k| (2.0 * k as f64, 2.0 * k as f64 + 1.0))
            .collect());
    }
    let mut out = Vec::with_capacity(n_states);
    out.push((bound_state_lower_end(g, nu_min)?, 0.0));
    out.extend((1..n_states).map(|k| (2.0 * k as f64 - 1.0, 2.0 * k as f64)));
    Ok(out)
}

/// Disjoint intervals, one per even root, in increasing order.
pub fn bracket_even_roots(g: Coupling, n_states: usize) -> Result<Vec<(f64, f64)>> {
    even_brackets(g, n_states, None)
}

/// The first `cfg.n_states` even-parity levels.
pub fn solve_even(g: Coupling, cfg: &SolverConfig) -> Result<Vec<EigenSolution>> {
    cfg.validate()?;
    if g.value() == 0.0 {
        return Ok((0..cfg.n_states)
            .map(|k| EigenSolution::new(Parity::Even, 2.0 * k as f64, 2 * k))
            .collect());
    }
    let refiner = RefinerRegistry::standard().get(&cfg.root_method)?;
    let f = sign_function(g);
    let mut out = Vec::with_capacity(cfg.n_states);
    for (k, (lo, hi)) in even_brackets(g, cfg.n_states, cfg.nu_min)?
        .into_iter()
        .enumerate()
    {
        let root = refiner
            .refine(&f, lo, hi, cfg.root_tol, cfg.max_iter)
            .map_err(|e| match e {
                Error::BracketFailure { lo, hi, .. } => Error::BracketFailure {
                    g: g.value(),
                    lo,
                    hi,
                },
                other => other,
            })?;
        let nu = root.value;
        let residual = eigen_equation(nu, g).abs();
        if residual > RESIDUAL_TOL * (1.0 + nu.abs()) {
            return Err(Error::NonConvergence {
                what: "even root residual",
                iterations: root.iterations,
            });
        }
        out.push(EigenSolution::new(Parity::Even, nu, 2 * k));
    }
    Ok(out)
}

/// ν = 1, 3, 5, … independent of g.
pub fn solve_odd(n_states: usize) -> Result<Vec<EigenSolution>> {
    if n_states == 0 {
        return Err(Error::InvalidInput("n_states must be at least 1".into()));
    }
    Ok((0..n_states)
        .map(|k| EigenSolution::new(Parity::Odd, 2.0 * k as f64 + 1.0, 2 * k + 1))
        .collect())
}

/// The lowest `cfg.n_states` levels of both parities, energy-ordered.
pub fn full_spectrum(g: Coupling, cfg: &SolverConfig) -> Result<Vec<EigenSolution>> {
    cfg.validate()?;
    let n_even = cfg.n_states.div_ceil(2);
    let n_odd = cfg.n_states / 2;
    let mut levels = solve_even(
        g,
        &SolverConfig {
            n_states: n_even,
            ..cfg.clone()
        },
    )?;
    if n_odd > 0 {
        levels.extend(solve_odd(n_odd)?);
    }
    levels.sort_by(|a, b| a.epsilon.total_cmp(&b.epsilon));
    for (i, level) in levels.iter_mut().enumerate() {
        level.index = i;
    }
    debug_assert!(levels.windows(2).all(|w| w[0].epsilon < w[1].epsilon));
    debug_assert!(levels.windows(2).all(|w| w[0].parity != w[1].parity));
    Ok(levels)
}

/// Isolated-delta energy −g²/2 that the lowest level approaches as
/// g → −∞.
pub fn bound_state_asymptote(g: Coupling) -> Result<f64> {
    if g.value() >= 0.0 {
        return Err(Error::Domain {
            what: "bound_state_asymptote (needs g < 0)",
            x: g.value(),
        });
    }
    Ok(-0.5 * g.value() * g.value())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(v: f64) -> Coupling {
        Coupling::new(v).unwrap()
    }

    fn nus(levels: &[EigenSolution]) -> Vec<f64> {
        levels.iter().map(|l| l.nu).collect()
    }

    #[test]
    fn coupling_rejects_non_finite() {
        assert!(Coupling::new(f64::NAN).is_err());
        assert!(Coupling::new(f64::INFINITY).is_err());
        assert_eq!(Coupling::new(-0.0).unwrap().value(), 0.0);
    }

    #[test]
    fn equation_values() {
        assert_eq!(eigen_equation(0.0, g(0.0)), 0.0);
        assert!((eigen_equation(0.0, g(0.25)) + 0.141_047_395_886_939_07).abs() < 1e-15);
        assert!(eigen_equation(0.1281, g(0.25)).abs() < 5e-4);
    }

    #[test]
    fn brackets() {
        assert_eq!(
            bracket_even_roots(g(1.0), 3).unwrap(),
            vec![(0.0, 1.0), (2.0, 3.0), (4.0, 5.0)]
        );
        let b = bracket_even_roots(g(-1.0), 2).unwrap();
        assert!(b[0].0 < -0.8424 && b[0].1 == 0.0);
        assert_eq!(b[1], (1.0, 2.0));
        let b = bracket_even_roots(g(-5.0), 1).unwrap();
        assert!(b[0].0 < -12.99 && b[0].1 == 0.0);
        assert!(bracket_even_roots(g(0.0), 2).is_err());
        assert!(bracket_even_roots(g(1.0), 0).is_err());
    }

    #[test]
    fn solve_even_reference_columns() {
        let got = nus(&solve_even(g(1.0), &SolverConfig::default()).unwrap());
        for (a, b) in got.iter().zip([0.3927, 2.2546, 4.2002, 6.1699, 8.1501]) {
            assert!((a - b).abs() <= 5e-5, "{a} vs {b}");
        }
        let got = nus(&solve_even(g(-2.5), &SolverConfig::default()).unwrap());
        for (a, b) in got.iter().zip([-3.5865, 1.4285, 3.5420, 5.6051, 7.6473]) {
            assert!((a - b).abs() <= 5e-5, "{a} vs {b}");
        }
    }

    #[test]
    fn solve_even_zero_coupling_is_exact() {
        let got = nus(&solve_even(g(0.0), &SolverConfig::with_states(3)).unwrap());
        assert_eq!(got, vec![0.0, 2.0, 4.0]);
    }

    #[test]
    fn solve_even_matches_high_precision_roots() {
        // 30-digit roots from an independent mpmath solve of F(ν) = 0.
        let cases = [
            (1.0, 0.392_744_045_309),
            (-1.0, -0.842_418_946_781),
            (-5.0, -12.990_027_623_7),
            (5.0, 0.796_122_873_915),
        ];
        for (gv, want) in cases {
            let nu = solve_even(g(gv), &SolverConfig::with_states(1)).unwrap()[0].nu;
            assert!((nu - want).abs() < 1e-10, "g = {gv}: {nu}");
        }
    }

    #[test]
    fn both_refiners_agree() {
        let bis = SolverConfig {
            root_method: "bisection".into(),
            ..SolverConfig::default()
        };
        let a = nus(&solve_even(g(-2.5), &bis).unwrap());
        let b = nus(&solve_even(g(-2.5), &SolverConfig::default()).unwrap());
        for (x, y) in a.iter().zip(&b) {
            assert!((x - y).abs() < 2e-10);
        }
        let bad = SolverConfig {
            root_method: "nope".into(),
            ..SolverConfig::default()
        };
        assert!(matches!(
            solve_even(g(1.0), &bad),
            Err(Error::UnknownStrategy { .. })
        ));
    }

    #[test]
    fn config_validation() {
        let cfg = SolverConfig {
            root_tol: 0.0,
            ..Default::default()
        };
        assert!(cfg.validate().is_err());
        let cfg = SolverConfig {
            max_iter: 5,
            ..Default::default()
        };
        assert!(cfg.validate().is_err());
        let cfg = SolverConfig {
            nu_min: Some(3.0),
            ..Default::default()
        };
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn explicit_lower_bound_is_extended() {
        let cfg = SolverConfig {
            nu_min: Some(-1.0),
            n_states: 1,
            ..SolverConfig::default()
        };
        let nu = solve_even(g(-5.0), &cfg).unwrap()[0].nu;
        assert!((nu + 12.99).abs() < 5e-4);
    }

    #[test]
    fn odd_branch() {
        assert_eq!(nus(&solve_odd(1).unwrap()), vec![1.0]);
        assert_eq!(nus(&solve_odd(3).unwrap()), vec![1.0, 3.0, 5.0]);
        assert!(solve_odd(0).is_err());
    }

    #[test]
    fn full_spectrum_interleaves() {
        let s = full_spectrum(g(1.0), &SolverConfig::with_states(4)).unwrap();
        let parities: String = s.iter().map(|l| l.parity.short()).collect();
        assert_eq!(parities, "eoeo");
        assert_eq!(s[1].nu, 1.0);
        assert_eq!(s[3].nu, 3.0);
        assert!((s[0].nu - 0.3927).abs() < 5e-5);
        assert!((s[2].nu - 2.2546).abs() < 5e-5);
        assert_eq!(s.iter().map(|l| l.index).collect::<Vec<_>>(), vec![0, 1, 2, 3]);

        let s = full_spectrum(g(-0.25), &SolverConfig::with_states(4)).unwrap();
        assert!((s[0].nu + 0.1557).abs() < 5e-5);
        assert!((s[2].nu - 1.9288).abs() < 5e-5);

        let s = full_spectrum(g(0.0), &SolverConfig::with_states(4)).unwrap();
        assert_eq!(nus(&s), vec![0.0, 1.0, 2.0, 3.0]);
        for l in &s {
            assert_eq!(l.epsilon, l.nu + 0.5);
        }
    }

    #[test]
    fn asymptote() {
        assert_eq!(bound_state_asymptote(g(-5.0)).unwrap(), -12.5);
        assert_eq!(bound_state_asymptote(g(-1.0)).unwrap(), -0.5);
        assert!(bound_state_asymptote(g(0.0)).is_err());
        assert!(bound_state_asymptote(g(2.0)).is_err());
    }

    #[test]
    fn asymptote_is_approached_from_above() {
        // Solved ground-state energies sit above −g²/2 and close in on it.
        let mut prev_gap = f64::INFINITY;
        for gv in [-1.0, -2.5, -5.0, -20.0] {
            let eps = solve_even(g(gv), &SolverConfig::with_states(1)).unwrap()[0].epsilon;
            let asym = bound_state_asymptote(g(gv)).unwrap();
            let gap = (eps - asym) / asym.abs();
            assert!(gap > 0.0 && gap < prev_gap, "g = {gv}: gap {gap}");
            prev_gap = gap;
        }
        assert!(prev_gap < 1e-3);
    }

    #[test]
    fn strong_coupling_roots_stay_inside_brackets() {
        for gv in [50.0, -50.0] {
            let levels = solve_even(g(gv), &SolverConfig::with_states(4)).unwrap();
            let brackets = bracket_even_roots(g(gv), 4).unwrap();
            for (l, (lo, hi)) in levels.iter().zip(brackets) {
                assert!(l.nu > lo && l.nu < hi, "g = {gv}: {} not in ({lo}, {hi})", l.nu);
            }
        }
    }
}
