//! Kummer's confluent hypergeometric functions M(a, b, z) and U(a, b, z)
//! for real parameters and z ≥ 0.
//!
//! Only U(−ν/2, 1/2, z) is exposed, since that is the even-parity solution
//! of the oscillator problem. It is evaluated along one of four routes:
//!
//! * the connection formula U = √π·M(a,½,z)/Γ(a+½) − 2√π·√z·M(a+½,3/2,z)/Γ(a),
//!   with reciprocal Gammas, for integer ν (one term vanishes and the other
//!   is a polynomial) and for small z;
//! * the asymptotic series z^(−a)·₂F₀(a, a+½; ; −1/z) when its smallest term
//!   is below double-precision resolution;
//! * the integral representation U = Γ(a)⁻¹ ∫ e^(−zt) t^(a−1) (1+t)^(b−a−1) dt
//!   for a > 0, integrated with the trapezoidal rule in t = eˣ;
//! * downward recurrence in a, seeded by two integral values, for a < 0.
//!
//! The last two exist because the connection formula subtracts two terms of
//! size e^z: beyond z ≈ 20 it loses most of its digits.

use crate::error::{Error, Result};
use crate::specfun::gamma::{is_nonpositive_integer, log_gamma, reciprocal_gamma};

const SQRT_PI: f64 = 1.772_453_850_905_516;

/// Relative size below which a series term counts as negligible.
const SERIES_RTOL: f64 = 1e-17;
/// Consecutive negligible terms required before the ascending series stops.
const SERIES_QUIET_TERMS: usize = 3;
const SERIES_MAX_TERMS: usize = 500;

/// Accept the asymptotic series when its truncation error is below this.
const ASYMPTOTIC_RTOL: f64 = 1e-15;
const ASYMPTOTIC_MAX_TERMS: usize = 200;

/// Below this z the connection formula loses at most a few digits.
const CONNECTION_MAX_Z: f64 = 1.0;

/// Integrand cutoff, relative to the peak, in natural-log units.
const INTEGRAND_LOG_RANGE: f64 = 40.0;

/// Parameters of a Kummer function evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KummerParams {
    pub a: f64,
    pub b: f64,
    pub z: f64,
}

impl KummerParams {
    pub fn new(a: f64, b: f64, z: f64) -> Self {
        Self { a, b, z }
    }
}

/// M(a, b, z) by the ascending series.
///
/// The series terminates exactly when a is zero or a negative integer.
/// Otherwise it stops once three consecutive terms fall below 1e-17 of the
/// partial sum.
pub fn kummer_m(p: KummerParams) -> Result<f64> {
    let KummerParams { a, b, z } = p;
    if !(z >= 0.0) {
        return Err(Error::Domain { what: "kummer_m", x: z });
    }
    if is_nonpositive_integer(b) {
        return Err(Error::Domain { what: "kummer_m (b)", x: b });
    }

    let mut term = 1.0_f64;
    let mut sum = 1.0_f64;
    let mut quiet = 0;
    for k in 0..SERIES_MAX_TERMS {
        let kf = k as f64;
        if a + kf == 0.0 || z == 0.0 {
            return Ok(sum);
        }
        term *= (a + kf) * z / ((b + kf) * (kf + 1.0));
        sum += term;
        if !sum.is_finite() {
            return Err(Error::Overflow { what: "kummer_m", x: z });
        }
        if term.abs() < SERIES_RTOL * sum.abs() {
            quiet += 1;
            if quiet >= SERIES_QUIET_TERMS {
                return Ok(sum);
            }
        } else {
            quiet = 0;
        }
    }
    Err(Error::NonConvergence {
        what: "kummer_m",
        iterations: SERIES_MAX_TERMS,
    })
}

/// U(−ν/2, 1/2, z) for any real ν and z ≥ 0.
pub fn kummer_u_half(nu: f64, z: f64) -> Result<f64> {
    if !(z >= 0.0) {
        return Err(Error::Domain { what: "kummer_u_half", x: z });
    }
    if !nu.is_finite() {
        return Err(Error::Domain { what: "kummer_u_half (nu)", x: nu });
    }
    let a = -0.5 * nu;
    if z == 0.0 {
        return Ok(SQRT_PI * reciprocal_gamma(a + 0.5));
    }
    if is_nonpositive_integer(a) || is_nonpositive_integer(a + 0.5) {
        return connection_formula(a, z).map(|(u, _)| u);
    }
    if a > 0.0 {
        return Ok(ln_u_integral(a, 0.5, z).exp());
    }
    if z <= CONNECTION_MAX_Z {
        return connection_formula(a, z).map(|(u, _)| u);
    }
    if let Some(u) = asymptotic_series(a, 0.5, z) {
        return Ok(u);
    }
    u_by_recurrence(a, z)
}

/// U(−ν/2, 1/2, z) / U(−ν/2, 1/2, 0) for ν < 0, computed in log space so that
/// deep bound states (where U(·, 0) underflows) still have a usable shape.
pub(crate) fn kummer_u_half_relative(nu: f64, z: f64) -> Result<f64> {
    let a = -0.5 * nu;
    if a <= 0.0 || z == 0.0 {
        let origin = SQRT_PI * reciprocal_gamma(a + 0.5);
        return Ok(kummer_u_half(nu, z)? / origin);
    }
    let ln_origin = SQRT_PI.ln() - log_gamma(a + 0.5)?;
    Ok((ln_u_integral(a, 0.5, z) - ln_origin).exp())
}

/// z → 0⁺ limits of U(−ν/2, 1/2, y²) and of its y-derivative.
///
/// Returns `(value0, slope_coefficient)` with value0 = √π/Γ(1/2 − ν/2) and
/// slope_coefficient = ν√π/Γ(1 − ν/2), the one-sided derivative d/dy at
/// y = 0⁺ (the derivative at 0⁻ is its negative).
pub fn kummer_u_half_origin(nu: f64) -> (f64, f64) {
    let value0 = SQRT_PI * reciprocal_gamma(0.5 - 0.5 * nu);
    let slope = nu * SQRT_PI * reciprocal_gamma(1.0 - 0.5 * nu);
    (value0, slope)
}

/// Connection formula; also returns the magnitude of the larger term so
/// callers can judge cancellation.
fn connection_formula(a: f64, z: f64) -> Result<(f64, f64)> {
    let c1 = SQRT_PI * reciprocal_gamma(a + 0.5);
    let c2 = -2.0 * SQRT_PI * reciprocal_gamma(a);
    let t1 = if c1 == 0.0 {
        0.0
    } else {
        c1 * kummer_m(KummerParams::new(a, 0.5, z))?
    };
    let t2 = if c2 == 0.0 {
        0.0
    } else {
        c2 * z.sqrt() * kummer_m(KummerParams::new(a + 0.5, 1.5, z))?
    };
    let u = t1 + t2;
    if !u.is_finite() {
        return Err(Error::Overflow { what: "kummer_u_half", x: z });
    }
    Ok((u, t1.abs().max(t2.abs())))
}

/// z^(−a) Σ (a)ₛ (a−b+1)ₛ / s! · (−1/z)ˢ. `None` unless the terms shrink
/// below the requested accuracy before they start to grow again.
fn asymptotic_series(a: f64, b: f64, z: f64) -> Option<f64> {
    let c = a - b + 1.0;
    let mut term = 1.0_f64;
    let mut sum = 1.0_f64;
    for s in 0..ASYMPTOTIC_MAX_TERMS {
        let sf = s as f64;
        let next = term * (a + sf) * (c + sf) / ((sf + 1.0) * -z);
        if next.abs() <= ASYMPTOTIC_RTOL * sum.abs() {
            return Some((sum + next) * z.powf(-a));
        }
        if next.abs() >= term.abs() {
            return None;
        }
        term = next;
        sum += term;
    }
    None
}

fn ln_one_plus_exp(x: f64) -> f64 {
    if x > 0.0 {
        x + (-x).exp().ln_1p()
    } else {
        x.exp().ln_1p()
    }
}

/// ln U(a, b, z) for a > 0, z > 0, b < 1 + a, from the Laplace-type integral
/// in the variable x = ln t:
///
///   Γ(a)·U = ∫ exp(a·x − z·eˣ + (b − a − 1)·ln(1 + eˣ)) dx.
///
/// The integrand is analytic in a strip around the real axis, so the
/// trapezoidal rule converges geometrically in the step. The left tail
/// behaves like e^(a·x) and is summed in closed form.
fn ln_u_integral(a: f64, b: f64, z: f64) -> f64 {
    let c = b - a - 1.0;
    let log_f = |x: f64| a * x - z * x.exp() + c * ln_one_plus_exp(x);
    let d_log_f = |x: f64| {
        let sig = 1.0 / (1.0 + (-x).exp());
        a - z * x.exp() + c * sig
    };

    // d_log_f is strictly decreasing: bisect for the peak.
    let mut lo = -60.0_f64;
    let mut hi = (a / z).ln().max(lo) + 1.0;
    while d_log_f(hi) > 0.0 {
        hi += 1.0;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if d_log_f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-12 {
            break;
        }
    }
    let peak = 0.5 * (lo + hi);
    let log_peak = log_f(peak);

    let sig = 1.0 / (1.0 + (-peak).exp());
    let curvature = z * peak.exp() - c * sig * (1.0 - sig);
    let step = (0.5 / curvature.max(1e-300).sqrt()).min(0.1);

    let floor = log_peak - INTEGRAND_LOG_RANGE;
    let mut sum = 1.0_f64;

    let mut x = peak;
    loop {
        x += step;
        let l = log_f(x);
        sum += (l - log_peak).exp();
        if l < floor {
            break;
        }
    }

    x = peak;
    loop {
        x -= step;
        let l = log_f(x);
        let w = (l - log_peak).exp();
        sum += w;
        if l < floor {
            break;
        }
        if x < -40.0 {
            // Geometric tail of a pure e^(a x) decay.
            let r = (-a * step).exp();
            sum += w * r / (1.0 - r);
            break;
        }
    }

    log_peak + (step * sum).ln() - log_gamma(a).expect("a > 0")
}

/// U(a, 1/2, z) for a < 0 by stepping U(a'−1) = (z + 2a' − b)·U(a') −
/// a'(a' − b + 1)·U(a' + 1) down from a' ∈ (0, 1]. U is the minimal
/// solution of this recurrence as a' → +∞, so the downward direction is
/// stable.
fn u_by_recurrence(a: f64, z: f64) -> Result<f64> {
    let b = 0.5;
    let steps = (-a).floor() as usize + 1;
    let start = a + steps as f64;
    let mut upper = ln_u_integral(start + 1.0, b, z).exp();
    let mut current = ln_u_integral(start, b, z).exp();
    let mut ap = start;
    for _ in 0..steps {
        let lower = (z + 2.0 * ap - b) * current - ap * (ap - b + 1.0) * upper;
        upper = current;
        current = lower;
        ap -= 1.0;
    }
    if current.is_finite() {
        Ok(current)
    } else {
        Err(Error::Overflow { what: "kummer_u_half", x: z })
    }
}
