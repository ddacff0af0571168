//! Eigenfunctions on uniform grids.
//!
//! Even states are ψ_ν(y) = A·e^(−y²/2)·U(−ν/2, 1/2, y²), extended
//! symmetrically; odd states are ψ_n(y) = A·e^(−y²/2)·Hₙ(y). A is fixed by
//! unit L² norm and a positive value (even) or slope (odd) at y → 0⁺.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::specfun::{hermite, kummer_u_half, kummer_u_half_origin, kummer_u_half_relative};
use crate::spectrum::{Coupling, EigenSolution, Parity};

/// Beyond y² = 700 the Gaussian factor is below f64 resolution.
const GAUSSIAN_FLOOR_Z: f64 = 700.0;

/// Endpoint magnitude allowed by [`normalize`], relative to the peak.
pub const BOUNDARY_DECAY: f64 = 1e-12;

const MAX_WIDENINGS: usize = 12;

/// Symmetric uniform grid [−L, L] with an odd number of points, so that
/// y = 0 is a node and Simpson panels meet there.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub half_width: f64,
    pub n_points: usize,
}

impl Default for GridSpec {
    fn default() -> Self {
        Self {
            half_width: 10.0,
            n_points: 2001,
        }
    }
}

impl GridSpec {
    pub fn new(half_width: f64, n_points: usize) -> Result<Self> {
        let spec = Self {
            half_width,
            n_points,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.half_width > 0.0 && self.half_width.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "grid half width must be positive, got {}",
                self.half_width
            )));
        }
        if self.n_points < 3 || self.n_points.is_multiple_of(2) {
            return Err(Error::InvalidInput(format!(
                "symmetric grids need an odd point count ≥ 3, got {}",
                self.n_points
            )));
        }
        Ok(())
    }

    pub fn spacing(&self) -> f64 {
        2.0 * self.half_width / (self.n_points - 1) as f64
    }

    /// Coordinates, computed from the centre so that the middle node is
    /// exactly zero and the grid is exactly mirror-symmetric.
    pub fn coordinates(&self) -> Vec<f64> {
        let centre = (self.n_points / 2) as isize;
        let dy = self.spacing();
        (0..self.n_points as isize)
            .map(|i| (i - centre) as f64 * dy)
            .collect()
    }

    /// Same spacing, about `factor` times wider.
    fn widened(&self, factor: f64) -> Self {
        let dy = self.spacing();
        let half_steps = ((self.half_width * factor) / dy).ceil() as usize;
        Self {
            half_width: half_steps as f64 * dy,
            n_points: 2 * half_steps + 1,
        }
    }
}

/// A real function sampled on a uniform grid including both endpoints.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridFunction {
    pub y_min: f64,
    pub y_max: f64,
    pub values: Vec<f64>,
}

impl GridFunction {
    pub fn new(y_min: f64, y_max: f64, values: Vec<f64>) -> Result<Self> {
        if !(y_max > y_min) {
            return Err(Error::InvalidInput(format!(
                "grid needs y_max > y_min, got [{y_min}, {y_max}]"
            )));
        }
        if values.len() < 3 {
            return Err(Error::InvalidInput(format!(
                "grid needs at least 3 points, got {}",
                values.len()
            )));
        }
        Ok(Self {
            y_min,
            y_max,
            values,
        })
    }

    /// Sample `f` on a symmetric grid.
    pub fn sample(spec: &GridSpec, f: impl Fn(f64) -> Result<f64>) -> Result<Self> {
        spec.validate()?;
        let values = spec
            .coordinates()
            .into_iter()
            .map(f)
            .collect::<Result<Vec<_>>>()?;
        Self::new(-spec.half_width, spec.half_width, values)
    }

    pub fn n_points(&self) -> usize {
        self.values.len()
    }

    pub fn spacing(&self) -> f64 {
        (self.y_max - self.y_min) / (self.values.len() - 1) as f64
    }

    pub fn y(&self, i: usize) -> f64 {
        self.y_min + i as f64 * self.spacing()
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0_f64, |m, v| m.max(v.abs()))
    }

    fn same_grid(&self, other: &GridFunction) -> bool {
        self.values.len() == other.values.len()
            && self.y_min == other.y_min
            && self.y_max == other.y_max
    }

    /// Number of sign changes, ignoring samples below `floor·max|f|`.
    pub fn sign_changes(&self, floor: f64) -> usize {
        let cut = floor * self.max_abs();
        let mut last = 0.0_f64;
        let mut count = 0;
        for &v in &self.values {
            if v.abs() <= cut {
                continue;
            }
            if last != 0.0 && v.signum() != last.signum() {
                count += 1;
            }
            last = v;
        }
        count
    }
}

/// Composite Simpson rule on an odd number of equally spaced samples.
pub fn simpson(values: &[f64], dy: f64) -> Result<f64> {
    let n = values.len();
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::InvalidInput(format!(
            "Simpson's rule needs an odd sample count ≥ 3, got {n}"
        )));
    }
    let interior: f64 = values[1..n - 1]
        .iter()
        .enumerate()
        .map(|(i, v)| if i % 2 == 0 { 4.0 * v } else { 2.0 * v })
        .sum();
    Ok(dy / 3.0 * (values[0] + interior + values[n - 1]))
}

/// e^(−y²/2)·U(−ν/2, 1/2, y²), unnormalized and even in y.
pub fn eval_even(nu: f64, y: f64) -> Result<f64> {
    let z = y * y;
    if z > GAUSSIAN_FLOOR_Z {
        return Ok(0.0);
    }
    Ok((-0.5 * z).exp() * kummer_u_half(nu, z)?)
}

/// e^(−y²/2)·Hₙ(y) for odd n, unnormalized.
pub fn eval_odd(n: usize, y: f64) -> Result<f64> {
    if n.is_multiple_of(2) {
        return Err(Error::InvalidInput(format!(
            "odd-parity state requested with even n = {n}"
        )));
    }
    let z = y * y;
    if z > GAUSSIAN_FLOOR_Z {
        return Ok(0.0);
    }
    Ok((-0.5 * z).exp() * hermite(n, y)?)
}

/// Even state scaled by 1/|U(−ν/2, 1/2, 0)|; finite even when U itself
/// underflows.
fn eval_even_scaled(nu: f64, y: f64) -> Result<f64> {
    let z = y * y;
    if z > GAUSSIAN_FLOOR_Z {
        return Ok(0.0);
    }
    if nu < 0.0 {
        return Ok((-0.5 * z).exp() * kummer_u_half_relative(nu, z)?);
    }
    let (value0, _) = kummer_u_half_origin(nu);
    Ok(eval_even(nu, y)? / value0.abs())
}

/// Scale `f` to unit Simpson norm. Returns the scaled function and the
/// original L² norm.
pub fn normalize(f: &GridFunction) -> Result<(GridFunction, f64)> {
    let peak = f.max_abs();
    if !(peak > 0.0) || !peak.is_finite() {
        return Err(Error::InvalidInput(
            "cannot normalize a zero or non-finite function".into(),
        ));
    }
    let boundary = f.values[0].abs().max(f.values[f.n_points() - 1].abs()) / peak;
    if boundary > BOUNDARY_DECAY {
        return Err(Error::InsufficientDomain {
            y_min: f.y_min,
            y_max: f.y_max,
            boundary,
            threshold: BOUNDARY_DECAY,
        });
    }
    // Rescale first so that squaring cannot underflow.
    let scaled: Vec<f64> = f.values.iter().map(|v| v / peak).collect();
    let squares: Vec<f64> = scaled.iter().map(|v| v * v).collect();
    let norm = simpson(&squares, f.spacing())?.sqrt();
    let values = scaled.iter().map(|v| v / norm).collect();
    Ok((
        GridFunction {
            y_min: f.y_min,
            y_max: f.y_max,
            values,
        },
        norm * peak,
    ))
}

/// |[ψ′(0⁺) − ψ′(0⁻)] − 2g·ψ(0)| for ψ = e^(−y²/2)·U(−ν/2, 1/2, y²) with
/// unit prefactor, using the analytic one-sided limits at the origin.
pub fn jump_check(nu: f64, g: Coupling) -> f64 {
    let (value0, slope) = kummer_u_half_origin(nu);
    (2.0 * slope - 2.0 * g.value() * value0).abs()
}

/// Normalized eigenfunction of `sol` on `grid`.
pub fn sample_state(sol: &EigenSolution, grid: &GridSpec) -> Result<GridFunction> {
    grid.validate()?;
    let raw = match sol.parity {
        Parity::Even => GridFunction::sample(grid, |y| eval_even_scaled(sol.nu, y))?,
        Parity::Odd => {
            let n = odd_order(sol.nu)?;
            GridFunction::sample(grid, |y| eval_odd(n, y))?
        }
    };
    let (mut f, _) = normalize(&raw)?;
    let centre = grid.n_points / 2;
    let probe = match sol.parity {
        Parity::Even => f.values[centre],
        Parity::Odd => f.values[centre + 1],
    };
    if probe < 0.0 {
        f.values.iter_mut().for_each(|v| *v = -*v);
    }
    Ok(f)
}

/// [`sample_state`] on the default grid, widened at constant spacing until
/// the endpoint decay check passes.
pub fn sample_state_auto(sol: &EigenSolution) -> Result<GridFunction> {
    let mut grid = GridSpec::default();
    for _ in 0..MAX_WIDENINGS {
        match sample_state(sol, &grid) {
            Err(Error::InsufficientDomain { .. }) => grid = grid.widened(1.5),
            other => return other,
        }
    }
    sample_state(sol, &grid)
}

fn odd_order(nu: f64) -> Result<usize> {
    let n = nu.round();
    if n != nu || n < 1.0 || n % 2.0 != 1.0 {
        return Err(Error::InvalidInput(format!(
            "odd-parity state needs an odd integer ν, got {nu}"
        )));
    }
    Ok(n as usize)
}

/// Simpson inner product ⟨a|b⟩.
pub fn orthogonality(a: &GridFunction, b: &GridFunction) -> Result<f64> {
    if !a.same_grid(b) {
        return Err(Error::GridMismatch(format!(
            "[{}, {}]×{} vs [{}, {}]×{}",
            a.y_min,
            a.y_max,
            a.n_points(),
            b.y_min,
            b.y_max,
            b.n_points()
        )));
    }
    let products: Vec<f64> = a.values.iter().zip(&b.values).map(|(x, y)| x * y).collect();
    simpson(&products, a.spacing())
}
