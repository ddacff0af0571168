//! Finite-difference cross-check.
//!
//! The dimensionless Hamiltonian −½ψ″ + ½y²ψ + g·δ(y)ψ = εψ is discretized
//! on [−L, L] with Dirichlet ends and a three-point Laplacian. The delta
//! becomes the on-site term g/Δ at the y = 0 node. The lowest eigenvalues of
//! the resulting symmetric tridiagonal matrix come from Sturm-sequence
//! bisection; eigenvectors from inverse iteration, used only to read off
//! parity.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::spectrum::{Coupling, Parity};

const BISECTION_TOL: f64 = 1e-10;
const PIVOT_FLOOR: f64 = 1e-300;
/// Eigenvalue gap below which inverse-iteration vectors are reorthogonalized.
const REORTH_GAP: f64 = 1e-6;
const RAYLEIGH_TOL: f64 = 1e-12;
const MIN_INVERSE_ITERS: usize = 3;
const MAX_INVERSE_ITERS: usize = 12;
const MAX_RESTARTS: usize = 3;
/// Relative difference of the mirror residuals below which parity is
/// declared ambiguous.
const PARITY_MARGIN: f64 = 0.01;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OracleConfig {
    /// L: the grid spans [−L, L].
    pub half_width: f64,
    /// Number of grid intervals; even so that y = 0 is a node.
    pub n_intervals: usize,
    pub n_eigen: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            half_width: 8.0,
            n_intervals: 4000,
            n_eigen: 6,
        }
    }
}

impl OracleConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.half_width >= 6.0 && self.half_width.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "oracle half width must be at least 6, got {}",
                self.half_width
            )));
        }
        if self.n_intervals < 4 || !self.n_intervals.is_multiple_of(2) {
            return Err(Error::InvalidInput(format!(
                "oracle needs an even interval count ≥ 4, got {}",
                self.n_intervals
            )));
        }
        if self.n_eigen == 0 || self.n_eigen > self.n_intervals - 1 {
            return Err(Error::InvalidInput(format!(
                "n_eigen must be in 1..={}, got {}",
                self.n_intervals - 1,
                self.n_eigen
            )));
        }
        Ok(())
    }

    pub fn spacing(&self) -> f64 {
        2.0 * self.half_width / self.n_intervals as f64
    }
}

/// Symmetric tridiagonal matrix: `diag` of length n, `off` of length n − 1.
#[derive(Debug, Clone, PartialEq)]
pub struct Tridiagonal {
    pub diag: Vec<f64>,
    pub off: Vec<f64>,
}

impl Tridiagonal {
    pub fn new(diag: Vec<f64>, off: Vec<f64>) -> Result<Self> {
        if diag.is_empty() || off.len() + 1 != diag.len() {
            return Err(Error::InvalidInput(format!(
                "tridiagonal needs n diagonal and n−1 off-diagonal entries, got {} and {}",
                diag.len(),
                off.len()
            )));
        }
        Ok(Self { diag, off })
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    /// Number of eigenvalues strictly below `x`, from the signs of the LDLᵀ
    /// pivots of T − xI.
    pub fn sturm_count(&self, x: f64) -> usize {
        let mut count = 0;
        let mut q = self.diag[0] - x;
        for i in 0..self.dim() {
            if i > 0 {
                q = self.diag[i] - x - self.off[i - 1] * self.off[i - 1] / q;
            }
            if q.abs() < PIVOT_FLOOR {
                q = -PIVOT_FLOOR;
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// Interval containing the whole spectrum.
    pub fn gershgorin(&self) -> (f64, f64) {
        let n = self.dim();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let r = if i > 0 { self.off[i - 1].abs() } else { 0.0 }
                + if i + 1 < n { self.off[i].abs() } else { 0.0 };
            lo = lo.min(self.diag[i] - r);
            hi = hi.max(self.diag[i] + r);
        }
        (lo, hi)
    }

    fn norm_inf(&self) -> f64 {
        let (lo, hi) = self.gershgorin();
        lo.abs().max(hi.abs())
    }

    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        let n = self.dim();
        (0..n)
            .map(|i| {
                let mut s = self.diag[i] * v[i];
                if i > 0 {
                    s += self.off[i - 1] * v[i - 1];
                }
                if i + 1 < n {
                    s += self.off[i] * v[i + 1];
                }
                s
            })
            .collect()
    }

    /// The `index`-th smallest eigenvalue (0-based) by bisection on the
    /// Sturm count.
    pub fn eigenvalue_by_bisection(&self, index: usize, tol: f64) -> f64 {
        let (mut lo, mut hi) = self.gershgorin();
        let pad = 1e-12 * (lo.abs().max(hi.abs()) + 1.0);
        lo -= pad;
        hi += pad;
        loop {
            let mid = 0.5 * (lo + hi);
            if hi - lo <= tol || mid <= lo || mid >= hi {
                return mid;
            }
            if self.sturm_count(mid) > index {
                hi = mid;
            } else {
                lo = mid;
            }
        }
    }
}

/// LU factors of a tridiagonal matrix with partial pivoting.
struct TridiagonalLu {
    lower: Vec<f64>,
    d: Vec<f64>,
    du: Vec<f64>,
    du2: Vec<f64>,
    swapped: Vec<bool>,
}

impl TridiagonalLu {
    fn factor(t: &Tridiagonal, shift: f64) -> Self {
        let n = t.dim();
        let mut lower = t.off.clone();
        let mut d: Vec<f64> = t.diag.iter().map(|v| v - shift).collect();
        let mut du = t.off.clone();
        let mut du2 = vec![0.0; n.saturating_sub(2)];
        let mut swapped = vec![false; n.saturating_sub(1)];
        for i in 0..n.saturating_sub(1) {
            if d[i].abs() >= lower[i].abs() {
                if d[i] != 0.0 {
                    let fact = lower[i] / d[i];
                    lower[i] = fact;
                    d[i + 1] -= fact * du[i];
                }
            } else {
                let fact = d[i] / lower[i];
                d[i] = lower[i];
                lower[i] = fact;
                let temp = du[i];
                du[i] = d[i + 1];
                d[i + 1] = temp - fact * d[i + 1];
                if i + 2 < n {
                    du2[i] = du[i + 1];
                    du[i + 1] *= -fact;
                }
                swapped[i] = true;
            }
        }
        let floor = f64::EPSILON * t.norm_inf().max(1.0);
        for v in d.iter_mut() {
            if v.abs() < floor {
                *v = floor;
            }
        }
        Self {
            lower,
            d,
            du,
            du2,
            swapped,
        }
    }

    fn solve(&self, b: &mut [f64]) {
        let n = self.d.len();
        for i in 0..n - 1 {
            if self.swapped[i] {
                let temp = b[i];
                b[i] = b[i + 1];
                b[i + 1] = temp - self.lower[i] * b[i];
            } else {
                b[i + 1] -= self.lower[i] * b[i];
            }
        }
        b[n - 1] /= self.d[n - 1];
        if n > 1 {
            b[n - 2] = (b[n - 2] - self.du[n - 2] * b[n - 1]) / self.d[n - 2];
        }
        for i in (0..n.saturating_sub(2)).rev() {
            b[i] = (b[i] - self.du[i] * b[i + 1] - self.du2[i] * b[i + 2]) / self.d[i];
        }
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn normalize_in_place(v: &mut [f64]) {
    let n = dot(v, v).sqrt();
    if n > 0.0 {
        v.iter_mut().for_each(|x| *x /= n);
    }
}

/// Eigenpairs of a tridiagonal matrix, values ascending.
#[derive(Debug, Clone)]
pub struct TridiagonalEigen {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<f64>>,
}

/// The `k` smallest eigenpairs of `t`.
pub fn eigen_lowest(t: &Tridiagonal, k: usize) -> Result<TridiagonalEigen> {
    if k == 0 || k > t.dim() {
        return Err(Error::InvalidInput(format!(
            "requested {k} eigenvalues of a {}×{} matrix",
            t.dim(),
            t.dim()
        )));
    }
    let values: Vec<f64> = (0..k)
        .map(|j| t.eigenvalue_by_bisection(j, BISECTION_TOL))
        .collect();
    let scale = t.norm_inf().max(1.0);
    let mut vectors: Vec<Vec<f64>> = Vec::with_capacity(k);
    for (j, &lambda) in values.iter().enumerate() {
        let neighbours: Vec<usize> = (0..j)
            .filter(|&i| (values[i] - lambda).abs() < REORTH_GAP * scale.max(1.0))
            .collect();
        let v = inverse_iteration(t, lambda, j as u64, &neighbours, &vectors, scale)?;
        vectors.push(v);
    }
    Ok(TridiagonalEigen { values, vectors })
}

fn inverse_iteration(
    t: &Tridiagonal,
    lambda: f64,
    seed: u64,
    neighbours: &[usize],
    found: &[Vec<f64>],
    scale: f64,
) -> Result<Vec<f64>> {
    let lu = TridiagonalLu::factor(t, lambda);
    let n = t.dim();
    for restart in 0..MAX_RESTARTS {
        let mut rng = ChaCha8Rng::seed_from_u64(seed * 31 + restart as u64);
        let mut v: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
        normalize_in_place(&mut v);
        let mut rayleigh = f64::NAN;
        for it in 0..MAX_INVERSE_ITERS {
            lu.solve(&mut v);
            for &i in neighbours {
                let p = dot(&v, &found[i]);
                v.iter_mut().zip(&found[i]).for_each(|(x, u)| *x -= p * u);
            }
            normalize_in_place(&mut v);
            let tv = t.mul_vec(&v);
            let next = dot(&v, &tv);
            let settled = (next - rayleigh).abs() <= RAYLEIGH_TOL * next.abs().max(1.0);
            rayleigh = next;
            if it + 1 >= MIN_INVERSE_ITERS && settled {
                let residual = tv
                    .iter()
                    .zip(&v)
                    .map(|(a, b)| (a - rayleigh * b).powi(2))
                    .sum::<f64>()
                    .sqrt();
                if residual <= 1e-8 * scale {
                    return Ok(v);
                }
                break;
            }
        }
    }
    Err(Error::NonConvergence {
        what: "inverse iteration",
        iterations: MAX_RESTARTS * MAX_INVERSE_ITERS,
    })
}

/// Parity of a vector sampled on a mirror-symmetric grid.
pub fn classify_parity(v: &[f64]) -> Result<Parity> {
    let n = v.len();
    let (mut even_res, mut odd_res) = (0.0, 0.0);
    for i in 0..n {
        let m = v[n - 1 - i];
        even_res += (v[i] - m).abs();
        odd_res += (v[i] + m).abs();
    }
    if (even_res - odd_res).abs() < PARITY_MARGIN * even_res.max(odd_res) {
        return Err(Error::AmbiguousParity {
            even: even_res,
            odd: odd_res,
        });
    }
    Ok(if even_res < odd_res {
        Parity::Even
    } else {
        Parity::Odd
    })
}

/// Discretized Hamiltonian together with its grid.
#[derive(Debug, Clone)]
pub struct Hamiltonian {
    pub matrix: Tridiagonal,
    pub delta_y: f64,
    pub half_width: f64,
}

/// Interior-node operator with diagonal 1/Δ² + y²/2 (+ g/Δ at y = 0) and
/// off-diagonal −1/(2Δ²).
pub fn build_hamiltonian(g: Coupling, cfg: &OracleConfig) -> Result<Hamiltonian> {
    cfg.validate()?;
    let dy = cfg.spacing();
    let centre = (cfg.n_intervals / 2) as isize;
    let kinetic = 1.0 / (dy * dy);
    let diag = (1..cfg.n_intervals as isize)
        .map(|i| {
            let y = (i - centre) as f64 * dy;
            let spike = if i == centre { g.value() / dy } else { 0.0 };
            kinetic + 0.5 * y * y + spike
        })
        .collect();
    let off = vec![-0.5 * kinetic; cfg.n_intervals - 2];
    Ok(Hamiltonian {
        matrix: Tridiagonal::new(diag, off)?,
        delta_y: dy,
        half_width: cfg.half_width,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleSpectrum {
    pub epsilons: Vec<f64>,
    pub parities: Vec<Parity>,
    pub delta_y: f64,
}

/// The `cfg.n_eigen` lowest finite-difference levels with their parities.
pub fn oracle_spectrum(g: Coupling, cfg: &OracleConfig) -> Result<OracleSpectrum> {
    let h = build_hamiltonian(g, cfg)?;
    let eig = eigen_lowest(&h.matrix, cfg.n_eigen)?;
    let parities = eig
        .vectors
        .iter()
        .map(|v| classify_parity(v))
        .collect::<Result<Vec<_>>>()?;
    Ok(OracleSpectrum {
        epsilons: eig.values,
        parities,
        delta_y: h.delta_y,
    })
}
