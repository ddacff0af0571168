//! Bracketed root refinement.
//!
//! Each strategy implements [`RootRefiner`] and is looked up by name through
//! a [`RefinerRegistry`]. Every strategy keeps a sign-changing bracket and
//! never evaluates outside it.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A refined root together with the final bracket.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Root {
    pub value: f64,
    pub lo: f64,
    pub hi: f64,
    pub iterations: usize,
}

impl Root {
    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

pub trait RootRefiner: Send + Sync {
    fn name(&self) -> &'static str;

    /// Shrink `[lo, hi]`, across which `f` changes sign, until it is no
    /// wider than `tol` or an exact zero is hit.
    fn refine(
        &self,
        f: &dyn Fn(f64) -> f64,
        lo: f64,
        hi: f64,
        tol: f64,
        max_iter: usize,
    ) -> Result<Root>;
}

struct Bracket {
    lo: f64,
    hi: f64,
    f_lo: f64,
    f_hi: f64,
}

impl Bracket {
    fn new(f: &dyn Fn(f64) -> f64, lo: f64, hi: f64) -> Result<std::result::Result<Self, Root>> {
        if !(lo < hi) {
            return Err(Error::InvalidInput(format!("empty bracket [{lo}, {hi}]")));
        }
        let (f_lo, f_hi) = (f(lo), f(hi));
        if f_lo == 0.0 {
            return Ok(Err(exact(lo)));
        }
        if f_hi == 0.0 {
            return Ok(Err(exact(hi)));
        }
        if f_lo.signum() == f_hi.signum() || f_lo.is_nan() || f_hi.is_nan() {
            return Err(Error::BracketFailure { g: f64::NAN, lo, hi });
        }
        Ok(Ok(Self { lo, hi, f_lo, f_hi }))
    }

    fn converged(&self, tol: f64) -> bool {
        let mid = 0.5 * (self.lo + self.hi);
        self.hi - self.lo <= tol || mid <= self.lo || mid >= self.hi
    }

    /// Replace the endpoint on the same side as `x`; returns true if the
    /// lower end moved.
    fn update(&mut self, x: f64, fx: f64) -> bool {
        if fx.signum() == self.f_lo.signum() {
            self.lo = x;
            self.f_lo = fx;
            true
        } else {
            self.hi = x;
            self.f_hi = fx;
            false
        }
    }

    fn finish(&self, iterations: usize) -> Root {
        let value = if self.f_lo.abs() <= self.f_hi.abs() {
            self.lo
        } else {
            self.hi
        };
        Root {
            value,
            lo: self.lo,
            hi: self.hi,
            iterations,
        }
    }
}

fn exact(x: f64) -> Root {
    Root {
        value: x,
        lo: x,
        hi: x,
        iterations: 0,
    }
}

/// Plain interval halving.
#[derive(Debug, Default, Clone, Copy)]
pub struct Bisection;

impl RootRefiner for Bisection {
    fn name(&self) -> &'static str {
        "bisection"
    }

    fn refine(
        &self,
        f: &dyn Fn(f64) -> f64,
        lo: f64,
        hi: f64,
        tol: f64,
        max_iter: usize,
    ) -> Result<Root> {
        let mut b = match Bracket::new(f, lo, hi)? {
            Ok(b) => b,
            Err(root) => return Ok(root),
        };
        for it in 0..max_iter {
            if b.converged(tol) {
                return Ok(b.finish(it));
            }
            let mid = 0.5 * (b.lo + b.hi);
            let fm = f(mid);
            if fm == 0.0 {
                return Ok(Root {
                    iterations: it + 1,
                    ..exact(mid)
                });
            }
            b.update(mid, fm);
        }
        if b.converged(tol) {
            return Ok(b.finish(max_iter));
        }
        Err(Error::NonConvergence {
            what: "bisection",
            iterations: max_iter,
        })
    }
}

/// Regula falsi with the Illinois modification, falling back to a
/// bisection step whenever two consecutive steps fail to halve the bracket.
#[derive(Debug, Default, Clone, Copy)]
pub struct Illinois;

impl RootRefiner for Illinois {
    fn name(&self) -> &'static str {
        "illinois"
    }

    fn refine(
        &self,
        f: &dyn Fn(f64) -> f64,
        lo: f64,
        hi: f64,
        tol: f64,
        max_iter: usize,
    ) -> Result<Root> {
        let mut b = match Bracket::new(f, lo, hi)? {
            Ok(b) => b,
            Err(root) => return Ok(root),
        };
        let mut last_side: Option<bool> = None;
        let mut width_two_ago = f64::INFINITY;
        let mut width_one_ago = b.hi - b.lo;
        for it in 0..max_iter {
            if b.converged(tol) {
                return Ok(b.finish(it));
            }
            let width = b.hi - b.lo;
            let secant = b.hi - b.f_hi * (b.hi - b.lo) / (b.f_hi - b.f_lo);
            let stalled = width > 0.5 * width_two_ago;
            let x = if stalled || !(secant > b.lo && secant < b.hi) {
                0.5 * (b.lo + b.hi)
            } else {
                secant
            };
            let fx = f(x);
            if fx == 0.0 {
                return Ok(Root {
                    iterations: it + 1,
                    ..exact(x)
                });
            }
            let moved_lo = b.update(x, fx);
            if last_side == Some(moved_lo) {
                // Same end moved twice: halve the stale end's weight.
                if moved_lo {
                    b.f_hi *= 0.5;
                } else {
                    b.f_lo *= 0.5;
                }
            }
            last_side = Some(moved_lo);
            width_two_ago = width_one_ago;
            width_one_ago = width;
        }
        if b.converged(tol) {
            return Ok(b.finish(max_iter));
        }
        Err(Error::NonConvergence {
            what: "illinois",
            iterations: max_iter,
        })
    }
}

/// Name-keyed collection of root refiners.
#[derive(Clone)]
pub struct RefinerRegistry {
    refiners: BTreeMap<&'static str, Arc<dyn RootRefiner>>,
}

impl RefinerRegistry {
    pub fn empty() -> Self {
        Self {
            refiners: BTreeMap::new(),
        }
    }

    /// Registry holding every built-in strategy.
    pub fn standard() -> Self {
        let mut registry = Self::empty();
        registry.register(Arc::new(Bisection));
        registry.register(Arc::new(Illinois));
        registry
    }

    pub fn register(&mut self, refiner: Arc<dyn RootRefiner>) {
        self.refiners.insert(refiner.name(), refiner);
    }

    pub fn get(&self, name: &str) -> Result<Arc<dyn RootRefiner>> {
        self.refiners
            .get(name)
            .cloned()
            .ok_or_else(|| Error::UnknownStrategy {
                kind: "root refiner",
                name: name.to_string(),
                available: self.names().join(", "),
            })
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.refiners.keys().copied().collect()
    }
}

impl Default for RefinerRegistry {
    fn default() -> Self {
        Self::standard()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all() -> Vec<Arc<dyn RootRefiner>> {
        let reg = RefinerRegistry::standard();
        reg.names().iter().map(|n| reg.get(n).unwrap()).collect()
    }

    #[test]
    fn registry_lookup() {
        let reg = RefinerRegistry::standard();
        assert_eq!(reg.names(), vec!["bisection", "illinois"]);
        assert_eq!(reg.get("illinois").unwrap().name(), "illinois");
        let err = reg.get("newton").err().unwrap();
        assert!(matches!(err, Error::UnknownStrategy { .. }));
    }

    #[test]
    fn finds_sqrt_two() {
        for r in all() {
            let root = r.refine(&|x| x * x - 2.0, 0.0, 2.0, 1e-12, 200).unwrap();
            assert!((root.value - 2f64.sqrt()).abs() < 1e-12, "{}", r.name());
            assert!(root.width() <= 1e-12);
        }
    }

    #[test]
    fn illinois_is_faster_on_smooth_functions() {
        let f = |x: f64| x.cos() - x;
        let bis = Bisection.refine(&f, 0.0, 1.0, 1e-12, 200).unwrap();
        let ill = Illinois.refine(&f, 0.0, 1.0, 1e-12, 200).unwrap();
        assert!(ill.iterations < bis.iterations);
        assert!((ill.value - bis.value).abs() < 1e-12);
    }

    #[test]
    fn exact_endpoint_root() {
        for r in all() {
            let root = r.refine(&|x| x - 1.0, 1.0, 3.0, 1e-10, 50).unwrap();
            assert_eq!(root.value, 1.0);
        }
    }

    #[test]
    fn rejects_bracket_without_sign_change() {
        for r in all() {
            let err = r.refine(&|x| x * x + 1.0, -1.0, 1.0, 1e-10, 50).unwrap_err();
            assert!(matches!(err, Error::BracketFailure { .. }));
        }
    }

    #[test]
    fn iteration_cap_is_reported() {
        let err = Bisection
            .refine(&|x| x - 0.3, 0.0, 1.0, 1e-15, 5)
            .unwrap_err();
        assert!(matches!(err, Error::NonConvergence { .. }));
    }

    #[test]
    fn stays_inside_bracket_on_steep_functions() {
        // A sharply curved function that throws plain regula falsi far off.
        let f = |x: f64| (20.0 * (x - 0.9)).exp() - 1.0;
        let seen = std::cell::RefCell::new(Vec::new());
        let probe = |x: f64| {
            seen.borrow_mut().push(x);
            f(x)
        };
        let root = Illinois.refine(&probe, 0.0, 1.0, 1e-12, 200).unwrap();
        assert!((root.value - 0.9).abs() < 1e-12);
        assert!(seen.borrow().iter().all(|&x| (0.0..=1.0).contains(&x)));
    }
}
