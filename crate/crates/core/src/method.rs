//! Interchangeable ways of computing the lowest levels, selected by name.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::oracle::{oracle_spectrum, OracleConfig};
use crate::spectrum::{full_spectrum, Coupling, EigenSolution, SolverConfig};

pub trait SpectrumMethod: Send + Sync {
    fn name(&self) -> &'static str;

    /// The `n` lowest levels, energy-ordered and indexed from 0.
    fn levels(&self, g: Coupling, n: usize) -> Result<Vec<EigenSolution>>;
}

/// Root finding on the transcendental eigenvalue equation.
#[derive(Debug, Clone, Default)]
pub struct Analytic {
    pub solver: SolverConfig,
}

impl SpectrumMethod for Analytic {
    fn name(&self) -> &'static str {
        "analytic"
    }

    fn levels(&self, g: Coupling, n: usize) -> Result<Vec<EigenSolution>> {
        full_spectrum(
            g,
            &SolverConfig {
                n_states: n,
                ..self.solver.clone()
            },
        )
    }
}

/// Diagonalization of the discretized Hamiltonian.
#[derive(Debug, Clone, Default)]
pub struct FiniteDifference {
    pub grid: OracleConfig,
}

impl SpectrumMethod for FiniteDifference {
    fn name(&self) -> &'static str {
        "finite-difference"
    }

    fn levels(&self, g: Coupling, n: usize) -> Result<Vec<EigenSolution>> {
        let cfg = OracleConfig {
            n_eigen: n,
            ..self.grid
        };
        let spectrum = oracle_spectrum(g, &cfg)?;
        Ok(spectrum
            .epsilons
            .iter()
            .zip(&spectrum.parities)
            .enumerate()
            .map(|(i, (&e, &p))| EigenSolution::new(p, e - 0.5, i))
            .collect())
    }
}

#[derive(Clone)]
pub struct MethodRegistry {
    methods: BTreeMap<&'static str, Arc<dyn SpectrumMethod>>,
}

impl MethodRegistry {
    pub fn empty() -> Self {
        Self {
            methods: BTreeMap::new(),
        }
    }

    /// Both built-in methods, configured as given.
    pub fn standard(solver: SolverConfig, grid: OracleConfig) -> Self {
        let mut registry = Self::empty();
        registry.register(Arc::new(Analytic { solver }));
        registry.register(Arc::new(FiniteDifference { grid }));
        registry
    }

    pub fn register(&mut self, method: Arc<dyn SpectrumMethod>) {
        self.methods.insert(method.name(), method);
    }

    pub fn get(&self, name: &str) -> Result<Arc<dyn SpectrumMethod>> {
        self.methods
            .get(name)
            .cloned()
            .ok_or_else(|| Error::UnknownStrategy {
                kind: "spectrum method",
                name: name.to_string(),
                available: self.names().join(", "),
            })
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.methods.keys().copied().collect()
    }
}

impl Default for MethodRegistry {
    fn default() -> Self {
        Self::standard(SolverConfig::default(), OracleConfig::default())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookup() {
        let reg = MethodRegistry::default();
        assert_eq!(reg.names(), vec!["analytic", "finite-difference"]);
        assert!(matches!(
            reg.get("qr").err().unwrap(),
            Error::UnknownStrategy { .. }
        ));
    }

    #[test]
    fn methods_agree() {
        let reg = MethodRegistry::default();
        let g = Coupling::new(1.0).unwrap();
        let a = reg.get("analytic").unwrap().levels(g, 4).unwrap();
        let f = reg.get("finite-difference").unwrap().levels(g, 4).unwrap();
        assert_eq!(a.len(), 4);
        for (x, y) in a.iter().zip(&f) {
            assert_eq!(x.parity, y.parity);
            assert_eq!(x.index, y.index);
            assert!((x.epsilon - y.epsilon).abs() < 1e-4);
        }
    }

    #[test]
    fn custom_strategy() {
        struct Plain;
        impl SpectrumMethod for Plain {
            fn name(&self) -> &'static str {
                "plain"
            }
            fn levels(&self, _g: Coupling, n: usize) -> Result<Vec<EigenSolution>> {
                Analytic::default().levels(Coupling::new(0.0)?, n)
            }
        }
        let mut reg = MethodRegistry::empty();
        reg.register(Arc::new(Plain));
        let levels = reg.get("plain").unwrap().levels(Coupling::new(3.0).unwrap(), 3).unwrap();
        assert_eq!(levels.iter().map(|l| l.nu).collect::<Vec<_>>(), vec![0.0, 1.0, 2.0]);
    }
}
