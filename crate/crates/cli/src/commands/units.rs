//! Physical ↔ dimensionless conversion: a₀ = √(ħ/(mω)), g = α·a₀·m/ħ²,
//! E = (ν + 1/2)·ħω.

use deltaho::spectrum::{full_spectrum, Coupling, Parity};
use serde::{Deserialize, Serialize};

use crate::args::{Format, UnitsArgs};
use crate::config::Settings;
use crate::error::{CliError, CliResult};
use crate::output::{emit, number, to_json, CsvDoc};
use crate::report::Metadata;

const DEFAULT_STATES: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalScales {
    pub m: f64,
    pub omega: f64,
    pub hbar: f64,
    pub alpha: f64,
}

impl PhysicalScales {
    pub fn new(m: f64, omega: f64, hbar: f64, alpha: f64) -> CliResult<Self> {
        for (name, v) in [("m", m), ("omega", omega), ("hbar", hbar)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(CliError::Usage(format!("--{name} must be positive, got {v}")));
            }
        }
        if !alpha.is_finite() {
            return Err(CliError::Usage(format!("--alpha must be finite, got {alpha}")));
        }
        Ok(Self { m, omega, hbar, alpha })
    }

    pub fn length(&self) -> f64 {
        (self.hbar / (self.m * self.omega)).sqrt()
    }

    pub fn coupling(&self) -> f64 {
        self.alpha * self.length() * self.m / (self.hbar * self.hbar)
    }

    pub fn energy(&self, nu: f64) -> f64 {
        (nu + 0.5) * self.hbar * self.omega
    }

    /// Bound-state energy of the isolated attractive delta, −α²m/(2ħ²).
    pub fn deep_delta_energy(&self) -> Option<f64> {
        (self.alpha < 0.0).then(|| -self.alpha * self.alpha * self.m / (2.0 * self.hbar * self.hbar))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LevelEnergy {
    pub index: usize,
    pub parity: Parity,
    pub nu: f64,
    pub energy: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UnitsReport {
    pub scales: PhysicalScales,
    pub a0: f64,
    pub g: f64,
    /// Inverse decay length |g|/a₀ of the bound state, for g < 0.
    pub kappa: Option<f64>,
    pub deep_delta_energy: Option<f64>,
    pub nu: Option<f64>,
    pub energy_nu: Option<f64>,
    pub levels: Vec<LevelEnergy>,
    pub metadata: Metadata,
}

pub fn report(settings: &Settings, args: &UnitsArgs) -> CliResult<UnitsReport> {
    let scales = PhysicalScales::new(args.m, args.omega, args.hbar, args.alpha)?;
    let a0 = scales.length();
    let g = scales.coupling();
    let n = settings.states_or(DEFAULT_STATES)?;
    let levels = full_spectrum(Coupling::new(g)?, &settings.solver(n)?)?
        .iter()
        .map(|s| LevelEnergy {
            index: s.index,
            parity: s.parity,
            nu: s.nu,
            energy: scales.energy(s.nu),
        })
        .collect();
    Ok(UnitsReport {
        scales,
        a0,
        g,
        kappa: (g < 0.0).then(|| g.abs() / a0),
        deep_delta_energy: scales.deep_delta_energy(),
        nu: args.nu,
        energy_nu: args.nu.map(|nu| scales.energy(nu)),
        levels,
        metadata: Metadata::new(settings.stamp),
    })
}

pub fn render(report: &UnitsReport, settings: &Settings) -> CliResult<String> {
    if settings.format == Format::Json {
        return Ok(to_json(report));
    }
    let mut doc = CsvDoc::new(settings, "units", &["quantity", "value"])?;
    let mut put = |k: String, v: f64| doc.row([k, number(v, settings)]);
    put("a0".into(), report.a0)?;
    put("g".into(), report.g)?;
    if let Some(k) = report.kappa {
        put("kappa".into(), k)?;
    }
    if let Some(e) = report.deep_delta_energy {
        put("deep_delta_energy".into(), e)?;
    }
    if let (Some(nu), Some(e)) = (report.nu, report.energy_nu) {
        put("nu".into(), nu)?;
        put("energy_nu".into(), e)?;
    }
    for l in &report.levels {
        put(format!("energy_{}_{}", l.index, l.parity.label()), l.energy)?;
    }
    doc.finish()
}

pub fn run(settings: &Settings, args: &UnitsArgs) -> CliResult<()> {
    let report = report(settings, args)?;
    let text = render(&report, settings)?;
    if let Some(path) = emit(
        settings,
        &format!("units.{}", settings.format.extension()),
        &text,
    )? {
        eprintln!("wrote {}", path.display());
    }
    Ok(())
}
