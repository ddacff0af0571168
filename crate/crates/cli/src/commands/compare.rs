use deltaho::oracle::{oracle_spectrum, OracleConfig};
use deltaho::spectrum::{full_spectrum, Parity};
use serde::{Deserialize, Serialize};

use crate::args::Format;
use crate::config::Settings;
use crate::error::{CliError, CliResult};
use crate::output::{emit, number, to_json, CsvDoc};
use crate::report::Metadata;

const DEFAULT_STATES: usize = 6;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompareRow {
    pub index: usize,
    pub parity_analytic: Parity,
    pub parity_oracle: Parity,
    pub epsilon_analytic: f64,
    pub epsilon_oracle: f64,
    pub gap: f64,
    /// Gap on the grid with twice the spacing divided by `gap`; about 4
    /// for second-order convergence. Absent when `gap` is zero.
    pub halving_ratio: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompareReport {
    pub g: f64,
    pub half_width: f64,
    pub n_intervals: usize,
    pub rows: Vec<CompareRow>,
    pub max_gap: f64,
    pub parity_match: bool,
    pub metadata: Metadata,
}

pub fn report(settings: &Settings) -> CliResult<CompareReport> {
    let g = settings.coupling()?;
    let n = settings.states_or(DEFAULT_STATES)?;
    let fine = settings.oracle(n)?;
    if fine.n_intervals % 4 != 0 {
        return Err(CliError::Usage(format!(
            "--grid-n must be divisible by 4 for the halving check, got {}",
            fine.n_intervals
        )));
    }
    let coarse = OracleConfig {
        n_intervals: fine.n_intervals / 2,
        ..fine
    };
    let analytic = full_spectrum(g, &settings.solver(n)?)?;
    let run_oracle = |config: OracleConfig| {
        oracle_spectrum(g, &config).map_err(|source| CliError::Oracle { config, source })
    };
    let on_fine = run_oracle(fine)?;
    let on_coarse = run_oracle(coarse)?;
    let rows: Vec<CompareRow> = analytic
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let gap = (a.epsilon - on_fine.epsilons[i]).abs();
            let coarse_gap = (a.epsilon - on_coarse.epsilons[i]).abs();
            CompareRow {
                index: i,
                parity_analytic: a.parity,
                parity_oracle: on_fine.parities[i],
                epsilon_analytic: a.epsilon,
                epsilon_oracle: on_fine.epsilons[i],
                gap,
                halving_ratio: (gap > 0.0).then(|| coarse_gap / gap),
            }
        })
        .collect();
    Ok(CompareReport {
        g: g.value(),
        half_width: fine.half_width,
        n_intervals: fine.n_intervals,
        max_gap: rows.iter().map(|r| r.gap).fold(0.0, f64::max),
        parity_match: rows.iter().all(|r| r.parity_analytic == r.parity_oracle),
        rows,
        metadata: Metadata::new(settings.stamp),
    })
}

pub fn render(report: &CompareReport, settings: &Settings) -> CliResult<String> {
    if settings.format == Format::Json {
        return Ok(to_json(report));
    }
    let mut doc = CsvDoc::new(
        settings,
        "compare",
        &[
            "index",
            "parity_analytic",
            "parity_oracle",
            "epsilon_analytic",
            "epsilon_oracle",
            "gap",
            "halving_ratio",
        ],
    )?;
    doc.comment(format!(
        "oracle half_width={} n_intervals={} max_gap={} parity_match={}",
        report.half_width,
        report.n_intervals,
        number(report.max_gap, settings),
        report.parity_match
    ));
    for r in &report.rows {
        doc.row([
            r.index.to_string(),
            r.parity_analytic.label().to_string(),
            r.parity_oracle.label().to_string(),
            number(r.epsilon_analytic, settings),
            number(r.epsilon_oracle, settings),
            number(r.gap, settings),
            r.halving_ratio.map(|x| number(x, settings)).unwrap_or_default(),
        ])?;
    }
    doc.finish()
}

pub fn run(settings: &Settings) -> CliResult<()> {
    let report = report(settings)?;
    let text = render(&report, settings)?;
    if let Some(path) = emit(
        settings,
        &format!("compare.{}", settings.format.extension()),
        &text,
    )? {
        eprintln!("wrote {}", path.display());
    }
    Ok(())
}
