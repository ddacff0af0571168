use deltaho::method::MethodRegistry;
use deltaho::spectrum::{Coupling, EigenSolution, Parity};
use deltaho::wavefunction::jump_check;

use crate::args::Format;
use crate::config::Settings;
use crate::error::CliResult;
use crate::output::{emit, number, to_json, CsvDoc};
use crate::report::{ConfigEcho, Metadata, RunReport};

const DEFAULT_STATES: usize = 5;

pub fn report(settings: &Settings, with_oracle: bool) -> CliResult<RunReport> {
    let g = settings.coupling()?;
    let n = settings.states_or(DEFAULT_STATES)?;
    let solver = settings.solver(n)?;
    let grid = settings.oracle(n)?;
    let registry = MethodRegistry::standard(solver.clone(), grid);
    let method = registry.get(&settings.method)?;
    let states = method.levels(g, n)?;
    let residuals = residuals(&states, g);
    let oracle_gaps = if with_oracle {
        let oracle = registry.get("finite-difference")?.levels(g, n)?;
        Some(
            states
                .iter()
                .zip(&oracle)
                .map(|(a, b)| (a.epsilon - b.epsilon).abs())
                .collect(),
        )
    } else {
        None
    };
    Ok(RunReport {
        g: g.value(),
        states,
        residuals,
        config: ConfigEcho::new(settings, solver.root_tol, n),
        oracle_gaps,
        metadata: Metadata::new(settings.stamp),
    })
}

fn residuals(states: &[EigenSolution], g: Coupling) -> Vec<f64> {
    states
        .iter()
        .map(|s| match s.parity {
            Parity::Even => jump_check(s.nu, g),
            Parity::Odd => 0.0,
        })
        .collect()
}

pub fn render(report: &RunReport, settings: &Settings) -> CliResult<String> {
    if settings.format == Format::Json {
        return Ok(to_json(report));
    }
    let mut header = vec!["index", "parity", "nu", "epsilon", "residual"];
    if report.oracle_gaps.is_some() {
        header.push("oracle_gap");
    }
    let mut doc = CsvDoc::new(settings, "solve", &header)?;
    for (i, s) in report.states.iter().enumerate() {
        let mut row = vec![
            s.index.to_string(),
            s.parity.label().to_string(),
            number(s.nu, settings),
            number(s.epsilon, settings),
            number(report.residuals[i], settings),
        ];
        if let Some(gaps) = &report.oracle_gaps {
            row.push(number(gaps[i], settings));
        }
        doc.row(&row)?;
    }
    doc.finish()
}

pub fn run(settings: &Settings, with_oracle: bool) -> CliResult<()> {
    let report = report(settings, with_oracle)?;
    let text = render(&report, settings)?;
    if let Some(path) = emit(
        settings,
        &format!("spectrum.{}", settings.format.extension()),
        &text,
    )? {
        eprintln!("wrote {}", path.display());
    }
    Ok(())
}
