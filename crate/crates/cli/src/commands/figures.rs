//! Plot data. One CSV per panel:
//!
//! - `eq-solution_g<|g|>.csv`: F̃(ν) on ν ∈ [−15, 9] for ±|g|.
//! - `nu-vs-g.csv`: the five lowest even ν for g ∈ [−5, 5] in steps of 0.1.
//! - `wavefunctions_{a,b,c,d}.csv`: (a) and (b) densities of the even state
//!   between the odd n = 1 and n = 3 levels for g = 1, 2.5, 5, 10 and their
//!   negatives, next to the plain oscillator densities n = 1, 2, 3; (c) the
//!   same even densities on |y| ≤ 1 to show the kink; (d) signed amplitudes
//!   of the g = ±10 even states and their odd neighbours.

use deltaho::spectrum::{eigen_equation, full_spectrum, solve_even, Coupling, EigenSolution, Parity, SolverConfig};
use deltaho::wavefunction::{sample_state, GridFunction, GridSpec};

use crate::args::Figure;
use crate::config::Settings;
use crate::error::{CliError, CliResult};
use crate::output::{format_sig, number, write_atomic, CsvDoc};

pub const EQ_COUPLINGS: [f64; 4] = [0.25, 1.0, 2.5, 5.0];
/// ν runs from −15 to 9 in steps of 1/EQ_PER_UNIT.
const EQ_NU_START: f64 = -15.0;
const EQ_PER_UNIT: f64 = 100.0;
const EQ_SAMPLES: usize = 2400;
const NU_VS_G_LEVELS: usize = 5;
pub const WAVE_COUPLINGS: [f64; 4] = [1.0, 2.5, 5.0, 10.0];
const ZOOM: f64 = 1.0;
const DEFAULT_GRID_L: f64 = 10.0;
const DEFAULT_GRID_N: usize = 2000;

pub fn run(settings: &Settings, which: Figure) -> CliResult<()> {
    let dir = settings
        .out
        .clone()
        .ok_or_else(|| CliError::Usage("figures needs --out <dir>".to_string()))?;
    let mut files: Vec<(String, String)> = Vec::new();
    if matches!(which, Figure::EqSolution | Figure::All) {
        files.extend(eq_solution(settings)?);
    }
    if matches!(which, Figure::NuVsG | Figure::All) {
        files.push(("nu-vs-g.csv".to_string(), nu_vs_g(settings)?));
    }
    if matches!(which, Figure::Wavefunctions | Figure::All) {
        files.extend(wavefunctions(settings)?);
    }
    for (name, text) in files {
        let path = dir.join(name);
        write_atomic(&path, &text)?;
        eprintln!("wrote {}", path.display());
    }
    Ok(())
}

fn label(g: f64) -> String {
    format_sig(g, 6)
}

pub fn eq_solution(settings: &Settings) -> CliResult<Vec<(String, String)>> {
    EQ_COUPLINGS
        .iter()
        .map(|&abs_g| {
            let name = format!("eq-solution_g{}.csv", label(abs_g));
            let cols = [format!("ftilde_g={}", label(-abs_g)), format!("ftilde_g={}", label(abs_g))];
            let mut doc = CsvDoc::new(settings, "figures eq-solution", &["nu", &cols[0], &cols[1]])?;
            let (neg, pos) = (Coupling::new(-abs_g)?, Coupling::new(abs_g)?);
            for i in 0..=EQ_SAMPLES {
                let nu = (EQ_NU_START * EQ_PER_UNIT + i as f64) / EQ_PER_UNIT;
                doc.row([
                    number(nu, settings),
                    number(eigen_equation(nu, neg), settings),
                    number(eigen_equation(nu, pos), settings),
                ])?;
            }
            Ok((name, doc.finish()?))
        })
        .collect()
}

pub fn nu_vs_g(settings: &Settings) -> CliResult<String> {
    let solver = settings.solver(NU_VS_G_LEVELS)?;
    let header: Vec<String> = std::iter::once("g".to_string())
        .chain((0..NU_VS_G_LEVELS).map(|k| format!("nu_{k}")))
        .collect();
    let refs: Vec<&str> = header.iter().map(String::as_str).collect();
    let mut doc = CsvDoc::new(settings, "figures nu-vs-g", &refs)?;
    for i in 0..=100 {
        let g = (i as f64 - 50.0) / 10.0;
        let levels = solve_even(Coupling::new(g)?, &solver)?;
        let mut row = vec![number(g, settings)];
        row.extend(levels.iter().map(|s| number(s.nu, settings)));
        doc.row(&row)?;
    }
    doc.finish()
}

/// The even state lying between the odd n = 1 and n = 3 levels.
fn middle_even_state(g: f64, solver: &SolverConfig) -> CliResult<EigenSolution> {
    let levels = full_spectrum(Coupling::new(g)?, &SolverConfig { n_states: 4, ..solver.clone() })?;
    let s = levels[2];
    debug_assert_eq!(s.parity, Parity::Even);
    Ok(s)
}

fn grid(settings: &Settings) -> CliResult<GridSpec> {
    let n = settings.grid_n.unwrap_or(DEFAULT_GRID_N);
    if !n.is_multiple_of(2) {
        return Err(CliError::Usage(format!("--grid-n must be even, got {n}")));
    }
    Ok(GridSpec::new(settings.grid_l.unwrap_or(DEFAULT_GRID_L), n + 1)?)
}

fn density(f: &GridFunction, i: usize) -> f64 {
    f.values[i] * f.values[i]
}

pub fn wavefunctions(settings: &Settings) -> CliResult<Vec<(String, String)>> {
    let grid = grid(settings)?;
    let solver = settings.solver(4)?;
    let oscillator: Vec<GridFunction> = [(Parity::Odd, 1), (Parity::Even, 2), (Parity::Odd, 3)]
        .iter()
        .map(|&(p, n)| sample_state(&EigenSolution::new(p, n as f64, n), &grid))
        .collect::<deltaho::Result<_>>()?;
    let sampled = |sign: f64| -> CliResult<Vec<GridFunction>> {
        WAVE_COUPLINGS
            .iter()
            .map(|&g| Ok(sample_state(&middle_even_state(sign * g, &solver)?, &grid)?))
            .collect()
    };
    let positive = sampled(1.0)?;
    let negative = sampled(-1.0)?;
    let ys = grid.coordinates();

    let mut out = Vec::new();
    for (panel, sign, states) in [("a", 1.0, &positive), ("b", -1.0, &negative)] {
        let mut header = vec!["y".to_string(), "ho_n1".into(), "ho_n2".into(), "ho_n3".into()];
        header.extend(WAVE_COUPLINGS.iter().map(|g| format!("g={}", label(sign * g))));
        let refs: Vec<&str> = header.iter().map(String::as_str).collect();
        let mut doc = CsvDoc::new(settings, &format!("figures wavefunctions {panel}"), &refs)?;
        doc.comment("columns after y are |psi|^2 with unit L2 norm");
        for (i, &y) in ys.iter().enumerate() {
            let mut row = vec![number(y, settings)];
            row.extend(oscillator.iter().chain(states.iter()).map(|f| number(density(f, i), settings)));
            doc.row(&row)?;
        }
        out.push((format!("wavefunctions_{panel}.csv"), doc.finish()?));
    }

    let mut header = vec!["y".to_string()];
    header.extend(WAVE_COUPLINGS.iter().map(|g| format!("g={}", label(*g))));
    header.extend(WAVE_COUPLINGS.iter().map(|g| format!("g={}", label(-g))));
    let refs: Vec<&str> = header.iter().map(String::as_str).collect();
    let mut doc = CsvDoc::new(settings, "figures wavefunctions c", &refs)?;
    doc.comment("columns after y are |psi|^2 with unit L2 norm");
    for (i, &y) in ys.iter().enumerate().filter(|(_, y)| y.abs() <= ZOOM + 1e-12) {
        let mut row = vec![number(y, settings)];
        row.extend(positive.iter().chain(negative.iter()).map(|f| number(density(f, i), settings)));
        doc.row(&row)?;
    }
    out.push(("wavefunctions_c.csv".to_string(), doc.finish()?));

    let strongest = WAVE_COUPLINGS[WAVE_COUPLINGS.len() - 1];
    let mut doc = CsvDoc::new(
        settings,
        "figures wavefunctions d",
        &[
            "y",
            &format!("psi_g={}", label(strongest)),
            "psi_ho_n3",
            &format!("psi_g={}", label(-strongest)),
            "psi_ho_n1",
        ],
    )?;
    doc.comment("signed amplitudes with unit L2 norm, positive just right of y = 0");
    let cols = [
        &positive[positive.len() - 1],
        &oscillator[2],
        &negative[negative.len() - 1],
        &oscillator[0],
    ];
    for (i, &y) in ys.iter().enumerate() {
        let mut row = vec![number(y, settings)];
        row.extend(cols.iter().map(|f| number(f.values[i], settings)));
        doc.row(&row)?;
    }
    out.push(("wavefunctions_d.csv".to_string(), doc.finish()?));
    Ok(out)
}
