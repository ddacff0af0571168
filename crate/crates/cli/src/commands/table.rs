use deltaho::reference::{ReferenceTable, COUPLINGS, LEVELS};
use deltaho::spectrum::{solve_even, Coupling};
use serde::{Deserialize, Serialize};

use crate::args::Format;
use crate::config::Settings;
use crate::error::{CliError, CliResult};
use crate::output::{emit, number, to_json, CsvDoc};
use crate::report::Metadata;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub level: usize,
    pub nu: Vec<f64>,
    pub reference: Vec<f64>,
    pub max_abs_delta: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableReport {
    pub couplings: Vec<f64>,
    pub rows: Vec<TableRow>,
    pub metadata: Metadata,
}

pub fn report(settings: &Settings) -> CliResult<TableReport> {
    let reference = ReferenceTable::load().map_err(CliError::Solver)?;
    let solver = settings.solver(LEVELS)?;
    let columns = COUPLINGS
        .iter()
        .map(|&g| solve_even(Coupling::new(g)?, &solver))
        .collect::<deltaho::Result<Vec<_>>>()?;
    let rows = (0..LEVELS)
        .map(|k| {
            let nu: Vec<f64> = columns.iter().map(|c| c[k].nu).collect();
            let max_abs_delta = nu
                .iter()
                .zip(&reference.rows[k])
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max);
            TableRow {
                level: k,
                nu,
                reference: reference.rows[k].clone(),
                max_abs_delta,
            }
        })
        .collect();
    Ok(TableReport {
        couplings: COUPLINGS.to_vec(),
        rows,
        metadata: Metadata::new(settings.stamp),
    })
}

fn column_name(g: f64) -> String {
    if g == 0.0 {
        "g=0".to_string()
    } else {
        format!("g={g:.2}")
            .trim_end_matches('0')
            .trim_end_matches('.')
            .to_string()
    }
}

pub fn render(report: &TableReport, settings: &Settings) -> CliResult<String> {
    if settings.format == Format::Json {
        return Ok(to_json(report));
    }
    let mut header: Vec<String> = vec!["level".to_string()];
    header.extend(report.couplings.iter().map(|&g| column_name(g)));
    header.push("max_abs_delta".to_string());
    let header_refs: Vec<&str> = header.iter().map(String::as_str).collect();
    let mut doc = CsvDoc::new(settings, "table", &header_refs)?;
    for row in &report.rows {
        let mut fields = vec![row.level.to_string()];
        fields.extend(row.nu.iter().map(|&nu| {
            if settings.full_precision {
                number(nu, settings)
            } else {
                format!("{nu:.4}")
            }
        }));
        fields.push(format!("{:.1e}", row.max_abs_delta));
        doc.row(&fields)?;
    }
    doc.finish()
}

pub fn run(settings: &Settings) -> CliResult<()> {
    let report = report(settings)?;
    let text = render(&report, settings)?;
    if let Some(path) = emit(
        settings,
        &format!("table.{}", settings.format.extension()),
        &text,
    )? {
        eprintln!("wrote {}", path.display());
    }
    Ok(())
}
