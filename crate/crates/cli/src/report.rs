use deltaho::spectrum::EigenSolution;
use serde::{Deserialize, Serialize};

use crate::config::Settings;
use crate::output::timestamp;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Metadata {
    pub tool: String,
    pub version: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<String>,
}

impl Metadata {
    pub fn new(stamp: bool) -> Self {
        Self {
            tool: "deltaho".to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp: stamp.then(timestamp),
        }
    }
}

/// Settings that produced a report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub method: String,
    pub root_method: String,
    pub root_tol: f64,
    pub states: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid_n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid_l: Option<f64>,
}

/// Output of `solve`. `residuals[i]` is the jump-condition residual of
/// `states[i]`; odd states satisfy it identically and report 0.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub g: f64,
    pub states: Vec<EigenSolution>,
    pub residuals: Vec<f64>,
    pub config: ConfigEcho,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_gaps: Option<Vec<f64>>,
    pub metadata: Metadata,
}

impl ConfigEcho {
    pub fn new(settings: &Settings, root_tol: f64, states: usize) -> Self {
        Self {
            method: settings.method.clone(),
            root_method: settings.root_method.clone(),
            root_tol,
            states,
            grid_n: settings.grid_n,
            grid_l: settings.grid_l,
        }
    }
}
