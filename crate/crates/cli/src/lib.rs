//! Command-line front end: `deltaho solve|table|figures|compare|units`.

pub mod args;
pub mod commands;
pub mod config;
pub mod error;
pub mod output;
pub mod report;
