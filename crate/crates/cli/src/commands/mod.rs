pub mod compare;
pub mod figures;
pub mod solve;
pub mod table;
pub mod units;

use crate::args::{Cli, Command};
use crate::config::Settings;
use crate::error::CliResult;

pub fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Solve(a) => solve::run(&Settings::resolve(&a.common)?, a.oracle),
        Command::Table(a) => table::run(&Settings::resolve(&a)?),
        Command::Figures(a) => figures::run(&Settings::resolve(&a.common)?, a.which),
        Command::Compare(a) => compare::run(&Settings::resolve(&a)?),
        Command::Units(a) => units::run(&Settings::resolve(&a.common)?, &a),
    }
}
