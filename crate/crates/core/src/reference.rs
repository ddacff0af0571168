//! Published even-parity levels used as a regression fixture.

use crate::error::{Error, Result};

const TABLE: &str = include_str!("../fixtures/table1.csv");

/// Column couplings in fixture order. The first column is the g = 0 limit.
pub const COUPLINGS: [f64; 9] = [0.0, -0.25, 0.25, -1.0, 1.0, -2.5, 2.5, -5.0, 5.0];

pub const LEVELS: usize = 5;

/// Rounding step of the tabulated values.
pub const TABLE_RESOLUTION: f64 = 1e-4;

/// Fixture values: `rows[level][column]`, columns ordered as [`COUPLINGS`].
#[derive(Debug, Clone, PartialEq)]
pub struct ReferenceTable {
    pub rows: Vec<Vec<f64>>,
}

impl ReferenceTable {
    pub fn load() -> Result<Self> {
        Self::parse(TABLE)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::InvalidInput("reference table is empty".into()))?;
        if header.split(',').count() != COUPLINGS.len() + 1 {
            return Err(Error::InvalidInput(format!("bad reference header: {header}")));
        }
        let mut rows = Vec::with_capacity(LEVELS);
        for (k, line) in lines.enumerate() {
            let mut fields = line.split(',');
            let level: usize = fields
                .next()
                .and_then(|f| f.parse().ok())
                .ok_or_else(|| Error::InvalidInput(format!("bad level label in: {line}")))?;
            if level != k {
                return Err(Error::InvalidInput(format!("expected level {k}, got {level}")));
            }
            let row = fields
                .map(|f| {
                    f.parse::<f64>()
                        .map_err(|_| Error::InvalidInput(format!("bad value {f:?} in: {line}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if row.len() != COUPLINGS.len() {
                return Err(Error::InvalidInput(format!("wrong column count in: {line}")));
            }
            rows.push(row);
        }
        if rows.len() != LEVELS {
            return Err(Error::InvalidInput(format!(
                "expected {LEVELS} levels, got {}",
                rows.len()
            )));
        }
        Ok(Self { rows })
    }

    /// Tabulated ν for a coupling present in [`COUPLINGS`].
    pub fn column(&self, g: f64) -> Option<Vec<f64>> {
        let c = COUPLINGS.iter().position(|&x| x == g)?;
        Some(self.rows.iter().map(|r| r[c]).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loads_fixture() {
        let t = ReferenceTable::load().unwrap();
        assert_eq!(t.rows.len(), 5);
        assert_eq!(t.column(0.25).unwrap()[0], 0.1281);
        assert_eq!(t.column(-1.0).unwrap()[2], 3.7912);
        assert_eq!(t.column(5.0).unwrap()[4], 8.5509);
        assert_eq!(t.column(-5.0).unwrap()[0], -12.99);
        assert_eq!(t.column(0.0).unwrap(), vec![0.0, 2.0, 4.0, 6.0, 8.0]);
        assert!(t.column(3.0).is_none());
    }

    #[test]
    fn rejects_malformed() {
        assert!(ReferenceTable::parse("").is_err());
        assert!(ReferenceTable::parse("level,a\n0,1").is_err());
        let short = TABLE.lines().take(4).collect::<Vec<_>>().join("\n");
        assert!(ReferenceTable::parse(&short).is_err());
        let bad = TABLE.replace("0.3927", "x");
        assert!(ReferenceTable::parse(&bad).is_err());
    }
}
