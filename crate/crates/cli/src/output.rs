//! Number formatting, CSV assembly and atomic file output.

use std::io::Write;
use std::path::{Path, PathBuf};

use crate::config::Settings;
use crate::error::{CliError, CliResult};

/// `x` rounded to `sig` significant digits, in plain notation when the
/// exponent is moderate and scientific otherwise, trailing zeros removed.
pub fn format_sig(x: f64, sig: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.*e}", sig - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= sig as i32 {
        return format!("{}e{}", trim_zeros(mantissa), exp);
    }
    let decimals = (sig as i32 - 1 - exp).max(0) as usize;
    trim_zeros(&format!("{:.*}", decimals, x)).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub fn number(x: f64, settings: &Settings) -> String {
    format_sig(x, if settings.full_precision { 17 } else { 6 })
}

/// CSV document: comment lines followed by an RFC 4180 table.
pub struct CsvDoc {
    comments: Vec<String>,
    writer: csv::Writer<Vec<u8>>,
}

impl CsvDoc {
    pub fn new(settings: &Settings, command: &str, header: &[&str]) -> CliResult<Self> {
        let mut comments = vec![format!(
            "deltaho {} {}",
            env!("CARGO_PKG_VERSION"),
            settings.echo(command)
        )];
        if settings.stamp {
            comments.push(format!("generated {}", timestamp()));
        }
        let mut doc = Self {
            comments,
            writer: csv::Writer::from_writer(Vec::new()),
        };
        doc.row(header.iter().copied())?;
        Ok(doc)
    }

    pub fn comment(&mut self, line: impl Into<String>) {
        self.comments.push(line.into());
    }

    pub fn row<I, S>(&mut self, fields: I) -> CliResult<()>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<[u8]>,
    {
        self.writer
            .write_record(fields)
            .map_err(|e| CliError::Usage(format!("csv: {e}")))
    }

    pub fn finish(self) -> CliResult<String> {
        let body = self
            .writer
            .into_inner()
            .map_err(|e| CliError::Usage(format!("csv: {e}")))?;
        let mut text: String = self.comments.iter().map(|c| format!("# {c}\n")).collect();
        text.push_str(&String::from_utf8(body).expect("csv output is UTF-8"));
        Ok(text)
    }
}

pub fn timestamp() -> String {
    chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true)
}

/// Write `contents` to `path` through a temporary file in the same
/// directory, so readers never see a partial file.
pub fn write_atomic(path: &Path, contents: &str) -> CliResult<()> {
    let dir = path
        .parent()
        .filter(|p| !p.as_os_str().is_empty())
        .unwrap_or(Path::new("."));
    std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| CliError::io(dir, e))?;
    tmp.write_all(contents.as_bytes())
        .map_err(|e| CliError::io(tmp.path(), e))?;
    #[cfg(unix)]
    {
        use std::os::unix::fs::PermissionsExt;
        tmp.as_file()
            .set_permissions(std::fs::Permissions::from_mode(0o644))
            .map_err(|e| CliError::io(tmp.path(), e))?;
    }
    tmp.persist(path).map_err(|e| CliError::io(path, e.error))?;
    Ok(())
}

/// Send `contents` to `<out>/<name>` when an output directory is set, else
/// to stdout. Returns the written path, if any.
pub fn emit(settings: &Settings, name: &str, contents: &str) -> CliResult<Option<PathBuf>> {
    match &settings.out {
        Some(dir) => {
            let path = dir.join(name);
            write_atomic(&path, contents)?;
            Ok(Some(path))
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(contents.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| CliError::io("<stdout>", e))?;
            Ok(None)
        }
    }
}

pub fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable report");
    s.push('\n');
    s
}
