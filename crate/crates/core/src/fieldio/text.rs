use std::fmt::Write as _;
use std::path::Path;

use crate::{Error, Result};

/// One parsed data row with its 1-based line number.
pub(crate) struct Row {
    pub line: usize,
    pub values: Vec<f64>,
}

pub(crate) fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Splits a data file into numeric rows of exactly `columns` values.
///
/// A row with `complex_columns` values is reported as a complex-valued
/// export rather than a generic column-count error.
pub(crate) fn parse_rows(
    path: &Path,
    text: &str,
    header: &str,
    columns: usize,
    complex_columns: usize,
) -> Result<Vec<Row>> {
    let err = |line: usize, message: String| Error::Parse {
        path: path.to_path_buf(),
        line,
        message,
    };
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    let first = lines.by_ref().find(|(_, l)| !l.is_empty());
    match first {
        Some((_, l)) if l == header => {}
        Some((n, l)) => return Err(err(n, format!("expected header `{header}`, found `{l}`"))),
        None => return Err(err(1, format!("missing header `{header}`"))),
    }

    let mut rows = Vec::new();
    for (line, l) in lines {
        if l.is_empty() || l.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = l.split_whitespace().collect();
        if tokens.len() == complex_columns {
            return Err(err(
                line,
                "complex-valued fields are not supported (real gauge required)".into(),
            ));
        }
        if tokens.len() != columns {
            return Err(err(
                line,
                format!("expected {columns} columns, found {}", tokens.len()),
            ));
        }
        let mut values = Vec::with_capacity(columns);
        for t in tokens {
            let v: f64 = t
                .parse()
                .map_err(|_| err(line, format!("malformed number `{t}`")))?;
            if !v.is_finite() {
                return Err(err(line, format!("non-finite value `{t}`")));
            }
            values.push(v);
        }
        rows.push(Row { line, values });
    }
    Ok(rows)
}

/// Writes values with the shortest representation that parses back to the
/// same bits.
pub(crate) fn write_row(out: &mut String, values: &[f64]) {
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        let _ = write!(out, "{v:e}");
    }
    out.push('\n');
}
