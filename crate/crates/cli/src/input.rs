//! Matrix ingestion: built-in names, the plain text format and `{"rows": ...}` documents.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde_json::Value;
use sha2::{Digest, Sha256};

use toric_core::exactlin::IntMatrix;
use toric_core::named;

use crate::error::{CliError, CliResult};

/// A parsed matrix together with where it came from.
#[derive(Clone, Debug)]
pub struct MatrixInput {
    pub source: String,
    pub matrix: IntMatrix,
}

impl MatrixInput {
    pub fn load(arg: &str) -> CliResult<Self> {
        let matrix = if let Some(name) = arg.strip_prefix('@') {
            named_matrix(name)?
        } else {
            let text = std::fs::read_to_string(arg).map_err(|source| CliError::Io { path: arg.to_string(), source })?;
            parse_matrix(arg, &text)?
        };
        Ok(MatrixInput { source: arg.to_string(), matrix })
    }

    /// SHA-256 of the canonical text form.
    pub fn digest(&self) -> String {
        let hash = Sha256::digest(canonical_text(&self.matrix).as_bytes());
        hash.iter().fold(String::with_capacity(64), |mut s, b| {
            let _ = write!(s, "{b:02x}");
            s
        })
    }
}

/// `r n` on the first line, then one line per row.
pub fn canonical_text(m: &IntMatrix) -> String {
    let mut out = format!("{} {}\n", m.rows(), m.cols());
    out.push_str(&m.to_string());
    out
}

pub fn named_matrix(name: &str) -> CliResult<IntMatrix> {
    match name {
        "A" => return Ok(named::three_lines()),
        "N" => return Ok(named::quadruple()),
        "Nprime" => return Ok(named::quadruple_prime()),
        "Nsecond" => return Ok(named::quadruple_unimodular()),
        _ => {}
    }
    let unknown = || CliError::Usage(format!("unknown matrix @{name}; expected @A, @A(n,a), @N, @Nprime or @Nsecond"));
    let args = name.strip_prefix("A(").and_then(|s| s.strip_suffix(')')).ok_or_else(unknown)?;
    let parts: Vec<&str> = args.split(',').map(str::trim).collect();
    let [n, a] = parts.as_slice() else { return Err(unknown()) };
    let n: i64 = n.parse().map_err(|_| unknown())?;
    let a: i64 = a.parse().map_err(|_| unknown())?;
    if n < 1 {
        return Err(CliError::Usage(format!("@A(n,a) needs n >= 1, got {n}")));
    }
    Ok(named::three_lines_twisted(n, a))
}

pub fn parse_matrix(source: &str, text: &str) -> CliResult<IntMatrix> {
    if text.trim_start().starts_with('{') {
        parse_json(source, text)
    } else {
        parse_text(source, text)
    }
}

fn parse_text(source: &str, text: &str) -> CliResult<IntMatrix> {
    let err = |line: usize, message: String| CliError::Parse { source_name: source.to_string(), line, message };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let last_line = text.lines().count().max(1);
    let (hline, header) = lines.next().ok_or_else(|| err(last_line, "missing header \"r n\"".into()))?;
    let dims: Vec<&str> = header.split_whitespace().collect();
    let [r, n] = dims.as_slice() else {
        return Err(err(hline, format!("header must be \"r n\", found {header:?}")));
    };
    let r: usize = r.parse().map_err(|_| err(hline, format!("invalid row count {r:?}")))?;
    let n: usize = n.parse().map_err(|_| err(hline, format!("invalid column count {n:?}")))?;
    if r == 0 {
        return Err(err(hline, "a matrix needs at least one row".into()));
    }
    let mut rows = Vec::with_capacity(r);
    if n == 0 {
        // rows without entries are blank lines
        rows.resize(r, Vec::new());
    }
    for k in rows.len()..r {
        let (lno, line) = lines.next().ok_or_else(|| err(last_line, format!("expected {r} rows, found {k}")))?;
        let row = line
            .split_whitespace()
            .map(|t| t.parse::<BigInt>().map_err(|_| err(lno, format!("not an integer: {t:?}"))))
            .collect::<CliResult<Vec<_>>>()?;
        if row.len() != n {
            return Err(err(lno, format!("expected {n} entries, found {}", row.len())));
        }
        rows.push(row);
    }
    if let Some((lno, _)) = lines.next() {
        return Err(err(lno, format!("unexpected content after {r} rows")));
    }
    Ok(IntMatrix::from_rows(n, &rows)?)
}

fn parse_json(source: &str, text: &str) -> CliResult<IntMatrix> {
    let err = |line: usize, message: String| CliError::Parse { source_name: source.to_string(), line, message };
    let value: Value = serde_json::from_str(text).map_err(|e| err(e.line(), e.to_string()))?;
    let rows = value.get("rows").and_then(Value::as_array).ok_or_else(|| err(1, "expected {\"rows\": [[...]]}".into()))?;
    if rows.is_empty() {
        return Err(err(1, "a matrix needs at least one row".into()));
    }
    let mut out = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let entries = row.as_array().ok_or_else(|| err(1, format!("row {} is not an array", i + 1)))?;
        let parsed = entries
            .iter()
            .map(|e| match e {
                Value::Number(x) if x.is_i64() || x.is_u64() => Ok(x.to_string().parse::<BigInt>().expect("integer")),
                Value::String(s) => s.parse::<BigInt>().map_err(|_| err(1, format!("not an integer: {s:?}"))),
                other => Err(err(1, format!("not an integer: {other}"))),
            })
            .collect::<CliResult<Vec<_>>>()?;
        out.push(parsed);
    }
    let n = out[0].len();
    if let Some(i) = out.iter().position(|r| r.len() != n) {
        return Err(err(1, format!("row {} has {} entries, row 1 has {n}", i + 1, out[i].len())));
    }
    Ok(IntMatrix::from_rows(n, &out)?)
}
