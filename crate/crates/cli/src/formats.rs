//! Exact text formats for vectors and matrices.
//!
//! Vectors: a `# n=K` header, then one value per line. Matrices: a
//! `# n=K provenance=P` header, then `n` comma-separated rows. Values are
//! `num/den`, or `num` when the denominator is 1.

use std::fmt::Write as _;
use std::str::FromStr;

use slimbasis::{AdftMatrix, BigRational};

use crate::CliError;

fn parse_header(line: Option<&str>) -> Result<Vec<(String, String)>, CliError> {
    let line = line.ok_or_else(|| CliError::Parse("empty file".into()))?;
    let rest = line
        .trim()
        .strip_prefix('#')
        .ok_or_else(|| CliError::Parse(format!("expected '# n=..' header, got {line:?}")))?;
    Ok(rest
        .split_whitespace()
        .filter_map(|kv| kv.split_once('='))
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .collect())
}

fn header_n(fields: &[(String, String)]) -> Result<usize, CliError> {
    fields
        .iter()
        .find(|(k, _)| k == "n")
        .and_then(|(_, v)| v.parse().ok())
        .ok_or_else(|| CliError::Parse("header lacks n=<int>".into()))
}

fn parse_value(s: &str) -> Result<BigRational, CliError> {
    let s = s.trim();
    BigRational::from_str(s).map_err(|e| CliError::Parse(format!("bad value {s:?}: {e}")))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorFile {
    pub values: Vec<BigRational>,
}

impl VectorFile {
    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("# n={}\n", self.values.len());
        for v in &self.values {
            writeln!(s, "{v}").unwrap();
        }
        s
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let n = header_n(&parse_header(lines.next())?)?;
        let values = lines.map(parse_value).collect::<Result<Vec<_>, _>>()?;
        if values.len() != n {
            return Err(CliError::Parse(format!(
                "header says n={n}, found {} values",
                values.len()
            )));
        }
        Ok(VectorFile { values })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixFile {
    pub provenance: String,
    pub rows: Vec<Vec<BigRational>>,
}

impl MatrixFile {
    pub fn from_adft(m: &AdftMatrix) -> Self {
        let n = m.n() as usize;
        MatrixFile {
            provenance: m.provenance().as_str().to_string(),
            rows: (0..n)
                .map(|k| (0..n).map(|l| m.get(k, l)).collect())
                .collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    /// Everything after the header line.
    pub fn body(&self) -> String {
        let mut s = String::new();
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            s.push_str(&cells.join(","));
            s.push('\n');
        }
        s
    }

    pub fn to_text(&self) -> String {
        format!(
            "# n={} provenance={}\n{}",
            self.n(),
            self.provenance,
            self.body()
        )
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let fields = parse_header(lines.next())?;
        let n = header_n(&fields)?;
        let provenance = fields
            .iter()
            .find(|(k, _)| k == "provenance")
            .map(|(_, v)| v.clone())
            .unwrap_or_default();
        let rows = lines
            .map(|l| l.split(',').map(parse_value).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(CliError::Parse(format!("expected {n} rows of {n} values")));
        }
        Ok(MatrixFile { provenance, rows })
    }
}
