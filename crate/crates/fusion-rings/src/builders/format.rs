//! Reading and writing fusion data.
//!
//! Structured format (canonical, JSON):
//!
//! ```text
//! {
//!   "name": "Ising",
//!   "rank": 3,
//!   "involution": [0, 1, 2],
//!   "tensor": [
//!     [
//!       [1, 0, 0],
//!       ...
//!     ],
//!     ...
//!   ]
//! }
//! ```
//!
//! `tensor[i][j][k]` is the coefficient of `x_k` in `x_i x_j`. An entry is a JSON
//! integer, a string `"p/q"` for an exact rational, or a JSON number with a
//! fraction or exponent for a float. Indices are 0-based and index 0 is the unit.
//!
//! Text format: `m` blank-line-separated `m × m` matrices of whitespace-delimited
//! integers (or `p/q` rationals), matrix `i` row `j` column `k` holding `N_{ij}^k`.
//! Lines starting with `#` are comments. The involution is read off the unit
//! coefficients.

use serde_json::Value;

use crate::error::{Error, Result};
use crate::hypergroup::{infer_involution, FusionData};
use crate::scalar::{Scalar, ScalarKind};

fn perr(line: usize, col: usize, reason: impl Into<String>) -> Error {
    Error::Parse { line, col, reason: reason.into() }
}

/// Dispatches on the first non-blank character: `{` selects the structured format.
pub fn parse(text: &str, default_name: &str) -> Result<FusionData> {
    if text.trim_start().starts_with('{') {
        parse_structured(text)
    } else {
        parse_text(text, default_name)
    }
}

pub fn parse_structured(text: &str) -> Result<FusionData> {
    let v: Value = serde_json::from_str(text).map_err(|e| perr(e.line(), e.column(), e.to_string()))?;
    let obj = v.as_object().ok_or_else(|| perr(1, 1, "top level must be an object"))?;
    let name = obj.get("name").and_then(Value::as_str).unwrap_or("unnamed").to_string();
    let rank = obj
        .get("rank")
        .and_then(Value::as_u64)
        .ok_or_else(|| perr(1, 1, "missing or invalid \"rank\""))? as usize;
    let involution: Vec<usize> = obj
        .get("involution")
        .and_then(Value::as_array)
        .ok_or_else(|| perr(1, 1, "missing \"involution\""))?
        .iter()
        .map(|x| x.as_u64().map(|u| u as usize).ok_or_else(|| perr(1, 1, "involution entries must be indices")))
        .collect::<Result<_>>()?;
    if involution.len() != rank {
        return Err(Error::DimensionMismatch { expected: rank, found: involution.len() });
    }
    let tensor = obj.get("tensor").and_then(Value::as_array).ok_or_else(|| perr(1, 1, "missing \"tensor\""))?;
    if tensor.len() != rank {
        return Err(Error::DimensionMismatch { expected: rank, found: tensor.len() });
    }
    let mut entries = Vec::with_capacity(rank * rank * rank);
    for (i, mat) in tensor.iter().enumerate() {
        let rows = mat.as_array().ok_or_else(|| perr(1, 1, format!("tensor[{i}] is not a matrix")))?;
        if rows.len() != rank {
            return Err(Error::DimensionMismatch { expected: rank, found: rows.len() });
        }
        for (j, row) in rows.iter().enumerate() {
            let cells = row.as_array().ok_or_else(|| perr(1, 1, format!("tensor[{i}][{j}] is not a row")))?;
            if cells.len() != rank {
                return Err(Error::DimensionMismatch { expected: rank, found: cells.len() });
            }
            for (k, c) in cells.iter().enumerate() {
                entries.push(value_to_scalar(c).ok_or_else(|| perr(1, 1, format!("bad entry tensor[{i}][{j}][{k}]")))?);
            }
        }
    }
    FusionData::new(name, involution, entries)
}

fn value_to_scalar(v: &Value) -> Option<Scalar> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Some(Scalar::int(i))
            } else {
                n.as_f64().and_then(Scalar::float)
            }
        }
        Value::String(s) => {
            let s: Scalar = s.parse().ok()?;
            s.is_exact().then_some(s)
        }
        _ => None,
    }
}

pub fn parse_text(text: &str, name: &str) -> Result<FusionData> {
    let mut blocks: Vec<Vec<(usize, Vec<Scalar>)>> = vec![Vec::new()];
    for (ln, raw) in text.lines().enumerate() {
        let line_no = ln + 1;
        let line = raw.trim();
        if line.starts_with('#') {
            continue;
        }
        if line.is_empty() {
            if !blocks.last().unwrap().is_empty() {
                blocks.push(Vec::new());
            }
            continue;
        }
        let mut row = Vec::new();
        let mut col = 1;
        for tok in raw.split_whitespace() {
            let at = raw[col - 1..].find(tok).map_or(col, |p| col + p);
            let s: Scalar = tok.parse().map_err(|e: String| perr(line_no, at, e))?;
            if !s.is_exact() {
                return Err(perr(line_no, at, "text format holds exact entries only"));
            }
            row.push(s);
            col = at + tok.len();
        }
        blocks.last_mut().unwrap().push((line_no, row));
    }
    let blocks: Vec<_> = blocks.into_iter().filter(|b| !b.is_empty()).collect();
    let m = blocks.len();
    if m == 0 {
        return Err(perr(1, 1, "no matrices found"));
    }
    let mut entries = Vec::with_capacity(m * m * m);
    for block in &blocks {
        if block.len() != m {
            return Err(perr(block[0].0, 1, format!("matrix has {} rows, expected {m}", block.len())));
        }
        for (line_no, row) in block {
            if row.len() != m {
                return Err(perr(*line_no, 1, format!("row has {} entries, expected {m}", row.len())));
            }
            entries.extend(row.iter().cloned());
        }
    }
    let involution = infer_involution(m, |i, j| !entries[(i * m + j) * m].is_zero())?;
    FusionData::new(name, involution, entries)
}

fn entry_json(s: &Scalar) -> String {
    match s {
        Scalar::Int(n) => n.to_string(),
        Scalar::Rational(r) => format!("\"{}/{}\"", r.numer(), r.denom()),
        Scalar::Float(v) => format!("{v:?}"),
    }
}

/// Canonical structured form; byte-identical for equal data.
pub fn serialize(data: &FusionData) -> String {
    let m = data.rank();
    let mut out = String::new();
    out.push_str("{\n");
    out.push_str(&format!("  \"name\": {},\n", serde_json::to_string(data.name()).unwrap()));
    out.push_str(&format!("  \"rank\": {m},\n"));
    let inv: Vec<String> = data.involution().iter().map(usize::to_string).collect();
    out.push_str(&format!("  \"involution\": [{}],\n", inv.join(", ")));
    out.push_str("  \"tensor\": [\n");
    for i in 0..m {
        out.push_str("    [\n");
        for j in 0..m {
            let row: Vec<String> = (0..m).map(|k| entry_json(data.entry(i, j, k))).collect();
            let sep = if j + 1 < m { "," } else { "" };
            out.push_str(&format!("      [{}]{sep}\n", row.join(", ")));
        }
        out.push_str(if i + 1 < m { "    ],\n" } else { "    ]\n" });
    }
    out.push_str("  ]\n}\n");
    out
}

/// Paper-style text form; only for exact data.
pub fn serialize_text(data: &FusionData) -> Option<String> {
    if data.kind() == ScalarKind::Float {
        return None;
    }
    let m = data.rank();
    let mut out = format!("# {}\n", data.name());
    for i in 0..m {
        if i > 0 {
            out.push('\n');
        }
        for j in 0..m {
            let row: Vec<String> = (0..m).map(|k| data.entry(i, j, k).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
    }
    Some(out)
}
