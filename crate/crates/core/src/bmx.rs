//! The `bmx` matrix file format.
//!
//! ```text
//! bmx 1
//! <r> <n>
//! <r lines of n characters in {0,1}>
//! ```
//!
//! Columns are elements `1..n` in order. Lines starting with `#` may appear
//! anywhere after the first line. A comment of the form `# labels: 3 1 7`
//! assigns explicit labels to the columns instead.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::gf2::BitMatrix;
use crate::matroid::{Label, Matroid};

const MAGIC: &str = "bmx 1";

pub fn parse(text: &str) -> Result<Matroid> {
    let mut lines = text.lines();
    if lines.next().map(str::trim_end) != Some(MAGIC) {
        return Err(Error::Parse(format!("first line must be `{MAGIC}`")));
    }
    let mut labels: Option<Vec<Label>> = None;
    let mut body = Vec::new();
    for line in lines {
        let line = line.trim();
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(list) = comment.trim().strip_prefix("labels:") {
                let parsed = list
                    .split_whitespace()
                    .map(|t| t.parse::<Label>().map_err(|_| Error::Parse(format!("bad label `{t}`"))))
                    .collect::<Result<Vec<_>>>()?;
                labels = Some(parsed);
            }
            continue;
        }
        if !line.is_empty() {
            body.push(line);
        }
    }
    let (header, rows) = body
        .split_first()
        .ok_or_else(|| Error::Parse("missing `<r> <n>` line".into()))?;
    let dims: Vec<usize> = header
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad dimension `{t}`"))))
        .collect::<Result<_>>()?;
    let [r, n] = dims[..] else {
        return Err(Error::Parse("dimension line must be `<r> <n>`".into()));
    };
    if rows.len() != r {
        return Err(Error::Parse(format!("expected {r} rows, found {}", rows.len())));
    }
    if let Some(bad) = rows.iter().find(|row| row.len() != n || !row.bytes().all(|b| b == b'0' || b == b'1')) {
        return Err(Error::Parse(format!("row `{bad}` is not {n} characters of 0/1")));
    }
    let matrix = if r == 0 { BitMatrix::zeros(0, n) } else { BitMatrix::from_rows(rows)? };
    Matroid::new(&matrix, labels)
}

/// Writes the standard-form matrix with columns in ascending label order.
/// Labels other than `1..n` are recorded in a `# labels:` comment.
pub fn write(m: &Matroid) -> String {
    let mut order: Vec<usize> = (0..m.size()).collect();
    order.sort_by_key(|&p| m.label_at(p));
    let full = m.matrix();
    let mut out = format!("{MAGIC}\n");
    let sorted: Vec<Label> = order.iter().map(|&p| m.label_at(p)).collect();
    if sorted != (1..=m.size() as Label).collect::<Vec<_>>() {
        let list: Vec<String> = sorted.iter().map(|l| l.to_string()).collect();
        writeln!(out, "# labels: {}", list.join(" ")).unwrap();
    }
    writeln!(out, "{} {}", m.rank(), m.size()).unwrap();
    for i in 0..m.rank() {
        let row: String = order.iter().map(|&p| if full.get(i, p) { '1' } else { '0' }).collect();
        writeln!(out, "{row}").unwrap();
    }
    out
}
