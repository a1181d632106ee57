//! Text format for Cayley tables.
//!
//! ```text
//! cayley v1 4
//! e a a^2 a^3
//! 0 1 2 3
//! 1 2 3 0
//! 2 3 0 1
//! 3 0 1 2
//! generators: a
//! ```
//!
//! Row `x`, column `y` holds the index of `x·y`. The generators line is
//! optional.

use std::fmt::Write as _;

use sqcomm_core::{CayleyGroup, ElementId, GroupError};

#[derive(Debug, thiserror::Error)]
pub enum CayleyFileError {
    #[error("line {line}: {msg}")]
    Format { line: usize, msg: String },
    #[error("table is not a group: {0}")]
    Group(#[from] GroupError),
}

fn format_err(line: usize, msg: impl Into<String>) -> CayleyFileError {
    CayleyFileError::Format { line, msg: msg.into() }
}

pub fn write(group: &CayleyGroup) -> String {
    let n = group.order();
    let mut out = format!("cayley v1 {n}\n{}\n", group.labels().join(" "));
    for x in group.elements() {
        let row: Vec<String> = group.elements().map(|y| group.mul(x, y).index().to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    if !group.generators().is_empty() {
        let gens: Vec<&str> = group.generators().iter().map(|&g| group.label(g)).collect();
        let _ = writeln!(out, "generators: {}", gens.join(" "));
    }
    out
}

pub fn read(text: &str) -> Result<CayleyGroup, CayleyFileError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());

    let (line, header) = lines.next().ok_or_else(|| format_err(1, "empty file"))?;
    let order: usize = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["cayley", "v1", n] => n.parse().map_err(|_| format_err(line, format!("bad order {n:?}")))?,
        _ => return Err(format_err(line, "expected header \"cayley v1 <order>\"")),
    };
    if order == 0 {
        return Err(format_err(line, "order must be positive"));
    }

    let (line, labels) = lines.next().ok_or_else(|| format_err(line + 1, "missing labels line"))?;
    let labels: Vec<String> = labels.split_whitespace().map(String::from).collect();
    if labels.len() != order {
        return Err(format_err(line, format!("expected {order} labels, found {}", labels.len())));
    }

    let mut table = Vec::with_capacity(order);
    let mut last = line;
    for _ in 0..order {
        let (line, row) = lines.next().ok_or_else(|| format_err(last + 1, "table ends early"))?;
        last = line;
        let row: Vec<usize> = row
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| format_err(line, format!("bad entry {t:?}"))))
            .collect::<Result<_, _>>()?;
        if row.len() != order {
            return Err(format_err(line, format!("expected {order} entries, found {}", row.len())));
        }
        if let Some(bad) = row.iter().find(|&&e| e >= order) {
            return Err(format_err(line, format!("entry {bad} out of range")));
        }
        table.push(row);
    }

    let mut generators = Vec::new();
    if let Some((line, rest)) = lines.next() {
        let names = rest
            .strip_prefix("generators:")
            .ok_or_else(|| format_err(line, "expected \"generators:\" or end of file"))?;
        for name in names.split_whitespace() {
            let index = labels
                .iter()
                .position(|l| l == name)
                .ok_or_else(|| format_err(line, format!("unknown generator label {name:?}")))?;
            generators.push(ElementId::new(index));
        }
        if let Some((line, _)) = lines.next() {
            return Err(format_err(line, "trailing content"));
        }
    }
    Ok(CayleyGroup::from_table(&table, labels, generators)?)
}
