use crate::error::{Result, TangleError};
use crate::io::{content_lines, parse_preamble, parse_usize};
use crate::model::SwapList;

/// Parses a list file:
///
/// ```text
/// tanglelist 1
/// n 4
/// # i j multiplicity
/// 1 2 1
/// 2 3 2
/// ```
pub fn parse_list(text: &str) -> Result<SwapList> {
    let mut lines = content_lines(text);
    let n = parse_preamble(&mut lines, "tanglelist 1")?;
    let mut list = SwapList::new(n);
    for (line, body) in lines {
        let parts: Vec<&str> = body.split_whitespace().collect();
        if parts.len() != 3 {
            return Err(TangleError::parse(line, format!("expected `i j multiplicity`, got {body:?}")));
        }
        let i = parse_usize(line, parts[0])?;
        let j = parse_usize(line, parts[1])?;
        let m = parse_usize(line, parts[2])?;
        if i == 0 || j == 0 || i > n || j > n {
            return Err(TangleError::parse(line, format!("pair ({i},{j}) out of range 1..={n}")));
        }
        if i == j {
            return Err(TangleError::parse(line, format!("diagonal pair ({i},{j})")));
        }
        if i > j {
            return Err(TangleError::parse(line, format!("pair ({i},{j}) must have i < j")));
        }
        if m == 0 {
            return Err(TangleError::parse(line, "multiplicity must be at least 1"));
        }
        let m = u32::try_from(m).map_err(|_| TangleError::parse(line, "multiplicity too large"))?;
        if list.get(i, j) != 0 {
            return Err(TangleError::parse(line, format!("duplicate pair ({i},{j})")));
        }
        list.set(i, j, m)?;
    }
    Ok(list)
}

/// Canonical list file: entries sorted by `(i, j)`, zeros omitted.
pub fn write_list(list: &SwapList) -> String {
    let mut out = format!("tanglelist 1\nn {}\n", list.n());
    for (i, j, m) in list.entries() {
        out.push_str(&format!("{i} {j} {m}\n"));
    }
    out
}
