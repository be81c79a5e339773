//! Text formats, rendering and CNF export.

mod cnf;
mod listfile;
mod render;
mod tanglefile;

pub use cnf::{export_cnf, Cnf, CnfExport, DEFAULT_MAX_CLAUSES};
pub use listfile::{parse_list, write_list};
pub use render::{render_ascii, render_svg};
pub use tanglefile::{parse_tangle, write_tangle, TangleFile};

/// Meaningful lines of a text file: `(line number, trimmed content)` with
/// blank lines and `#` comments removed.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(k, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((k + 1, line))
    })
}

fn parse_usize(line: usize, tok: &str) -> crate::Result<usize> {
    tok.parse()
        .map_err(|_| crate::TangleError::parse(line, format!("expected a non-negative integer, got {tok:?}")))
}

/// Reads `header` and `n <int>` from the first two content lines.
fn parse_preamble<'a, I>(lines: &mut I, header: &str) -> crate::Result<usize>
where
    I: Iterator<Item = (usize, &'a str)>,
{
    use crate::TangleError;
    let (line, first) = lines
        .next()
        .ok_or_else(|| TangleError::parse(1, format!("missing `{header}` header")))?;
    if first.split_whitespace().collect::<Vec<_>>().join(" ") != header {
        return Err(TangleError::parse(line, format!("expected `{header}`, got {first:?}")));
    }
    let (line, second) = lines
        .next()
        .ok_or_else(|| TangleError::parse(line + 1, "missing `n <wires>` line"))?;
    let parts: Vec<&str> = second.split_whitespace().collect();
    if parts.len() != 2 || parts[0] != "n" {
        return Err(TangleError::parse(line, format!("expected `n <wires>`, got {second:?}")));
    }
    let n = parse_usize(line, parts[1])?;
    if n == 0 {
        return Err(TangleError::parse(line, "wire count must be positive"));
    }
    Ok(n)
}
