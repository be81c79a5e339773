use crate::error::{Result, TangleError};
use crate::io::{content_lines, parse_preamble, parse_usize};
use crate::model::{Permutation, Tangle};

/// A tangle read from a file, with the start permutation it declares.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TangleFile {
    pub tangle: Tangle,
    /// `id_n` unless the file has a `start` line.
    pub start: Permutation,
}

fn parse_sequence(line: usize, toks: &[&str]) -> Result<Permutation> {
    let wires = toks
        .iter()
        .map(|t| parse_usize(line, t))
        .collect::<Result<Vec<_>>>()?;
    Permutation::from_sequence(&wires).map_err(|e| TangleError::parse(line, e.to_string()))
}

/// Parses a tangle file:
///
/// ```text
/// tangle 1
/// n 3
/// 1 2 3
/// 2 1 3
/// ```
///
/// An optional `start s_1 … s_n` line before the layers declares a start
/// permutation other than the identity.
pub fn parse_tangle(text: &str) -> Result<TangleFile> {
    let mut lines = content_lines(text).peekable();
    let n = parse_preamble(&mut lines, "tangle 1")?;
    let mut start = Permutation::identity(n);
    let mut start_line = None;
    if let Some(&(line, body)) = lines.peek() {
        if let Some(rest) = body.strip_prefix("start") {
            let toks: Vec<&str> = rest.split_whitespace().collect();
            if toks.len() != n {
                return Err(TangleError::parse(line, format!("start has {} wires, expected {n}", toks.len())));
            }
            start = parse_sequence(line, &toks)?;
            start_line = Some(line);
            lines.next();
        }
    }
    let mut layers = Vec::new();
    let mut first_line = None;
    for (line, body) in lines {
        let toks: Vec<&str> = body.split_whitespace().collect();
        if toks.len() != n {
            return Err(TangleError::parse(line, format!("layer has {} wires, expected {n}", toks.len())));
        }
        let layer = parse_sequence(line, &toks)?;
        if let Some(prev) = layers.last() {
            if !layer.is_adjacent(prev)? {
                return Err(TangleError::parse(line, "layer is not adjacent to the previous one"));
            }
        }
        first_line.get_or_insert(line);
        layers.push(layer);
    }
    let Some(first_line) = first_line else {
        return Err(TangleError::parse(start_line.unwrap_or(2), "tangle has no layers"));
    };
    if layers[0] != start {
        return Err(TangleError::parse(first_line, format!("first layer must be the start permutation {start}")));
    }
    Ok(TangleFile {
        tangle: Tangle::new(layers)?,
        start,
    })
}

/// Writes `tangle`, adding a `start` line when it does not begin at `id_n`.
pub fn write_tangle(tangle: &Tangle) -> String {
    let join = |p: &Permutation| {
        p.sequence()
            .iter()
            .map(|w| w.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    let mut out = format!("tangle 1\nn {}\n", tangle.n());
    if !tangle.first().is_identity() {
        out.push_str(&format!("start {}\n", join(tangle.first())));
    }
    for layer in tangle.layers() {
        out.push_str(&join(layer));
        out.push('\n');
    }
    out
}
