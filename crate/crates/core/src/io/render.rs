use std::fmt::Write;

use crate::model::Tangle;

const COLUMN: f64 = 40.0;
const ROW: f64 = 40.0;
const MARGIN: f64 = 30.0;
const STUB: f64 = 15.0;
const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf",
];

/// SVG drawing: layers top to bottom as gray bars, one polyline per wire.
pub fn render_svg(tangle: &Tangle) -> String {
    let n = tangle.n();
    let h = tangle.height();
    let width = 2.0 * MARGIN + (n.max(2) - 1) as f64 * COLUMN;
    let height = 2.0 * MARGIN + 2.0 * STUB + (h - 1) as f64 * ROW;
    let x = |p: usize| MARGIN + (p - 1) as f64 * COLUMN;
    let y = |t: usize| MARGIN + STUB + t as f64 * ROW;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(svg, r#"<rect width="{width}" height="{height}" fill="white"/>"#);
    let (left, right) = (x(1) - COLUMN / 4.0, x(n) + COLUMN / 4.0);
    for t in 0..h {
        let _ = writeln!(
            svg,
            r##"<line x1="{left}" y1="{yt}" x2="{right}" y2="{yt}" stroke="#c8c8c8" stroke-width="6"/>"##,
            yt = y(t)
        );
    }
    for w in 1..=n {
        let color = PALETTE[(w - 1) % PALETTE.len()];
        let first = tangle.first().position(w);
        let last = tangle.last().position(w);
        let mut points = format!("{},{}", x(first), y(0) - STUB);
        for (t, layer) in tangle.layers().iter().enumerate() {
            let _ = write!(points, " {},{}", x(layer.position(w)), y(t));
        }
        let _ = write!(points, " {},{}", x(last), y(h - 1) + STUB);
        let _ = writeln!(
            svg,
            r#"<polyline points="{points}" fill="none" stroke="{color}" stroke-width="2"/>"#
        );
        let _ = writeln!(
            svg,
            r#"<text x="{}" y="{}" font-family="sans-serif" font-size="12" text-anchor="middle">{w}</text>"#,
            x(first),
            y(0) - STUB - 5.0
        );
    }
    svg.push_str("</svg>\n");
    svg
}

/// One row per layer; between rows, `X` marks a swap of the two columns
/// around it and `|` a wire that stays put.
pub fn render_ascii(tangle: &Tangle) -> String {
    let n = tangle.n();
    let width = n.to_string().len();
    let cell = width + 1;
    let mut out = String::new();
    for (t, layer) in tangle.layers().iter().enumerate() {
        if t > 0 {
            let prev = &tangle.layers()[t - 1];
            let mut row = vec![b' '; n * cell];
            for p in 1..=n {
                row[(p - 1) * cell + width - 1] = b'|';
            }
            for p in 1..n {
                if prev.wire_at(p) == layer.wire_at(p + 1) && prev.wire_at(p + 1) == layer.wire_at(p) {
                    row[(p - 1) * cell + width - 1] = b' ';
                    row[p * cell + width - 1] = b' ';
                    row[(p - 1) * cell + width] = b'X';
                }
            }
            out.push_str(String::from_utf8(row).expect("ascii").trim_end());
            out.push('\n');
        }
        let labels: Vec<String> = layer
            .sequence()
            .iter()
            .map(|w| format!("{w:>width$}"))
            .collect();
        out.push_str(&labels.join(" "));
        out.push('\n');
    }
    out
}
