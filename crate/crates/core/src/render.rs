//! ASCII and SVG pictures of grids.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::grid::GridDiagram;

type Span = (usize, usize);

fn spans(g: &GridDiagram) -> (Vec<Span>, Vec<Span>) {
    let n = g.grid_number();
    let (x_rows, o_rows) = (g.x_rows(), g.o_rows());
    let rows = (0..n)
        .map(|r| (g.xs()[r].min(g.os()[r]), g.xs()[r].max(g.os()[r])))
        .collect();
    let cols = (0..n)
        .map(|c| (x_rows[c].min(o_rows[c]), x_rows[c].max(o_rows[c])))
        .collect();
    (rows, cols)
}

/// One text line per row, top row first. Markings sit in even character
/// columns; `-` and `|` trace the segments and `+` marks a crossing.
///
/// ```
/// let u = gridknot::generators::generate_unknot(2).unwrap();
/// assert_eq!(gridknot::render::draw_ascii(&u), "X-O\nO-X\n");
/// ```
pub fn draw_ascii(g: &GridDiagram) -> String {
    let n = g.grid_number();
    let (rows, cols) = spans(g);
    let mut out = String::with_capacity(2 * n * n);
    for r in (0..n).rev() {
        let (a, b) = rows[r];
        for c in 0..n {
            let glyph = if c == g.xs()[r] {
                'X'
            } else if c == g.os()[r] {
                'O'
            } else {
                let horiz = a < c && c < b;
                let vert = cols[c].0 < r && r < cols[c].1;
                match (horiz, vert) {
                    (true, true) => '+',
                    (true, false) => '-',
                    (false, true) => '|',
                    (false, false) => ' ',
                }
            };
            out.push(glyph);
            if c + 1 < n {
                out.push(if a <= c && c < b { '-' } else { ' ' });
            }
        }
        out.push('\n');
    }
    out
}

/// SVG with `cell_px` pixels per cell. Horizontal segments (class `h`) are
/// cut around every crossing so the vertical (class `v`) shows as passing
/// over.
pub fn draw_svg(g: &GridDiagram, cell_px: u32) -> Result<String> {
    if cell_px < 4 {
        return Err(Error::InvalidArgument(format!(
            "cell size {cell_px} is below 4 px"
        )));
    }
    let n = g.grid_number();
    let (rows, cols) = spans(g);
    let px = cell_px as f64;
    let size = px * n as f64;
    let cx = |c: usize| (c as f64 + 0.5) * px;
    let cy = |r: usize| (n as f64 - 1.0 - r as f64 + 0.5) * px;
    let gap = px / 4.0;
    let mut s = String::new();
    writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{size}\" height=\"{size}\" viewBox=\"0 0 {size} {size}\">"
    )
    .unwrap();
    writeln!(
        s,
        "<rect width=\"{size}\" height=\"{size}\" fill=\"white\"/>"
    )
    .unwrap();
    s += "<g stroke=\"black\" stroke-width=\"1.5\">\n";
    for r in 0..n {
        let (a, b) = rows[r];
        let mut start = cx(a);
        for c in a + 1..b {
            if cols[c].0 < r && r < cols[c].1 {
                writeln!(
                    s,
                    "<line class=\"h\" x1=\"{start}\" y1=\"{y}\" x2=\"{}\" y2=\"{y}\"/>",
                    cx(c) - gap,
                    y = cy(r)
                )
                .unwrap();
                start = cx(c) + gap;
            }
        }
        writeln!(
            s,
            "<line class=\"h\" x1=\"{start}\" y1=\"{y}\" x2=\"{}\" y2=\"{y}\"/>",
            cx(b),
            y = cy(r)
        )
        .unwrap();
    }
    for (c, &(lo, hi)) in cols.iter().enumerate() {
        writeln!(
            s,
            "<line class=\"v\" x1=\"{x}\" y1=\"{}\" x2=\"{x}\" y2=\"{}\"/>",
            cy(lo),
            cy(hi),
            x = cx(c)
        )
        .unwrap();
    }
    s += "</g>\n";
    let font = px * 0.6;
    for r in 0..n {
        for (c, label) in [(g.xs()[r], 'X'), (g.os()[r], 'O')] {
            writeln!(
                s,
                "<text class=\"marking\" x=\"{}\" y=\"{}\" font-size=\"{font}\" text-anchor=\"middle\" dominant-baseline=\"central\" stroke=\"white\" stroke-width=\"3\" paint-order=\"stroke\">{label}</text>",
                cx(c),
                cy(r)
            )
            .unwrap();
        }
    }
    s += "</svg>\n";
    Ok(s)
}
