//! Static SVG rendering of a two-layer drawing.
//!
//! X vertices sit on the upper line and Y vertices on the lower one, both
//! ordered by rank and centred horizontally. Edges are straight segments.
//! Output is a pure function of the drawing, so identical inputs give
//! identical bytes.

use std::fmt::Write as _;
use std::io;
use std::path::Path;

use bicross_core::{Drawing, Side};

const SPACING: u32 = 60;
const MARGIN: u32 = 40;
const TOP: u32 = 40;
const BOTTOM: u32 = 160;
const RADIUS: u32 = 6;

/// Horizontal position of rank `r` on a layer with `n` vertices, doubled so
/// that centring offsets stay integral.
fn x2(r: usize, n: usize, widest: usize) -> u32 {
    let offset = (widest - n) as u32 * SPACING;
    2 * MARGIN + offset + 2 * r as u32 * SPACING
}

fn coord(v2: u32) -> String {
    if v2.is_multiple_of(2) {
        (v2 / 2).to_string()
    } else {
        format!("{}.5", v2 / 2)
    }
}

pub fn render_svg(d: &Drawing) -> String {
    let g = d.graph();
    let (nx, ny) = (g.x_count(), g.y_count());
    let widest = nx.max(ny).max(1);
    let width = 2 * MARGIN + (widest as u32 - 1) * SPACING;
    let height = BOTTOM + 50;
    let px = |v: usize| x2(d.fx().rank(v), nx, widest);
    let py = |v: usize| x2(d.fy().rank(v), ny, widest);

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(
        s,
        r#"<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>"#
    );

    let _ = writeln!(s, r#"<g stroke="black" stroke-width="1.5">"#);
    for e in g.edges() {
        let _ = writeln!(
            s,
            r#"<line x1="{}" y1="{TOP}" x2="{}" y2="{BOTTOM}"/>"#,
            coord(px(e.x)),
            coord(py(e.y))
        );
    }
    let _ = writeln!(s, "</g>");

    let _ = writeln!(
        s,
        r#"<g font-family="sans-serif" font-size="11" fill="firebrick" text-anchor="middle">"#
    );
    for e in g.edges().iter().filter(|e| e.weight > 1) {
        let mid = (px(e.x) + py(e.y)) / 2;
        let _ = writeln!(
            s,
            r#"<text class="weight" x="{}" y="{}">{}</text>"#,
            coord(mid),
            (TOP + BOTTOM) / 2 - 4,
            e.weight
        );
    }
    let _ = writeln!(s, "</g>");

    let _ = writeln!(
        s,
        r#"<g font-family="sans-serif" font-size="12" text-anchor="middle">"#
    );
    for (side, n, y, label_y) in [
        (Side::X, nx, TOP, TOP - 12),
        (Side::Y, ny, BOTTOM, BOTTOM + 22),
    ] {
        for v in 0..n {
            let cx = coord(match side {
                Side::X => px(v),
                Side::Y => py(v),
            });
            let _ = writeln!(
                s,
                r#"<circle cx="{cx}" cy="{y}" r="{RADIUS}" fill="steelblue"/>"#
            );
            let _ = writeln!(s, r#"<text x="{cx}" y="{label_y}">{side}{v}</text>"#);
        }
    }
    let _ = writeln!(s, "</g>");

    let _ = writeln!(
        s,
        r#"<text x="{MARGIN}" y="{}" font-family="sans-serif" font-size="13">crossings: {}</text>"#,
        height - 10,
        d.crossing_number_fast()
    );
    let _ = writeln!(s, "</svg>");
    s
}

pub fn write_svg(d: &Drawing, path: &Path) -> io::Result<()> {
    std::fs::write(path, render_svg(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use bicross_core::BipartiteGraph;

    #[test]
    fn centres_shorter_layer() {
        // 3 vs 2 vertices: the shorter layer shifts by half a spacing.
        assert_eq!(coord(x2(0, 3, 3)), "40");
        assert_eq!(coord(x2(0, 2, 3)), "70");
        assert_eq!(coord(x2(1, 2, 3)), "130");
        assert_eq!(coord(81), "40.5");
    }

    #[test]
    fn empty_side_renders() {
        let g = BipartiteGraph::new(2, 0, []).unwrap();
        let d = Drawing::from_ranks(g, vec![1, 0], vec![]).unwrap();
        let s = render_svg(&d);
        assert_eq!(s.matches("<circle").count(), 2);
        assert!(s.contains("crossings: 0"));
    }
}
