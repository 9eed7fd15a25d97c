//! Text and SVG drawings of mosaics.

use std::fmt::Write as _;

use knotile_core::{EdgeSide, Mosaic, TileKind};

/// Three rows of three characters for one tile. Edge midpoints sit at the
/// middle of each side; the under-strand of a crossing stops short of the
/// over-strand.
fn ascii_tile(k: TileKind) -> [&'static str; 3] {
    match k {
        TileKind::Blank => ["   ", "   ", "   "],
        TileKind::ArcBL => ["   ", "─╮ ", " │ "],
        TileKind::ArcBR => ["   ", " ╭─", " │ "],
        TileKind::ArcTR => [" │ ", " ╰─", "   "],
        TileKind::ArcTL => [" │ ", "─╯ ", "   "],
        TileKind::SegH => ["   ", "───", "   "],
        TileKind::SegV => [" │ ", " │ ", " │ "],
        TileKind::DoubleArcA => ["╭╯ ", "╯ ╭", " ╭╯"],
        TileKind::DoubleArcB => [" ╰╮", "╮ ╰", "╰╮ "],
        TileKind::CrossA => [" │ ", "╴│╶", " │ "],
        TileKind::CrossB => [" ╵ ", "───", " ╷ "],
    }
}

/// Box-drawing picture, three text rows and columns per tile.
pub fn ascii(m: &Mosaic) -> String {
    let mut out = String::new();
    for row in m.rows() {
        for line in 0..3 {
            let text: String = row.iter().map(|&k| ascii_tile(k)[line]).collect();
            out.push_str(text.trim_end());
            out.push('\n');
        }
    }
    out
}

/// Tile edge length in SVG user units.
pub const TILE: f64 = 100.0;
/// Length of the break in an under-strand, as a fraction of [`TILE`].
pub const GAP: f64 = 0.15;

fn midpoint(side: EdgeSide) -> (f64, f64) {
    let h = TILE / 2.0;
    match side {
        EdgeSide::Top => (h, 0.0),
        EdgeSide::Right => (TILE, h),
        EdgeSide::Bottom => (h, TILE),
        EdgeSide::Left => (0.0, h),
    }
}

/// Path data for one strand of a tile whose top-left corner is `(x, y)`.
fn strand_path(x: f64, y: f64, a: EdgeSide, b: EdgeSide, gap: bool) -> String {
    let (p, q) = (midpoint(a), midpoint(b));
    let (px, py, qx, qy) = (x + p.0, y + p.1, x + q.0, y + q.1);
    if a.opposite() == b {
        if gap {
            let (cx, cy) = ((px + qx) / 2.0, (py + qy) / 2.0);
            let t = GAP / 2.0 * TILE / (TILE / 2.0);
            let (ax, ay) = (cx + (px - cx) * t, cy + (py - cy) * t);
            let (bx, by) = (cx + (qx - cx) * t, cy + (qy - cy) * t);
            return format!("M{px} {py}L{ax} {ay}M{bx} {by}L{qx} {qy}");
        }
        return format!("M{px} {py}L{qx} {qy}");
    }
    // quarter circle about the tile corner shared by the two edges
    let corner = |s: EdgeSide| match s {
        EdgeSide::Top => (None, Some(0.0)),
        EdgeSide::Bottom => (None, Some(TILE)),
        EdgeSide::Left => (Some(0.0), None),
        EdgeSide::Right => (Some(TILE), None),
    };
    let (ca, cb) = (corner(a), corner(b));
    let cx = x + ca.0.or(cb.0).expect("arc edges are adjacent");
    let cy = y + ca.1.or(cb.1).expect("arc edges are adjacent");
    let cross = (px - cx) * (qy - cy) - (py - cy) * (qx - cx);
    let sweep = u8::from(cross > 0.0);
    let r = TILE / 2.0;
    format!("M{px} {py}A{r} {r} 0 0 {sweep} {qx} {qy}")
}

/// Which strand of a crossing tile passes under.
fn under_strand(k: TileKind) -> Option<(EdgeSide, EdgeSide)> {
    match k {
        TileKind::CrossA => Some((EdgeSide::Left, EdgeSide::Right)),
        TileKind::CrossB => Some((EdgeSide::Top, EdgeSide::Bottom)),
        _ => None,
    }
}

/// SVG drawing with one `<path>` per strand of every non-blank tile.
pub fn svg(m: &Mosaic) -> String {
    let n = m.size();
    let side = TILE * n as f64;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{side}" height="{side}" viewBox="0 0 {side} {side}">"#
    );
    let _ = writeln!(out, r##"<rect width="{side}" height="{side}" fill="#ffffff"/>"##);
    let _ = writeln!(out, r##"<g fill="none" stroke="#000000" stroke-width="6" stroke-linecap="butt">"##);
    for r in 0..n {
        for c in 0..n {
            let k = m.get(r, c);
            let (x, y) = (c as f64 * TILE, r as f64 * TILE);
            for &(a, b) in k.strands() {
                let under = under_strand(k).is_some_and(|(u, v)| (u, v) == (a, b) || (v, u) == (a, b));
                let d = strand_path(x, y, a, b, under);
                let _ = writeln!(out, r#"<path data-tile="{r},{c}" d="{d}"/>"#);
            }
        }
    }
    out.push_str("</g>\n</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ascii_cells() {
        let m = Mosaic::parse_line("21/34").unwrap();
        assert_eq!(ascii(&m), "\n ╭──╮\n │  │\n │  │\n ╰──╯\n\n");
    }

    #[test]
    fn crossing_gap() {
        let m = Mosaic::parse_line("9").unwrap();
        let s = svg(&m);
        assert_eq!(s.matches("<path").count(), 2);
        assert!(s.contains("M0 50L42.5 50M57.5 50L100 50"));
        assert!(s.contains("M50 0L50 100"));
    }

    #[test]
    fn arcs_turn_about_corners() {
        assert_eq!(strand_path(0.0, 0.0, EdgeSide::Bottom, EdgeSide::Left, false), "M50 100A50 50 0 0 0 0 50");
    }
}
