//! Deterministic SVG renderings: decomposition diagrams and the counting
//! triangle. Output is a pure function of the input — fixed palette, fixed
//! element order, integer coordinates, no timestamps — so rendering the
//! same input twice gives byte-identical documents.

use std::fmt::Write as _;

use catconv::bijection::{chi, dyck_split, psi, DyckSplit};
use catconv::path::{BalancedPath, DyckPath, Path, Sign};
use catconv::triangle::TriangleGrid;
use catconv::Error;

use crate::args::DecompositionMap;

const UNIT: i64 = 26;
const MARGIN: i64 = 40;
const PALETTE: [&str; 6] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf",
];

/// One colored piece of a decomposition: steps `start..end` of the source
/// path, labelled with the item order and sign.
struct Piece {
    start: usize,
    end: usize,
    sign: Sign,
}

/// Renders the axis (`chi`) or first-return (`psi`) decomposition of a
/// path: grid, the path polyline, x-intercept markers, and each emitted
/// item in its own stroke with a sign annotation.
pub fn render_decomposition(input: &Path, map: DecompositionMap) -> Result<String, Error> {
    let (pieces, wrappers, legend) = match map {
        DecompositionMap::Chi => {
            let balanced = BalancedPath::new(input.clone())?;
            let sequence = chi(&balanced);
            let intercepts = input.x_intercepts();
            let pieces = sequence
                .items
                .iter()
                .zip(intercepts.windows(2))
                .map(|(item, window)| Piece {
                    start: window[0],
                    end: window[1],
                    sign: item.sign,
                })
                .collect();
            (pieces, Vec::new(), format!("chi({input}) = {sequence}"))
        }
        DecompositionMap::Psi => {
            let dyck = DyckPath::new(input.clone())?;
            let sequence = psi(&dyck)?;
            let (pieces, wrappers) = psi_pieces(&dyck)?;
            (pieces, wrappers, format!("psi({input}) = {sequence}"))
        }
    };
    Ok(draw_path_document(input, &pieces, &wrappers, &legend))
}

/// Item segments and consumed wrapper steps of the first-return
/// decomposition, in source-path coordinates.
fn psi_pieces(d: &DyckPath) -> Result<(Vec<Piece>, Vec<usize>), Error> {
    let mut pieces = Vec::new();
    let mut wrappers = Vec::new();
    let mut offset = 0usize;
    let mut current = d.clone();
    while !current.as_path().is_empty() {
        let DyckSplit { left, right } = dyck_split(&current)?;
        let left_len = left.as_path().len();
        let down_pos = offset + left_len + 1;
        wrappers.push(offset);
        wrappers.push(down_pos);
        if left.parameter() % 2 == 1 {
            pieces.push(Piece {
                start: offset + 1,
                end: down_pos,
                sign: Sign::Minus,
            });
            offset = down_pos + 1;
            current = right;
        } else {
            pieces.push(Piece {
                start: down_pos + 1,
                end: offset + current.as_path().len(),
                sign: Sign::Plus,
            });
            offset += 1;
            current = left;
        }
    }
    Ok((pieces, wrappers))
}

fn draw_path_document(path: &Path, pieces: &[Piece], wrappers: &[usize], legend: &str) -> String {
    let heights: Vec<i64> = path.heights().collect();
    let max_h = heights.iter().copied().max().unwrap_or(0).max(1);
    let min_h = heights.iter().copied().min().unwrap_or(0).min(-1);
    let len = path.len() as i64;
    let width = 2 * MARGIN + len * UNIT;
    let height = 2 * MARGIN + (max_h - min_h) * UNIT;
    let x = |t: i64| MARGIN + t * UNIT;
    let y = |h: i64| MARGIN + (max_h - h) * UNIT;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
    );
    let _ = writeln!(svg, "  <rect width=\"{width}\" height=\"{height}\" fill=\"white\"/>");
    // unit grid
    for t in 0..=len {
        let _ = writeln!(
            svg,
            "  <line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"#eeeeee\" stroke-width=\"1\"/>",
            x(t),
            y(max_h),
            y(min_h)
        );
    }
    for h in min_h..=max_h {
        let _ = writeln!(
            svg,
            "  <line x1=\"{0}\" y1=\"{2}\" x2=\"{1}\" y2=\"{2}\" stroke=\"#eeeeee\" stroke-width=\"1\"/>",
            x(0),
            x(len),
            y(h)
        );
    }
    // x-axis
    let _ = writeln!(
        svg,
        "  <line x1=\"{0}\" y1=\"{2}\" x2=\"{1}\" y2=\"{2}\" stroke=\"#444444\" stroke-width=\"1.5\"/>",
        x(0),
        x(len),
        y(0)
    );
    // base path
    if !path.is_empty() {
        let _ = writeln!(
            svg,
            "  <polyline points=\"{}\" fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"2\"/>",
            polyline(&heights, 0, path.len(), &x, &y)
        );
    }
    // wrapper steps consumed by the first-return splits
    for &pos in wrappers {
        let _ = writeln!(
            svg,
            "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#555555\" stroke-width=\"2\" stroke-dasharray=\"4 3\"/>",
            x(pos as i64),
            y(heights[pos]),
            x(pos as i64 + 1),
            y(heights[pos + 1])
        );
    }
    // decomposition pieces
    for (order, piece) in pieces.iter().enumerate() {
        let color = PALETTE[order % PALETTE.len()];
        if piece.end > piece.start {
            let _ = writeln!(
                svg,
                "  <polyline points=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"3.5\"/>",
                polyline(&heights, piece.start, piece.end, &x, &y)
            );
        }
        let mid_t = x(piece.start as i64) + (piece.end - piece.start) as i64 * UNIT / 2;
        let top = heights[piece.start..=piece.end]
            .iter()
            .copied()
            .max()
            .unwrap_or(0);
        let _ = writeln!(
            svg,
            "  <text x=\"{mid_t}\" y=\"{}\" font-family=\"monospace\" font-size=\"14\" fill=\"{color}\" text-anchor=\"middle\">{}:{}</text>",
            y(top) - 8,
            order + 1,
            piece.sign.to_char()
        );
    }
    // x-intercepts
    for t in path.x_intercepts() {
        let _ = writeln!(
            svg,
            "  <circle cx=\"{}\" cy=\"{}\" r=\"3\" fill=\"#222222\"/>",
            x(t as i64),
            y(0)
        );
    }
    let _ = writeln!(
        svg,
        "  <text x=\"{MARGIN}\" y=\"{}\" font-family=\"monospace\" font-size=\"13\" fill=\"#222222\">{}</text>",
        height - 12,
        xml_escape(legend)
    );
    svg.push_str("</svg>\n");
    svg
}

fn polyline(
    heights: &[i64],
    start: usize,
    end: usize,
    x: &impl Fn(i64) -> i64,
    y: &impl Fn(i64) -> i64,
) -> String {
    let mut points = String::new();
    for (t, h) in heights.iter().enumerate().take(end + 1).skip(start) {
        if !points.is_empty() {
            points.push(' ');
        }
        let _ = write!(points, "{},{}", x(t as i64), y(*h));
    }
    points
}

/// Renders the counting triangle: one decimal label per node, the
/// forbidden nodes struck through (or omitted with `hide_forbidden`).
pub fn render_triangle(grid: &TriangleGrid, hide_forbidden: bool) -> String {
    let extent = grid.extent() as i64;
    let unit_x = 56i64;
    let unit_y = 30i64;
    let width = 2 * MARGIN + extent * unit_x;
    let height = 2 * MARGIN + 2 * extent * unit_y;
    let x = |t: i64| MARGIN + t * unit_x;
    let y = |h: i64| MARGIN + (extent - h) * unit_y;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
    );
    let _ = writeln!(svg, "  <rect width=\"{width}\" height=\"{height}\" fill=\"white\"/>");
    let _ = writeln!(
        svg,
        "  <line x1=\"{}\" y1=\"{2}\" x2=\"{}\" y2=\"{2}\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>",
        x(0),
        x(extent),
        y(0)
    );
    for t in 0..=extent {
        for (h, label) in grid.row_nodes(t as usize).expect("row in range") {
            let forbidden = TriangleGrid::is_forbidden(t as usize, h);
            if forbidden && hide_forbidden {
                continue;
            }
            let (fill, decoration) = if forbidden {
                ("#999999", " text-decoration=\"line-through\"")
            } else {
                ("#111111", "")
            };
            let _ = writeln!(
                svg,
                "  <text x=\"{}\" y=\"{}\" font-family=\"monospace\" font-size=\"13\" fill=\"{fill}\" text-anchor=\"middle\"{decoration}>{label}</text>",
                x(t),
                y(h) + 4
            );
        }
    }
    let _ = writeln!(
        svg,
        "  <text x=\"{MARGIN}\" y=\"{}\" font-family=\"monospace\" font-size=\"13\" fill=\"#222222\">even-zeroed path counts, t &lt;= {extent}</text>",
        height - 12
    );
    svg.push_str("</svg>\n");
    svg
}

fn xml_escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use catconv::triangle::triangle;

    #[test]
    fn chi_rendering_is_deterministic_and_annotated() {
        let path = Path::parse("UUDDDDUU").unwrap();
        let first = render_decomposition(&path, DecompositionMap::Chi).unwrap();
        let second = render_decomposition(&path, DecompositionMap::Chi).unwrap();
        assert_eq!(first, second);
        assert!(first.contains("1:+"));
        assert!(first.contains("2:-"));
        assert!(first.contains("chi(UUDDDDUU) = +(UD) -(UD)"));
    }

    #[test]
    fn empty_path_renders_axis_only() {
        let svg = render_decomposition(&Path::empty(), DecompositionMap::Chi).unwrap();
        assert!(svg.starts_with("<svg"));
        assert!(!svg.contains("polyline"));
    }

    #[test]
    fn psi_rendering_marks_the_split() {
        let path = Path::parse("UDUD").unwrap();
        let svg = render_decomposition(&path, DecompositionMap::Psi).unwrap();
        assert!(svg.contains("psi(UDUD) = +(UD)"));
        assert!(svg.contains("stroke-dasharray"));
        assert!(svg.contains("1:+"));
    }

    #[test]
    fn psi_rejects_bad_domain() {
        let path = Path::parse("UD").unwrap();
        assert!(render_decomposition(&path, DecompositionMap::Psi).is_err());
        let path = Path::parse("DU").unwrap();
        assert!(render_decomposition(&path, DecompositionMap::Psi).is_err());
    }

    #[test]
    fn triangle_rendering_handles_forbidden_nodes() {
        let grid = triangle(1).unwrap();
        let shown = render_triangle(&grid, false);
        let hidden = render_triangle(&grid, true);
        assert!(shown.contains("line-through"));
        assert!(!hidden.contains("line-through"));
        assert!(shown.len() > hidden.len());
        assert_eq!(shown, render_triangle(&grid, false));
    }
}
