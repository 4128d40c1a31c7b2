//! Self-contained SVG drawings of point grids, squares and letter tables.
//!
//! Highlighted squares carry `class="highlight"` and a highlighted reading
//! is a single `class="witness"` polyline, so the emphasised elements can
//! be counted in the output.

use std::fmt::Write as _;

use configcount_core::{LatticeGrid, LetterGrid, PathWitness, Square};

use crate::commands::Highlight;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RenderOptions {
    pub cell_size: u32,
    pub highlight: Option<Highlight>,
}

const STYLE: &str = ".point{fill:#222}.square{fill:none;stroke:#c0392b;stroke-opacity:0.35;stroke-width:1.5}\
.highlight{fill:#c0392b;fill-opacity:0.08;stroke:#c0392b;stroke-width:2.5}\
.cell{fill:#fff;stroke:#444;stroke-width:1}.symbol{font-family:monospace;text-anchor:middle;dominant-baseline:central;fill:#111}\
.witness{fill:none;stroke:#2471a3;stroke-width:3;stroke-linejoin:round;marker-end:url(#arrow)}";

fn open(out: &mut String, width: u64, height: u64) {
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    writeln!(out, "<style>{STYLE}</style>").unwrap();
}

fn escape(c: char) -> String {
    match c {
        '&' => "&amp;".to_owned(),
        '<' => "&lt;".to_owned(),
        '>' => "&gt;".to_owned(),
        '"' => "&quot;".to_owned(),
        '\'' => "&apos;".to_owned(),
        c => c.to_string(),
    }
}

pub fn render_squares(grid: &LatticeGrid, squares: &[Square], opts: &RenderOptions) -> String {
    let cell = u64::from(opts.cell_size);
    let margin = cell;
    let width = 2 * margin + u64::from(grid.cols() - 1) * cell;
    let height = 2 * margin + u64::from(grid.rows() - 1) * cell;
    let top = i64::from(grid.rows() - 1);
    let px = |x: i64| margin as i64 + x * cell as i64;
    let py = |y: i64| margin as i64 + (top - y) * cell as i64;

    let mut out = String::new();
    open(&mut out, width, height);
    let chosen: Vec<(&Square, &str)> = match opts.highlight {
        None => squares.iter().map(|s| (s, "square")).collect(),
        Some(Highlight::SizeClass(k)) => squares
            .iter()
            .filter(|s| s.k() == k)
            .map(|s| (s, "highlight"))
            .collect(),
        Some(Highlight::Witness(i)) => squares
            .get(i)
            .map(|s| (s, "highlight"))
            .into_iter()
            .collect(),
    };
    for (s, class) in chosen {
        let points: Vec<String> = s
            .vertices()
            .iter()
            .map(|v| format!("{},{}", px(v.x), py(v.y)))
            .collect();
        writeln!(
            out,
            r#"<polygon class="{class}" points="{}"/>"#,
            points.join(" ")
        )
        .unwrap();
    }
    let radius = (cell / 10).max(2);
    for p in grid.points() {
        writeln!(
            out,
            r#"<circle class="point" cx="{}" cy="{}" r="{radius}"/>"#,
            px(p.x),
            py(p.y)
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}

pub fn render_letters(grid: &LetterGrid, paths: &[PathWitness], opts: &RenderOptions) -> String {
    let cell = u64::from(opts.cell_size);
    let margin = cell / 2;
    let width = 2 * margin + u64::from(grid.cols()) * cell;
    let height = 2 * margin + u64::from(grid.rows()) * cell;
    let top = u64::from(grid.rows() - 1);
    let x0 = |x: u32| margin + u64::from(x) * cell;
    let y0 = |y: u32| margin + (top - u64::from(y)) * cell;

    let mut out = String::new();
    open(&mut out, width, height);
    let arrow = (cell / 5).max(4);
    writeln!(
        out,
        r##"<defs><marker id="arrow" markerWidth="{arrow}" markerHeight="{arrow}" refX="{arrow}" refY="{half}" orient="auto" markerUnits="userSpaceOnUse"><path d="M0,0 L{arrow},{half} L0,{arrow} z" fill="#2471a3"/></marker></defs>"##,
        half = arrow / 2
    )
    .unwrap();
    let font = (cell * 3 / 5).max(1);
    for (c, symbol) in grid.cells() {
        writeln!(
            out,
            r#"<rect class="cell" x="{}" y="{}" width="{cell}" height="{cell}"/>"#,
            x0(c.x),
            y0(c.y)
        )
        .unwrap();
        writeln!(
            out,
            r#"<text class="symbol" x="{}" y="{}" font-size="{font}">{}</text>"#,
            x0(c.x) + cell / 2,
            y0(c.y) + cell / 2,
            escape(symbol)
        )
        .unwrap();
    }
    if let Some(Highlight::Witness(i)) = opts.highlight {
        if let Some(path) = paths.get(i) {
            let points: Vec<String> = path
                .cells
                .iter()
                .map(|c| format!("{},{}", x0(c.x) + cell / 2, y0(c.y) + cell / 2))
                .collect();
            writeln!(
                out,
                r#"<polyline class="witness" points="{}"/>"#,
                points.join(" ")
            )
            .unwrap();
        }
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use configcount_core::squares::enumerate_axis_squares;
    use configcount_core::wordgrid::{enumerate_word_paths, generate_manhattan_rings};
    use configcount_core::{AdjacencyRule, Word};

    fn opts(highlight: Option<Highlight>) -> RenderOptions {
        RenderOptions {
            cell_size: 40,
            highlight,
        }
    }

    #[test]
    fn size_class_highlight() {
        let g = LatticeGrid::new(5, 5).unwrap();
        let squares = enumerate_axis_squares(&g);
        let svg = render_squares(&g, &squares, &opts(Some(Highlight::SizeClass(2))));
        assert_eq!(svg.matches(r#"class="highlight""#).count(), 9);
        assert_eq!(svg.matches(r#"class="point""#).count(), 25);
        let plain = render_squares(&g, &squares, &opts(None));
        assert_eq!(plain.matches(r#"class="square""#).count(), 30);
        assert!(plain.starts_with("<svg ") && plain.ends_with("</svg>\n"));
    }

    #[test]
    fn single_point_grid() {
        let g = LatticeGrid::new(1, 1).unwrap();
        let svg = render_squares(&g, &[], &opts(None));
        assert_eq!(svg.matches("<circle").count(), 1);
        assert_eq!(svg.matches("<polygon").count(), 0);
    }

    #[test]
    fn witness_polyline() {
        let w = Word::from("Open!");
        let g = generate_manhattan_rings(&w).unwrap();
        let paths = enumerate_word_paths(&g, &w, AdjacencyRule::Side, false);
        let svg = render_letters(&g, &paths, &opts(Some(Highlight::Witness(0))));
        let line = svg
            .lines()
            .find(|l| l.contains(r#"class="witness""#))
            .unwrap();
        let points = line
            .split("points=\"")
            .nth(1)
            .unwrap()
            .trim_end_matches("\"/>");
        assert_eq!(points.split(' ').count(), 5);
        assert_eq!(svg.matches("<rect").count(), 25);
    }

    #[test]
    fn symbols_are_escaped() {
        let g = LetterGrid::from_rows(&["<&"]).unwrap();
        let svg = render_letters(&g, &[], &opts(None));
        assert!(svg.contains(">&lt;</text>") && svg.contains(">&amp;</text>"));
    }
}
