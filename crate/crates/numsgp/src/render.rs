//! Static renderings of lattice paths and label grids.

use std::fmt::Write;

use numsgp_core::paths2::{grid_labels, Step};
use numsgp_core::PathWord;
use serde_json::Value;

use crate::json;

const CELL: usize = 40;

/// Columns shown for a word: every gap cell plus at least `b` columns.
fn path_columns(w: &PathWord, b: u64) -> usize {
    let last = w.descent_columns().last().copied().unwrap_or(0);
    (last + 1).max(b as usize)
}

/// Label grid of `<a, b>` with the gap cells of `w` in brackets, top row first.
pub fn path_text(w: &PathWord, a: u64, b: u64) -> String {
    let cols = w.descent_columns();
    let labels = grid_labels(a, b, path_columns(w, b) as u64);
    let width = labels
        .iter()
        .flatten()
        .max()
        .map_or(1, |m| m.to_string().len());
    let mut out = String::new();
    for (row, &cut) in labels.iter().zip(&cols) {
        let cells: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(x, v)| {
                if x < cut {
                    format!("[{v:>width$}]")
                } else {
                    format!(" {v:>width$} ")
                }
            })
            .collect();
        out.push_str(cells.join("").trim_end());
        out.push('\n');
    }
    out
}

/// The same picture as vector markup, with the path drawn over the cells.
pub fn path_svg(w: &PathWord, a: u64, b: u64) -> String {
    let cols = w.descent_columns();
    let ncols = path_columns(w, b);
    let labels = grid_labels(a, b, ncols as u64);
    let (wd, ht) = (ncols * CELL, a as usize * CELL);
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{wd}" height="{ht}" viewBox="0 0 {wd} {ht}">"#
    );
    for (r, (row, &cut)) in labels.iter().zip(&cols).enumerate() {
        for (x, v) in row.iter().enumerate() {
            let fill = if x < cut { "#cccccc" } else { "#ffffff" };
            let (px, py) = (x * CELL, r * CELL);
            let _ = writeln!(
                s,
                r##"<rect x="{px}" y="{py}" width="{CELL}" height="{CELL}" fill="{fill}" stroke="#888888"/>"##
            );
            let _ = writeln!(
                s,
                r#"<text x="{}" y="{}" font-size="14" text-anchor="middle" dominant-baseline="middle">{v}</text>"#,
                px + CELL / 2,
                py + CELL / 2
            );
        }
    }
    let (mut x, mut y) = (0, 0);
    let mut points = vec!["0,0".to_string()];
    for step in w.steps() {
        match step {
            Step::R => x += CELL,
            Step::D => y += CELL,
        }
        points.push(format!("{x},{y}"));
    }
    let _ = writeln!(
        s,
        r##"<polyline points="{}" fill="none" stroke="#cc0000" stroke-width="3"/>"##,
        points.join(" ")
    );
    s.push_str("</svg>\n");
    s
}

/// Rows of numbers, right-aligned in columns.
pub fn table_text(rows: &[Vec<u64>]) -> String {
    let width = rows
        .iter()
        .flatten()
        .max()
        .map_or(1, |m| m.to_string().len());
    rows.iter()
        .map(|r| {
            let cells: Vec<String> = r.iter().map(|v| format!("{v:>width$}")).collect();
            cells.join(" ") + "\n"
        })
        .collect()
}

pub fn table_json(rows: &[Vec<u64>]) -> Value {
    Value::Array(rows.iter().map(|r| json::u64s(r)).collect())
}

pub fn table_csv(rows: &[Vec<u64>]) -> String {
    rows.iter()
        .map(|r| {
            let cells: Vec<String> = r.iter().map(u64::to_string).collect();
            cells.join(",") + "\n"
        })
        .collect()
}

pub fn table_latex(rows: &[Vec<u64>]) -> String {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut s = format!("\\begin{{tabular}}{{{}}}\n", "r".repeat(ncols));
    for r in rows {
        let cells: Vec<String> = r.iter().map(u64::to_string).collect();
        let _ = writeln!(s, "{} \\\\", cells.join(" & "));
    }
    s.push_str("\\end{tabular}\n");
    s
}

/// Plain grid of labelled cells.
pub fn table_svg(rows: &[Vec<u64>]) -> String {
    let ncols = rows.first().map_or(0, Vec::len);
    let (wd, ht) = (ncols * CELL, rows.len() * CELL);
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{wd}" height="{ht}" viewBox="0 0 {wd} {ht}">"#
    );
    for (r, row) in rows.iter().enumerate() {
        for (x, v) in row.iter().enumerate() {
            let (px, py) = (x * CELL, r * CELL);
            let _ = writeln!(
                s,
                r##"<rect x="{px}" y="{py}" width="{CELL}" height="{CELL}" fill="#ffffff" stroke="#888888"/>"##
            );
            let _ = writeln!(
                s,
                r#"<text x="{}" y="{}" font-size="14" text-anchor="middle" dominant-baseline="middle">{v}</text>"#,
                px + CELL / 2,
                py + CELL / 2
            );
        }
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_art() {
        let w: PathWord = "RDRRDRD".parse().unwrap();
        assert_eq!(
            path_text(&w, 3, 4),
            "[ 8] 11  14  17  20\n[ 4][ 7][10] 13  16\n[ 0][ 3][ 6][ 9] 12\n"
        );
    }

    #[test]
    fn path_svg_shape() {
        let w: PathWord = "DD".parse().unwrap();
        let svg = path_svg(&w, 2, 3);
        assert_eq!(svg.matches("<rect").count(), 6);
        assert!(svg.contains(r#"points="0,0 0,40 0,80""#));
        assert!(!svg.contains("#cccccc"));
    }

    #[test]
    fn tables() {
        let rows = vec![vec![5, 8], vec![0, 3], vec![4, 7]];
        assert_eq!(table_text(&rows), "5 8\n0 3\n4 7\n");
        assert_eq!(table_csv(&rows), "5,8\n0,3\n4,7\n");
        assert_eq!(json::to_string(&table_json(&rows)), "[[5,8],[0,3],[4,7]]");
        assert_eq!(
            table_latex(&rows),
            "\\begin{tabular}{rr}\n5 & 8 \\\\\n0 & 3 \\\\\n4 & 7 \\\\\n\\end{tabular}\n"
        );
        assert_eq!(table_svg(&rows).matches("<text").count(), 6);
    }
}
