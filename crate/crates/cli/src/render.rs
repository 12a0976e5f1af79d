//! ASCII, LaTeX and JSON renderings of partitioned tableaux.

use aqtab_core::{Cell, HalfInt, PartitionedTableau};
use serde::Serialize;

#[derive(Serialize)]
pub struct TableauJson {
    pub shape: Vec<usize>,
    pub rows: Option<Vec<String>>,
    pub cells: Vec<Cell>,
}

pub fn to_json(t: &PartitionedTableau) -> TableauJson {
    TableauJson {
        shape: t.shape(),
        rows: t.sign_strings(),
        cells: t.cells().collect(),
    }
}

/// Text of one cell: entry when present, else the sign.
fn cell_text(c: &Cell) -> String {
    match (c.entry, c.sign) {
        (Some(e), _) => e.to_string(),
        (None, Some(s)) => s.to_string(),
        (None, None) => String::new(),
    }
}

fn rows_of(t: &PartitionedTableau) -> Vec<Vec<Cell>> {
    let mut rows: Vec<Vec<Cell>> = vec![Vec::new(); t.num_rows()];
    for c in t.cells() {
        rows[c.row - 1].push(c);
    }
    rows
}

/// Left-justified grid, one line per row. With `show_blocks`, each row is
/// followed by a line giving the block index under every cell.
pub fn to_ascii(t: &PartitionedTableau, show_blocks: bool) -> String {
    let rows = rows_of(t);
    let width = t
        .cells()
        .map(|c| cell_text(&c).len().max(c.block.to_string().len()))
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    for row in &rows {
        let line: Vec<String> = row
            .iter()
            .map(|c| format!("{:>width$}", cell_text(c)))
            .collect();
        out.push_str(line.join(" ").trim_end());
        out.push('\n');
        if show_blocks {
            let marks: Vec<String> = row.iter().map(|c| format!("{:>width$}", c.block)).collect();
            out.push_str(&marks.join(" "));
            out.push('\n');
        }
    }
    out
}

fn latex_number(v: HalfInt) -> String {
    if v.is_integral() {
        v.to_string()
    } else {
        let d = v.doubled();
        let sign = if d < 0 { "-" } else { "" };
        format!("{sign}\\frac{{{}}}{{2}}", d.abs())
    }
}

/// Body of an `array` environment. Blocks appear as subscripts when
/// `show_blocks` is set.
pub fn to_latex(t: &PartitionedTableau, show_blocks: bool) -> String {
    let rows = rows_of(t);
    let cols = t.shape().first().copied().unwrap_or(0);
    let mut out = format!("\\begin{{array}}{{{}}}\n", "c".repeat(cols));
    let lines: Vec<String> = rows
        .iter()
        .map(|row| {
            let cells: Vec<String> = row
                .iter()
                .map(|c| {
                    let body = match (c.entry, c.sign) {
                        (Some(e), _) => latex_number(e),
                        (None, Some(s)) => s.to_string(),
                        (None, None) => String::new(),
                    };
                    if show_blocks {
                        format!("{{{body}}}_{{{}}}", c.block)
                    } else {
                        body
                    }
                })
                .collect();
            format!("  {}", cells.join(" & "))
        })
        .collect();
    out.push_str(&lines.join(" \\\\\n"));
    out.push_str("\n\\end{array}\n");
    out
}
