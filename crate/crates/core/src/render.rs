//! Upper-triangular text pictures of graphs, colorings and deletion traces.
//!
//! Row `i` shows columns `j = 1..N`; cells with `j <= i` are blank.

use crate::deletion::{CellStatus, DeletionTrace};
use crate::graph::{OrderedColoring, OrderedGraph};

/// What to draw in each cell.
#[derive(Debug, Clone, Copy)]
pub enum Annotations<'a> {
    /// `#` for an edge, `.` otherwise.
    Graph(&'a OrderedGraph),
    /// `R` or `B`.
    Coloring(&'a OrderedColoring),
    /// `g` grey, `*` survived, the step number for a deleted cell, `.` for a
    /// non-edge between the classes and `:` outside them.
    Trace(&'a DeletionTrace),
}

fn grid(n: usize, width: usize, cell: impl Fn(usize, usize) -> String) -> String {
    let mut out = String::new();
    for i in 1..=n {
        let row: Vec<String> = (1..=n)
            .map(|j| {
                let s = if j > i { cell(i, j) } else { String::new() };
                format!("{s:>width$}")
            })
            .collect();
        out.push_str(row.join(" ").trim_end());
        out.push('\n');
    }
    out
}

pub fn render_matrix(annotations: Annotations<'_>) -> String {
    match annotations {
        Annotations::Graph(g) => grid(g.n_vertices(), 1, |i, j| {
            if g.has_edge(i, j) { "#" } else { "." }.to_string()
        }),
        Annotations::Coloring(c) => grid(c.n_vertices(), 1, |i, j| c.color(i, j).as_char().to_string()),
        Annotations::Trace(t) => {
            let width = t.steps_run.max(1).to_string().len();
            grid(t.n_vertices, width, |i, j| match t.status(i, j) {
                CellStatus::OutOfScope => ":".into(),
                CellStatus::Absent => ".".into(),
                CellStatus::Grey => "g".into(),
                CellStatus::Survived => "*".into(),
                CellStatus::Removed { step, .. } => step.to_string(),
            })
        }
    }
}
