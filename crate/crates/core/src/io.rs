//! Line-based text formats.
//!
//! Colorings and graphs are upper-triangular matrices: the first line holds
//! `N`, then row `i` (for `i = 1..N-1`) lists columns `i+1..N` as `R`/`B`
//! or `0`/`1`. Graphs may also be written as an edge list headed by
//! `N M`. A certificate is a header `family n N [R|B]` followed by the
//! vertex sequence on one line.

use std::fmt::Write as _;

use crate::deletion::{CellStatus, DeletionTrace};
use crate::error::{Error, Result};
use crate::graph::{Color, OrderedColoring, OrderedGraph};
use crate::path::{PathCertificate, PathFamily, PathSpec};

/// A parsed host file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HostFile {
    Coloring(OrderedColoring),
    Graph(OrderedGraph),
}

impl HostFile {
    pub fn n_vertices(&self) -> usize {
        match self {
            HostFile::Coloring(c) => c.n_vertices(),
            HostFile::Graph(g) => g.n_vertices(),
        }
    }
}

/// Non-blank lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn parse_usize(line: usize, tok: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("expected a non-negative integer, found {tok:?}")))
}

/// Matrix rows with their line numbers.
type Rows = Vec<(usize, Vec<char>)>;

/// Reads the `N` line and the `N - 1` rows of an upper-triangular matrix.
fn parse_rows(text: &str) -> Result<(usize, Rows)> {
    let mut lines = content_lines(text);
    let (l, first) = lines.next().ok_or_else(|| Error::parse(1, "empty input"))?;
    let n = parse_usize(l, first)?;
    let mut rows = Vec::with_capacity(n.saturating_sub(1));
    for i in 1..n {
        let (l, row) = lines
            .next()
            .ok_or_else(|| Error::parse(l + i, format!("missing row {i} of {}", n - 1)))?;
        let cells: Vec<char> = row.chars().filter(|c| !c.is_whitespace()).collect();
        if cells.len() != n - i {
            return Err(Error::parse(l, format!("row {i} has {} cells, expected {}", cells.len(), n - i)));
        }
        rows.push((l, cells));
    }
    if let Some((l, _)) = lines.next() {
        return Err(Error::parse(l, "trailing content after the last row"));
    }
    Ok((n, rows))
}

pub fn write_coloring(c: &OrderedColoring) -> String {
    let n = c.n_vertices();
    let mut out = format!("{n}\n");
    for i in 1..n {
        out.extend((i + 1..=n).map(|j| c.color(i, j).as_char()));
        out.push('\n');
    }
    out
}

pub fn parse_coloring(text: &str) -> Result<OrderedColoring> {
    let (n, rows) = parse_rows(text)?;
    let mut red = OrderedGraph::empty(n);
    for (i, (l, cells)) in rows.iter().enumerate() {
        for (t, &ch) in cells.iter().enumerate() {
            match Color::from_char(ch) {
                Some(Color::Red) => red.insert(i + 1, i + 2 + t),
                Some(Color::Blue) => {}
                None => return Err(Error::parse(*l, format!("expected R or B, found {ch:?}"))),
            }
        }
    }
    Ok(OrderedColoring::from_red_graph(red))
}

pub fn write_graph_matrix(g: &OrderedGraph) -> String {
    let n = g.n_vertices();
    let mut out = format!("{n}\n");
    for i in 1..n {
        out.extend((i + 1..=n).map(|j| if g.has_edge(i, j) { '1' } else { '0' }));
        out.push('\n');
    }
    out
}

pub fn write_graph_edges(g: &OrderedGraph) -> String {
    let mut out = format!("{} {}\n", g.n_vertices(), g.edge_count());
    for (i, j) in g.edges() {
        let _ = writeln!(out, "{i} {j}");
    }
    out
}

/// Reads either graph layout; a first line with two numbers means an edge
/// list.
pub fn parse_graph(text: &str) -> Result<OrderedGraph> {
    let (l, first) = content_lines(text).next().ok_or_else(|| Error::parse(1, "empty input"))?;
    let head: Vec<&str> = first.split_whitespace().collect();
    match head.len() {
        1 => parse_graph_matrix(text),
        2 => parse_graph_edges(text),
        _ => Err(Error::parse(l, "expected `N` or `N M` on the first line")),
    }
}

fn parse_graph_matrix(text: &str) -> Result<OrderedGraph> {
    let (n, rows) = parse_rows(text)?;
    let mut g = OrderedGraph::empty(n);
    for (i, (l, cells)) in rows.iter().enumerate() {
        for (t, &ch) in cells.iter().enumerate() {
            match ch {
                '1' => g.insert(i + 1, i + 2 + t),
                '0' => {}
                _ => return Err(Error::parse(*l, format!("expected 0 or 1, found {ch:?}"))),
            }
        }
    }
    Ok(g)
}

fn parse_graph_edges(text: &str) -> Result<OrderedGraph> {
    let mut lines = content_lines(text);
    let (l, first) = lines.next().ok_or_else(|| Error::parse(1, "empty input"))?;
    let head: Vec<&str> = first.split_whitespace().collect();
    let n = parse_usize(l, head[0])?;
    let m = parse_usize(l, head[1])?;
    let mut g = OrderedGraph::empty(n);
    let mut seen = 0;
    for (l, line) in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(Error::parse(l, "expected `i j`"));
        }
        let (i, j) = (parse_usize(l, toks[0])?, parse_usize(l, toks[1])?);
        if i == j || i == 0 || j == 0 || i > n || j > n {
            return Err(Error::parse(l, format!("({i}, {j}) is not a pair of distinct vertices in [1, {n}]")));
        }
        if g.has_edge(i, j) {
            return Err(Error::parse(l, format!("edge ({i}, {j}) listed twice")));
        }
        g.insert(i.min(j), i.max(j));
        seen += 1;
    }
    if seen != m {
        return Err(Error::parse(l, format!("header announces {m} edges, found {seen}")));
    }
    Ok(g)
}

/// Reads a coloring or graph file, telling them apart by their cells. A
/// matrix with no cells (`N <= 1`) is read as a graph.
pub fn parse_host(text: &str) -> Result<HostFile> {
    let (_, first) = content_lines(text).next().ok_or_else(|| Error::parse(1, "empty input"))?;
    let is_coloring = first.split_whitespace().count() == 1
        && content_lines(text)
            .nth(1)
            .and_then(|(_, row)| row.chars().find(|c| !c.is_whitespace()))
            .is_some_and(|c| Color::from_char(c).is_some());
    if is_coloring {
        parse_coloring(text).map(HostFile::Coloring)
    } else {
        parse_graph(text).map(HostFile::Graph)
    }
}

pub fn write_certificate(cert: &PathCertificate, n_vertices: usize) -> String {
    let mut out = format!("{} {} {}", cert.spec.family(), cert.spec.n(), n_vertices);
    if let Some(c) = cert.color {
        let _ = write!(out, " {}", c.as_char());
    }
    out.push('\n');
    let seq: Vec<String> = cert.vertices.iter().map(usize::to_string).collect();
    out.push_str(&seq.join(" "));
    out.push('\n');
    out
}

/// Returns the certificate and the host size named in its header.
pub fn parse_certificate(text: &str) -> Result<(PathCertificate, usize)> {
    let mut lines = content_lines(text);
    let (l, header) = lines.next().ok_or_else(|| Error::parse(1, "empty input"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if !(3..=4).contains(&toks.len()) {
        return Err(Error::parse(l, "expected `family n N [R|B]`"));
    }
    let family: PathFamily = toks[0].parse().map_err(|e: Error| Error::parse(l, e.to_string()))?;
    let n = parse_usize(l, toks[1])?;
    let spec = PathSpec::new(family, n).map_err(|e| Error::parse(l, e.to_string()))?;
    let n_vertices = parse_usize(l, toks[2])?;
    let color = match toks.get(3) {
        None => None,
        Some(t) => {
            let mut chars = t.chars();
            match (chars.next().and_then(Color::from_char), chars.next()) {
                (Some(c), None) => Some(c),
                _ => return Err(Error::parse(l, format!("expected R or B, found {t:?}"))),
            }
        }
    };
    let (l, seq) = lines.next().ok_or_else(|| Error::parse(l + 1, "missing vertex sequence"))?;
    let vertices = seq
        .split_whitespace()
        .map(|t| parse_usize(l, t))
        .collect::<Result<Vec<_>>>()?;
    if vertices.len() != n {
        return Err(Error::parse(l, format!("{} vertices listed, header says {n}", vertices.len())));
    }
    if let Some((l, _)) = lines.next() {
        return Err(Error::parse(l, "trailing content after the vertex sequence"));
    }
    Ok((PathCertificate::new(spec, vertices, color), n_vertices))
}

/// Validates a certificate against the host it names.
pub fn validate_against_host(cert: &PathCertificate, n_vertices: usize, host: &HostFile) -> Result<()> {
    if host.n_vertices() != n_vertices {
        return Err(Error::InvalidCertificate(format!(
            "certificate refers to N={n_vertices}, host has {} vertices",
            host.n_vertices()
        )));
    }
    match host {
        HostFile::Coloring(c) => cert.validate_in_coloring(c),
        HostFile::Graph(g) => cert.validate_in_graph(g),
    }
}

/// Code of a cell in a trace dump: `G` grey, `S` survived, `.` not an edge,
/// or the deleting step followed by the colour letter on coloured hosts.
pub fn status_code(status: CellStatus) -> Option<String> {
    match status {
        CellStatus::OutOfScope => None,
        CellStatus::Absent => Some(".".into()),
        CellStatus::Grey => Some("G".into()),
        CellStatus::Survived => Some("S".into()),
        CellStatus::Removed { step, color, .. } => Some(match color {
            Some(c) => format!("{step}{}", c.as_char()),
            None => step.to_string(),
        }),
    }
}

/// Header `family n N steps_run`, then `i j code` for every cell between
/// the two classes.
pub fn write_trace(trace: &DeletionTrace) -> String {
    let mut out = format!(
        "{} {} {} {}\n",
        trace.spec.family(),
        trace.spec.n(),
        trace.n_vertices,
        trace.steps_run
    );
    for ((i, j), status) in trace.cells() {
        if let Some(code) = status_code(status) {
            let _ = writeln!(out, "{i} {j} {code}");
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coloring_layout() {
        let c = OrderedColoring::from_fn(3, |i, _| if i == 1 { Color::Red } else { Color::Blue });
        assert_eq!(write_coloring(&c), "3\nRR\nB\n");
        assert_eq!(parse_coloring("3\nRR\nB\n").unwrap(), c);
        assert!(matches!(parse_coloring("3\nRR\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_coloring("3\nRX\nB\n"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn graph_layouts() {
        let g = OrderedGraph::from_edges(4, [(1, 3), (2, 4)]).unwrap();
        assert_eq!(write_graph_matrix(&g), "4\n010\n01\n0\n");
        assert_eq!(write_graph_edges(&g), "4 2\n1 3\n2 4\n");
        assert_eq!(parse_graph(&write_graph_matrix(&g)).unwrap(), g);
        assert_eq!(parse_graph(&write_graph_edges(&g)).unwrap(), g);
        assert!(parse_graph("4 3\n1 3\n2 4\n").is_err());
    }

    #[test]
    fn host_detection() {
        assert!(matches!(parse_host("2\nR\n").unwrap(), HostFile::Coloring(_)));
        assert!(matches!(parse_host("2\n1\n").unwrap(), HostFile::Graph(_)));
        assert!(matches!(parse_host("2 1\n1 2\n").unwrap(), HostFile::Graph(_)));
    }

    #[test]
    fn certificate_layout() {
        let cert = PathCertificate::new(PathSpec::ap(4).unwrap(), vec![1, 9, 3, 5], Some(Color::Blue));
        let text = write_certificate(&cert, 9);
        assert_eq!(text, "ap 4 9 B\n1 9 3 5\n");
        assert_eq!(parse_certificate(&text).unwrap(), (cert, 9));
        assert!(parse_certificate("ap 4 9\n1 9 3\n").is_err());
    }
}
