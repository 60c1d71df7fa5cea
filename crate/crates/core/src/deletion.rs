//! The step-scheduled edge-deletion engine shared by the Ramsey, Turán and
//! bipartite arguments.
//!
//! A [`DeletionScheme`] fixes two vertex classes `A` and `B`, a set of grey
//! cells that no targeted copy can use, and a list of steps. Each step names
//! an interval of vertices on one side and a direction; every vertex of the
//! interval deletes its leftmost (or rightmost) remaining edge to the other
//! class, once per colour class. If any non-grey edge survives all `n - 2`
//! steps, walking the deletion records backwards from it yields a copy of
//! the path.

use crate::error::{Error, Result};
use crate::graph::{Color, OrderedColoring, OrderedGraph};
use crate::path::{PathCertificate, PathSpec};

/// Inclusive vertex interval `[lo, hi]`; empty when `lo > hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Interval {
    pub lo: usize,
    pub hi: usize,
}

impl Interval {
    /// Builds `[lo, hi]` from signed bounds, clamped to `[1, n_vertices]`.
    pub fn clamped(lo: i64, hi: i64, n_vertices: usize) -> Interval {
        let lo = lo.max(1);
        let hi = hi.min(n_vertices as i64);
        if lo > hi {
            Interval { lo: 1, hi: 0 }
        } else {
            Interval {
                lo: lo as usize,
                hi: hi as usize,
            }
        }
    }

    pub fn new(lo: usize, hi: usize) -> Interval {
        Interval { lo, hi }
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.lo <= v && v <= self.hi
    }

    pub fn len(&self) -> usize {
        if self.lo > self.hi {
            0
        } else {
            self.hi - self.lo + 1
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn iter(&self) -> std::ops::RangeInclusive<usize> {
        self.lo..=self.hi
    }
}

/// Class whose vertices act in a step; they delete edges towards the other class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Leftmost,
    Rightmost,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Step {
    /// 1-based step number.
    pub index: usize,
    pub side: Side,
    pub interval: Interval,
    pub direction: Direction,
}

/// Cells guaranteed grey-or-removed once a step has run: every in-scope
/// edge whose smaller (resp. larger) endpoint lies in the interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cover {
    Smaller(Interval),
    Larger(Interval),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeletionScheme {
    pub spec: PathSpec,
    pub n_vertices: usize,
    pub class_a: Interval,
    pub class_b: Interval,
    pub grey: Vec<(usize, usize)>,
    pub steps: Vec<Step>,
    /// `coverage[s]` is what step `s + 1` adds to the covered region.
    pub coverage: Vec<Cover>,
}

impl DeletionScheme {
    /// Whether `(x, y)`, `x < y`, joins the two classes.
    #[inline]
    pub fn in_scope(&self, x: usize, y: usize) -> bool {
        (self.class_a.contains(x) && self.class_b.contains(y)) || (self.class_b.contains(x) && self.class_a.contains(y))
    }

    /// Number of in-scope pairs of `K_N`.
    pub fn scope_size(&self) -> usize {
        let n = self.n_vertices;
        (1..=n)
            .map(|x| (x + 1..=n).filter(|&y| self.in_scope(x, y)).count())
            .sum()
    }

    /// Upper bound on deletions: each acting vertex removes at most one
    /// edge per colour class per step.
    pub fn removal_capacity(&self, classes: usize) -> usize {
        classes * self.steps.iter().map(|s| s.interval.len()).sum::<usize>()
    }
}

/// Final (or current) fate of a cell of the matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CellStatus {
    /// Not an `A`-`B` pair.
    OutOfScope,
    /// In scope but not an edge of the host graph.
    Absent,
    Grey,
    Removed {
        step: usize,
        color: Option<Color>,
        by: usize,
    },
    /// Not removed (so far).
    Survived,
}

/// The host the engine runs on: a full coloring (two classes per step) or
/// a single graph (one class).
#[derive(Debug, Clone, Copy)]
pub enum Host<'a> {
    Coloring(&'a OrderedColoring),
    Graph(&'a OrderedGraph),
}

impl Host<'_> {
    pub fn n_vertices(&self) -> usize {
        match self {
            Host::Coloring(c) => c.n_vertices(),
            Host::Graph(g) => g.n_vertices(),
        }
    }

    fn classes(&self) -> usize {
        match self {
            Host::Coloring(_) => 2,
            Host::Graph(_) => 1,
        }
    }

    /// Class slot of the pair, `None` when it is not an edge.
    #[inline]
    fn slot(&self, x: usize, y: usize) -> Option<usize> {
        match self {
            Host::Coloring(c) => Some(match c.color(x, y) {
                Color::Red => 0,
                Color::Blue => 1,
            }),
            Host::Graph(g) => g.has_edge(x, y).then_some(0),
        }
    }

    fn slot_color(&self, slot: usize) -> Option<Color> {
        match self {
            Host::Coloring(_) => Some(if slot == 0 { Color::Red } else { Color::Blue }),
            Host::Graph(_) => None,
        }
    }
}

/// Per-cell record of a finished (or partial) run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeletionTrace {
    pub spec: PathSpec,
    pub n_vertices: usize,
    pub steps_run: usize,
    /// Whether the counting argument guarantees a survivor for this host size.
    pub guaranteed: bool,
    /// The run was performed on the reversed host.
    pub reversed: bool,
    statuses: Vec<CellStatus>,
}

impl DeletionTrace {
    pub fn status(&self, i: usize, j: usize) -> CellStatus {
        let (x, y) = (i.min(j), i.max(j));
        self.statuses[x * (self.n_vertices + 1) + y]
    }

    /// Every pair `(i, j)`, `i < j`, with its status, lexicographically.
    pub fn cells(&self) -> impl Iterator<Item = ((usize, usize), CellStatus)> + '_ {
        let n = self.n_vertices;
        (1..=n).flat_map(move |x| (x + 1..=n).map(move |y| ((x, y), self.status(x, y))))
    }

    pub fn survivors(&self) -> Vec<(usize, usize)> {
        self.cells()
            .filter(|(_, s)| *s == CellStatus::Survived)
            .map(|(c, _)| c)
            .collect()
    }

    pub fn removed_count(&self) -> usize {
        self.cells()
            .filter(|(_, s)| matches!(s, CellStatus::Removed { .. }))
            .count()
    }

    pub fn grey_count(&self) -> usize {
        self.cells().filter(|(_, s)| *s == CellStatus::Grey).count()
    }
}

/// A certified copy together with the run that produced it.
#[derive(Debug, Clone)]
pub struct Found {
    pub certificate: PathCertificate,
    pub trace: DeletionTrace,
}

/// A deletion run in progress. Steps can be executed one at a time so the
/// coverage invariant can be inspected between them.
pub struct DeletionRun<'a> {
    scheme: &'a DeletionScheme,
    host: Host<'a>,
    width: usize,
    statuses: Vec<CellStatus>,
    // records[(step - 1, v, slot)] = other endpoint of the edge v deleted
    records: Vec<usize>,
    steps_run: usize,
}

impl<'a> DeletionRun<'a> {
    pub fn new(scheme: &'a DeletionScheme, host: Host<'a>) -> Result<Self> {
        let n = scheme.n_vertices;
        if host.n_vertices() != n {
            return Err(Error::InvariantViolation(format!(
                "scheme built for N={n}, host has {} vertices",
                host.n_vertices()
            )));
        }
        let width = n + 1;
        let mut statuses = vec![CellStatus::OutOfScope; width * width];
        for x in 1..=n {
            for y in x + 1..=n {
                if scheme.in_scope(x, y) {
                    statuses[x * width + y] = match host.slot(x, y) {
                        Some(_) => CellStatus::Survived,
                        None => CellStatus::Absent,
                    };
                }
            }
        }
        for &(x, y) in &scheme.grey {
            let cell = &mut statuses[x * width + y];
            if *cell == CellStatus::Survived {
                *cell = CellStatus::Grey;
            }
        }
        let records = vec![0; scheme.steps.len() * width * 2];
        Ok(DeletionRun {
            scheme,
            host,
            width,
            statuses,
            records,
            steps_run: 0,
        })
    }

    pub fn steps_run(&self) -> usize {
        self.steps_run
    }

    pub fn is_finished(&self) -> bool {
        self.steps_run == self.scheme.steps.len()
    }

    #[inline]
    fn cell(&self, u: usize, v: usize) -> usize {
        u.min(v) * self.width + u.max(v)
    }

    /// Runs the next step; returns its number, or `None` when all have run.
    pub fn step(&mut self) -> Option<usize> {
        let step = *self.scheme.steps.get(self.steps_run)?;
        // an A-vertex is the smaller endpoint of its edges, a B-vertex the larger
        let other = match step.side {
            Side::A => self.scheme.class_b,
            Side::B => self.scheme.class_a,
        };
        let classes = self.host.classes();
        for v in step.interval.iter() {
            let partners = match step.side {
                Side::A => Interval::new(other.lo.max(v + 1), other.hi),
                Side::B => Interval::new(other.lo, other.hi.min(v - 1)),
            };
            for slot in 0..classes {
                let pick = match step.direction {
                    Direction::Leftmost => partners.iter().find(|&w| self.removable(v, w, slot)),
                    Direction::Rightmost => partners.iter().rev().find(|&w| self.removable(v, w, slot)),
                };
                if let Some(w) = pick {
                    let cell = self.cell(v, w);
                    self.statuses[cell] = CellStatus::Removed {
                        step: step.index,
                        color: self.host.slot_color(slot),
                        by: v,
                    };
                    let r = self.record_index(step.index, v, slot);
                    self.records[r] = w;
                }
            }
        }
        self.steps_run += 1;
        Some(step.index)
    }

    #[inline]
    fn removable(&self, v: usize, w: usize, slot: usize) -> bool {
        v != w
            && self.statuses[self.cell(v, w)] == CellStatus::Survived
            && self.scheme.in_scope(v.min(w), v.max(w))
            && self.host.slot(v, w) == Some(slot)
    }

    #[inline]
    fn record_index(&self, step: usize, v: usize, slot: usize) -> usize {
        ((step - 1) * self.width + v) * 2 + slot
    }

    pub fn run_to_end(&mut self) {
        while self.step().is_some() {}
    }

    pub fn status(&self, i: usize, j: usize) -> CellStatus {
        self.statuses[self.cell(i, j)]
    }

    /// Checks that every cell covered by the steps run so far is grey,
    /// removed, or not an edge.
    pub fn coverage_holds(&self) -> bool {
        self.coverage_violation().is_none()
    }

    /// First covered cell that is still present, if any.
    pub fn coverage_violation(&self) -> Option<(usize, usize)> {
        self.scheme.coverage[..self.steps_run]
            .iter()
            .find_map(|cover| self.cover_violation(cover))
    }

    /// Cells only leave the `Survived` state, so after a step it is enough
    /// to check the region that step adds.
    fn latest_violation(&self) -> Option<(usize, usize)> {
        self.scheme.coverage[..self.steps_run]
            .last()
            .and_then(|cover| self.cover_violation(cover))
    }

    fn cover_violation(&self, cover: &Cover) -> Option<(usize, usize)> {
        let n = self.scheme.n_vertices;
        let survived = |x: usize, y: usize| self.statuses[x * self.width + y] == CellStatus::Survived;
        match *cover {
            Cover::Smaller(iv) => iv
                .iter()
                .flat_map(|x| (x + 1..=n).map(move |y| (x, y)))
                .find(|&(x, y)| survived(x, y)),
            Cover::Larger(iv) => iv
                .iter()
                .flat_map(|y| (1..y).map(move |x| (x, y)))
                .find(|&(x, y)| survived(x, y)),
        }
    }

    pub fn survivors(&self) -> Vec<(usize, usize)> {
        let n = self.scheme.n_vertices;
        (1..=n)
            .flat_map(|x| (x + 1..=n).map(move |y| (x, y)))
            .filter(|&(x, y)| self.statuses[x * self.width + y] == CellStatus::Survived)
            .collect()
    }

    /// Rebuilds a copy of the path ending in the surviving edge `(x, y)` by
    /// following, for `k = n-1, ..., 2`, the edge that `v_k` deleted in
    /// step `k - 1`.
    pub fn backtrack(&self, x: usize, y: usize) -> Result<PathCertificate> {
        if !self.is_finished() {
            return Err(Error::InvariantViolation("backtracking before the last step".into()));
        }
        if self.status(x, y) != CellStatus::Survived {
            return Err(Error::InvariantViolation(format!("({x}, {y}) did not survive")));
        }
        let slot = self.host.slot(x, y).expect("surviving cells are edges");
        let n = self.scheme.spec.n();
        let steps = &self.scheme.steps;
        // v_{n-1} acted in the last step; the A-side endpoint is the smaller one
        let (mut cur, last) = match steps.last().map(|s| s.side) {
            Some(Side::B) => (y, x),
            _ => (x, y),
        };
        let mut rev = vec![last, cur];
        for k in (2..n).rev() {
            let step = k - 1;
            let w = self.records[self.record_index(step, cur, slot)];
            if w == 0 {
                return Err(Error::InvariantViolation(format!(
                    "vertex {cur} deleted no {} edge in step {step}",
                    self.host.slot_color(slot).map_or("".into(), |c| c.to_string())
                )));
            }
            rev.push(w);
            cur = w;
        }
        rev.reverse();
        let cert = PathCertificate::new(self.scheme.spec, rev, self.host.slot_color(slot));
        let checked = match self.host {
            Host::Coloring(c) => cert.validate_in_coloring(c),
            Host::Graph(g) => cert.validate_in_graph(g),
        };
        checked.map_err(|e| Error::InvariantViolation(format!("backtracked sequence {:?}: {e}", cert.vertices)))?;
        Ok(cert)
    }

    pub fn into_trace(self, guaranteed: bool) -> DeletionTrace {
        DeletionTrace {
            spec: self.scheme.spec,
            n_vertices: self.scheme.n_vertices,
            steps_run: self.steps_run,
            guaranteed,
            reversed: false,
            statuses: self.statuses,
        }
    }
}

/// Runs every step and backtracks from the first surviving edge.
///
/// Returns `Ok(None)` when nothing survives. A survivor that fails to
/// backtrack into a valid copy is reported as an invariant violation.
pub fn run_scheme(scheme: &DeletionScheme, host: Host<'_>, guaranteed: bool) -> Result<Option<Found>> {
    let mut run = DeletionRun::new(scheme, host)?;
    while run.step().is_some() {
        if let Some((x, y)) = run.latest_violation() {
            return Err(Error::InvariantViolation(format!(
                "cell ({x}, {y}) still present after step {}",
                run.steps_run()
            )));
        }
    }
    let Some(&(x, y)) = run.survivors().first() else {
        if guaranteed {
            return Err(Error::InvariantViolation(
                "no edge survived although the counting bound guarantees one".into(),
            ));
        }
        return Ok(None);
    };
    let certificate = run.backtrack(x, y)?;
    Ok(Some(Found {
        certificate,
        trace: run.into_trace(guaranteed),
    }))
}

/// Marks a trace produced on the reversed host.
pub(crate) fn mark_reversed(mut found: Found, n_vertices: usize) -> Result<Found> {
    found.certificate = found.certificate.reversed(n_vertices)?;
    found.trace.reversed = true;
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_clamping() {
        assert!(Interval::clamped(5, 3, 10).is_empty());
        assert_eq!(Interval::clamped(-2, 20, 10), Interval::new(1, 10));
        assert_eq!(Interval::new(3, 7).len(), 5);
    }
}
