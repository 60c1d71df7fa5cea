//! Exhaustive searches for small ordered Ramsey and Turán values.
//!
//! Both searches work on `u128` edge masks indexed by lexicographic edge id,
//! so hosts are limited to 16 vertices. Every `n`-subset of `[N]` carries
//! exactly one copy of the target path, and the [`CopyTable`] lists the
//! edge mask of each.

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::contain::{contains_mono_path, contains_path, copy_on, for_each_subset};
use crate::error::{Error, Result};
use crate::graph::{edge_from_id, edge_id, pair_count, Color, OrderedColoring, OrderedGraph};
use crate::path::{PathFamily, PathSpec};
use crate::ramsey::{ramsey_upper_bound_ap, ramsey_upper_bound_halves};

/// Largest host the mask-based searches accept.
pub const MAX_SEARCH_VERTICES: usize = 16;

pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000_000;

/// Order in which edges are decided.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EdgeOrder {
    /// `(1,2), (1,3), ..., (N-1,N)`.
    #[default]
    Lexicographic,
    /// By length `j - i`, then by `i`.
    Diagonal,
    /// At every node, the undecided edge lying in the most partially
    /// decided copies, weighted by how many of their edges are decided.
    /// Ties go to the smaller id. Only the Ramsey search uses it; the Turán
    /// search treats it as lexicographic.
    Constrained,
}

impl EdgeOrder {
    fn ids(self, n_vertices: usize) -> Vec<usize> {
        let mut ids: Vec<usize> = (0..pair_count(n_vertices)).collect();
        if self == EdgeOrder::Diagonal {
            ids.sort_by_key(|&id| {
                let (i, j) = edge_from_id(n_vertices, id);
                (j - i, i)
            });
        }
        ids
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub node_budget: u64,
    /// 1 runs the search on the calling thread.
    pub threads: usize,
    /// Number of decisions made before the frontier is split across threads.
    pub split_depth: usize,
    pub order: EdgeOrder,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            node_budget: DEFAULT_NODE_BUDGET,
            threads: 1,
            split_depth: 8,
            order: EdgeOrder::Lexicographic,
        }
    }
}

/// Edge masks of every copy of a path in `K_N`, with an index from edges
/// to the copies through them.
#[derive(Debug, Clone)]
pub struct CopyTable {
    spec: PathSpec,
    n_vertices: usize,
    copies: Vec<u128>,
    by_edge: Vec<Vec<u32>>,
}

impl CopyTable {
    pub fn new(spec: &PathSpec, n_vertices: usize) -> Result<Self> {
        if n_vertices > MAX_SEARCH_VERTICES {
            return Err(Error::SizeLimitExceeded {
                cap: MAX_SEARCH_VERTICES,
                actual: n_vertices,
            });
        }
        let mut copies = Vec::new();
        let mut by_edge = vec![Vec::new(); pair_count(n_vertices)];
        for_each_subset(n_vertices, spec.n(), |s| {
            let seq = copy_on(spec, s);
            let mut mask = 0u128;
            for w in seq.windows(2) {
                let id = edge_id(n_vertices, w[0].min(w[1]), w[0].max(w[1]));
                mask |= 1 << id;
                by_edge[id].push(copies.len() as u32);
            }
            copies.push(mask);
        });
        Ok(CopyTable {
            spec: *spec,
            n_vertices,
            copies,
            by_edge,
        })
    }

    pub fn spec(&self) -> &PathSpec {
        &self.spec
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn edge_count(&self) -> usize {
        pair_count(self.n_vertices)
    }

    pub fn copies(&self) -> &[u128] {
        &self.copies
    }

    pub fn through(&self, edge: usize) -> &[u32] {
        &self.by_edge[edge]
    }

    /// Index of the first copy whose edges all lie in `mask`.
    pub fn first_contained(&self, mask: u128) -> Option<usize> {
        self.copies.iter().position(|&c| c & !mask == 0)
    }

    fn full_mask(&self) -> u128 {
        let e = self.edge_count();
        if e == 128 {
            u128::MAX
        } else {
            (1u128 << e) - 1
        }
    }
}

/// Outcome of probing a single host size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RamseyOutcome {
    /// A coloring with no monochromatic copy.
    WitnessFound(OrderedColoring),
    /// Every coloring has a monochromatic copy.
    Exhausted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymmetryMode {
    /// The first decided edge is always red.
    pub color_swap: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RamseySearchResult {
    pub n_vertices: usize,
    pub outcome: RamseyOutcome,
    pub nodes_explored: u64,
    pub symmetry_mode: SymmetryMode,
}

impl RamseySearchResult {
    pub fn witness(&self) -> Option<&OrderedColoring> {
        match &self.outcome {
            RamseyOutcome::WitnessFound(c) => Some(c),
            RamseyOutcome::Exhausted => None,
        }
    }

    pub fn is_exhausted(&self) -> bool {
        self.outcome == RamseyOutcome::Exhausted
    }
}

/// `[red, blue]` masks of decided edges.
type Masks = [u128; 2];

const FLUSH_EVERY: u64 = 4096;

struct Counter<'a> {
    shared: &'a AtomicU64,
    local: u64,
    budget: u64,
}

impl Counter<'_> {
    #[inline]
    fn tick(&mut self) -> Result<()> {
        self.local += 1;
        if self.local > self.budget {
            return Err(Error::ResourceLimit { budget: self.budget });
        }
        if self.local.is_multiple_of(FLUSH_EVERY) {
            let total = self.shared.fetch_add(FLUSH_EVERY, Ordering::Relaxed) + FLUSH_EVERY;
            if total > self.budget {
                return Err(Error::ResourceLimit { budget: self.budget });
            }
        }
        Ok(())
    }

    fn finish(&mut self) {
        self.shared.fetch_add(self.local % FLUSH_EVERY, Ordering::Relaxed);
        self.local = 0;
    }
}

/// Stops a subtree once a witness turns up in an earlier one.
struct Cutoff<'a> {
    best: &'a AtomicUsize,
    index: usize,
}

struct RamseyDfs<'a> {
    table: &'a CopyTable,
    order: &'a [usize],
    dynamic: bool,
    queue: Vec<(usize, usize)>,
}

enum Stop {
    Error(Error),
    Cut,
}

impl From<Error> for Stop {
    fn from(e: Error) -> Self {
        Stop::Error(e)
    }
}

impl RamseyDfs<'_> {
    /// Colors edge `e`, then every edge forced by a copy with one
    /// undecided edge and all others of one color. `false` on a
    /// monochromatic copy.
    fn assign(&mut self, st: &mut Masks, e: usize, color: usize) -> bool {
        self.queue.clear();
        self.queue.push((e, color));
        while let Some((e, c)) = self.queue.pop() {
            let bit = 1u128 << e;
            if st[c] & bit != 0 {
                continue;
            }
            if st[1 - c] & bit != 0 {
                return false;
            }
            st[c] |= bit;
            for &ci in &self.table.by_edge[e] {
                let m = self.table.copies[ci as usize];
                if m & st[1 - c] != 0 {
                    continue;
                }
                let rest = m & !st[c];
                if rest == 0 {
                    return false;
                }
                if rest & (rest - 1) == 0 {
                    self.queue.push((rest.trailing_zeros() as usize, 1 - c));
                }
            }
        }
        true
    }

    fn next_free(&self, st: &Masks, mut pos: usize) -> usize {
        let decided = st[0] | st[1];
        while pos < self.order.len() && decided >> self.order[pos] & 1 == 1 {
            pos += 1;
        }
        pos
    }

    /// Next edge to decide and the order position to resume from.
    fn choose(&self, st: &Masks, pos: usize) -> Option<(usize, usize)> {
        if !self.dynamic {
            let pos = self.next_free(st, pos);
            return (pos < self.order.len()).then(|| (self.order[pos], pos + 1));
        }
        let decided = st[0] | st[1];
        let mut best: Option<(u64, usize)> = None;
        for e in 0..self.table.by_edge.len() {
            if decided >> e & 1 == 1 {
                continue;
            }
            let mut score = 0u64;
            for &ci in &self.table.by_edge[e] {
                let m = self.table.copies[ci as usize];
                if m & st[0] != 0 && m & st[1] != 0 {
                    continue;
                }
                score += 1 << (2 * (m & decided).count_ones());
            }
            if best.is_none_or(|(b, _)| score > b) {
                best = Some((score, e));
            }
        }
        best.map(|(_, e)| (e, pos))
    }

    fn colors(first: bool) -> &'static [usize] {
        if first {
            &[0]
        } else {
            &[0, 1]
        }
    }

    fn dfs(
        &mut self,
        st: Masks,
        pos: usize,
        first: bool,
        counter: &mut Counter,
        cutoff: Option<&Cutoff>,
    ) -> std::result::Result<Option<Masks>, Stop> {
        let Some((e, pos)) = self.choose(&st, pos) else {
            return Ok(Some(st));
        };
        if let Some(cut) = cutoff {
            if cut.best.load(Ordering::Relaxed) < cut.index {
                return Err(Stop::Cut);
            }
        }
        for &c in Self::colors(first) {
            counter.tick()?;
            let mut next = st;
            if self.assign(&mut next, e, c) {
                if let Some(w) = self.dfs(next, pos, false, counter, cutoff)? {
                    return Ok(Some(w));
                }
            }
        }
        Ok(None)
    }

    /// States after `depth` decisions, in DFS order. A witness reached
    /// before that depth is returned directly.
    fn frontier(
        &mut self,
        st: Masks,
        pos: usize,
        first: bool,
        depth: usize,
        counter: &mut Counter,
        out: &mut Vec<(Masks, usize, bool)>,
    ) -> Result<Option<Masks>> {
        let Some((e, next_pos)) = self.choose(&st, pos) else {
            return Ok(Some(st));
        };
        if depth == 0 {
            out.push((st, pos, first));
            return Ok(None);
        }
        for &c in Self::colors(first) {
            counter.tick()?;
            let mut next = st;
            if self.assign(&mut next, e, c) {
                if let Some(w) = self.frontier(next, next_pos, false, depth - 1, counter, out)? {
                    return Ok(Some(w));
                }
            }
        }
        Ok(None)
    }
}

fn coloring_from(n_vertices: usize, red: u128) -> OrderedColoring {
    OrderedColoring::from_red_graph(OrderedGraph::from_mask(n_vertices, red))
}

/// Depth-first search for a coloring of `K_N` with no monochromatic copy
/// of `spec`.
///
/// Edges are colored in `config.order`, red before blue, and each choice
/// is followed by unit propagation over the copy table. The first choice is
/// always red. A witness is re-checked with the containment DP before it is
/// returned.
pub fn search_ramsey_witness(spec: &PathSpec, n_vertices: usize, config: &SearchConfig) -> Result<RamseySearchResult> {
    let table = CopyTable::new(spec, n_vertices)?;
    let order = config.order.ids(n_vertices);
    let shared = AtomicU64::new(0);
    let mut counter = Counter {
        shared: &shared,
        local: 0,
        budget: config.node_budget,
    };
    let mut dfs = RamseyDfs {
        table: &table,
        order: &order,
        dynamic: config.order == EdgeOrder::Constrained,
        queue: Vec::new(),
    };

    let found = if config.threads <= 1 {
        let r = dfs.dfs([0, 0], 0, true, &mut counter, None);
        counter.finish();
        match r {
            Ok(w) => w,
            Err(Stop::Error(e)) => return Err(e),
            Err(Stop::Cut) => unreachable!("no cutoff without threads"),
        }
    } else {
        let mut frontier = Vec::new();
        let early = dfs.frontier([0, 0], 0, true, config.split_depth, &mut counter, &mut frontier);
        counter.finish();
        match early? {
            Some(w) => Some(w),
            None => parallel_search(&table, &order, &frontier, config, &shared)?,
        }
    };

    let outcome = match found {
        Some([red, _]) => {
            let c = coloring_from(n_vertices, red);
            for color in [Color::Red, Color::Blue] {
                if let Some(cert) = contains_mono_path(&c, spec, color) {
                    return Err(Error::InvariantViolation(format!(
                        "search witness contains {color} copy {:?}",
                        cert.vertices
                    )));
                }
            }
            RamseyOutcome::WitnessFound(c)
        }
        None => RamseyOutcome::Exhausted,
    };
    Ok(RamseySearchResult {
        n_vertices,
        outcome,
        nodes_explored: shared.load(Ordering::Relaxed),
        symmetry_mode: SymmetryMode { color_swap: true },
    })
}

fn parallel_search(
    table: &CopyTable,
    order: &[usize],
    frontier: &[(Masks, usize, bool)],
    config: &SearchConfig,
    shared: &AtomicU64,
) -> Result<Option<Masks>> {
    let best = AtomicUsize::new(usize::MAX);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.threads)
        .build()
        .map_err(|e| Error::InvalidSpec(format!("thread pool: {e}")))?;
    let results: Vec<std::result::Result<Option<Masks>, Stop>> = pool.install(|| {
        frontier
            .par_iter()
            .enumerate()
            .map(|(index, &(st, pos, first))| {
                if best.load(Ordering::Relaxed) < index {
                    return Err(Stop::Cut);
                }
                let mut counter = Counter {
                    shared,
                    local: 0,
                    budget: config.node_budget,
                };
                let mut dfs = RamseyDfs {
                    table,
                    order,
                    dynamic: config.order == EdgeOrder::Constrained,
                    queue: Vec::new(),
                };
                let cutoff = Cutoff { best: &best, index };
                let r = dfs.dfs(st, pos, first, &mut counter, Some(&cutoff));
                counter.finish();
                if let Ok(Some(_)) = r {
                    best.fetch_min(index, Ordering::Relaxed);
                }
                r
            })
            .collect()
    });
    // the witness of the earliest subtree is the one a sequential run finds
    let mut limit = None;
    for r in results {
        match r {
            Ok(Some(w)) => return Ok(Some(w)),
            Ok(None) | Err(Stop::Cut) => {}
            Err(Stop::Error(e)) => {
                limit.get_or_insert(e);
            }
        }
    }
    match limit {
        Some(e) => Err(e),
        None => Ok(None),
    }
}

/// Exact Ramsey value with both certificates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RamseyExact {
    pub value: usize,
    /// Coloring of `K_{value-1}` with no monochromatic copy.
    pub witness: OrderedColoring,
    /// Nodes explored in the exhausting search at `value`.
    pub exhaustion_nodes: u64,
}

/// Default search window for `spec`: from `5 floor(n/2) - 4` (or `n` for
/// families other than the alternating path) up to the proven upper bound.
pub fn default_window(spec: &PathSpec) -> Result<(usize, usize)> {
    let n = spec.n();
    match spec.family() {
        PathFamily::Ap | PathFamily::Pgl => Ok(((5 * (n / 2)).saturating_sub(4).max(1), ramsey_upper_bound_ap(n)?)),
        PathFamily::Pll | PathFamily::Pgg => Ok((n, ramsey_upper_bound_halves(n)?)),
        PathFamily::Mp => Err(Error::InvalidSpec("no default search window for the monotone path".into())),
    }
}

/// Smallest `N` in `[lo, hi]` at which the search is exhausted, with a
/// witness at `N - 1`.
pub fn compute_ramsey_exact(spec: &PathSpec, window: Option<(usize, usize)>, config: &SearchConfig) -> Result<RamseyExact> {
    let (lo, hi) = match window {
        Some(w) => w,
        None => default_window(spec)?,
    };
    let miss = Error::WindowMiss { lo, hi };
    if lo > hi || hi > MAX_SEARCH_VERTICES {
        return Err(miss);
    }
    let mut witness: Option<OrderedColoring> = None;
    for nv in lo.max(1)..=hi {
        let r = search_ramsey_witness(spec, nv, config)?;
        match r.outcome {
            RamseyOutcome::WitnessFound(c) => witness = Some(c),
            RamseyOutcome::Exhausted => {
                let witness = match witness {
                    Some(w) => w,
                    None if nv == 1 => OrderedColoring::monochromatic(0, Color::Red),
                    None => match search_ramsey_witness(spec, nv - 1, config)?.outcome {
                        RamseyOutcome::WitnessFound(c) => c,
                        RamseyOutcome::Exhausted => return Err(miss),
                    },
                };
                return Ok(RamseyExact {
                    value: nv,
                    witness,
                    exhaustion_nodes: r.nodes_explored,
                });
            }
        }
    }
    Err(miss)
}

/// How the optimum of a Turán search was certified.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Optimality {
    /// Every subgraph of `K_N` was checked.
    Exhaustive,
    /// Every branch was explored or cut by an upper bound.
    BranchAndBound,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TuranSearchResult {
    pub max_edges: usize,
    pub witness: OrderedGraph,
    pub proof_of_optimality: Optimality,
    pub nodes_explored: u64,
}

/// Largest `C(N, 2)` for which every subgraph is enumerated.
pub const EXHAUSTIVE_EDGE_LIMIT: usize = 15;

/// Maximum number of edges of an ordered graph on `[N]` with no copy of
/// `spec`.
pub fn search_turan_max(spec: &PathSpec, n_vertices: usize, config: &SearchConfig) -> Result<TuranSearchResult> {
    let table = CopyTable::new(spec, n_vertices)?;
    let result = if table.edge_count() <= EXHAUSTIVE_EDGE_LIMIT {
        turan_exhaustive(&table)
    } else {
        turan_branch_and_bound(&table, config)?
    };
    if let Some(cert) = contains_path(&result.witness, spec) {
        return Err(Error::InvariantViolation(format!(
            "Turán witness contains {spec} at {:?}",
            cert.vertices
        )));
    }
    Ok(result)
}

fn turan_exhaustive(table: &CopyTable) -> TuranSearchResult {
    let edges = table.edge_count();
    let mut best = (0, 0u128);
    for mask in 0..1u128 << edges {
        let count = mask.count_ones() as usize;
        if count > best.0 && table.first_contained(mask).is_none() {
            best = (count, mask);
        }
    }
    TuranSearchResult {
        max_edges: best.0,
        witness: OrderedGraph::from_mask(table.n_vertices(), best.1),
        proof_of_optimality: Optimality::Exhaustive,
        nodes_explored: 1 << edges,
    }
}

struct TuranBnb<'a> {
    table: &'a CopyTable,
    order: Vec<usize>,
    full: u128,
    best: u32,
    best_mask: u128,
    nodes: u64,
    budget: u64,
}

impl TuranBnb<'_> {
    /// Adds `e`; `None` when that completes a copy. Any copy left with a
    /// single undecided edge and the rest included loses that edge.
    fn include(&self, inc: u128, exc: u128, e: usize) -> Option<(u128, u128)> {
        let inc = inc | 1 << e;
        let mut exc = exc;
        for &ci in self.table.through(e) {
            let m = self.table.copies[ci as usize];
            if m & exc != 0 {
                continue;
            }
            let rest = m & !inc;
            if rest == 0 {
                return None;
            }
            if rest & (rest - 1) == 0 {
                exc |= rest;
            }
        }
        Some((inc, exc))
    }

    /// Included plus undecided edges, minus one for each copy in a greedy
    /// family of live copies with pairwise disjoint undecided parts.
    fn upper_bound(&self, inc: u128, exc: u128) -> u32 {
        let und = self.full & !inc & !exc;
        let mut used = 0u128;
        let mut packed = 0;
        let n = self.table.spec().n();
        for k in 1..n {
            for &m in &self.table.copies {
                if m & exc != 0 {
                    continue;
                }
                let u = m & und;
                if u.count_ones() as usize == k && u & used == 0 {
                    used |= u;
                    packed += 1;
                }
            }
        }
        inc.count_ones() + und.count_ones() - packed
    }

    fn dfs(&mut self, inc: u128, exc: u128, pos: usize) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::ResourceLimit { budget: self.budget });
        }
        let decided = inc | exc;
        let mut pos = pos;
        while pos < self.order.len() && decided >> self.order[pos] & 1 == 1 {
            pos += 1;
        }
        if pos == self.order.len() {
            if inc.count_ones() > self.best {
                self.best = inc.count_ones();
                self.best_mask = inc;
            }
            return Ok(());
        }
        if self.upper_bound(inc, exc) <= self.best {
            return Ok(());
        }
        let e = self.order[pos];
        if let Some((i2, e2)) = self.include(inc, exc, e) {
            self.dfs(i2, e2, pos + 1)?;
        }
        self.dfs(inc, exc | 1 << e, pos + 1)
    }
}

fn turan_branch_and_bound(table: &CopyTable, config: &SearchConfig) -> Result<TuranSearchResult> {
    let mut bnb = TuranBnb {
        table,
        order: config.order.ids(table.n_vertices()),
        full: table.full_mask(),
        best: 0,
        best_mask: 0,
        nodes: 0,
        budget: config.node_budget,
    };
    bnb.dfs(0, 0, 0)?;
    Ok(TuranSearchResult {
        max_edges: bnb.best as usize,
        witness: OrderedGraph::from_mask(table.n_vertices(), bnb.best_mask),
        proof_of_optimality: Optimality::BranchAndBound,
        nodes_explored: bnb.nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn copy_table_sizes() {
        let t = CopyTable::new(&PathSpec::ap(4).unwrap(), 6).unwrap();
        assert_eq!(t.copies().len(), 15);
        assert!(t.copies().iter().all(|m| m.count_ones() == 3));
        assert!(CopyTable::new(&PathSpec::ap(4).unwrap(), 17).is_err());
    }

    #[test]
    fn small_ramsey_probes() {
        let cfg = SearchConfig::default();
        let ap = |n| PathSpec::ap(n).unwrap();
        assert!(search_ramsey_witness(&ap(2), 2, &cfg).unwrap().is_exhausted());
        assert!(search_ramsey_witness(&ap(2), 1, &cfg).unwrap().witness().is_some());
        assert!(search_ramsey_witness(&ap(3), 3, &cfg).unwrap().witness().is_some());
        assert!(search_ramsey_witness(&ap(3), 4, &cfg).unwrap().is_exhausted());
        assert!(search_ramsey_witness(&ap(4), 6, &cfg).unwrap().witness().is_some());
        assert!(search_ramsey_witness(&ap(4), 7, &cfg).unwrap().is_exhausted());
    }

    #[test]
    fn constrained_order_agrees() {
        let cfg = SearchConfig {
            order: EdgeOrder::Constrained,
            ..SearchConfig::default()
        };
        for (n, want) in [(2, 2), (3, 4), (4, 7), (5, 9), (6, 12)] {
            let r = compute_ramsey_exact(&PathSpec::ap(n).unwrap(), None, &cfg).unwrap();
            assert_eq!(r.value, want, "n={n}");
        }
        let par = SearchConfig {
            threads: 3,
            split_depth: 4,
            ..cfg
        };
        let spec = PathSpec::ap(5).unwrap();
        let a = search_ramsey_witness(&spec, 8, &cfg).unwrap();
        let b = search_ramsey_witness(&spec, 8, &par).unwrap();
        assert_eq!(a.outcome, b.outcome);
        assert!(search_ramsey_witness(&spec, 9, &par).unwrap().is_exhausted());
    }

    #[test]
    fn budget_is_enforced() {
        let cfg = SearchConfig {
            node_budget: 10,
            ..SearchConfig::default()
        };
        let r = search_ramsey_witness(&PathSpec::ap(5).unwrap(), 9, &cfg);
        assert!(matches!(r, Err(Error::ResourceLimit { budget: 10 })));
    }

    #[test]
    fn small_turan_values() {
        let cfg = SearchConfig::default();
        let r = search_turan_max(&PathSpec::ap(4).unwrap(), 5, &cfg).unwrap();
        assert_eq!(r.max_edges, 3 + 2 * 2);
        assert_eq!(r.proof_of_optimality, Optimality::Exhaustive);
        let r = search_turan_max(&PathSpec::ap(4).unwrap(), 6, &cfg).unwrap();
        assert_eq!(r.max_edges, 9);
        assert_eq!(r.proof_of_optimality, Optimality::Exhaustive);
        let r = search_turan_max(&PathSpec::ap(4).unwrap(), 7, &cfg).unwrap();
        assert_eq!(r.max_edges, 3 + 2 * 4);
        assert_eq!(r.proof_of_optimality, Optimality::BranchAndBound);
    }
}
