//! Ordered Turán numbers of the alternating path and its relatives.
//!
//! The single-graph finder runs the deletion engine with both classes equal
//! to `[1, N]`, one edge per acting vertex per step. The bipartite finder
//! reuses the Ramsey schedules on the halves `[1, M]` and `[M+1, 2M]`.

use crate::deletion::{mark_reversed, run_scheme, Cover, DeletionScheme, Direction, Found, Host, Interval, Side, Step};
use crate::error::{Error, Result};
use crate::graph::OrderedGraph;
use crate::path::{PathFamily, PathSpec};
use crate::ramsey::{ap_scheme, HalvesConfig, Mode};

fn binom2(m: u64) -> u64 {
    m * m.saturating_sub(1) / 2
}

fn check_host(n_vertices: usize, n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidSpec(format!("n must be at least 2, got {n}")));
    }
    if n_vertices < n {
        return Err(Error::InvalidSpec(format!("host size {n_vertices} is below path length {n}")));
    }
    Ok(())
}

/// `C(n-1, 2) + (n-2)(N-n+1)`.
pub fn turan_number_ap(n_vertices: usize, n: usize) -> Result<u64> {
    check_host(n_vertices, n)?;
    let (nv, n) = (n_vertices as u64, n as u64);
    Ok(binom2(n - 1) + (n - 2) * (nv - n + 1))
}

/// Pairs that lie in no copy of the alternating path on `[N]`: `(i, j)`
/// with `i <= floor(n/2)` and `i < j <= n - i`, and the mirror image
/// `(N+1-j, N+1-i)` with `i < ceil(n/2)` and `i < j <= n - 1 - i`.
pub fn grey_edges_turan(n_vertices: usize, n: usize) -> Result<Vec<(usize, usize)>> {
    check_host(n_vertices, n)?;
    let mut out = Vec::new();
    for i in 1..=n / 2 {
        for j in i + 1..=n - i {
            out.push((i, j));
        }
    }
    for i in 1..n.div_ceil(2) {
        for j in i + 1..n - i {
            out.push((n_vertices + 1 - j, n_vertices + 1 - i));
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Host size, path length, grey cells and schedule of the single-graph
/// deletion algorithm.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TuranConfig {
    pub n_vertices: usize,
    pub n: usize,
}

impl TuranConfig {
    pub fn new(n_vertices: usize, n: usize) -> Result<Self> {
        check_host(n_vertices, n)?;
        Ok(TuranConfig { n_vertices, n })
    }

    pub fn grey(&self) -> Vec<(usize, usize)> {
        grey_edges_turan(self.n_vertices, self.n).expect("validated in new")
    }

    /// `I_i = [n-i+1, N-i+1]` on odd steps (leftmost edge), `J_i =
    /// [i+1, N-n+i+1]` on even steps (rightmost edge).
    pub fn schedule(&self) -> Vec<Step> {
        let (n, nv) = (self.n as i64, self.n_vertices as i64);
        (1..=self.n - 2)
            .map(|index| {
                let i = index.div_ceil(2) as i64;
                if index % 2 == 1 {
                    Step {
                        index,
                        side: Side::B,
                        interval: Interval::clamped(n - i + 1, nv - i + 1, self.n_vertices),
                        direction: Direction::Leftmost,
                    }
                } else {
                    Step {
                        index,
                        side: Side::A,
                        interval: Interval::clamped(i + 1, nv - n + i + 1, self.n_vertices),
                        direction: Direction::Rightmost,
                    }
                }
            })
            .collect()
    }

    pub fn scheme(&self) -> DeletionScheme {
        let nv = self.n_vertices;
        DeletionScheme {
            spec: PathSpec::ap(self.n).expect("validated in new"),
            n_vertices: nv,
            class_a: Interval::new(1, nv),
            class_b: Interval::new(1, nv),
            grey: self.grey(),
            steps: self.schedule(),
            coverage: (1..=self.n - 2)
                .map(|index| {
                    let i = index.div_ceil(2);
                    if index % 2 == 1 {
                        Cover::Smaller(Interval::new(1, i))
                    } else {
                        Cover::Larger(Interval::new(nv + 1 - i, nv))
                    }
                })
                .collect(),
        }
    }
}

/// Finds an alternating path in a graph with more than
/// [`turan_number_ap`] edges.
pub fn find_ap_in_dense(g: &OrderedGraph, n: usize, mode: Mode) -> Result<Option<Found>> {
    let config = TuranConfig::new(g.n_vertices(), n)?;
    let threshold = turan_number_ap(g.n_vertices(), n)?;
    let edges = g.edge_count() as u64;
    let dense = edges > threshold;
    if !dense && mode == Mode::Strict {
        return Err(Error::TooSparse {
            required: threshold + 1,
            actual: edges,
        });
    }
    run_scheme(&config.scheme(), Host::Graph(g), dense)
}

/// [`find_ap_in_dense`] for the alternating path or, through reversal, for
/// `P^{>,<}`.
pub fn find_path_in_dense(g: &OrderedGraph, spec: &PathSpec, mode: Mode) -> Result<Option<Found>> {
    match spec.family() {
        PathFamily::Ap => find_ap_in_dense(g, spec.n(), mode),
        PathFamily::Pgl => find_ap_in_dense(&g.reverse(), spec.n(), mode)?
            .map(|f| mark_reversed(f, g.n_vertices()))
            .transpose(),
        _ => Err(Error::InvalidSpec(format!(
            "no single-graph deletion algorithm for {spec}; use the bipartite finder"
        ))),
    }
}

/// All edges touching `X = [1, ceil(n/2) - 1]` or `Y = [N - floor(n/2) + 2, N]`.
pub fn extremal_star(n_vertices: usize, n: usize) -> Result<OrderedGraph> {
    check_host(n_vertices, n)?;
    let x_hi = n.div_ceil(2) - 1;
    let y_lo = n_vertices + 2 - n / 2;
    Ok(OrderedGraph::from_fn(n_vertices, |i, j| i <= x_hi || j >= y_lo))
}

/// All edges `ij` with `j - i <= n - 2`.
pub fn extremal_band(n_vertices: usize, n: usize) -> Result<OrderedGraph> {
    check_host(n_vertices, n)?;
    Ok(OrderedGraph::from_fn(n_vertices, |i, j| j - i <= n - 2))
}

fn check_even(n_vertices: usize, n: usize) -> Result<()> {
    check_host(n_vertices, n)?;
    if n_vertices % 2 == 1 || n % 2 == 1 {
        return Err(Error::InvalidSpec(format!(
            "host size and path length must be even, got N={n_vertices}, n={n}"
        )));
    }
    Ok(())
}

/// Halves `A = [1, M]`, `B = [M+1, 2M]` and the family being avoided.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BipartiteConfig {
    pub spec: PathSpec,
    pub half: usize,
}

impl BipartiteConfig {
    pub fn new(n_vertices: usize, spec: PathSpec) -> Result<Self> {
        check_even(n_vertices, spec.n())?;
        if spec.family() == PathFamily::Mp {
            return Err(Error::InvalidSpec("the monotone path has no bipartite copy".into()));
        }
        Ok(BipartiteConfig {
            spec,
            half: n_vertices / 2,
        })
    }

    pub fn n_vertices(&self) -> usize {
        2 * self.half
    }

    pub fn k(&self) -> usize {
        self.spec.n() / 2
    }
}

/// `(n/2 - 1)(N - n/2 + 1)`, the same for all four families.
pub fn bipartite_turan_number(n_vertices: usize, n: usize) -> Result<u64> {
    check_even(n_vertices, n)?;
    let (nv, k) = (n_vertices as u64, (n / 2) as u64);
    Ok((k - 1) * (nv - k + 1))
}

/// The construction for `family`: every edge from a block of `k - 1`
/// vertices of `A` to `B`, plus every edge from `A` to a block of `k - 1`
/// vertices of `B`.
pub fn extremal_bipartite(n_vertices: usize, n: usize, family: PathFamily) -> Result<OrderedGraph> {
    let cfg = BipartiteConfig::new(n_vertices, PathSpec::new(family, n)?)?;
    let (m, k) = (cfg.half, cfg.k());
    let low_a = Interval::clamped(1, k as i64 - 1, m);
    let high_a = Interval::clamped((m + 2) as i64 - k as i64, m as i64, m);
    let low_b = Interval::new(m + 1, m + k - 1);
    let high_b = Interval::new(n_vertices + 2 - k, n_vertices);
    let (from_a, to_b) = match family {
        PathFamily::Pll => (low_a, low_b),
        PathFamily::Pgg => (high_a, high_b),
        PathFamily::Ap => (low_a, high_b),
        PathFamily::Pgl => (high_a, low_b),
        PathFamily::Mp => unreachable!("rejected by BipartiteConfig"),
    };
    Ok(OrderedGraph::from_fn(n_vertices, |i, j| {
        i <= m && j > m && (from_a.contains(i) || to_b.contains(j))
    }))
}

/// First edge not between the two halves, if any.
pub fn bipartite_violation(g: &OrderedGraph) -> Option<(usize, usize)> {
    let m = g.n_vertices() / 2;
    if g.n_vertices() % 2 == 1 {
        return g.edges().find(|&(_, j)| j == g.n_vertices());
    }
    g.edges().find(|&(i, j)| i > m || j <= m)
}

/// Finds a copy of `spec` in a graph whose edges all join `[1, M]` to
/// `[M+1, 2M]` and number more than [`bipartite_turan_number`].
pub fn find_path_bipartite(g: &OrderedGraph, spec: &PathSpec, mode: Mode) -> Result<Option<Found>> {
    let nv = g.n_vertices();
    let cfg = BipartiteConfig::new(nv, *spec)?;
    if let Some((i, j)) = bipartite_violation(g) {
        return Err(Error::NotBipartite(i, j));
    }
    let threshold = bipartite_turan_number(nv, spec.n())?;
    let edges = g.edge_count() as u64;
    let dense = edges > threshold;
    if !dense && mode == Mode::Strict {
        return Err(Error::TooSparse {
            required: threshold + 1,
            actual: edges,
        });
    }
    let (m, n) = (cfg.half, spec.n());
    match spec.family() {
        PathFamily::Ap => run_scheme(&ap_scheme(n, nv, m, m + 1)?, Host::Graph(g), dense),
        PathFamily::Pll | PathFamily::Pgg => {
            let scheme = HalvesConfig::new(*spec, m)?.scheme();
            run_scheme(&scheme, Host::Graph(g), dense)
        }
        PathFamily::Pgl => {
            let r = g.reverse();
            run_scheme(&ap_scheme(n, nv, m, m + 1)?, Host::Graph(&r), dense)?
                .map(|f| mark_reversed(f, nv))
                .transpose()
        }
        PathFamily::Mp => unreachable!("rejected by BipartiteConfig"),
    }
}

/// `t = 1 + floor(log2(N / n))`, i.e. the `t` with `2^(t-1) n <= N < 2^t n`.
fn log_level(n_vertices: usize, n: usize) -> u32 {
    let mut t = 1;
    while (n << t) <= n_vertices {
        t += 1;
    }
    t
}

/// `2^(t-1) n^2 (t + 1)` with `t = 1 + floor(log2(N/n))`: the bound for
/// the host size `2^t n` rounded up from `N`, at most `nN(log2(N/n) + 2)`.
pub fn turan_log_bound(n_vertices: usize, n: usize) -> Result<u64> {
    check_even(n_vertices, n)?;
    let t = log_level(n_vertices, n) as u64;
    let n = n as u64;
    Ok((1u64 << (t - 1)) * n * n * (t + 1))
}

/// `nN(log2(N/n) + 1) / 2` for `N / n` a power of two.
pub fn turan_log_bound_refined(n_vertices: usize, n: usize) -> Result<u64> {
    check_even(n_vertices, n)?;
    let t = log_level(n_vertices, n);
    if n << (t - 1) != n_vertices {
        return Err(Error::InvalidSpec(format!("N/n must be a power of two, got N={n_vertices}, n={n}")));
    }
    Ok(n as u64 * n_vertices as u64 * t as u64 / 2)
}

/// One level of `ex(N) <= 2 ex(N/2) + ex_bip(N/2, N/2)`, bottoming out at
/// `ex(n) <= C(n, 2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecursionNode {
    pub n_vertices: usize,
    pub value: u64,
    /// The bipartite term added at this level; `None` at a leaf.
    pub bipartite_term: Option<u64>,
    /// The two equal halves; empty at a leaf.
    pub children: Vec<RecursionNode>,
}

impl RecursionNode {
    pub fn depth(&self) -> usize {
        self.children.first().map_or(0, |c| 1 + c.depth())
    }
}

/// Unrolls the halving recursion down to `n` vertices.
pub fn turan_recursion_tree(n_vertices: usize, n: usize) -> Result<RecursionNode> {
    turan_log_bound_refined(n_vertices, n)?;
    Ok(unroll(n_vertices, n))
}

fn unroll(n_vertices: usize, n: usize) -> RecursionNode {
    if n_vertices == n {
        return RecursionNode {
            n_vertices,
            value: binom2(n as u64),
            bipartite_term: None,
            children: Vec::new(),
        };
    }
    let half = unroll(n_vertices / 2, n);
    let bip = bipartite_turan_number(n_vertices, n).expect("even sizes");
    RecursionNode {
        n_vertices,
        value: 2 * half.value + bip,
        bipartite_term: Some(bip),
        children: vec![half.clone(), half],
    }
}
