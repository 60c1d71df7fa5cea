//! Monochromatic path finders for red/blue colorings of `K_N`.
//!
//! For the alternating path the two classes are `A = [1, a]` and
//! `B = [n, N]`, which overlap when `a >= n`; for `P^{<,<}` and `P^{>,>}`
//! they are the two halves of `[1, 2M]`. In both cases the deletion engine
//! removes at most two edges per acting vertex per step, and the sizes are
//! chosen so that the removed and grey edges cannot exhaust `e(A, B)`.

use crate::deletion::{mark_reversed, run_scheme, Cover, DeletionScheme, Direction, Found, Host, Interval, Side, Step};
use crate::error::{Error, Result};
use crate::graph::OrderedColoring;
use crate::path::{PathFamily, PathSpec};

/// Whether a finder must honour the guaranteed host size or may run below it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    #[default]
    Strict,
    /// Run on any host with at least `n` vertices; report `None` when no
    /// edge survives.
    BestEffort,
}

fn binom2(m: u64) -> u64 {
    m * m.saturating_sub(1) / 2
}

/// `2n - 2 + floor((sqrt(2(n-2)^2 + (-1)^n) - 1) / 2)`, exactly.
pub fn ramsey_upper_bound_ap(n: usize) -> Result<usize> {
    if n < 2 {
        return Err(Error::InvalidSpec(format!("n must be at least 2, got {n}")));
    }
    let m = (n - 2) as u64;
    let radicand = if n.is_multiple_of(2) { 2 * m * m + 1 } else { 2 * m * m - 1 };
    // floor((sqrt(r) - 1) / 2) == floor((isqrt(r) - 1) / 2)
    let root = radicand.isqrt();
    Ok(2 * n - 2 + ((root - 1) / 2) as usize)
}

/// `3n - 4`, the host size that guarantees a monochromatic `P^{<,<}` or
/// `P^{>,>}` for even `n`.
pub fn ramsey_upper_bound_halves(n: usize) -> Result<usize> {
    if n < 2 || n % 2 == 1 {
        return Err(Error::InvalidSpec(format!("n must be even and at least 2, got {n}")));
    }
    Ok(3 * n - 4)
}

/// Sizes for the overlapping-classes argument on `N` vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RamseyConfig {
    pub n: usize,
    pub n_vertices: usize,
    /// Right end of `A = [1, a]`; `B = [n, N]`.
    pub a: usize,
}

impl RamseyConfig {
    /// The configuration at the guaranteed host size.
    pub fn tight(n: usize) -> Result<Self> {
        Self::for_host(n, ramsey_upper_bound_ap(n)?)
    }

    /// `a = N - n + 1` for even `n`, `N - n + 2` for odd `n`.
    pub fn for_host(n: usize, n_vertices: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidSpec(format!("n must be at least 2, got {n}")));
        }
        if n_vertices < n {
            return Err(Error::HostTooSmall {
                required: n,
                actual: n_vertices,
            });
        }
        let a = if n.is_multiple_of(2) { n_vertices + 1 - n } else { n_vertices + 2 - n }.min(n_vertices);
        Ok(RamseyConfig { n, n_vertices, a })
    }

    pub fn class_a(&self) -> Interval {
        Interval::new(1, self.a)
    }

    pub fn class_b(&self) -> Interval {
        Interval::new(self.n, self.n_vertices)
    }

    pub fn e_ab(&self) -> u64 {
        e_ab(self.n, self.n_vertices, self.a)
    }

    pub fn grey(&self) -> GreySet {
        grey_edges_ap(self.n, self.n_vertices, self.a)
    }

    pub fn removed_bound(&self) -> u64 {
        removed_bound_ap(self.n, self.n_vertices, self.a)
    }

    /// `r + f < e(A, B)`: a non-grey edge must survive the deletions.
    pub fn guarantees_survivor(&self) -> bool {
        self.removed_bound() + (self.grey().f() as u64) < self.e_ab()
    }

    pub fn schedule(&self) -> Vec<Step> {
        ap_steps(self.n, self.n_vertices, self.a, self.n)
    }

    pub fn scheme(&self) -> Result<DeletionScheme> {
        ap_scheme(self.n, self.n_vertices, self.a, self.n)
    }
}

/// Grey cells: pairs between `A` and `B` that no targeted copy uses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreySet {
    pub edges: Vec<(usize, usize)>,
}

impl GreySet {
    pub fn f(&self) -> usize {
        self.edges.len()
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        let e = (i.min(j), i.max(j));
        self.edges.contains(&e)
    }
}

/// `|A||B| - |A ∩ B| - C(|A ∩ B|, 2)` for `A = [1, a]`, `B = [n, N]`.
pub fn e_ab(n: usize, n_vertices: usize, a: usize) -> u64 {
    let size_a = a as u64;
    let size_b = (n_vertices + 1).saturating_sub(n) as u64;
    let both = (a + 1).saturating_sub(n).min(n_vertices + 1 - n.min(n_vertices + 1)) as u64;
    size_a * size_b - both - binom2(both)
}

/// Grey cells of the alternating path for classes `[1, a]` and `[b0, N]`:
/// vertex `i < floor(n/2)` cannot reach the first `floor(n/2) - i` vertices
/// of `B`, and vertex `N - i + 1` cannot reach the last `ceil(n/2) - i - 1`
/// vertices of `A`.
fn ap_grey(n: usize, n_vertices: usize, a: usize, b0: usize) -> Vec<(usize, usize)> {
    let fl = n / 2;
    let ce = n.div_ceil(2);
    let mut out = Vec::new();
    for i in 1..fl {
        for t in 0..fl - i {
            out.push((i, b0 + t));
        }
    }
    for i in 1..ce.saturating_sub(1) {
        let v = n_vertices + 1 - i;
        for t in 0..ce - i - 1 {
            if a > t {
                out.push((a - t, v));
            }
        }
    }
    out.retain(|&(x, y)| x >= 1 && x < y && y <= n_vertices);
    out.sort_unstable();
    out.dedup();
    out
}

/// Grey set for `A = [1, a]`, `B = [n, N]`.
pub fn grey_edges_ap(n: usize, n_vertices: usize, a: usize) -> GreySet {
    GreySet {
        edges: ap_grey(n, n_vertices, a, n),
    }
}

/// `f = C(floor(n/2), 2) + C(ceil(n/2) - 1, 2)`.
pub fn grey_count_ap(n: usize) -> u64 {
    binom2((n / 2) as u64) + binom2((n.div_ceil(2) - 1) as u64)
}

/// Odd steps `2i - 1`: `B`-vertices in `[b0 + floor(n/2) - i, N - i + 1]`
/// drop their leftmost edge to `A`. Even steps `2i`: `A`-vertices in
/// `[i + 1, a - ceil(n/2) + i + 1]` drop their rightmost edge to `B`.
fn ap_steps(n: usize, n_vertices: usize, a: usize, b0: usize) -> Vec<Step> {
    let fl = (n / 2) as i64;
    let ce = n.div_ceil(2) as i64;
    let (nv, a, b0) = (n_vertices as i64, a as i64, b0 as i64);
    let mut steps = Vec::new();
    for index in 1..=n.saturating_sub(2) {
        let i = index.div_ceil(2) as i64;
        steps.push(if index % 2 == 1 {
            Step {
                index,
                side: Side::B,
                interval: Interval::clamped(b0 + fl - i, nv - i + 1, n_vertices),
                direction: Direction::Leftmost,
            }
        } else {
            Step {
                index,
                side: Side::A,
                interval: Interval::clamped(i + 1, a - ce + i + 1, n_vertices),
                direction: Direction::Rightmost,
            }
        });
    }
    steps
}

fn ap_coverage(n: usize, n_vertices: usize) -> Vec<Cover> {
    (1..=n.saturating_sub(2))
        .map(|index| {
            let i = index.div_ceil(2);
            if index % 2 == 1 {
                Cover::Smaller(Interval::new(1, i))
            } else {
                Cover::Larger(Interval::new(n_vertices + 1 - i, n_vertices))
            }
        })
        .collect()
}

/// Alternating-path scheme for `A = [1, a]` and `B = [b0, N]`. Also used
/// with disjoint halves by the bipartite finder.
pub(crate) fn ap_scheme(n: usize, n_vertices: usize, a: usize, b0: usize) -> Result<DeletionScheme> {
    Ok(DeletionScheme {
        spec: PathSpec::ap(n)?,
        n_vertices,
        class_a: Interval::new(1, a),
        class_b: Interval::new(b0, n_vertices),
        grey: ap_grey(n, n_vertices, a, b0),
        steps: ap_steps(n, n_vertices, a, b0),
        coverage: ap_coverage(n, n_vertices),
    })
}

/// `2 * sum |I_i| + 2 * sum |J_i|` for `A = [1, a]`, `B = [n, N]`.
pub fn removed_bound_ap(n: usize, n_vertices: usize, a: usize) -> u64 {
    2 * ap_steps(n, n_vertices, a, n)
        .iter()
        .map(|s| s.interval.len() as u64)
        .sum::<u64>()
}

/// Finds a monochromatic alternating path in `c`.
///
/// In [`Mode::Strict`] the host must have at least
/// [`ramsey_upper_bound_ap`]`(n)` vertices and a copy is always returned.
pub fn find_mono_ap(c: &OrderedColoring, n: usize, mode: Mode) -> Result<Option<Found>> {
    let bound = ramsey_upper_bound_ap(n)?;
    let nv = c.n_vertices();
    if nv < bound && (mode == Mode::Strict || nv < n) {
        return Err(Error::HostTooSmall {
            required: if mode == Mode::Strict { bound } else { n },
            actual: nv,
        });
    }
    let config = RamseyConfig::for_host(n, nv)?;
    let scheme = config.scheme()?;
    run_scheme(&scheme, Host::Coloring(c), config.guarantees_survivor())
}

/// Classes, grey cells and schedule for `P^{<,<}` / `P^{>,>}` on
/// `[1, 2M]` split into `A = [1, M]` and `B = [M+1, 2M]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HalvesConfig {
    pub spec: PathSpec,
    pub half: usize,
}

impl HalvesConfig {
    pub fn new(spec: PathSpec, half: usize) -> Result<Self> {
        if !matches!(spec.family(), PathFamily::Pll | PathFamily::Pgg) {
            return Err(Error::InvalidSpec(format!("{spec} is not P^{{<,<}} or P^{{>,>}}")));
        }
        if half < spec.n() / 2 {
            return Err(Error::HostTooSmall {
                required: spec.n(),
                actual: 2 * half,
            });
        }
        Ok(HalvesConfig { spec, half })
    }

    fn k(&self) -> usize {
        self.spec.n() / 2
    }

    pub fn n_vertices(&self) -> usize {
        2 * self.half
    }

    pub fn e_ab(&self) -> u64 {
        (self.half * self.half) as u64
    }

    pub fn grey(&self) -> GreySet {
        let (k, m, nv) = (self.k(), self.half, self.n_vertices());
        // the P^{<,<} pattern has the long triangle at the top right and
        // the short one at the junction of the halves; P^{>,>} swaps them
        let (top, junction) = match self.spec.family() {
            PathFamily::Pll => (k, k.saturating_sub(1)),
            _ => (k.saturating_sub(1), k),
        };
        let mut edges = Vec::new();
        for i in 1..top {
            for j in 1..=top - i {
                edges.push((i, nv + 1 - j));
            }
        }
        for i in 1..junction {
            for j in 1..=junction - i {
                edges.push((m + 1 - i, m + j));
            }
        }
        edges.sort_unstable();
        edges.dedup();
        GreySet { edges }
    }

    pub fn schedule(&self) -> Vec<Step> {
        let (k, m, nv) = (self.k() as i64, self.half as i64, self.n_vertices());
        let nvi = nv as i64;
        let up = self.spec.family() == PathFamily::Pll;
        let direction = if up { Direction::Leftmost } else { Direction::Rightmost };
        (1..=self.spec.n() - 2)
            .map(|index| {
                let i = index.div_ceil(2) as i64;
                let (side, lo, hi) = match (index % 2 == 1, up) {
                    (true, true) => (Side::B, m + i, nvi - k + i),
                    (false, true) => (Side::A, i + 1, m - k + i + 1),
                    (true, false) => (Side::B, m + k - i + 1, nvi - i + 1),
                    (false, false) => (Side::A, k - i, m - i),
                };
                Step {
                    index,
                    side,
                    interval: Interval::clamped(lo, hi, nv),
                    direction,
                }
            })
            .collect()
    }

    fn coverage(&self) -> Vec<Cover> {
        let (m, nv) = (self.half, self.n_vertices());
        let up = self.spec.family() == PathFamily::Pll;
        (1..=self.spec.n() - 2)
            .map(|index| {
                let i = index.div_ceil(2);
                match (index % 2 == 1, up) {
                    (true, true) => Cover::Smaller(Interval::new(1, i)),
                    (false, true) => Cover::Larger(Interval::new(m + 1, m + i)),
                    (true, false) => Cover::Smaller(Interval::new(m + 1 - i, m)),
                    (false, false) => Cover::Larger(Interval::new(nv + 1 - i, nv)),
                }
            })
            .collect()
    }

    /// `2(n - 2)(M - k + 1)`: two classes, `n - 2` steps, `M - k + 1`
    /// acting vertices per step.
    pub fn removed_bound(&self) -> u64 {
        2 * self.schedule().iter().map(|s| s.interval.len() as u64).sum::<u64>()
    }

    /// `M^2 > 2(2k - 2)(M - k + 1) + (k - 1)^2`.
    pub fn guarantees_survivor(&self) -> bool {
        self.removed_bound() + (self.grey().f() as u64) < self.e_ab()
    }

    pub fn scheme(&self) -> DeletionScheme {
        let nv = self.n_vertices();
        DeletionScheme {
            spec: self.spec,
            n_vertices: nv,
            class_a: Interval::new(1, self.half),
            class_b: Interval::new(self.half + 1, nv),
            grey: self.grey().edges,
            steps: self.schedule(),
            coverage: self.coverage(),
        }
    }
}

/// `(M - 3(k - 1))(M - (k - 1)) > 0`, the factored form of the counting
/// condition for the halves argument.
pub fn halves_inequality(k: usize, half: usize) -> bool {
    let (k, m) = (k as i64, half as i64);
    (m - 3 * (k - 1)) * (m - (k - 1)) > 0
}

/// Finds a monochromatic `P^{<,<}` or `P^{>,>}`. A host with an odd number
/// of vertices is searched on its first `N - 1` vertices.
pub fn find_mono_other(c: &OrderedColoring, spec: &PathSpec, mode: Mode) -> Result<Option<Found>> {
    let bound = ramsey_upper_bound_halves(spec.n())?;
    let nv = c.n_vertices();
    let half = nv / 2;
    if nv < bound && (mode == Mode::Strict || 2 * half < spec.n()) {
        return Err(Error::HostTooSmall {
            required: if mode == Mode::Strict { bound } else { spec.n() },
            actual: nv,
        });
    }
    let config = HalvesConfig::new(*spec, half)?;
    let host = if 2 * half == nv {
        c.clone()
    } else {
        OrderedColoring::from_fn(2 * half, |i, j| c.color(i, j))
    };
    run_scheme(&config.scheme(), Host::Coloring(&host), config.guarantees_survivor())
}

/// Dispatches on the family. `P^{>,<}` is handled on the reversed coloring.
pub fn find_mono(c: &OrderedColoring, spec: &PathSpec, mode: Mode) -> Result<Option<Found>> {
    match spec.family() {
        PathFamily::Ap => find_mono_ap(c, spec.n(), mode),
        PathFamily::Pll | PathFamily::Pgg => find_mono_other(c, spec, mode),
        PathFamily::Pgl => find_mono_ap(&c.reverse(), spec.n(), mode)?
            .map(|f| mark_reversed(f, c.n_vertices()))
            .transpose(),
        PathFamily::Mp => Err(Error::InvalidSpec("no deletion algorithm for the monotone path".into())),
    }
}

/// Guaranteed host size for [`find_mono`].
pub fn ramsey_upper_bound(spec: &PathSpec) -> Result<usize> {
    match spec.family() {
        PathFamily::Ap | PathFamily::Pgl => ramsey_upper_bound_ap(spec.n()),
        PathFamily::Pll | PathFamily::Pgg => ramsey_upper_bound_halves(spec.n()),
        PathFamily::Mp => Err(Error::InvalidSpec("no bound implemented for the monotone path".into())),
    }
}
