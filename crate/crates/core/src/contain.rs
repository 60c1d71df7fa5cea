//! Containment of ordered paths.
//!
//! [`contains_path`] runs a staircase dynamic program over the cells of the
//! adjacency matrix. [`embed_generic`] is a plain backtracking search over
//! order-preserving injections, kept as a slow reference for small hosts.

use crate::error::{Error, Result};
use crate::graph::{Color, OrderedColoring, OrderedGraph};
use crate::path::{PathCertificate, PathFamily, PathSpec};

/// Default host-size cap for [`embed_generic`].
pub const DEFAULT_EMBED_CAP: usize = 16;

/// Finds an order-preserving copy of `spec` in `g`, if any.
///
/// Runs in `O(N^2)` for the alternating path and its reversal and in
/// `O(N^3)` for `P^{<,<}` and `P^{>,>}`, which need the split between the
/// two halves fixed up front.
pub fn contains_path(g: &OrderedGraph, spec: &PathSpec) -> Option<PathCertificate> {
    let n_vertices = g.n_vertices();
    let n = spec.n();
    if n > n_vertices {
        return None;
    }
    let found = match spec.family() {
        PathFamily::Mp => monotone(g, n),
        // odd positions increase and even positions decrease, so the copy
        // stays nested as long as every cell used lies above the diagonal
        PathFamily::Ap => staircase(g, n, (1, n_vertices), (1, n_vertices), true, false),
        // odd positions decrease and even increase; nested once v_1 < v_2
        PathFamily::Pgl => staircase(g, n, (1, n_vertices), (1, n_vertices), false, true),
        PathFamily::Pll | PathFamily::Pgg => {
            let up = spec.family() == PathFamily::Pll;
            (1..n_vertices).find_map(|split| staircase(g, n, (1, split), (split + 1, n_vertices), up, up))
        }
    };
    found.map(|vertices| PathCertificate::new(*spec, vertices, None))
}

/// Monochromatic copy of `spec` in colour `color`.
pub fn contains_mono_path(c: &OrderedColoring, spec: &PathSpec, color: Color) -> Option<PathCertificate> {
    let class = c.class(color);
    contains_path(&class, spec).map(|mut cert| {
        cert.color = Some(color);
        cert
    })
}

/// Monochromatic copy in either colour, red checked first.
pub fn find_any_mono(c: &OrderedColoring, spec: &PathSpec) -> Option<PathCertificate> {
    contains_mono_path(c, spec, Color::Red).or_else(|| contains_mono_path(c, spec, Color::Blue))
}

fn monotone(g: &OrderedGraph, n: usize) -> Option<Vec<usize>> {
    let nv = g.n_vertices();
    let mut len = vec![1usize; nv + 1];
    let mut prev = vec![0usize; nv + 1];
    for y in 1..=nv {
        for x in g.lower_neighbors(y) {
            if len[x] + 1 > len[y] {
                len[y] = len[x] + 1;
                prev[y] = x;
            }
        }
        if len[y] >= n {
            let mut seq = vec![y];
            let mut v = y;
            while prev[v] != 0 {
                v = prev[v];
                seq.push(v);
            }
            seq.reverse();
            seq.truncate(n);
            return Some(seq);
        }
    }
    None
}

/// Longest alternating sequence `a_1 b_1 a_2 b_2 ...` with every `a` in
/// `a_range`, every `b` in `b_range`, consecutive pairs adjacent with
/// `a < b`, and the `a`s (resp. `b`s) moving in the given directions.
///
/// `ends_b[x][y]` is the longest such sequence ending `.., x, y`;
/// `ends_a[x][y]` the longest ending `.., y, x`. Returns the first `n`
/// terms of the first sequence reaching length `n`.
fn staircase(
    g: &OrderedGraph,
    n: usize,
    a_range: (usize, usize),
    b_range: (usize, usize),
    a_up: bool,
    b_up: bool,
) -> Option<Vec<usize>> {
    let nv = g.n_vertices();
    let w = nv + 1;
    let mut ends_b = vec![0u32; w * w];
    let mut ends_a = vec![0u32; w * w];
    // predecessor of the last vertex: for ends_b the previous b (0 = start),
    // for ends_a the previous a
    let mut pred_b = vec![0usize; w * w];
    let mut pred_a = vec![0usize; w * w];
    // best ends_b over the a's already processed, per column
    let mut col_best = vec![(0u32, 0usize); w];

    let xs: Vec<usize> = ordered(a_range, a_up);
    let ys: Vec<usize> = ordered(b_range, b_up);
    for &x in &xs {
        // best ends_a in this row over the b's already processed
        let mut row_best = (0u32, 0usize);
        let mut row_updates = Vec::new();
        for &y in &ys {
            if x >= y || !g.has_edge(x, y) {
                continue;
            }
            let cell = x * w + y;
            let (cb, cb_x) = col_best[y];
            if cb > 0 {
                ends_a[cell] = cb + 1;
                pred_a[cell] = cb_x;
            }
            let (rb, rb_y) = row_best;
            if rb > 0 {
                ends_b[cell] = rb + 1;
                pred_b[cell] = rb_y;
            } else {
                ends_b[cell] = 2;
            }
            if ends_b[cell] as usize >= n || ends_a[cell] as usize >= n {
                let from_b = ends_b[cell] >= ends_a[cell];
                let mut seq = unwind(x, y, from_b, w, &pred_a, &pred_b, &ends_a, &ends_b);
                seq.truncate(n);
                return Some(seq);
            }
            if ends_a[cell] > row_best.0 {
                row_best = (ends_a[cell], y);
            }
            row_updates.push((y, ends_b[cell]));
        }
        for (y, v) in row_updates {
            if v > col_best[y].0 {
                col_best[y] = (v, x);
            }
        }
    }
    None
}

fn ordered((lo, hi): (usize, usize), up: bool) -> Vec<usize> {
    if lo > hi {
        return Vec::new();
    }
    if up {
        (lo..=hi).collect()
    } else {
        (lo..=hi).rev().collect()
    }
}

#[allow(clippy::too_many_arguments)]
fn unwind(
    mut x: usize,
    mut y: usize,
    mut at_b: bool,
    w: usize,
    pred_a: &[usize],
    pred_b: &[usize],
    ends_a: &[u32],
    ends_b: &[u32],
) -> Vec<usize> {
    let mut rev = Vec::new();
    loop {
        let cell = x * w + y;
        if at_b {
            rev.push(y);
            if ends_b[cell] == 2 {
                rev.push(x);
                break;
            }
            y = pred_b[cell];
            at_b = false;
        } else {
            debug_assert!(ends_a[cell] >= 3);
            rev.push(x);
            x = pred_a[cell];
            at_b = true;
        }
    }
    rev.reverse();
    rev
}

/// Searches for an order-preserving embedding of `h` into `g` by
/// backtracking. Returns the images of `1..=h.n_vertices()`.
pub fn embed_generic(g: &OrderedGraph, h: &OrderedGraph) -> Result<Option<Vec<usize>>> {
    embed_generic_with_cap(g, h, DEFAULT_EMBED_CAP)
}

pub fn embed_generic_with_cap(g: &OrderedGraph, h: &OrderedGraph, cap: usize) -> Result<Option<Vec<usize>>> {
    if g.n_vertices() > cap {
        return Err(Error::SizeLimitExceeded {
            cap,
            actual: g.n_vertices(),
        });
    }
    let k = h.n_vertices();
    if k > g.n_vertices() {
        return Ok(None);
    }
    let back: Vec<Vec<usize>> = (1..=k).map(|v| h.lower_neighbors(v).collect()).collect();
    let mut image = Vec::with_capacity(k);
    Ok(extend(g, &back, &mut image).then_some(image))
}

fn extend(g: &OrderedGraph, back: &[Vec<usize>], image: &mut Vec<usize>) -> bool {
    let k = back.len();
    let placed = image.len();
    if placed == k {
        return true;
    }
    let lo = image.last().map_or(1, |&v| v + 1);
    let hi = g.n_vertices() - (k - placed - 1);
    for v in lo..=hi {
        if back[placed].iter().all(|&u| g.has_edge(image[u - 1], v)) {
            image.push(v);
            if extend(g, back, image) {
                return true;
            }
            image.pop();
        }
    }
    false
}

/// Relabels `i -> N + 1 - i`.
pub fn reverse(g: &OrderedGraph) -> OrderedGraph {
    g.reverse()
}

/// Calls `f` with every `n`-subset of `[N]` in lexicographic order.
pub fn for_each_subset(n_vertices: usize, n: usize, mut f: impl FnMut(&[usize])) {
    if n > n_vertices {
        return;
    }
    let mut s: Vec<usize> = (1..=n).collect();
    loop {
        f(&s);
        let mut i = n;
        while i > 0 && s[i - 1] == n_vertices - n + i {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        s[i - 1] += 1;
        for t in i..n {
            s[t] = s[t - 1] + 1;
        }
    }
}

/// The copy of `spec` induced on the sorted vertex set `subset`, in
/// traversal order.
pub fn copy_on(spec: &PathSpec, subset: &[usize]) -> Vec<usize> {
    spec.traversal().iter().map(|&r| subset[r - 1]).collect()
}

/// Every copy of `spec` in `g`, listed as traversal sequences.
pub fn all_copies(g: &OrderedGraph, spec: &PathSpec) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_subset(g.n_vertices(), spec.n(), |s| {
        let seq = copy_on(spec, s);
        if seq.windows(2).all(|w| g.has_edge(w[0], w[1])) {
            out.push(seq);
        }
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::pair_count;

    fn spec(f: PathFamily, n: usize) -> PathSpec {
        PathSpec::new(f, n).unwrap()
    }

    #[test]
    fn identity_copy() {
        let s = spec(PathFamily::Ap, 4);
        let cert = contains_path(&s.pattern_graph(), &s).unwrap();
        assert_eq!(cert.vertices, vec![1, 4, 2, 3]);
    }

    #[test]
    fn complete_graph_contains_everything() {
        for f in PathFamily::ALL {
            let Ok(s) = PathSpec::new(f, 7).or_else(|_| PathSpec::new(f, 6)) else { continue };
            let g = OrderedGraph::complete(s.n());
            let cert = contains_path(&g, &s).unwrap();
            cert.validate_in_graph(&g).unwrap();
        }
    }

    #[test]
    fn too_small_host() {
        assert!(contains_path(&OrderedGraph::complete(3), &spec(PathFamily::Ap, 4)).is_none());
    }

    #[test]
    fn agrees_with_backtracking_on_all_small_graphs() {
        for nv in 2..=5 {
            let e = pair_count(nv);
            for mask in 0u128..(1 << e) {
                let g = OrderedGraph::from_mask(nv, mask);
                for f in PathFamily::ALL {
                    for n in 2..=nv {
                        let Ok(s) = PathSpec::new(f, n) else { continue };
                        let dp = contains_path(&g, &s);
                        let bt = embed_generic(&g, &s.pattern_graph()).unwrap();
                        assert_eq!(dp.is_some(), bt.is_some(), "{s} in {g:?}");
                        if let Some(c) = dp {
                            c.validate_in_graph(&g).unwrap();
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn embed_edge_cases() {
        let g = OrderedGraph::from_edges(5, [(2, 4)]).unwrap();
        assert_eq!(embed_generic(&g, &OrderedGraph::empty(3)).unwrap(), Some(vec![1, 2, 3]));
        let single = OrderedGraph::complete(2);
        assert_eq!(embed_generic(&g, &single).unwrap(), Some(vec![2, 4]));
        assert_eq!(embed_generic(&OrderedGraph::empty(4), &single).unwrap(), None);
        assert!(matches!(
            embed_generic(&OrderedGraph::empty(17), &single),
            Err(Error::SizeLimitExceeded { cap: 16, actual: 17 })
        ));
        assert!(embed_generic_with_cap(&OrderedGraph::complete(17), &single, 20).unwrap().is_some());
    }

    #[test]
    fn subsets_are_lexicographic() {
        let mut seen = Vec::new();
        for_each_subset(5, 3, |s| seen.push(s.to_vec()));
        assert_eq!(seen.len(), 10);
        assert_eq!(seen[0], vec![1, 2, 3]);
        assert_eq!(seen[9], vec![3, 4, 5]);
        assert!(seen.windows(2).all(|w| w[0] < w[1]));
    }
}
